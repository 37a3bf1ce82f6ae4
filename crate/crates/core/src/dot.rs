//! Graphviz export. Nodes are drawn as points and hyperedges as labelled
//! boxes; arcs carry the port index as head/tail labels, so the ordered
//! source and target lists can be read off the picture.

use indexmap::IndexSet;

use crate::hypergraph::{EdgeId, NodeId};
use crate::interfaced::InterfacedHypergraph;
use crate::critical_pairs::CriticalPairCandidate;

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Render an interfaced hypergraph. `highlight1`/`highlight2` colour the
/// images of the two matches of a critical pair; elements in both images are
/// drawn in the overlap colour.
pub fn interfaced_to_dot(
    name: &str,
    ih: &InterfacedHypergraph,
    highlight1: Option<(&IndexSet<NodeId>, &IndexSet<EdgeId>)>,
    highlight2: Option<(&IndexSet<NodeId>, &IndexSet<EdgeId>)>,
) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph {} {{\n", quote(name)));
    out.push_str("  rankdir=LR;\n");
    let color_of = |in1: bool, in2: bool| -> Option<&'static str> {
        match (in1, in2) {
            (true, true) => Some("purple"),
            (true, false) => Some("red"),
            (false, true) => Some("blue"),
            (false, false) => None,
        }
    };
    for v in ih.graph().nodes() {
        let in1 = highlight1.is_some_and(|(ns, _)| ns.contains(v));
        let in2 = highlight2.is_some_and(|(ns, _)| ns.contains(v));
        let mut attrs = vec!["shape=point".to_string()];
        if let Some(c) = color_of(in1, in2) {
            attrs.push(format!("color={c}"));
        }
        let mut xlabel = v.0.clone();
        if let Some(pos) = ih.inputs().iter().position(|x| x == v) {
            xlabel.push_str(&format!(" in{pos}"));
        }
        if let Some(pos) = ih.outputs().iter().position(|x| x == v) {
            xlabel.push_str(&format!(" out{pos}"));
        }
        attrs.push(format!("xlabel={}", quote(&xlabel)));
        out.push_str(&format!(
            "  {} [{}];\n",
            quote(&format!("n:{v}")),
            attrs.join(", ")
        ));
    }
    for (id, e) in ih.graph().edges() {
        let in1 = highlight1.is_some_and(|(_, es)| es.contains(id));
        let in2 = highlight2.is_some_and(|(_, es)| es.contains(id));
        let mut attrs = vec![
            "shape=box".to_string(),
            format!("label={}", quote(&format!("{} {}", e.label, id))),
        ];
        if let Some(c) = color_of(in1, in2) {
            attrs.push(format!("color={c}"));
            attrs.push(format!("fontcolor={c}"));
        }
        out.push_str(&format!(
            "  {} [{}];\n",
            quote(&format!("e:{id}")),
            attrs.join(", ")
        ));
        for (pos, v) in e.sources.iter().enumerate() {
            out.push_str(&format!(
                "  {} -> {} [headlabel={}, arrowhead=none];\n",
                quote(&format!("n:{v}")),
                quote(&format!("e:{id}")),
                quote(&pos.to_string()),
            ));
        }
        for (pos, v) in e.targets.iter().enumerate() {
            out.push_str(&format!(
                "  {} -> {} [taillabel={}];\n",
                quote(&format!("e:{id}")),
                quote(&format!("n:{v}")),
                quote(&pos.to_string()),
            ));
        }
    }
    out.push_str("}\n");
    out
}

/// Render a critical pair's source with both match images colour-coded.
pub fn critical_pair_to_dot(name: &str, c: &CriticalPairCandidate) -> String {
    let nodes1: IndexSet<NodeId> = c.match1.node_map().values().cloned().collect();
    let edges1: IndexSet<EdgeId> = c.match1.edge_map().values().cloned().collect();
    let nodes2: IndexSet<NodeId> = c.match2.node_map().values().cloned().collect();
    let edges2: IndexSet<EdgeId> = c.match2.edge_map().values().cloned().collect();
    interfaced_to_dot(
        name,
        &c.source,
        Some((&nodes1, &edges1)),
        Some((&nodes2, &edges2)),
    )
}
