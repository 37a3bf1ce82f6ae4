//! Isomorphism of interfaced hypergraphs.
//!
//! Two layers: a cheap iso-invariant canonical key (iterated colour
//! refinement over the bipartite node/edge incidence, seeded with interface
//! positions) used to bucket graphs before comparison, and a backtracking
//! search that produces an explicit bijection. The key is an invariant, not
//! a complete canonical form: equal keys still require the full search,
//! unequal keys settle non-isomorphism outright.

use std::collections::BTreeMap;

use crate::hypergraph::{EdgeId, Hypergraph, NodeId};
use crate::interfaced::InterfacedHypergraph;
use crate::morphism::Morphism;

const NO_POS: usize = usize::MAX;

struct Colors {
    node: Vec<u32>,
    edge: Vec<u32>,
}

/// Rank each distinct signature by its sorted order, so the assignment
/// depends only on the multiset of signatures, never on element order.
fn rank_sorted<T: Ord + Clone>(sigs: impl Iterator<Item = T>) -> BTreeMap<T, u32> {
    let set: std::collections::BTreeSet<T> = sigs.collect();
    set.into_iter()
        .enumerate()
        .map(|(i, s)| (s, i as u32))
        .collect()
}

/// One refinement pass over one or two graphs sharing a colour table.
/// Signatures are built per element and re-ranked jointly so that colours
/// are comparable across the participating graphs.
fn refine(graphs: &[(&Hypergraph, &[NodeId], &[NodeId])]) -> Vec<Colors> {
    let mut colors: Vec<Colors> = Vec::with_capacity(graphs.len());

    // seed: interface positions for nodes, label for edges
    let node_seed = |g: &Hypergraph, inputs: &[NodeId], outputs: &[NodeId], v: &NodeId| {
        debug_assert!(g.has_node(v));
        let in_pos = inputs.iter().position(|x| x == v).unwrap_or(NO_POS);
        let out_pos = outputs.iter().position(|x| x == v).unwrap_or(NO_POS);
        (in_pos, out_pos)
    };
    let seed_rank = rank_sorted(graphs.iter().flat_map(|(g, inputs, outputs)| {
        g.nodes().map(move |v| node_seed(g, inputs, outputs, v))
    }));
    let edge_seed_rank = rank_sorted(
        graphs
            .iter()
            .flat_map(|(g, _, _)| g.edges().map(|(_, e)| e.label.0.clone())),
    );
    for (g, inputs, outputs) in graphs {
        let node = g
            .nodes()
            .map(|v| seed_rank[&node_seed(g, inputs, outputs, v)])
            .collect();
        let edge = g.edges().map(|(_, e)| edge_seed_rank[&e.label.0]).collect();
        colors.push(Colors { node, edge });
    }

    let rounds = graphs
        .iter()
        .map(|(g, _, _)| g.node_count() + g.edge_count())
        .max()
        .unwrap_or(0);
    for _ in 0..rounds {
        // node signature: own colour + multiset of incident (edge colour, side, port)
        let mut node_sigs: Vec<Vec<(u32, Vec<(u32, u8, usize)>)>> = Vec::new();
        let mut edge_sigs: Vec<Vec<(u32, Vec<u32>, Vec<u32>)>> = Vec::new();
        for (gi, (g, _, _)) in graphs.iter().enumerate() {
            let c = &colors[gi];
            let mut incident: Vec<Vec<(u32, u8, usize)>> = vec![Vec::new(); g.node_count()];
            for (ei, (_, e)) in g.edges().enumerate() {
                for (p, s) in e.sources.iter().enumerate() {
                    incident[g.node_index(s).unwrap()].push((c.edge[ei], 0, p));
                }
                for (p, t) in e.targets.iter().enumerate() {
                    incident[g.node_index(t).unwrap()].push((c.edge[ei], 1, p));
                }
            }
            for inc in &mut incident {
                inc.sort_unstable();
            }
            node_sigs.push(
                (0..g.node_count())
                    .map(|vi| (c.node[vi], incident[vi].clone()))
                    .collect(),
            );
            edge_sigs.push(
                g.edges()
                    .enumerate()
                    .map(|(ei, (_, e))| {
                        (
                            c.edge[ei],
                            e.sources
                                .iter()
                                .map(|v| c.node[g.node_index(v).unwrap()])
                                .collect(),
                            e.targets
                                .iter()
                                .map(|v| c.node[g.node_index(v).unwrap()])
                                .collect(),
                        )
                    })
                    .collect(),
            );
        }
        let node_rank = rank_sorted(node_sigs.iter().flatten().cloned());
        let edge_rank = rank_sorted(edge_sigs.iter().flatten().cloned());
        let mut stable = true;
        for (gi, c) in colors.iter_mut().enumerate() {
            let new_node: Vec<u32> = node_sigs[gi].iter().map(|s| node_rank[s]).collect();
            let new_edge: Vec<u32> = edge_sigs[gi].iter().map(|s| edge_rank[s]).collect();
            if new_node != c.node || new_edge != c.edge {
                stable = false;
            }
            c.node = new_node;
            c.edge = new_edge;
        }
        if stable {
            break;
        }
    }
    colors
}

/// An iso-invariant fingerprint of an interfaced hypergraph. Isomorphic
/// graphs always share a key; distinct keys prove non-isomorphism.
pub fn canonical_key(ih: &InterfacedHypergraph) -> String {
    let colors = refine(&[(ih.graph(), ih.inputs(), ih.outputs())]);
    let c = &colors[0];
    let mut node_hist = c.node.clone();
    node_hist.sort_unstable();
    let mut edge_sigs: Vec<String> = ih
        .graph()
        .edges()
        .enumerate()
        .map(|(ei, (_, e))| {
            let srcs: Vec<String> = e
                .sources
                .iter()
                .map(|v| c.node[ih.graph().node_index(v).unwrap()].to_string())
                .collect();
            let tgts: Vec<String> = e
                .targets
                .iter()
                .map(|v| c.node[ih.graph().node_index(v).unwrap()].to_string())
                .collect();
            format!("{}:{}[{}]>[{}]", c.edge[ei], e.label, srcs.join(","), tgts.join(","))
        })
        .collect();
    edge_sigs.sort_unstable();
    let iface = |list: &[NodeId]| {
        list.iter()
            .map(|v| c.node[ih.graph().node_index(v).unwrap()].to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    format!(
        "V{};E{};N[{}];S[{}];I[{}];O[{}]",
        ih.graph().node_count(),
        ih.graph().edge_count(),
        node_hist
            .iter()
            .map(u32::to_string)
            .collect::<Vec<_>>()
            .join(","),
        edge_sigs.join(";"),
        iface(ih.inputs()),
        iface(ih.outputs()),
    )
}

struct SearchState<'a> {
    a: &'a Hypergraph,
    b: &'a Hypergraph,
    a_colors: &'a Colors,
    b_colors: &'a Colors,
    node_map: BTreeMap<NodeId, NodeId>,
    node_rev: BTreeMap<NodeId, NodeId>,
    edge_map: BTreeMap<EdgeId, EdgeId>,
    edge_rev: BTreeMap<EdgeId, EdgeId>,
}

impl<'a> SearchState<'a> {
    fn bind_node(&mut self, x: &NodeId, y: &NodeId, trail: &mut Vec<NodeId>) -> bool {
        match self.node_map.get(x) {
            Some(existing) => existing == y,
            None => {
                if self.node_rev.contains_key(y) {
                    return false;
                }
                let xc = self.a_colors.node[self.a.node_index(x).unwrap()];
                let yc = self.b_colors.node[self.b.node_index(y).unwrap()];
                if xc != yc {
                    return false;
                }
                self.node_map.insert(x.clone(), y.clone());
                self.node_rev.insert(y.clone(), x.clone());
                trail.push(x.clone());
                true
            }
        }
    }

    fn undo_nodes(&mut self, trail: &[NodeId]) {
        for x in trail {
            let y = self.node_map.remove(x).unwrap();
            self.node_rev.remove(&y);
        }
    }

    fn search_edges(&mut self, order: &[EdgeId], idx: usize) -> bool {
        if idx == order.len() {
            return self.assign_free_nodes();
        }
        let ea = &order[idx];
        let edge_a = self.a.edge(ea).unwrap();
        let ca = self.a_colors.edge[self.a.edge_index(ea).unwrap()];
        let candidates: Vec<EdgeId> = self
            .b
            .edges()
            .enumerate()
            .filter(|(ei, (id, e))| {
                self.b_colors.edge[*ei] == ca
                    && e.label == edge_a.label
                    && !self.edge_rev.contains_key(*id)
            })
            .map(|(_, (id, _))| id.clone())
            .collect();
        for eb in candidates {
            let edge_b = self.b.edge(&eb).unwrap().clone();
            let mut trail = Vec::new();
            let mut ok = true;
            for (x, y) in edge_a
                .sources
                .iter()
                .zip(&edge_b.sources)
                .chain(edge_a.targets.iter().zip(&edge_b.targets))
            {
                if !self.bind_node(x, y, &mut trail) {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.edge_map.insert(ea.clone(), eb.clone());
                self.edge_rev.insert(eb.clone(), ea.clone());
                if self.search_edges(order, idx + 1) {
                    return true;
                }
                self.edge_map.remove(ea);
                self.edge_rev.remove(&eb);
            }
            self.undo_nodes(&trail);
        }
        false
    }

    fn assign_free_nodes(&mut self) -> bool {
        let free: Vec<NodeId> = self
            .a
            .nodes()
            .filter(|v| !self.node_map.contains_key(*v))
            .cloned()
            .collect();
        self.assign_free(&free, 0)
    }

    fn assign_free(&mut self, free: &[NodeId], idx: usize) -> bool {
        if idx == free.len() {
            return true;
        }
        let x = &free[idx];
        let candidates: Vec<NodeId> = self
            .b
            .nodes()
            .filter(|y| !self.node_rev.contains_key(*y))
            .cloned()
            .collect();
        for y in candidates {
            let mut trail = Vec::new();
            if self.bind_node(x, &y, &mut trail) {
                if self.assign_free(free, idx + 1) {
                    return true;
                }
                self.undo_nodes(&trail);
            }
        }
        false
    }
}

fn iso_with_seed(
    a: &Hypergraph,
    b: &Hypergraph,
    a_interface: (&[NodeId], &[NodeId]),
    b_interface: (&[NodeId], &[NodeId]),
) -> Option<Morphism> {
    if a.signature() != b.signature()
        || a.node_count() != b.node_count()
        || a.edge_count() != b.edge_count()
        || a_interface.0.len() != b_interface.0.len()
        || a_interface.1.len() != b_interface.1.len()
    {
        return None;
    }
    let colors = refine(&[
        (a, a_interface.0, a_interface.1),
        (b, b_interface.0, b_interface.1),
    ]);
    let (ca, cb) = (&colors[0], &colors[1]);
    let mut hist_a = ca.node.clone();
    let mut hist_b = cb.node.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return None;
    }
    let mut ea = ca.edge.clone();
    let mut eb = cb.edge.clone();
    ea.sort_unstable();
    eb.sort_unstable();
    if ea != eb {
        return None;
    }

    let mut state = SearchState {
        a,
        b,
        a_colors: ca,
        b_colors: cb,
        node_map: BTreeMap::new(),
        node_rev: BTreeMap::new(),
        edge_map: BTreeMap::new(),
        edge_rev: BTreeMap::new(),
    };
    let mut trail = Vec::new();
    for (x, y) in a_interface
        .0
        .iter()
        .zip(b_interface.0)
        .chain(a_interface.1.iter().zip(b_interface.1))
    {
        if !state.bind_node(x, y, &mut trail) {
            return None;
        }
    }
    let order: Vec<EdgeId> = a.edges().map(|(id, _)| id.clone()).collect();
    if !state.search_edges(&order, 0) {
        return None;
    }
    Some(
        Morphism::new(a.clone(), b.clone(), state.node_map, state.edge_map)
            .expect("isomorphism search produced a non-morphism"),
    )
}

/// Interface-preserving isomorphism: a structure- and label-preserving
/// bijection mapping inputs to inputs and outputs to outputs positionally.
/// Returns the bijection as a morphism if one exists.
pub fn isomorphic(a: &InterfacedHypergraph, b: &InterfacedHypergraph) -> Option<Morphism> {
    iso_with_seed(
        a.graph(),
        b.graph(),
        (a.inputs(), a.outputs()),
        (b.inputs(), b.outputs()),
    )
}

/// Isomorphism of bare hypergraphs (no interface constraint).
pub fn isomorphic_graphs(a: &Hypergraph, b: &Hypergraph) -> Option<Morphism> {
    iso_with_seed(a, b, (&[], &[]), (&[], &[]))
}
