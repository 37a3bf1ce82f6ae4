//! Gluing schemes: hypergraphs of designated element pairs whose coequalizer
//! merges chosen hyperedges (and the node pairs they induce) of `L_i + L_j`.

use indexmap::IndexMap;

use crate::colimits::coproduct;
use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, NodeId};
use crate::independent::IndependentEdgeSet;
use crate::morphism::Morphism;
use crate::rules::RewriteSystem;

/// A span `γ ⇉ L_i + L_j` whose coequalizer performs the gluing. The first
/// projection lands in the `ι₁` copy, the second in the `ι₂` copy, so nothing
/// is ever glued within one side.
///
/// For schemes that yield a critical pair both projections are mono; a pair
/// selection may induce a non-mono projection (one node paired with two
/// different partners), and such schemes are kept — their gluing always
/// fails the ma-cospan check downstream, exactly as a same-side gluing does.
#[derive(Debug, Clone)]
pub struct GluingScheme {
    pub gamma: Hypergraph,
    pub proj1: Morphism,
    pub proj2: Morphism,
}

/// Build the induced hypergraph of an independent edge set on the hyperedges
/// of `L_i` and `L_j`: one hyperedge per glued pair, over nodes that are the
/// positionwise source/target pairs. Projections are returned composed with
/// the coprojections into `L_i + L_j`.
pub fn induced_hypergraph(
    sys: &RewriteSystem,
    i: usize,
    j: usize,
    pairs: &IndependentEdgeSet<EdgeId>,
) -> Result<GluingScheme> {
    let li = sys.rule(i)?.left.graph();
    let lj = sys.rule(j)?.left.graph();
    let (sum, inj1, inj2) = coproduct(li, lj)?;
    induced_scheme_over(li, lj, &sum, &inj1, &inj2, pairs)
}

pub(crate) fn induced_scheme_over(
    li: &Hypergraph,
    lj: &Hypergraph,
    sum: &Hypergraph,
    inj1: &Morphism,
    inj2: &Morphism,
    pairs: &IndependentEdgeSet<EdgeId>,
) -> Result<GluingScheme> {
    let mut gamma = Hypergraph::new(li.signature().clone());
    let mut pair_nodes: IndexMap<(NodeId, NodeId), NodeId> = IndexMap::new();
    let mut map1 = std::collections::BTreeMap::new();
    let mut map2 = std::collections::BTreeMap::new();
    let mut emap1 = std::collections::BTreeMap::new();
    let mut emap2 = std::collections::BTreeMap::new();

    for (k, (ei, ej)) in pairs.pairs().iter().enumerate() {
        let edge_i = li.edge(ei).ok_or_else(|| Error::EdgeNotInGraph(ei.clone()))?;
        let edge_j = lj.edge(ej).ok_or_else(|| Error::EdgeNotInGraph(ej.clone()))?;
        if edge_i.label != edge_j.label {
            return Err(Error::GluedLabelMismatch(ei.clone(), ej.clone()));
        }
        let mut port_node = |a: &NodeId, b: &NodeId, gamma: &mut Hypergraph| -> Result<NodeId> {
            let key = (a.clone(), b.clone());
            if let Some(id) = pair_nodes.get(&key) {
                return Ok(id.clone());
            }
            let id = NodeId::new(format!("p{}", pair_nodes.len()));
            gamma.add_node(id.clone())?;
            map1.insert(id.clone(), inj1.node_image(a).clone());
            map2.insert(id.clone(), inj2.node_image(b).clone());
            pair_nodes.insert(key, id.clone());
            Ok(id)
        };
        let mut sources = Vec::with_capacity(edge_i.sources.len());
        for (a, b) in edge_i.sources.iter().zip(&edge_j.sources) {
            sources.push(port_node(a, b, &mut gamma)?);
        }
        let mut targets = Vec::with_capacity(edge_i.targets.len());
        for (a, b) in edge_i.targets.iter().zip(&edge_j.targets) {
            targets.push(port_node(a, b, &mut gamma)?);
        }
        let gid = EdgeId::new(format!("g{k}"));
        gamma.add_edge(gid.clone(), edge_i.label.clone(), sources, targets)?;
        emap1.insert(gid.clone(), inj1.edge_image(ei).clone());
        emap2.insert(gid, inj2.edge_image(ej).clone());
    }

    let proj1 = Morphism::new(gamma.clone(), sum.clone(), map1, emap1)?;
    let proj2 = Morphism::new(gamma.clone(), sum.clone(), map2, emap2)?;
    Ok(GluingScheme {
        gamma,
        proj1,
        proj2,
    })
}
