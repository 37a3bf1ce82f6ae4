//! Set-theoretic colimits in the category of Σ-hypergraphs: coproducts,
//! coequalizers, pushouts, and pushout complements.
//!
//! Naming is deterministic throughout: coproducts tag element ids with `L:`
//! and `R:` prefixes, and a coequalizer names every equivalence class after
//! its least member in the target's insertion order. Quotients therefore have
//! reproducible element ids, which keeps all downstream enumeration output
//! stable.

use std::collections::BTreeMap;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, NodeId};
use crate::morphism::Morphism;

fn tag_node(prefix: &str, id: &NodeId) -> NodeId {
    NodeId::new(format!("{prefix}{id}"))
}

fn tag_edge(prefix: &str, id: &EdgeId) -> EdgeId {
    EdgeId::new(format!("{prefix}{id}"))
}

/// Disjoint union of two hypergraphs over the same signature, with the two
/// coprojections. Element order is `g1`'s order followed by `g2`'s order.
pub fn coproduct(g1: &Hypergraph, g2: &Hypergraph) -> Result<(Hypergraph, Morphism, Morphism)> {
    if g1.signature() != g2.signature() {
        return Err(Error::SignatureMismatch);
    }
    let mut sum = Hypergraph::new(g1.signature().clone());
    for (prefix, g) in [("L:", g1), ("R:", g2)] {
        for v in g.nodes() {
            sum.add_node(tag_node(prefix, v))?;
        }
        for (id, e) in g.edges() {
            sum.add_edge(
                tag_edge(prefix, id),
                e.label.clone(),
                e.sources.iter().map(|v| tag_node(prefix, v)).collect(),
                e.targets.iter().map(|v| tag_node(prefix, v)).collect(),
            )?;
        }
    }
    let inj = |prefix: &str, g: &Hypergraph| {
        let node_map = g.nodes().map(|v| (v.clone(), tag_node(prefix, v))).collect();
        let edge_map = g
            .edges()
            .map(|(id, _)| (id.clone(), tag_edge(prefix, id)))
            .collect();
        Morphism::new(g.clone(), sum.clone(), node_map, edge_map)
    };
    let i1 = inj("L:", g1)?;
    let i2 = inj("R:", g2)?;
    Ok((sum, i1, i2))
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // keep the smaller index as root so the class representative is the
        // least member in insertion order
        if ra < rb {
            self.parent[rb] = ra;
        } else {
            self.parent[ra] = rb;
        }
    }
}

/// Coequalizer of a parallel pair `f, g : X ⇉ Y`: the quotient of `Y` by the
/// smallest equivalence identifying `f(x)` with `g(x)` for every element `x`,
/// together with the quotient morphism.
///
/// Identified edges must carry the same label; their source and target lists
/// are merged positionwise, which may identify further nodes. Well-formed
/// gluing schemes never produce a label clash, but the condition is checked
/// and reported as [`Error::InconsistentGluing`].
pub fn coequalizer(f: &Morphism, g: &Morphism) -> Result<(Hypergraph, Morphism)> {
    if f.source() != g.source() || f.target() != g.target() {
        return Err(Error::NotParallelPair);
    }
    let y = f.target();
    let node_ids: Vec<NodeId> = y.nodes().cloned().collect();
    let edge_ids: Vec<EdgeId> = y.edges().map(|(id, _)| id.clone()).collect();
    let node_index: BTreeMap<&NodeId, usize> =
        node_ids.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let edge_index: BTreeMap<&EdgeId, usize> =
        edge_ids.iter().enumerate().map(|(i, e)| (e, i)).collect();

    let mut nodes = UnionFind::new(node_ids.len());
    let mut edges = UnionFind::new(edge_ids.len());
    for v in f.source().nodes() {
        nodes.union(node_index[f.node_image(v)], node_index[g.node_image(v)]);
    }
    for (e, _) in f.source().edges() {
        edges.union(edge_index[f.edge_image(e)], edge_index[g.edge_image(e)]);
    }

    // glued edges merge their endpoint lists positionwise
    let mut class_members: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for i in 0..edge_ids.len() {
        class_members.entry(edges.find(i)).or_default().push(i);
    }
    for members in class_members.values() {
        let rep = &edge_ids[members[0]];
        let rep_edge = y.edge(rep).unwrap();
        for &m in &members[1..] {
            let other = y.edge(&edge_ids[m]).unwrap();
            if other.label != rep_edge.label {
                return Err(Error::InconsistentGluing(rep.clone(), edge_ids[m].clone()));
            }
            for (a, b) in rep_edge
                .sources
                .iter()
                .zip(&other.sources)
                .chain(rep_edge.targets.iter().zip(&other.targets))
            {
                nodes.union(node_index[a], node_index[b]);
            }
        }
    }

    // build the quotient; class representatives are the least members, and
    // quotient order follows the representatives' order in Y
    let mut quotient = Hypergraph::new(y.signature().clone());
    let node_class: Vec<usize> = (0..node_ids.len()).map(|i| nodes.find(i)).collect();
    let edge_class: Vec<usize> = (0..edge_ids.len()).map(|i| edges.find(i)).collect();
    for (i, &c) in node_class.iter().enumerate() {
        if i == c {
            quotient.add_node(node_ids[i].clone())?;
        }
    }
    for (i, &c) in edge_class.iter().enumerate() {
        if i == c {
            let e = y.edge(&edge_ids[i]).unwrap();
            quotient.add_edge(
                edge_ids[i].clone(),
                e.label.clone(),
                e.sources
                    .iter()
                    .map(|v| node_ids[node_class[node_index[v]]].clone())
                    .collect(),
                e.targets
                    .iter()
                    .map(|v| node_ids[node_class[node_index[v]]].clone())
                    .collect(),
            )?;
        }
    }
    let node_map = node_ids
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), node_ids[node_class[i]].clone()))
        .collect();
    let edge_map = edge_ids
        .iter()
        .enumerate()
        .map(|(i, e)| (e.clone(), edge_ids[edge_class[i]].clone()))
        .collect();
    let eps = Morphism::new(y.clone(), quotient.clone(), node_map, edge_map)?;
    Ok((quotient, eps))
}

/// Pushout of a span `B ←f− A −g→ C`, computed as the coequalizer of
/// `f;ι₁` and `g;ι₂` over `B + C`. Returns the pushout object and the two
/// injections `B → P` and `C → P`.
pub fn pushout(f: &Morphism, g: &Morphism) -> Result<(Hypergraph, Morphism, Morphism)> {
    if f.source() != g.source() {
        return Err(Error::NoCommonSource);
    }
    let (_, i1, i2) = coproduct(f.target(), g.target())?;
    let (p, eps) = coequalizer(&f.compose(&i1), &g.compose(&i2))?;
    let inj1 = i1.compose(&eps);
    let inj2 = i2.compose(&eps);
    Ok((p, inj1, inj2))
}

/// Pushout complement of `K −k2l→ L −l2g→ G` for a mono match `l2g`:
/// the subgraph `C` of `G` obtained by removing the image of `L` except for
/// the image of `K`, together with `K → C` and the inclusion `C → G`.
///
/// Fails if `l2g` is not mono, or if an edge outside the match touches a
/// deleted node (the dangling condition). Left-connected rules with convex
/// matches never trip either failure, but both are detected.
pub fn pushout_complement(
    k2l: &Morphism,
    l2g: &Morphism,
) -> Result<(Hypergraph, Morphism, Morphism)> {
    if !l2g.is_mono() {
        return Err(Error::MatchNotMono);
    }
    debug_assert_eq!(k2l.target(), l2g.source());
    let g = l2g.target();
    let l = l2g.source();

    let kept_nodes: IndexSet<NodeId> = k2l
        .source()
        .nodes()
        .map(|v| l2g.node_image(k2l.node_image(v)).clone())
        .collect();
    let kept_edges: IndexSet<EdgeId> = k2l
        .source()
        .edges()
        .map(|(e, _)| l2g.edge_image(k2l.edge_image(e)).clone())
        .collect();
    let deleted_nodes: IndexSet<NodeId> = l
        .nodes()
        .map(|v| l2g.node_image(v).clone())
        .filter(|v| !kept_nodes.contains(v))
        .collect();
    let deleted_edges: IndexSet<EdgeId> = l
        .edges()
        .map(|(e, _)| l2g.edge_image(e).clone())
        .filter(|e| !kept_edges.contains(e))
        .collect();

    let mut c = Hypergraph::new(g.signature().clone());
    for v in g.nodes() {
        if !deleted_nodes.contains(v) {
            c.add_node(v.clone())?;
        }
    }
    for (id, e) in g.edges() {
        if deleted_edges.contains(id) {
            continue;
        }
        if let Some(v) = e
            .sources
            .iter()
            .chain(e.targets.iter())
            .find(|v| deleted_nodes.contains(*v))
        {
            return Err(Error::NoPushoutComplement {
                edge: id.clone(),
                node: v.clone(),
            });
        }
        c.add_edge(id.clone(), e.label.clone(), e.sources.clone(), e.targets.clone())?;
    }

    let k2c = Morphism::new(
        k2l.source().clone(),
        c.clone(),
        k2l.source()
            .nodes()
            .map(|v| (v.clone(), l2g.node_image(k2l.node_image(v)).clone()))
            .collect(),
        k2l.source()
            .edges()
            .map(|(e, _)| (e.clone(), l2g.edge_image(k2l.edge_image(e)).clone()))
            .collect(),
    )?;
    let c2g = Morphism::new(
        c.clone(),
        g.clone(),
        c.nodes().map(|v| (v.clone(), v.clone())).collect(),
        c.edges().map(|(e, _)| (e.clone(), e.clone())).collect(),
    )?;
    Ok((c, k2c, c2g))
}
