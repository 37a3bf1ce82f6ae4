//! Hypergraph morphisms: structure-preserving node and edge maps.

use std::collections::BTreeMap;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::hypergraph::{EdgeId, Hypergraph, NodeId};

/// A morphism between two hypergraphs over the same signature. Total on the
/// source's nodes and edges; respects sources, targets and labels.
#[derive(Debug, Clone, PartialEq)]
pub struct Morphism {
    source: Hypergraph,
    target: Hypergraph,
    node_map: BTreeMap<NodeId, NodeId>,
    edge_map: BTreeMap<EdgeId, EdgeId>,
}

impl Morphism {
    /// Build a morphism, checking totality and structure preservation.
    pub fn new(
        source: Hypergraph,
        target: Hypergraph,
        node_map: BTreeMap<NodeId, NodeId>,
        edge_map: BTreeMap<EdgeId, EdgeId>,
    ) -> Result<Self> {
        for v in source.nodes() {
            let img = node_map
                .get(v)
                .ok_or_else(|| Error::MorphismNotTotal(format!("node {v}")))?;
            if !target.has_node(img) {
                return Err(Error::NodeNotInGraph(img.clone()));
            }
        }
        for (id, e) in source.edges() {
            let img_id = edge_map
                .get(id)
                .ok_or_else(|| Error::MorphismNotTotal(format!("edge {id}")))?;
            let img = target
                .edge(img_id)
                .ok_or_else(|| Error::MorphismStructure(format!("edge {img_id} not in target")))?;
            if img.label != e.label {
                return Err(Error::MorphismStructure(format!(
                    "edge {id}: label {} mapped onto label {}",
                    e.label, img.label
                )));
            }
            let mapped_sources: Vec<_> = e.sources.iter().map(|v| node_map[v].clone()).collect();
            let mapped_targets: Vec<_> = e.targets.iter().map(|v| node_map[v].clone()).collect();
            if mapped_sources != img.sources || mapped_targets != img.targets {
                return Err(Error::MorphismStructure(format!(
                    "edge {id} does not commute with sources/targets"
                )));
            }
        }
        Ok(Self {
            source,
            target,
            node_map,
            edge_map,
        })
    }

    pub fn identity(g: &Hypergraph) -> Self {
        let node_map = g.nodes().map(|v| (v.clone(), v.clone())).collect();
        let edge_map = g.edges().map(|(id, _)| (id.clone(), id.clone())).collect();
        Self {
            source: g.clone(),
            target: g.clone(),
            node_map,
            edge_map,
        }
    }

    pub fn source(&self) -> &Hypergraph {
        &self.source
    }

    pub fn target(&self) -> &Hypergraph {
        &self.target
    }

    pub fn node_image(&self, v: &NodeId) -> &NodeId {
        &self.node_map[v]
    }

    pub fn edge_image(&self, e: &EdgeId) -> &EdgeId {
        &self.edge_map[e]
    }

    pub fn node_map(&self) -> &BTreeMap<NodeId, NodeId> {
        &self.node_map
    }

    pub fn edge_map(&self) -> &BTreeMap<EdgeId, EdgeId> {
        &self.edge_map
    }

    /// Composition `self ; other` (apply `self` first).
    ///
    /// Panics if `other`'s source is not `self`'s target; composition of
    /// mismatched morphisms is a programming error, not an input error.
    pub fn compose(&self, other: &Morphism) -> Morphism {
        debug_assert_eq!(
            self.target, other.source,
            "morphism composition endpoint mismatch"
        );
        let node_map = self
            .node_map
            .iter()
            .map(|(v, w)| (v.clone(), other.node_map[w].clone()))
            .collect();
        let edge_map = self
            .edge_map
            .iter()
            .map(|(e, f)| (e.clone(), other.edge_map[f].clone()))
            .collect();
        Morphism {
            source: self.source.clone(),
            target: other.target.clone(),
            node_map,
            edge_map,
        }
    }

    /// Injective on nodes and on edges.
    pub fn is_mono(&self) -> bool {
        let node_images: IndexSet<_> = self.node_map.values().collect();
        let edge_images: IndexSet<_> = self.edge_map.values().collect();
        node_images.len() == self.node_map.len() && edge_images.len() == self.edge_map.len()
    }

    /// Surjective on nodes and on edges.
    pub fn is_epi(&self) -> bool {
        let node_images: IndexSet<_> = self.node_map.values().collect();
        let edge_images: IndexSet<_> = self.edge_map.values().collect();
        node_images.len() == self.target.node_count()
            && edge_images.len() == self.target.edge_count()
    }

    /// A convex match is mono with a path-closed image: every path in the
    /// target between two image nodes uses image edges only.
    ///
    /// Rather than materializing paths, this checks that no non-image edge
    /// lies both on the forward closure of the image nodes and on their
    /// backward closure; such an edge is exactly one that some image-to-image
    /// path passes through.
    pub fn is_convex_match(&self) -> bool {
        if !self.is_mono() {
            return false;
        }
        let image_nodes: IndexSet<NodeId> = self.node_map.values().cloned().collect();
        let image_edges: IndexSet<EdgeId> = self.edge_map.values().cloned().collect();
        let (_, forward) = self.target.forward_closure(image_nodes.iter());
        let (_, backward) = self.target.backward_closure(image_nodes.iter());
        self.target.edges().all(|(id, _)| {
            image_edges.contains(id) || !(forward.contains(id) && backward.contains(id))
        })
    }
}
