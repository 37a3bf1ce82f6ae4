//! Enumeration of mono matches of a pattern hypergraph into a host.
//!
//! Matches are enumerated edge-first: hyperedges are assigned by label in
//! pattern order, each assignment inducing part of the node map; whatever
//! nodes remain free afterwards are bound injectively. Candidates are tried
//! in host insertion order, so the result list is deterministic and
//! lexicographic in the edge assignment.

use std::collections::BTreeMap;

use indexmap::IndexSet;

use crate::hypergraph::{EdgeId, Hyperedge, Hypergraph, NodeId};
use crate::morphism::Morphism;

struct MatchSearch<'a> {
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    node_map: BTreeMap<NodeId, NodeId>,
    node_rev: BTreeMap<NodeId, NodeId>,
    edge_map: BTreeMap<EdgeId, EdgeId>,
    used_edges: IndexSet<EdgeId>,
    results: Vec<Morphism>,
}

impl<'a> MatchSearch<'a> {
    fn bind_node(&mut self, x: &NodeId, y: &NodeId, trail: &mut Vec<NodeId>) -> bool {
        match self.node_map.get(x) {
            Some(existing) => existing == y,
            None => {
                if self.node_rev.contains_key(y) {
                    return false;
                }
                self.node_map.insert(x.clone(), y.clone());
                self.node_rev.insert(y.clone(), x.clone());
                trail.push(x.clone());
                true
            }
        }
    }

    fn undo(&mut self, trail: &[NodeId]) {
        for x in trail {
            let y = self.node_map.remove(x).unwrap();
            self.node_rev.remove(&y);
        }
    }

    fn edges(&mut self, order: &[(EdgeId, Hyperedge)], idx: usize) {
        if idx == order.len() {
            let free: Vec<NodeId> = self
                .pattern
                .nodes()
                .filter(|v| !self.node_map.contains_key(*v))
                .cloned()
                .collect();
            self.free_nodes(&free, 0);
            return;
        }
        let (pid, pedge) = &order[idx];
        let candidates: Vec<(EdgeId, Hyperedge)> = self
            .host
            .edges()
            .filter(|(id, e)| e.label == pedge.label && !self.used_edges.contains(*id))
            .map(|(id, e)| (id.clone(), e.clone()))
            .collect();
        for (hid, hedge) in candidates {
            let mut trail = Vec::new();
            let mut ok = true;
            for (x, y) in pedge
                .sources
                .iter()
                .zip(&hedge.sources)
                .chain(pedge.targets.iter().zip(&hedge.targets))
            {
                if !self.bind_node(x, y, &mut trail) {
                    ok = false;
                    break;
                }
            }
            if ok {
                self.edge_map.insert(pid.clone(), hid.clone());
                self.used_edges.insert(hid.clone());
                self.edges(order, idx + 1);
                self.edge_map.remove(pid);
                self.used_edges.swap_remove(&hid);
            }
            self.undo(&trail);
        }
    }

    fn free_nodes(&mut self, free: &[NodeId], idx: usize) {
        if idx == free.len() {
            self.results.push(
                Morphism::new(
                    self.pattern.clone(),
                    self.host.clone(),
                    self.node_map.clone(),
                    self.edge_map.clone(),
                )
                .expect("match search produced a non-morphism"),
            );
            return;
        }
        let x = &free[idx];
        let candidates: Vec<NodeId> = self
            .host
            .nodes()
            .filter(|y| !self.node_rev.contains_key(*y))
            .cloned()
            .collect();
        for y in candidates {
            let mut trail = Vec::new();
            if self.bind_node(x, &y, &mut trail) {
                self.free_nodes(free, idx + 1);
                self.undo(&trail);
            }
        }
    }
}

/// All mono morphisms `pattern → host`, in deterministic order. For the left
/// side of a valid left-connected rule these are exactly the convex matches.
pub fn enumerate_matches(pattern: &Hypergraph, host: &Hypergraph) -> Vec<Morphism> {
    let order: Vec<(EdgeId, Hyperedge)> = pattern
        .edges()
        .map(|(id, e)| (id.clone(), e.clone()))
        .collect();
    let mut search = MatchSearch {
        pattern,
        host,
        node_map: BTreeMap::new(),
        node_rev: BTreeMap::new(),
        edge_map: BTreeMap::new(),
        used_edges: IndexSet::new(),
        results: Vec::new(),
    };
    search.edges(&order, 0);
    search.results
}
