//! Σ-labelled directed hypergraphs and their structural predicates.
//!
//! A hypergraph holds a finite ordered set of nodes and a finite ordered set
//! of hyperedges; every hyperedge carries a label drawn from a [`Signature`]
//! that fixes its arity (number of sources) and coarity (number of targets).
//! Node and edge order is insertion order and is significant: the enumeration
//! algorithms iterate both in that order to produce deterministic output.

use std::fmt;

use indexmap::{IndexMap, IndexSet};

use crate::error::{Error, Result};

macro_rules! id_type {
    ($(#[$doc:meta])* $name:ident) => {
        $(#[$doc])*
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name(pub String);

        impl $name {
            pub fn new(id: impl Into<String>) -> Self {
                Self(id.into())
            }

            pub fn as_str(&self) -> &str {
                &self.0
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0)
            }
        }

        impl From<&str> for $name {
            fn from(s: &str) -> Self {
                Self(s.to_owned())
            }
        }

        impl From<String> for $name {
            fn from(s: String) -> Self {
                Self(s)
            }
        }
    };
}

id_type! {
    /// Opaque node identifier. Ids are strings so that derived graphs
    /// (coproducts, quotients) can name their elements after their origin.
    NodeId
}
id_type! {
    /// Opaque hyperedge identifier.
    EdgeId
}
id_type! {
    /// Hyperedge label symbol.
    Label
}

/// A signature: a set of labels, each with a fixed arity and coarity.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Signature {
    entries: IndexMap<Label, (usize, usize)>,
}

impl Signature {
    pub fn new() -> Self {
        Self::default()
    }

    /// Declare a label. Labels are unique within a signature.
    pub fn add(&mut self, label: Label, arity: usize, coarity: usize) -> Result<()> {
        if self.entries.contains_key(&label) {
            return Err(Error::DuplicateLabel(label));
        }
        self.entries.insert(label, (arity, coarity));
        Ok(())
    }

    /// Arity/coarity of a label, if declared.
    pub fn profile(&self, label: &Label) -> Option<(usize, usize)> {
        self.entries.get(label).copied()
    }

    /// Labels in declaration order.
    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.entries.keys()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// One labelled hyperedge: ordered source and target node lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperedge {
    pub label: Label,
    pub sources: Vec<NodeId>,
    pub targets: Vec<NodeId>,
}

/// A finite Σ-labelled directed hypergraph.
///
/// Values are immutable once built; every operation takes its inputs by
/// reference and returns fresh graphs, so values can be shared freely across
/// threads.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    signature: Signature,
    nodes: IndexSet<NodeId>,
    edges: IndexMap<EdgeId, Hyperedge>,
}

impl Hypergraph {
    pub fn new(signature: Signature) -> Self {
        Self {
            signature,
            nodes: IndexSet::new(),
            edges: IndexMap::new(),
        }
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn add_node(&mut self, id: NodeId) -> Result<()> {
        if !self.nodes.insert(id.clone()) {
            return Err(Error::DuplicateNode(id));
        }
        Ok(())
    }

    /// Add a hyperedge. The label must be declared and the source/target
    /// lists must match its arity/coarity; all endpoints must already be
    /// nodes of the graph.
    pub fn add_edge(
        &mut self,
        id: EdgeId,
        label: Label,
        sources: Vec<NodeId>,
        targets: Vec<NodeId>,
    ) -> Result<()> {
        if self.edges.contains_key(&id) {
            return Err(Error::DuplicateEdge(id));
        }
        let (arity, coarity) = self
            .signature
            .profile(&label)
            .ok_or_else(|| Error::UnknownLabel(label.clone()))?;
        if sources.len() != arity || targets.len() != coarity {
            return Err(Error::ArityMismatch {
                edge: id,
                label,
                arity,
                coarity,
                got_arity: sources.len(),
                got_coarity: targets.len(),
            });
        }
        for v in sources.iter().chain(targets.iter()) {
            if !self.nodes.contains(v) {
                return Err(Error::NodeNotInGraph(v.clone()));
            }
        }
        self.edges.insert(
            id,
            Hyperedge {
                label,
                sources,
                targets,
            },
        );
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_node(&self, id: &NodeId) -> bool {
        self.nodes.contains(id)
    }

    pub fn has_edge(&self, id: &EdgeId) -> bool {
        self.edges.contains_key(id)
    }

    /// Nodes in insertion order.
    pub fn nodes(&self) -> impl Iterator<Item = &NodeId> {
        self.nodes.iter()
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> impl Iterator<Item = (&EdgeId, &Hyperedge)> {
        self.edges.iter()
    }

    pub fn edge(&self, id: &EdgeId) -> Option<&Hyperedge> {
        self.edges.get(id)
    }

    pub fn node_index(&self, id: &NodeId) -> Option<usize> {
        self.nodes.get_index_of(id)
    }

    pub fn edge_index(&self, id: &EdgeId) -> Option<usize> {
        self.edges.get_index_of(id)
    }

    /// Edge ids with the given label, in insertion order.
    pub fn edges_with_label(&self, label: &Label) -> Vec<EdgeId> {
        self.edges
            .iter()
            .filter(|(_, e)| &e.label == label)
            .map(|(id, _)| id.clone())
            .collect()
    }

    /// In/out degree of a node, counting (edge, position) pairs: a node that
    /// occurs twice in one source list contributes two to the out-degree.
    pub fn degrees(&self, v: &NodeId) -> Result<(usize, usize)> {
        if !self.nodes.contains(v) {
            return Err(Error::NodeNotInGraph(v.clone()));
        }
        let mut in_degree = 0;
        let mut out_degree = 0;
        for e in self.edges.values() {
            out_degree += e.sources.iter().filter(|s| *s == v).count();
            in_degree += e.targets.iter().filter(|t| *t == v).count();
        }
        Ok((in_degree, out_degree))
    }

    fn degree_tables(&self) -> (Vec<usize>, Vec<usize>) {
        let mut in_deg = vec![0usize; self.nodes.len()];
        let mut out_deg = vec![0usize; self.nodes.len()];
        for e in self.edges.values() {
            for s in &e.sources {
                out_deg[self.nodes.get_index_of(s).unwrap()] += 1;
            }
            for t in &e.targets {
                in_deg[self.nodes.get_index_of(t).unwrap()] += 1;
            }
        }
        (in_deg, out_deg)
    }

    /// Input nodes `in(G)`: nodes of in-degree 0, in node order.
    pub fn input_nodes(&self) -> Vec<NodeId> {
        let (in_deg, _) = self.degree_tables();
        self.nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| in_deg[*i] == 0)
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// Output nodes `out(G)`: nodes of out-degree 0, in node order.
    pub fn output_nodes(&self) -> Vec<NodeId> {
        let (_, out_deg) = self.degree_tables();
        self.nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| out_deg[*i] == 0)
            .map(|(_, v)| v.clone())
            .collect()
    }

    /// True iff the graph is monogamous (every node has in- and out-degree
    /// at most 1) and acyclic (no edge path closes back on itself).
    ///
    /// Acyclicity is decided by a Kahn topological sort of the bipartite
    /// node/edge incidence digraph; paths are never materialized here.
    pub fn is_monogamous_acyclic(&self) -> bool {
        let (in_deg, out_deg) = self.degree_tables();
        if in_deg.iter().any(|&d| d > 1) || out_deg.iter().any(|&d| d > 1) {
            return false;
        }
        self.is_acyclic_with(&in_deg)
    }

    fn is_acyclic_with(&self, in_deg: &[usize]) -> bool {
        // Kahn over the bipartite digraph: node -> edge for each source
        // occurrence, edge -> node for each target occurrence.
        let mut consumers: Vec<Vec<usize>> = vec![Vec::new(); self.nodes.len()];
        let mut pending_edge = vec![0usize; self.edges.len()];
        for (ei, e) in self.edges.values().enumerate() {
            pending_edge[ei] = e.sources.len();
            for s in &e.sources {
                consumers[self.nodes.get_index_of(s).unwrap()].push(ei);
            }
        }
        let mut pending_node = in_deg.to_vec();
        let mut node_queue: Vec<usize> = (0..self.nodes.len())
            .filter(|&i| pending_node[i] == 0)
            .collect();
        let mut edge_queue: Vec<usize> = (0..self.edges.len())
            .filter(|&i| pending_edge[i] == 0)
            .collect();
        let mut done_edges = 0;
        while !node_queue.is_empty() || !edge_queue.is_empty() {
            if let Some(ei) = edge_queue.pop() {
                done_edges += 1;
                let e = &self.edges[ei];
                for t in &e.targets {
                    let ti = self.nodes.get_index_of(t).unwrap();
                    pending_node[ti] -= 1;
                    if pending_node[ti] == 0 {
                        node_queue.push(ti);
                    }
                }
                continue;
            }
            let vi = node_queue.pop().unwrap();
            for &ei in &consumers[vi] {
                pending_edge[ei] -= 1;
                if pending_edge[ei] == 0 {
                    edge_queue.push(ei);
                }
            }
        }
        done_edges == self.edges.len()
    }

    /// Forward closure of a node set: all edges reachable by a path whose
    /// first edge consumes a seed node, together with every node those edges
    /// produce. Seeds are included in the returned node set.
    pub(crate) fn forward_closure<'a>(
        &self,
        seeds: impl IntoIterator<Item = &'a NodeId>,
    ) -> (IndexSet<NodeId>, IndexSet<EdgeId>) {
        let mut nodes: IndexSet<NodeId> = seeds.into_iter().cloned().collect();
        let mut edges: IndexSet<EdgeId> = IndexSet::new();
        loop {
            let mut changed = false;
            for (id, e) in &self.edges {
                if edges.contains(id) {
                    continue;
                }
                if e.sources.iter().any(|s| nodes.contains(s)) {
                    edges.insert(id.clone());
                    for t in &e.targets {
                        nodes.insert(t.clone());
                    }
                    changed = true;
                }
            }
            if !changed {
                return (nodes, edges);
            }
        }
    }

    /// Backward closure of a node set: all edges from which a seed node can
    /// be reached, together with every node those edges consume.
    pub(crate) fn backward_closure<'a>(
        &self,
        seeds: impl IntoIterator<Item = &'a NodeId>,
    ) -> (IndexSet<NodeId>, IndexSet<EdgeId>) {
        let mut nodes: IndexSet<NodeId> = seeds.into_iter().cloned().collect();
        let mut edges: IndexSet<EdgeId> = IndexSet::new();
        loop {
            let mut changed = false;
            for (id, e) in &self.edges {
                if edges.contains(id) {
                    continue;
                }
                if e.targets.iter().any(|t| nodes.contains(t)) {
                    edges.insert(id.clone());
                    for s in &e.sources {
                        nodes.insert(s.clone());
                    }
                    changed = true;
                }
            }
            if !changed {
                return (nodes, edges);
            }
        }
    }

    /// True iff there is a path from `x` to `y`; the empty path counts only
    /// when `x == y`.
    pub fn has_path(&self, x: &NodeId, y: &NodeId) -> bool {
        let (nodes, _) = self.forward_closure([x]);
        nodes.contains(y)
    }

    /// True iff every input node reaches every output node. Vacuously true
    /// when either side is empty; a lone node that is both input and output
    /// reaches itself by the empty path.
    pub fn is_strongly_connected(&self) -> bool {
        let outputs = self.output_nodes();
        if outputs.is_empty() {
            return true;
        }
        for x in self.input_nodes() {
            let (reached, _) = self.forward_closure([&x]);
            if outputs.iter().any(|y| !reached.contains(y)) {
                return false;
            }
        }
        true
    }
}
