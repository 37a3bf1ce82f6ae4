//! Hypergraphs with interface: ordered input and output node lists.

use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId};

/// A hypergraph together with ordered input/output node lists, i.e. a cospan
/// out of two discrete graphs. Each list is duplicate-free on its own; a node
/// may appear in both (a bare wire).
#[derive(Debug, Clone, PartialEq)]
pub struct InterfacedHypergraph {
    graph: Hypergraph,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
}

impl InterfacedHypergraph {
    pub fn new(graph: Hypergraph, inputs: Vec<NodeId>, outputs: Vec<NodeId>) -> Result<Self> {
        for list in [&inputs, &outputs] {
            let mut seen = indexmap::IndexSet::new();
            for v in list {
                if !graph.has_node(v) {
                    return Err(Error::NodeNotInGraph(v.clone()));
                }
                if !seen.insert(v.clone()) {
                    return Err(Error::DuplicateInterfaceNode(v.clone()));
                }
            }
        }
        Ok(Self {
            graph,
            inputs,
            outputs,
        })
    }

    /// Wrap a graph with its degree-zero nodes as the interface, in node
    /// order. For an ma-hypergraph this is the canonical ma-cospan.
    pub fn with_natural_interface(graph: Hypergraph) -> Self {
        let inputs = graph.input_nodes();
        let outputs = graph.output_nodes();
        Self {
            graph,
            inputs,
            outputs,
        }
    }

    pub fn graph(&self) -> &Hypergraph {
        &self.graph
    }

    pub fn inputs(&self) -> &[NodeId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    pub fn into_graph(self) -> Hypergraph {
        self.graph
    }

    /// An ma-cospan: the graph is monogamous acyclic and the interface lists
    /// enumerate exactly `in(G)` and `out(G)`.
    pub fn is_ma_cospan(&self) -> bool {
        if !self.graph.is_monogamous_acyclic() {
            return false;
        }
        let ins = self.graph.input_nodes();
        let outs = self.graph.output_nodes();
        self.inputs.len() == ins.len()
            && self.outputs.len() == outs.len()
            && self.inputs.iter().all(|v| ins.contains(v))
            && self.outputs.iter().all(|v| outs.contains(v))
    }
}
