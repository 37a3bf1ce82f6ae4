use thiserror::Error;

use crate::hypergraph::{EdgeId, Label, NodeId};

/// Errors raised by graph construction and the colimit/rewriting operations.
///
/// Rule-validity problems are not errors; they are reported as data by
/// [`crate::rules::validate_rule`].
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("node not in graph: {0}")]
    NodeNotInGraph(NodeId),

    #[error("edge not in graph: {0}")]
    EdgeNotInGraph(EdgeId),

    #[error("duplicate node id: {0}")]
    DuplicateNode(NodeId),

    #[error("duplicate edge id: {0}")]
    DuplicateEdge(EdgeId),

    #[error("label not in signature: {0}")]
    UnknownLabel(Label),

    #[error("duplicate signature label: {0}")]
    DuplicateLabel(Label),

    #[error("edge {edge}: label {label} expects arity {arity} and coarity {coarity}, got {got_arity} sources and {got_coarity} targets")]
    ArityMismatch {
        edge: EdgeId,
        label: Label,
        arity: usize,
        coarity: usize,
        got_arity: usize,
        got_coarity: usize,
    },

    #[error("signatures do not match")]
    SignatureMismatch,

    #[error("morphism is not total: missing image for {0}")]
    MorphismNotTotal(String),

    #[error("morphism does not preserve structure: {0}")]
    MorphismStructure(String),

    #[error("coequalizer arguments must be a parallel pair of morphisms")]
    NotParallelPair,

    #[error("pushout arguments must share a common source")]
    NoCommonSource,

    #[error("inconsistent gluing: edges {0} and {1} are identified but carry different labels")]
    InconsistentGluing(EdgeId, EdgeId),

    #[error("match is not mono")]
    MatchNotMono,

    #[error("no pushout complement: edge {edge} outside the match touches deleted node {node}")]
    NoPushoutComplement { edge: EdgeId, node: NodeId },

    #[error("gluing pairs edges with different labels: {0} vs {1}")]
    GluedLabelMismatch(EdgeId, EdgeId),

    #[error("interface node {0} repeated within one interface list")]
    DuplicateInterfaceNode(NodeId),

    #[error("rewrite source is not an ma-cospan")]
    SourceNotMaCospan,

    #[error("rewrite result is not an ma-cospan")]
    ResultNotMaCospan,

    #[error("rule index {0} out of range")]
    RuleIndexOutOfRange(usize),

    #[error("invalid rule {name}: {violations}")]
    InvalidRule { name: String, violations: String },
}

pub type Result<T> = std::result::Result<T, Error>;
