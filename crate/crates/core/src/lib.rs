//! String diagrams as interfaced Σ-labelled hypergraphs, convex
//! double-pushout rewriting over a fixed interface, and enumeration of the
//! critical pairs of a left-connected rewrite system with a bounded
//! local-confluence check.
//!
//! The pipeline, bottom to top:
//!
//! * [`hypergraph`], [`morphism`], [`interfaced`] — the data model and the
//!   structural predicates (monogamy, acyclicity, strong connectivity,
//!   convexity).
//! * [`colimits`] — coproduct, coequalizer, pushout and pushout complement,
//!   spelled out set-theoretically with deterministic element naming.
//! * [`rules`], [`matching`], [`rewrite`] — left-connected rules, mono match
//!   enumeration, and the single rewrite step.
//! * [`independent`], [`gluing`], [`critical_pairs`] — gluing schemes from
//!   independent edge sets and the full/essential critical pair
//!   enumerations, with isomorphism deduplication.
//! * [`confluence`] — joinability search and the local-confluence report.
//! * [`json`], [`dot`] — the file formats.

pub mod colimits;
pub mod confluence;
pub mod critical_pairs;
pub mod dot;
pub mod error;
pub mod gluing;
pub mod hypergraph;
pub mod independent;
pub mod interfaced;
pub mod iso;
pub mod json;
pub mod matching;
pub mod morphism;
pub mod rewrite;
pub mod rules;

pub use colimits::{coequalizer, coproduct, pushout, pushout_complement};
pub use confluence::{
    check_local_confluence, derive_pair, joinable, ConfluenceOptions, ConfluenceReport,
    ConfluenceVerdict, JoinVerdict, JoinabilityResult,
};
pub use critical_pairs::{
    collect_critical_pairs, cp_cospans_equivalent, critical_pairs_for_rule_pair, dedup_up_to_iso,
    enumerate_all_critical_pairs, enumerate_critical_pairs, enumerate_essential_critical_pairs,
    hyperedge_gluing, hyperedge_schemes, is_parallel, CriticalPairCandidate, EnumerationMode,
    EnumerationOptions, HyperedgeGluing,
};
pub use error::{Error, Result};
pub use gluing::{induced_hypergraph, GluingScheme};
pub use hypergraph::{EdgeId, Hyperedge, Hypergraph, Label, NodeId, Signature};
pub use independent::{
    enumerate_independent_edge_sets, enumerate_k_independent_edge_sets, IndependentEdgeSet,
};
pub use interfaced::InterfacedHypergraph;
pub use iso::{canonical_key, isomorphic, isomorphic_graphs};
pub use matching::enumerate_matches;
pub use morphism::Morphism;
pub use rewrite::{rewrite_step, rule_interface, Derivation};
pub use rules::{validate_rule, RewriteRule, RewriteSystem, RuleViolation};
