//! Critical pair enumeration.
//!
//! Candidates arise from a two-phase gluing of `L_i + L_j`: first merge
//! same-label hyperedges chosen by one independent edge set per label (their
//! Cartesian product across labels, at least one pair in total), then
//! optionally merge surviving inputs of one side with surviving outputs of
//! the other. A candidate is yielded when the glued graph with its natural
//! interface is an ma-cospan. The full enumeration performs both phases;
//! the essential enumeration stops after the first, which is sufficient for
//! joinability analysis.
//!
//! Every ordered rule pair `(i, j)` is visited, including `i = j` (using two
//! disjoint copies of the left side); an option suppresses the `(j, i)`
//! mirror of each unordered pair. Output order is lexicographic in
//! `(i, j, per-label scheme order, node-scheme order)` and the streams are
//! lazy in the scheme dimension.

use std::collections::BTreeMap;

use itertools::Itertools;

use crate::colimits::{coequalizer, coproduct};
use crate::error::Result;
use crate::gluing::induced_scheme_over;
use crate::hypergraph::{EdgeId, Hypergraph, NodeId};
use crate::independent::{enumerate_independent_edge_sets, IndependentEdgeSet};
use crate::interfaced::InterfacedHypergraph;
use crate::iso::canonical_key;
use crate::morphism::Morphism;
use crate::rules::RewriteSystem;

/// One enumerated critical pair: the cp-cospan `L_i + L_j ↠ S ← I+O`
/// together with the gluing data that produced it.
#[derive(Debug, Clone)]
pub struct CriticalPairCandidate {
    pub rule_i: usize,
    pub rule_j: usize,
    /// Glued hyperedges, as (edge of `L_i`, edge of `L_j`) in rule-local ids.
    pub hyperedge_scheme: IndependentEdgeSet<EdgeId>,
    /// Glued interface nodes of the second phase, as node ids of the
    /// first-phase gluing. Empty for essential enumeration output.
    pub node_scheme: IndependentEdgeSet<NodeId>,
    /// `S` with interface `in(S) + out(S)`.
    pub source: InterfacedHypergraph,
    /// The epi `L_i + L_j ↠ S`.
    pub epi: Morphism,
    /// `ι₁;epi : L_i → S`, mono.
    pub match1: Morphism,
    /// `ι₂;epi : L_j → S`, mono.
    pub match2: Morphism,
}

/// Whether to run the node-gluing phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    /// Both phases: all critical pairs.
    All,
    /// Hyperedge phase only: sufficient for local-confluence checking.
    Essential,
}

#[derive(Debug, Clone, Copy)]
pub struct EnumerationOptions {
    pub mode: EnumerationMode,
    /// Skip ordered pairs `(j, i)` with `j > i`; each unordered rule pair is
    /// then visited once. Off by default: the enumeration ranges over all of
    /// `I²` and mirror candidates are kept.
    pub skip_mirror_pairs: bool,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            mode: EnumerationMode::All,
            skip_mirror_pairs: false,
        }
    }
}

/// The first gluing phase for one hyperedge scheme: the candidate source
/// `S_γ`, the quotient from `L_i + L_j`, and the interface node sets that
/// drive the node-gluing phase.
#[derive(Debug, Clone)]
pub struct HyperedgeGluing {
    pub rule_i: usize,
    pub rule_j: usize,
    pub scheme: IndependentEdgeSet<EdgeId>,
    /// `S_γ`, the gluing of the scheme.
    pub glued: Hypergraph,
    /// `ε : L_i + L_j ↠ S_γ`.
    pub eps: Morphism,
    /// Coprojection `L_i → L_i + L_j`.
    pub inj1: Morphism,
    /// Coprojection `L_j → L_i + L_j`.
    pub inj2: Morphism,
    /// `in(S_γ) ∩ ε(ι₁(in(L_i)))` in node order.
    pub inputs_from_i: Vec<NodeId>,
    /// `in(S_γ) ∩ ε(ι₂(in(L_j)))`.
    pub inputs_from_j: Vec<NodeId>,
    /// `out(S_γ) ∩ ε(ι₁(out(L_i)))`.
    pub outputs_from_i: Vec<NodeId>,
    /// `out(S_γ) ∩ ε(ι₂(out(L_j)))`.
    pub outputs_from_j: Vec<NodeId>,
}

/// Glue the hyperedges selected by `scheme` across `L_i + L_j`.
pub fn hyperedge_gluing(
    sys: &RewriteSystem,
    i: usize,
    j: usize,
    scheme: IndependentEdgeSet<EdgeId>,
) -> Result<HyperedgeGluing> {
    let li = &sys.rule(i)?.left;
    let lj = &sys.rule(j)?.left;
    let (sum, inj1, inj2) = coproduct(li.graph(), lj.graph())?;
    let induced = induced_scheme_over(li.graph(), lj.graph(), &sum, &inj1, &inj2, &scheme)?;
    let (glued, eps) = coequalizer(&induced.proj1, &induced.proj2)?;

    let in_s = glued.input_nodes();
    let out_s = glued.output_nodes();
    let image = |inj: &Morphism, list: &[NodeId]| -> Vec<NodeId> {
        list.iter()
            .map(|v| eps.node_image(inj.node_image(v)).clone())
            .collect()
    };
    let restrict = |all: &[NodeId], img: Vec<NodeId>| -> Vec<NodeId> {
        all.iter().filter(|v| img.contains(v)).cloned().collect()
    };
    let inputs_from_i = restrict(&in_s, image(&inj1, li.inputs()));
    let inputs_from_j = restrict(&in_s, image(&inj2, lj.inputs()));
    let outputs_from_i = restrict(&out_s, image(&inj1, li.outputs()));
    let outputs_from_j = restrict(&out_s, image(&inj2, lj.outputs()));
    Ok(HyperedgeGluing {
        rule_i: i,
        rule_j: j,
        scheme,
        glued,
        eps,
        inj1,
        inj2,
        inputs_from_i,
        inputs_from_j,
        outputs_from_i,
        outputs_from_j,
    })
}

impl HyperedgeGluing {
    /// The node-gluing schemes explored on top of this gluing: the empty
    /// scheme once, then every non-empty independent edge set pairing inputs
    /// from `L_i` with outputs from `L_j`, then the other direction. The two
    /// directions are never mixed in one scheme.
    pub fn node_schemes(&self) -> impl Iterator<Item = IndependentEdgeSet<NodeId>> {
        std::iter::once(IndependentEdgeSet::empty())
            .chain(
                enumerate_independent_edge_sets(&self.inputs_from_i, &self.outputs_from_j)
                    .filter(|s| !s.is_empty()),
            )
            .chain(
                enumerate_independent_edge_sets(&self.inputs_from_j, &self.outputs_from_i)
                    .filter(|s| !s.is_empty()),
            )
    }

    /// Coequalize a node scheme over `S_γ`, yielding `S_γ'` and
    /// `ε' : S_γ ↠ S_γ'`. The empty scheme gives the identity quotient.
    pub fn apply_node_scheme(
        &self,
        scheme: &IndependentEdgeSet<NodeId>,
    ) -> Result<(Hypergraph, Morphism)> {
        let mut gamma = Hypergraph::new(self.glued.signature().clone());
        let mut map1 = BTreeMap::new();
        let mut map2 = BTreeMap::new();
        for (k, (x, y)) in scheme.pairs().iter().enumerate() {
            let id = NodeId::new(format!("q{k}"));
            gamma.add_node(id.clone())?;
            map1.insert(id.clone(), x.clone());
            map2.insert(id, y.clone());
        }
        let p1 = Morphism::new(gamma.clone(), self.glued.clone(), map1, BTreeMap::new())?;
        let p2 = Morphism::new(gamma, self.glued.clone(), map2, BTreeMap::new())?;
        coequalizer(&p1, &p2)
    }

    /// Assemble the candidate for one node scheme; `None` when the glued
    /// graph with its natural interface is not an ma-cospan.
    pub fn candidate(
        &self,
        node_scheme: IndependentEdgeSet<NodeId>,
    ) -> Result<Option<CriticalPairCandidate>> {
        let (graph, total_eps) = if node_scheme.is_empty() {
            (self.glued.clone(), self.eps.clone())
        } else {
            let (s_prime, eps_prime) = self.apply_node_scheme(&node_scheme)?;
            (s_prime, self.eps.compose(&eps_prime))
        };
        let source = InterfacedHypergraph::with_natural_interface(graph);
        if !source.is_ma_cospan() {
            return Ok(None);
        }
        let match1 = self.inj1.compose(&total_eps);
        let match2 = self.inj2.compose(&total_eps);
        debug_assert!(total_eps.is_epi());
        debug_assert!(match1.is_mono() && match2.is_mono());
        Ok(Some(CriticalPairCandidate {
            rule_i: self.rule_i,
            rule_j: self.rule_j,
            hyperedge_scheme: self.scheme.clone(),
            node_scheme,
            source,
            epi: total_eps,
            match1,
            match2,
        }))
    }
}

/// The hyperedge gluing schemes of one ordered rule pair, in enumeration
/// order: the Cartesian product, across labels shared by both left sides, of
/// each label's independent edge sets, keeping combinations that glue at
/// least one hyperedge.
pub fn hyperedge_schemes(
    sys: &RewriteSystem,
    i: usize,
    j: usize,
) -> impl Iterator<Item = IndependentEdgeSet<EdgeId>> + '_ {
    let li = &sys.rules()[i].left;
    let lj = &sys.rules()[j].left;
    let mut factors: Vec<Vec<IndependentEdgeSet<EdgeId>>> = Vec::new();
    for label in sys.signature().labels() {
        let a = li.graph().edges_with_label(label);
        let b = lj.graph().edges_with_label(label);
        if a.is_empty() || b.is_empty() {
            continue;
        }
        factors.push(enumerate_independent_edge_sets(&a, &b).collect());
    }
    let empty = factors.is_empty();
    factors
        .into_iter()
        .map(|f| f.into_iter())
        .multi_cartesian_product()
        .map(|combo| {
            IndependentEdgeSet::new(
                combo
                    .into_iter()
                    .flat_map(|ies| ies.pairs().to_vec())
                    .collect(),
            )
        })
        .filter(move |merged| !empty && !merged.is_empty())
}

/// Lazy enumeration for one ordered rule pair `(i, j)`.
pub fn critical_pairs_for_rule_pair(
    sys: &RewriteSystem,
    i: usize,
    j: usize,
    mode: EnumerationMode,
) -> impl Iterator<Item = CriticalPairCandidate> + '_ {
    hyperedge_schemes(sys, i, j).flat_map(move |scheme| {
        let gluing = hyperedge_gluing(sys, i, j, scheme)
            .expect("per-label schemes pair same-label edges of valid rules");
        let candidates: Box<dyn Iterator<Item = CriticalPairCandidate>> = match mode {
            EnumerationMode::Essential => Box::new(
                gluing
                    .candidate(IndependentEdgeSet::empty())
                    .expect("gluing is well-formed")
                    .into_iter(),
            ),
            EnumerationMode::All => {
                let schemes: Vec<_> = gluing.node_schemes().collect();
                Box::new(schemes.into_iter().filter_map(move |ns| {
                    gluing.candidate(ns).expect("node gluing is well-formed")
                }))
            }
        };
        candidates
    })
}

/// All critical pairs (two-phase gluing).
pub fn enumerate_all_critical_pairs(
    sys: &RewriteSystem,
) -> impl Iterator<Item = CriticalPairCandidate> + '_ {
    enumerate_critical_pairs(
        sys,
        EnumerationOptions {
            mode: EnumerationMode::All,
            skip_mirror_pairs: false,
        },
    )
}

/// The sufficient subset of critical pairs in which only hyperedges are
/// glued. Every one of these is also produced by the full enumeration, and
/// joinability of these decides local confluence.
pub fn enumerate_essential_critical_pairs(
    sys: &RewriteSystem,
) -> impl Iterator<Item = CriticalPairCandidate> + '_ {
    enumerate_critical_pairs(
        sys,
        EnumerationOptions {
            mode: EnumerationMode::Essential,
            skip_mirror_pairs: false,
        },
    )
}

/// Lazy enumeration over every ordered rule pair.
pub fn enumerate_critical_pairs(
    sys: &RewriteSystem,
    opts: EnumerationOptions,
) -> impl Iterator<Item = CriticalPairCandidate> + '_ {
    rule_pairs(sys.rules().len(), opts.skip_mirror_pairs)
        .flat_map(move |(i, j)| critical_pairs_for_rule_pair(sys, i, j, opts.mode))
}

fn rule_pairs(n: usize, skip_mirrors: bool) -> impl Iterator<Item = (usize, usize)> {
    (0..n)
        .cartesian_product(0..n)
        .filter(move |(i, j)| !skip_mirrors || i <= j)
}

/// A pre-critical pair is parallel iff no hyperedges are glued and every
/// glued node pair lies in both rules' interfaces. Candidates produced by
/// the enumerations above always glue a hyperedge, so this returns false on
/// them; it serves as a verification predicate for externally constructed
/// pre-critical pairs.
pub fn is_parallel(sys: &RewriteSystem, c: &CriticalPairCandidate) -> bool {
    let li = &sys.rules()[c.rule_i].left;
    let lj = &sys.rules()[c.rule_j].left;
    for (e, _) in li.graph().edges() {
        let img = c.match1.edge_image(e);
        if lj.graph().edges().any(|(f, _)| c.match2.edge_image(f) == img) {
            return false;
        }
    }
    let interface_i: Vec<&NodeId> = li.inputs().iter().chain(li.outputs()).collect();
    let interface_j: Vec<&NodeId> = lj.inputs().iter().chain(lj.outputs()).collect();
    for v in li.graph().nodes() {
        let img = c.match1.node_image(v);
        for w in lj.graph().nodes() {
            if c.match2.node_image(w) == img
                && !(interface_i.contains(&v) && interface_j.contains(&w))
            {
                return false;
            }
        }
    }
    true
}

/// Equality of candidates as cp-cospans: same rule indices and an
/// isomorphism of the sources commuting with both matches and preserving
/// the interface positionally. Because the epi covers `S`, the isomorphism
/// is forced by the match correspondence, so this is a direct check.
pub fn cp_cospans_equivalent(a: &CriticalPairCandidate, b: &CriticalPairCandidate) -> bool {
    if a.rule_i != b.rule_i || a.rule_j != b.rule_j {
        return false;
    }
    let (sa, sb) = (a.source.graph(), b.source.graph());
    if sa.node_count() != sb.node_count()
        || sa.edge_count() != sb.edge_count()
        || a.source.inputs().len() != b.source.inputs().len()
        || a.source.outputs().len() != b.source.outputs().len()
    {
        return false;
    }
    // the forced node/edge correspondence
    let mut phi_n: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut phi_e: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    for (ma, mb) in [(&a.match1, &b.match1), (&a.match2, &b.match2)] {
        for (v, img) in ma.node_map() {
            let target = mb.node_map()[v].clone();
            if let Some(prev) = phi_n.insert(img.clone(), target.clone()) {
                if prev != target {
                    return false;
                }
            }
        }
        for (e, img) in ma.edge_map() {
            let target = mb.edge_map()[e].clone();
            if let Some(prev) = phi_e.insert(img.clone(), target.clone()) {
                if prev != target {
                    return false;
                }
            }
        }
    }
    // epi => total on S; bijectivity and structure preservation are checked
    if phi_n.len() != sa.node_count() || phi_e.len() != sa.edge_count() {
        return false;
    }
    let distinct_n: indexmap::IndexSet<_> = phi_n.values().collect();
    let distinct_e: indexmap::IndexSet<_> = phi_e.values().collect();
    if distinct_n.len() != phi_n.len() || distinct_e.len() != phi_e.len() {
        return false;
    }
    for (e, edge) in sa.edges() {
        let Some(img) = sb.edge(&phi_e[e]) else {
            return false;
        };
        if img.label != edge.label
            || img.sources != edge.sources.iter().map(|v| phi_n[v].clone()).collect::<Vec<_>>()
            || img.targets != edge.targets.iter().map(|v| phi_n[v].clone()).collect::<Vec<_>>()
        {
            return false;
        }
    }
    a.source
        .inputs()
        .iter()
        .zip(b.source.inputs())
        .all(|(x, y)| &phi_n[x] == y)
        && a.source
            .outputs()
            .iter()
            .zip(b.source.outputs())
            .all(|(x, y)| &phi_n[x] == y)
}

/// Drop candidates whose cp-cospan already appeared, keeping the first
/// representative in enumeration order.
pub fn dedup_up_to_iso(pairs: Vec<CriticalPairCandidate>) -> Vec<CriticalPairCandidate> {
    let mut kept: Vec<CriticalPairCandidate> = Vec::new();
    let mut buckets: std::collections::HashMap<(usize, usize, String), Vec<usize>> =
        std::collections::HashMap::new();
    for cand in pairs {
        let key = (cand.rule_i, cand.rule_j, canonical_key(&cand.source));
        let bucket = buckets.entry(key).or_default();
        if bucket
            .iter()
            .any(|&k| cp_cospans_equivalent(&kept[k], &cand))
        {
            continue;
        }
        bucket.push(kept.len());
        kept.push(cand);
    }
    kept
}

/// Collect candidates, optionally across a worker pool. Results are merged
/// per rule pair in enumeration order, so the output is identical for every
/// worker count.
pub fn collect_critical_pairs(
    sys: &RewriteSystem,
    opts: EnumerationOptions,
    jobs: usize,
) -> Vec<CriticalPairCandidate> {
    if jobs <= 1 {
        return enumerate_critical_pairs(sys, opts).collect();
    }
    use rayon::prelude::*;
    let pairs: Vec<(usize, usize)> =
        rule_pairs(sys.rules().len(), opts.skip_mirror_pairs).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    pool.install(|| {
        pairs
            .par_iter()
            .map(|&(i, j)| critical_pairs_for_rule_pair(sys, i, j, opts.mode).collect::<Vec<_>>())
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    })
}
