//! Joinability search and the local-confluence report.
//!
//! Both results of a critical pair are derived, then a breadth-first closure
//! of the rewrite relation is grown from each side, quotienting states by
//! interface-preserving isomorphism. The pair is joinable when the two
//! closures intersect. Rewriting need not terminate, so the search is
//! bounded by a depth and a state cap; a search that exhausts both closures
//! without meeting proves non-joinability, while one that hits a bound is
//! inconclusive.

use std::collections::HashMap;

use crate::critical_pairs::CriticalPairCandidate;
use crate::error::Result;
use crate::interfaced::InterfacedHypergraph;
use crate::iso::{canonical_key, isomorphic};
use crate::matching::enumerate_matches;
use crate::rewrite::{rewrite_step, Derivation};
use crate::rules::RewriteSystem;

#[derive(Debug, Clone)]
pub struct ConfluenceOptions {
    /// Maximum rewrite steps explored from each side of a pair.
    pub max_depth: usize,
    /// Cap on stored states per side; exceeding it makes the pair verdict
    /// inconclusive rather than exhausting memory.
    pub frontier_cap: usize,
    /// Worker threads for testing pairs; results aggregate in pair order
    /// regardless.
    pub jobs: usize,
    /// Deduplicate critical pairs up to isomorphism before testing.
    pub dedup: bool,
}

impl Default for ConfluenceOptions {
    fn default() -> Self {
        Self {
            max_depth: 5,
            frontier_cap: 10_000,
            jobs: 1,
            dedup: true,
        }
    }
}

/// Outcome of the bounded joinability search for one pair of reducts.
#[derive(Debug, Clone)]
pub enum JoinVerdict {
    /// A common reduct was found; the witnesses are the two derivation
    /// sequences leading to interface-isomorphic graphs.
    Joinable {
        witness_left: Vec<Derivation>,
        witness_right: Vec<Derivation>,
    },
    /// No common reduct within the bound. `exhausted` is true when both
    /// closures were computed completely, which proves the pair is never
    /// joinable; otherwise the verdict is inconclusive.
    NotJoinableWithin { depth: usize, exhausted: bool },
}

impl JoinVerdict {
    pub fn is_joinable(&self) -> bool {
        matches!(self, JoinVerdict::Joinable { .. })
    }
}

/// Joinability result for one critical pair.
#[derive(Debug, Clone)]
pub struct JoinabilityResult {
    pub pair: CriticalPairCandidate,
    pub h1: InterfacedHypergraph,
    pub h2: InterfacedHypergraph,
    pub verdict: JoinVerdict,
}

/// Overall verdict of the local-confluence check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConfluenceVerdict {
    LocallyConfluent,
    NotLocallyConfluent,
    Unknown,
}

#[derive(Debug, Clone)]
pub struct ConfluenceReport {
    pub verdict: ConfluenceVerdict,
    pub pairs: Vec<JoinabilityResult>,
}

/// Apply rule `i` at `match1` and rule `j` at `match2` to the pair's source.
pub fn derive_pair(
    sys: &RewriteSystem,
    c: &CriticalPairCandidate,
) -> Result<(Derivation, Derivation)> {
    let d1 = rewrite_step(&c.source, c.rule_i, sys.rule(c.rule_i)?, &c.match1)?;
    let d2 = rewrite_step(&c.source, c.rule_j, sys.rule(c.rule_j)?, &c.match2)?;
    Ok((d1, d2))
}

struct SideState {
    graph: InterfacedHypergraph,
    parent: Option<(usize, Box<Derivation>)>,
    depth: usize,
}

struct Side {
    states: Vec<SideState>,
    by_key: HashMap<String, Vec<usize>>,
    frontier: Vec<usize>,
    exhausted: bool,
    capped: bool,
}

impl Side {
    fn new(start: InterfacedHypergraph) -> Self {
        let key = canonical_key(&start);
        Self {
            states: vec![SideState {
                graph: start,
                parent: None,
                depth: 0,
            }],
            by_key: HashMap::from([(key, vec![0])]),
            frontier: vec![0],
            exhausted: false,
            capped: false,
        }
    }

    /// Index of a stored state isomorphic to `g`, if any.
    fn find(&self, key: &str, g: &InterfacedHypergraph) -> Option<usize> {
        self.by_key
            .get(key)?
            .iter()
            .copied()
            .find(|&idx| isomorphic(&self.states[idx].graph, g).is_some())
    }

    /// Expand one BFS level. Returns the indices of newly added states.
    fn expand(&mut self, sys: &RewriteSystem, cap: usize) -> Vec<usize> {
        let mut fresh = Vec::new();
        let frontier = std::mem::take(&mut self.frontier);
        for idx in frontier {
            let depth = self.states[idx].depth;
            let source = self.states[idx].graph.clone();
            for (ri, rule) in sys.rules().iter().enumerate() {
                for m in enumerate_matches(rule.left.graph(), source.graph()) {
                    let d = rewrite_step(&source, ri, rule, &m)
                        .expect("rewriting a reachable ma-cospan state");
                    let key = canonical_key(&d.result);
                    if self.find(&key, &d.result).is_some() {
                        continue;
                    }
                    if self.states.len() >= cap {
                        self.capped = true;
                        self.frontier.clear();
                        return fresh;
                    }
                    let new_idx = self.states.len();
                    self.states.push(SideState {
                        graph: d.result.clone(),
                        parent: Some((idx, Box::new(d))),
                        depth: depth + 1,
                    });
                    self.by_key.entry(key).or_default().push(new_idx);
                    self.frontier.push(new_idx);
                    fresh.push(new_idx);
                }
            }
        }
        if self.frontier.is_empty() && !self.capped {
            self.exhausted = true;
        }
        fresh
    }

    fn witness(&self, mut idx: usize) -> Vec<Derivation> {
        let mut steps = Vec::new();
        while let Some((parent, d)) = &self.states[idx].parent {
            steps.push((**d).clone());
            idx = *parent;
        }
        steps.reverse();
        steps
    }
}

/// Meet-in-the-middle search between two states. States reachable from each
/// side are compared up to interface-preserving isomorphism.
pub fn joinable(
    sys: &RewriteSystem,
    h1: &InterfacedHypergraph,
    h2: &InterfacedHypergraph,
    opts: &ConfluenceOptions,
) -> JoinVerdict {
    let mut left = Side::new(h1.clone());
    let mut right = Side::new(h2.clone());

    // depth-0 meeting: the two reducts may already be isomorphic
    if right.find(&canonical_key(h1), h1).is_some() {
        return JoinVerdict::Joinable {
            witness_left: Vec::new(),
            witness_right: Vec::new(),
        };
    }

    for depth in 1..=opts.max_depth {
        let mut met: Option<(usize, usize)> = None;
        if !left.exhausted && !left.capped {
            let fresh = left.expand(sys, opts.frontier_cap);
            met = meet(&left, &right, &fresh, true);
        }
        if met.is_none() && !right.exhausted && !right.capped {
            let fresh = right.expand(sys, opts.frontier_cap);
            met = meet(&left, &right, &fresh, false);
        }
        if let Some((li, ri)) = met {
            return JoinVerdict::Joinable {
                witness_left: left.witness(li),
                witness_right: right.witness(ri),
            };
        }
        if (left.exhausted || left.capped) && (right.exhausted || right.capped) {
            return JoinVerdict::NotJoinableWithin {
                depth,
                exhausted: left.exhausted && right.exhausted,
            };
        }
    }
    JoinVerdict::NotJoinableWithin {
        depth: opts.max_depth,
        exhausted: left.exhausted && right.exhausted,
    }
}

fn meet(left: &Side, right: &Side, fresh: &[usize], fresh_on_left: bool) -> Option<(usize, usize)> {
    for &idx in fresh {
        let (mine, other) = if fresh_on_left {
            (&left.states[idx], right)
        } else {
            (&right.states[idx], left)
        };
        let key = canonical_key(&mine.graph);
        if let Some(found) = other.find(&key, &mine.graph) {
            return Some(if fresh_on_left {
                (idx, found)
            } else {
                (found, idx)
            });
        }
    }
    None
}

/// Test one critical pair: derive both results, then search for a join.
pub fn test_pair(
    sys: &RewriteSystem,
    pair: CriticalPairCandidate,
    opts: &ConfluenceOptions,
) -> Result<JoinabilityResult> {
    let (d1, d2) = derive_pair(sys, &pair)?;
    let verdict = joinable(sys, &d1.result, &d2.result, opts);
    Ok(JoinabilityResult {
        pair,
        h1: d1.result,
        h2: d2.result,
        verdict,
    })
}

/// Enumerate the essential critical pairs and test each for joinability.
/// The system is locally confluent when every pair joins within the bound;
/// a proven non-joinable pair refutes local confluence; any inconclusive
/// pair (and no refutation) leaves the verdict unknown.
pub fn check_local_confluence(sys: &RewriteSystem, opts: &ConfluenceOptions) -> Result<ConfluenceReport> {
    sys.require_valid()?;
    let mut pairs = crate::critical_pairs::collect_critical_pairs(
        sys,
        crate::critical_pairs::EnumerationOptions {
            mode: crate::critical_pairs::EnumerationMode::Essential,
            skip_mirror_pairs: false,
        },
        opts.jobs,
    );
    if opts.dedup {
        pairs = crate::critical_pairs::dedup_up_to_iso(pairs);
    }
    let results: Result<Vec<JoinabilityResult>> = if opts.jobs > 1 {
        use rayon::prelude::*;
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("worker pool");
        pool.install(|| {
            pairs
                .into_par_iter()
                .map(|p| test_pair(sys, p, opts))
                .collect()
        })
    } else {
        pairs.into_iter().map(|p| test_pair(sys, p, opts)).collect()
    };
    let results = results?;
    let mut verdict = ConfluenceVerdict::LocallyConfluent;
    for r in &results {
        match &r.verdict {
            JoinVerdict::Joinable { .. } => {}
            JoinVerdict::NotJoinableWithin { exhausted: true, .. } => {
                verdict = ConfluenceVerdict::NotLocallyConfluent;
                break;
            }
            JoinVerdict::NotJoinableWithin { .. } => {
                verdict = ConfluenceVerdict::Unknown;
            }
        }
    }
    Ok(ConfluenceReport {
        verdict,
        pairs: results,
    })
}
