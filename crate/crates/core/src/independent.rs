//! Enumeration of independent edge sets on complete bipartite graphs.
//!
//! An independent edge set on `K_{a,b}` is a set of bipartite edges with
//! pairwise disjoint endpoints; it encodes a choice of elements of `a` to
//! glue to elements of `b`. There are `Σ_k k!·C(|a|,k)·C(|b|,k)` of them.

use itertools::Itertools;

/// A set of bipartite edges, stored as pairs `(left, right)`. No element is
/// reused on its own side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndependentEdgeSet<T> {
    pairs: Vec<(T, T)>,
}

impl<T: Eq> IndependentEdgeSet<T> {
    /// Panics if an endpoint is reused; the enumerators below never do.
    pub fn new(pairs: Vec<(T, T)>) -> Self {
        for (i, (l, r)) in pairs.iter().enumerate() {
            for (l2, r2) in &pairs[..i] {
                assert!(l != l2 && r != r2, "independent edge set reuses an endpoint");
            }
        }
        Self { pairs }
    }

    pub fn empty() -> Self {
        Self { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(T, T)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }
}

/// All independent edge sets with exactly `k` edges: every size-`k` subset of
/// `a` in lexicographic position order, zipped with every length-`k` partial
/// permutation of `b`. Yields nothing when `k > min(|a|,|b|)`.
pub fn enumerate_k_independent_edge_sets<T: Clone + Eq + 'static>(
    a: &[T],
    b: &[T],
    k: usize,
) -> impl Iterator<Item = IndependentEdgeSet<T>> {
    let a = a.to_vec();
    let b = b.to_vec();
    a.into_iter().combinations(k).flat_map(move |x| {
        b.clone()
            .into_iter()
            .permutations(k)
            .map(move |y| IndependentEdgeSet::new(x.iter().cloned().zip(y).collect()))
    })
}

/// All independent edge sets on `K_{a,b}`, by ascending size; the first item
/// is always the empty set.
pub fn enumerate_independent_edge_sets<T: Clone + Eq + 'static>(
    a: &[T],
    b: &[T],
) -> impl Iterator<Item = IndependentEdgeSet<T>> {
    let a = a.to_vec();
    let b = b.to_vec();
    let max = a.len().min(b.len());
    (0..=max).flat_map(move |k| enumerate_k_independent_edge_sets(&a, &b, k))
}
