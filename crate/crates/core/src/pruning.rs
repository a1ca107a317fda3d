//! Lower bounds on the number of variables still needed by a subproblem.
//!
//! Both rules answer the same question: given a state with `l` new variables
//! and the order `N` of the incumbent, is it certain that no extension of the
//! state is a monomial quadratization of order less than `N`? A `true` answer
//! prunes the subtree; `false` promises nothing.
//!
//! Each rule finds the least `k` such that `k` further variables could
//! possibly cover a set of nonsquares and prunes when `k + l >= N`. A new
//! variable `z` can cover a nonsquare `m` either as `m = v * z` with `v` in
//! the current `V` (at most as many times as `z` occurs among the quotients
//! `m / v`) or as a product `z_i * z_j` of two new variables.
//!
//! * [`prune_by_quadratic_bound`] counts the products of `k` new variables by
//!   `k (k + 1) / 2`.
//! * [`prune_by_c4_bound`] restricts to nonsquares whose pairwise products are
//!   all distinct. Products of new variables covering them then form the
//!   edges of a pseudograph on the new variables with no 4-cycle, which has at
//!   most `C(k, c)` edges (see [`c4_capacity`]).

use std::collections::{HashMap, HashSet};

use crate::monomial::Monomial;
use crate::state::SearchState;

/// Multiplicities of distinct quotients, sorted non-increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiplicityList {
    mult: Vec<usize>,
}

impl MultiplicityList {
    pub fn new(mut mult: Vec<usize>) -> Self {
        mult.sort_unstable_by(|a, b| b.cmp(a));
        MultiplicityList { mult }
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.mult
    }

    /// `mult[1] + ... + mult[k]` with `mult[i] = 0` past the end.
    pub fn prefix_sum(&self, k: usize) -> usize {
        self.mult.iter().take(k).sum()
    }

    /// The least `k >= 0` with `target <= prefix_sum(k) + extra(k)`.
    ///
    /// `extra` must be non-decreasing and unbounded.
    pub fn least_k(&self, target: usize, extra: impl Fn(usize) -> usize) -> usize {
        let mut sum = 0;
        let mut k = 0;
        loop {
            if target <= sum + extra(k) {
                return k;
            }
            sum += self.mult.get(k).copied().unwrap_or(0);
            k += 1;
        }
    }
}

/// Multiplicities of the multiset `{ m / v | m in targets, v in vars, v | m }`.
pub fn quotient_multiplicities<'a, 'b>(
    targets: impl IntoIterator<Item = &'a Monomial>,
    vars: impl IntoIterator<Item = &'b Monomial>,
) -> MultiplicityList {
    let vars: Vec<&Monomial> = vars.into_iter().collect();
    let mut counts: HashMap<Monomial, usize> = HashMap::new();
    for m in targets {
        for v in &vars {
            if let Some(q) = m.div(v) {
                *counts.entry(q).or_insert(0) += 1;
            }
        }
    }
    MultiplicityList::new(counts.into_values().collect())
}

/// Least `k` with `|NS| <= mult[1..k] + k (k + 1) / 2`.
pub fn quadratic_bound(state: &SearchState<'_>) -> usize {
    let mult = quotient_multiplicities(state.nonsquares(), state.vars());
    mult.least_k(state.nonsquares().len(), |k| k * (k + 1) / 2)
}

/// Prune when the quadratic bound shows `N` cannot be beaten.
pub fn prune_by_quadratic_bound(state: &SearchState<'_>, incumbent: usize) -> bool {
    quadratic_bound(state) + state.order() >= incumbent
}

/// Greedy subset of `nonsquares` whose pairwise products (squares included)
/// are all distinct.
///
/// Candidates are visited by decreasing total degree (reverse graded-lex) and
/// kept when they do not create a repeated product.
pub fn build_squarefree_subset<'a>(
    nonsquares: impl DoubleEndedIterator<Item = &'a Monomial>,
) -> Vec<Monomial> {
    let mut chosen: Vec<Monomial> = Vec::new();
    let mut products: HashSet<Monomial> = HashSet::new();
    for m in nonsquares.rev() {
        let mut fresh: Vec<Monomial> = chosen.iter().map(|e| e.mul(m)).collect();
        fresh.push(m.mul(m));
        let unique: HashSet<&Monomial> = fresh.iter().collect();
        if unique.len() == fresh.len() && fresh.iter().all(|p| !products.contains(p)) {
            products.extend(fresh);
            chosen.push(m.clone());
        }
    }
    chosen
}

/// Largest edge counts of C4*-free pseudographs, `TABLE[n][m]` for `n <= 7`,
/// `m <= n` loops.
const C4_TABLE: [&[usize]; 8] = [
    &[0],
    &[0, 1],
    &[1, 2, 2],
    &[3, 3, 4, 4],
    &[4, 5, 5, 6, 6],
    &[6, 6, 7, 7, 8, 8],
    &[7, 8, 9, 9, 9, 10, 10],
    &[9, 10, 11, 12, 12, 12, 12, 12],
];

/// Largest `n` with exact values in [`c4_capacity`].
pub const C4_TABLE_MAX_N: usize = 7;

/// An upper bound on the number of edges of a C4*-free pseudograph with `n`
/// vertices and at most `m` loops; exact for `n <= 7`.
///
/// Such a pseudograph has at most one loop per vertex, so `m` is clamped to
/// `n`. Beyond the table the bound is `floor(n/2 (1 + sqrt(4n - 3))) + m`.
pub fn c4_capacity(n: usize, m: usize) -> usize {
    let m = m.min(n);
    if n <= C4_TABLE_MAX_N {
        return C4_TABLE[n][m];
    }
    let nf = n as f64;
    let simple = (nf / 2.0 * (1.0 + (4.0 * nf - 3.0).sqrt())).floor() as usize;
    simple + m
}

/// Least `k` with `|E| <= mult[1..k] + C(k, c)` for the greedy subset `E`.
pub fn c4_bound(state: &SearchState<'_>) -> usize {
    let subset = build_squarefree_subset(state.nonsquares().iter());
    let mult = quotient_multiplicities(&subset, state.vars());
    let squares = subset.iter().filter(|m| m.is_square()).count();
    mult.least_k(subset.len(), |k| c4_capacity(k, squares))
}

/// Prune when the C4 bound shows `N` cannot be beaten.
pub fn prune_by_c4_bound(state: &SearchState<'_>, incumbent: usize) -> bool {
    c4_bound(state) + state.order() >= incumbent
}
