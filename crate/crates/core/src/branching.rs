//! Child generation for the branch-and-bound search.
//!
//! A subproblem that is not yet a quadratization is split on one of its
//! nonsquares `m`: every factorization `m = m1 * m2` gives a child that adds
//! `{m1, m2} \ V` as new variables. Any quadratization extending the parent
//! must cover `m`, so it extends at least one child.

use std::cmp::Ordering;

use crate::monomial::Monomial;
use crate::state::SearchState;

/// One child of a subproblem: the monomials it adds and its sort key.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChildSubproblem {
    /// One or two monomials, in increasing graded-lex order.
    pub added: Vec<Monomial>,
    /// `S + n * |V|` for the child's generalized variables `V`, where `S` is
    /// the sum of their total degrees.
    pub order_key: i64,
}

/// The nonsquare to branch on: fewest divisors, then smallest in graded-lex
/// order. `None` if the state is already a quadratization.
pub fn select_branch_monomial<'s>(state: &'s SearchState<'_>) -> Option<&'s Monomial> {
    // BTreeSet iteration is graded-lex ascending, and min_by_key keeps the
    // first minimum.
    state.nonsquares().iter().min_by_key(|m| m.divisor_count())
}

/// Children of `state` sorted by ascending `order_key`, ties broken by the
/// added monomials in graded-lex order. Empty if `state` is a quadratization.
pub fn generate_children(state: &SearchState<'_>) -> Vec<ChildSubproblem> {
    let Some(m) = select_branch_monomial(state) else {
        return Vec::new();
    };
    let nvars = state.system().nvars() as i64;
    let base_degree: i64 = state.vars().iter().map(Monomial::degree).sum();
    let base_size = state.vars().len() as i64;

    let mut children: Vec<ChildSubproblem> = Vec::new();
    for (a, b) in m.decompositions() {
        let mut added: Vec<Monomial> = [a, b]
            .into_iter()
            .filter(|f| !state.contains(f))
            .collect();
        added.sort();
        added.dedup();
        debug_assert!(!added.is_empty(), "a nonsquare cannot factor over V");
        if children.iter().any(|c| c.added == added) {
            continue;
        }
        let degree: i64 = base_degree + added.iter().map(Monomial::degree).sum::<i64>();
        let size = base_size + added.len() as i64;
        children.push(ChildSubproblem {
            added,
            order_key: degree + nvars * size,
        });
    }
    children.sort_by(|x, y| match x.order_key.cmp(&y.order_key) {
        Ordering::Equal => x.added.cmp(&y.added),
        other => other,
    });
    children
}
