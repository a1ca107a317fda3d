//! Depth-first branch-and-bound over monomial quadratizations.
//!
//! The search starts from the root subproblem (no new variables) with the
//! degree-box quadratization as incumbent, and at every node:
//!
//! 1. if the node is a quadratization, records it when it beats the incumbent;
//! 2. otherwise applies the enabled pruning rules against the incumbent order;
//! 3. otherwise branches on a nonsquare, visiting children in increasing
//!    `S + n|V|` order.
//!
//! The search is single-threaded and fully deterministic: identical inputs and
//! options give identical results and node counts.

use serde::Serialize;

use crate::branching::generate_children;
use crate::laurent::laurent_quadratize;
use crate::monomial::Monomial;
use crate::poly::OdeSystem;
use crate::pruning::{prune_by_c4_bound, prune_by_quadratic_bound};
use crate::state::{QuadraticSystem, SearchState};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    pub enable_rule_quadratic: bool,
    pub enable_rule_c4: bool,
    /// Build the linear-size Laurent quadratization instead of searching.
    pub laurent_mode: bool,
    /// Only look for quadratizations of at most this order. When none exists
    /// the degree-box incumbent is returned and the result is marked as not
    /// certified optimal.
    pub max_order_cap: Option<usize>,
    pub collect_stats: bool,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            enable_rule_quadratic: true,
            enable_rule_c4: true,
            laurent_mode: false,
            max_order_cap: None,
            collect_stats: true,
        }
    }
}

impl SolveOptions {
    /// Options with the given pruning rules and everything else default.
    pub fn with_rules(quadratic: bool, c4: bool) -> Self {
        SolveOptions {
            enable_rule_quadratic: quadratic,
            enable_rule_c4: c4,
            ..Self::default()
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub nodes_visited: u64,
    pub pruned_by_quadratic: u64,
    pub pruned_by_c4: u64,
    /// Nodes cut because one more variable would already reach the incumbent
    /// order. Only fires when both pruning rules are disabled, since either
    /// rule subsumes it.
    pub pruned_by_order: u64,
    pub incumbent_updates: u64,
    pub optimal_order: usize,
}

/// A finished quadratization together with how it was obtained.
#[derive(Clone, Debug)]
pub struct Solution {
    /// New variables in the order they were introduced.
    pub new_vars: Vec<Monomial>,
    pub quadratic: QuadraticSystem,
    pub stats: SearchStats,
    /// False when a `max_order_cap` hid all better candidates, or for Laurent
    /// quadratizations (which are not optimized).
    pub optimal: bool,
    pub laurent: bool,
}

impl Solution {
    pub fn order(&self) -> usize {
        self.new_vars.len()
    }
}

/// The degree box `{x^d | 0 <= d_i <= D_i}` minus `1` and the variables.
///
/// The box always contains a monomial quadratization, so it seeds the search
/// as the first incumbent. Its size is `prod (D_i + 1) - (n + 1)` when every
/// `D_i >= 1`.
pub fn initial_incumbent(system: &OdeSystem) -> Vec<Monomial> {
    let bounds = system.degree_bounds();
    Monomial::new(&bounds)
        .divisors()
        .into_iter()
        .filter(|m| !m.is_one() && m.as_variable().is_none())
        .collect()
}

/// Solves with the method selected by `options`.
pub fn solve(system: &OdeSystem, options: &SolveOptions) -> Solution {
    if options.laurent_mode {
        laurent_quadratize(system)
    } else {
        bnb_search(system, options)
    }
}

struct Search<'a, 'o> {
    options: &'o SolveOptions,
    incumbent: Option<SearchState<'a>>,
    bound: usize,
    stats: SearchStats,
}

impl<'a> Search<'a, '_> {
    fn visit(&mut self, state: SearchState<'a>) {
        self.stats.nodes_visited += 1;
        if state.is_quadratization() {
            if state.order() < self.bound {
                self.bound = state.order();
                self.incumbent = Some(state);
                self.stats.incumbent_updates += 1;
            }
            return;
        }
        if self.options.enable_rule_quadratic && prune_by_quadratic_bound(&state, self.bound) {
            self.stats.pruned_by_quadratic += 1;
            return;
        }
        if self.options.enable_rule_c4 && prune_by_c4_bound(&state, self.bound) {
            self.stats.pruned_by_c4 += 1;
            return;
        }
        if state.order() + 1 >= self.bound {
            self.stats.pruned_by_order += 1;
            return;
        }
        for child in generate_children(&state) {
            let next = state
                .add_variables(&child.added)
                .expect("children only add monomials outside V");
            self.visit(next);
        }
    }
}

/// Finds a monomial quadratization of least order.
///
/// Laurent mode is ignored here; see [`solve`].
pub fn bnb_search(system: &OdeSystem, options: &SolveOptions) -> Solution {
    let root = SearchState::new(system);
    let box_vars = initial_incumbent(system);
    let mut bound = box_vars.len();
    let mut optimal = true;
    if let Some(cap) = options.max_order_cap {
        if cap < bound {
            bound = cap + 1;
            optimal = false;
        }
    }
    let mut search = Search {
        options,
        incumbent: None,
        bound,
        stats: SearchStats::default(),
    };
    search.visit(root.clone());

    let best = match search.incumbent {
        Some(state) => {
            optimal = true;
            state
        }
        None => {
            let state = root
                .add_variables(&box_vars)
                .expect("box monomials are outside V");
            assert!(
                state.is_quadratization(),
                "the degree box did not quadratize the system"
            );
            state
        }
    };
    let mut stats = if options.collect_stats {
        search.stats
    } else {
        SearchStats::default()
    };
    stats.optimal_order = best.order();
    Solution {
        new_vars: best.new_vars().to_vec(),
        quadratic: best.extract_quadratic_system(),
        stats,
        optimal,
        laurent: false,
    }
}
