//! Search subproblems: the generalized variables of a partial quadratization,
//! their derivatives, and the nonsquares that still need to be covered.
//!
//! A state for new variables `z_1..z_l` has generalized variables
//! `V = {1, x_1..x_n, z_1..z_l}`. Its nonsquares are the monomials occurring
//! in the derivative of some element of `V` that are not a product of two
//! elements of `V`. The new variables form a quadratization exactly when the
//! nonsquare set is empty.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{Coefficient, OdeSystem, Polynomial};

/// A snapshot of one search subproblem. Extending it produces a new state.
#[derive(Clone, Debug)]
pub struct SearchState<'a> {
    system: &'a OdeSystem,
    laurent: bool,
    new_vars: Vec<Monomial>,
    vars: BTreeSet<Monomial>,
    lookup: HashSet<Monomial>,
    derivs: BTreeMap<Monomial, Arc<Polynomial>>,
    nonsquares: BTreeSet<Monomial>,
}

impl<'a> SearchState<'a> {
    /// Root state with no new variables.
    pub fn new(system: &'a OdeSystem) -> Self {
        Self::with_mode(system, false)
    }

    /// Root state that accepts Laurent monomials as new variables. Products
    /// and quotients are then taken in the Laurent monomial group.
    pub fn new_laurent(system: &'a OdeSystem) -> Self {
        Self::with_mode(system, true)
    }

    fn with_mode(system: &'a OdeSystem, laurent: bool) -> Self {
        let n = system.nvars();
        let mut vars = BTreeSet::new();
        let mut derivs = BTreeMap::new();
        vars.insert(Monomial::one(n));
        for (i, f) in system.rhs().iter().enumerate() {
            let x = Monomial::var(n, i);
            vars.insert(x.clone());
            derivs.insert(x, Arc::new(f.clone()));
        }
        let lookup = vars.iter().cloned().collect();
        let mut state = SearchState {
            system,
            laurent,
            new_vars: Vec::new(),
            vars,
            lookup,
            derivs,
            nonsquares: BTreeSet::new(),
        };
        state.nonsquares = state.recompute_nonsquares();
        state
    }

    pub fn system(&self) -> &'a OdeSystem {
        self.system
    }

    pub fn is_laurent(&self) -> bool {
        self.laurent
    }

    /// New variables in insertion order.
    pub fn new_vars(&self) -> &[Monomial] {
        &self.new_vars
    }

    /// Number of new variables, the order of the partial quadratization.
    pub fn order(&self) -> usize {
        self.new_vars.len()
    }

    /// Generalized variables in graded-lex order (starting with `1`).
    pub fn vars(&self) -> &BTreeSet<Monomial> {
        &self.vars
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.lookup.contains(m)
    }

    pub fn nonsquares(&self) -> &BTreeSet<Monomial> {
        &self.nonsquares
    }

    /// Derivative of a generalized variable other than `1`.
    pub fn derivative(&self, v: &Monomial) -> Option<&Polynomial> {
        self.derivs.get(v).map(|p| p.as_ref())
    }

    /// True iff the new variables quadratize the system.
    pub fn is_quadratization(&self) -> bool {
        self.nonsquares.is_empty()
    }

    /// The first `(v1, v2)` with `v1, v2` in `V` and `v1 * v2 = m`, scanning
    /// `v1` in graded-lex order.
    pub fn factor(&self, m: &Monomial) -> Option<(&Monomial, &Monomial)> {
        self.vars.iter().find_map(|v| {
            if !self.laurent && !v.divides(m) {
                return None;
            }
            self.lookup.get(&m.laurent_div(v)).map(|r| (v, r))
        })
    }

    /// Membership in `V^2 = {v1 * v2 | v1, v2 in V}`.
    pub fn is_square(&self, m: &Monomial) -> bool {
        self.factor(m).is_some()
    }

    /// Nonsquares computed directly from their definition.
    pub fn recompute_nonsquares(&self) -> BTreeSet<Monomial> {
        self.derivs
            .values()
            .flat_map(|d| d.support())
            .filter(|m| !self.is_square(m))
            .cloned()
            .collect()
    }

    /// The state obtained by adding `monomials` as new variables.
    ///
    /// Fails if a monomial is already a generalized variable, appears twice,
    /// has the wrong number of variables, or has a negative exponent outside
    /// Laurent mode.
    pub fn add_variables(&self, monomials: &[Monomial]) -> Result<SearchState<'a>> {
        let n = self.system.nvars();
        for (i, m) in monomials.iter().enumerate() {
            if m.nvars() != n {
                return Err(Error::InvalidVariable(format!(
                    "{:?} has {} exponents, expected {}",
                    m,
                    m.nvars(),
                    n
                )));
            }
            if !self.laurent && !m.is_standard() {
                return Err(Error::InvalidVariable(format!(
                    "{:?} has a negative exponent",
                    m
                )));
            }
            if self.lookup.contains(m) || monomials[..i].contains(m) {
                return Err(Error::InvalidVariable(format!(
                    "{} is already a generalized variable",
                    m.format(self.system.variables())
                )));
            }
        }
        if monomials.is_empty() {
            return Ok(self.clone());
        }

        let mut next = self.clone();
        for m in monomials {
            next.new_vars.push(m.clone());
            next.vars.insert(m.clone());
            next.lookup.insert(m.clone());
        }
        // Nonsquares can only leave: V^2 grew. New derivatives may add some.
        let mut nonsquares: BTreeSet<Monomial> = self
            .nonsquares
            .iter()
            .filter(|m| !next.is_square(m))
            .cloned()
            .collect();
        for m in monomials {
            let d = self.system.lie_derivative(m);
            for t in d.support() {
                if !next.is_square(t) {
                    nonsquares.insert(t.clone());
                }
            }
            next.derivs.insert(m.clone(), Arc::new(d));
        }
        next.nonsquares = nonsquares;
        Ok(next)
    }

    /// Rewrites every derivative as a quadratic polynomial in `V`.
    ///
    /// # Panics
    ///
    /// If the state is not a quadratization.
    pub fn extract_quadratic_system(&self) -> QuadraticSystem {
        assert!(
            self.is_quadratization(),
            "extract_quadratic_system called on a state with nonsquares"
        );
        let n = self.system.nvars();
        let names = new_variable_names(self.system, self.new_vars.len());
        let mut generalized: Vec<GeneralizedVariable> = self
            .system
            .variables()
            .iter()
            .enumerate()
            .map(|(i, name)| GeneralizedVariable {
                name: name.clone(),
                monomial: Monomial::var(n, i),
            })
            .collect();
        generalized.extend(
            names
                .into_iter()
                .zip(&self.new_vars)
                .map(|(name, m)| GeneralizedVariable {
                    name,
                    monomial: m.clone(),
                }),
        );
        let index_of = |m: &Monomial| -> Option<usize> {
            if m.is_one() {
                None
            } else {
                Some(
                    generalized
                        .iter()
                        .position(|g| &g.monomial == m)
                        .expect("factor is a generalized variable"),
                )
            }
        };

        let equations = generalized
            .iter()
            .enumerate()
            .map(|(lhs, g)| {
                let deriv = &self.derivs[&g.monomial];
                let terms = deriv
                    .terms()
                    .rev()
                    .map(|(m, c)| {
                        let (a, b) = self
                            .factor(m)
                            .unwrap_or_else(|| panic!("{:?} is not in V^2", m));
                        let (left, right) = order_pair(index_of(a), index_of(b));
                        QuadraticTerm {
                            coefficient: c.clone(),
                            left,
                            right,
                        }
                    })
                    .collect();
                QuadraticEquation { lhs, terms }
            })
            .collect();

        QuadraticSystem {
            variables: self.system.variables().to_vec(),
            parameters: self.system.parameters().to_vec(),
            generalized,
            equations,
        }
    }
}

/// Units first, then by index.
fn order_pair(a: Option<usize>, b: Option<usize>) -> (Option<usize>, Option<usize>) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Names `z1, z2, ...` for new variables, falling back to other prefixes when
/// one of them collides with an existing variable or parameter name.
pub fn new_variable_names(system: &OdeSystem, count: usize) -> Vec<String> {
    let taken: HashSet<&str> = system
        .variables()
        .iter()
        .chain(system.parameters())
        .map(String::as_str)
        .collect();
    let mut prefix = String::new();
    for round in 0.. {
        prefix.clear();
        let base = if round % 2 == 0 { 'z' } else { 'w' };
        for _ in 0..=round / 2 {
            prefix.push(base);
        }
        let names: Vec<String> = (1..=count).map(|i| format!("{}{}", prefix, i)).collect();
        if names.iter().all(|n| !taken.contains(n.as_str())) {
            return names;
        }
    }
    unreachable!()
}

/// A variable of the quadratic system, as a monomial in the original ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedVariable {
    pub name: String,
    pub monomial: Monomial,
}

/// `coefficient * left * right`, where a `None` factor is the constant `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticTerm {
    pub coefficient: Coefficient,
    pub left: Option<usize>,
    pub right: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticEquation {
    /// Index into [`QuadraticSystem::generalized`].
    pub lhs: usize,
    pub terms: Vec<QuadraticTerm>,
}

/// A system whose right-hand sides have degree at most two in the original
/// and new variables.
///
/// `generalized` lists the original variables first, then the new ones; the
/// equations follow the same order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticSystem {
    pub variables: Vec<String>,
    pub parameters: Vec<String>,
    pub generalized: Vec<GeneralizedVariable>,
    pub equations: Vec<QuadraticEquation>,
}

impl QuadraticSystem {
    pub fn new_variables(&self) -> &[GeneralizedVariable] {
        &self.generalized[self.variables.len()..]
    }

    /// Right-hand sides with every factor substituted back by its monomial.
    pub fn expand(&self) -> Vec<Polynomial> {
        let nvars = self.variables.len();
        let nparams = self.parameters.len();
        let mono = |f: Option<usize>| match f {
            Some(i) => self.generalized[i].monomial.clone(),
            None => Monomial::one(nvars),
        };
        self.equations
            .iter()
            .map(|eq| {
                let mut p = Polynomial::zero(nvars, nparams);
                for t in &eq.terms {
                    p.add_term(mono(t.left).mul(&mono(t.right)), t.coefficient.clone());
                }
                p
            })
            .collect()
    }

    /// `coefficient*left*right` rendered with variable names, as signed parts.
    pub(crate) fn format_term(&self, t: &QuadraticTerm) -> Vec<(bool, String)> {
        let mut factors = Vec::new();
        match (t.left, t.right) {
            (Some(a), Some(b)) if a == b => factors.push(format!("{}^2", self.generalized[a].name)),
            (l, r) => {
                for i in [l, r].into_iter().flatten() {
                    factors.push(self.generalized[i].name.clone());
                }
            }
        }
        t.coefficient.scaled_terms(&self.parameters, &factors)
    }

    /// Right-hand side of one equation as text, e.g. `x*z1 - 2*a*z2^2`.
    pub fn format_rhs(&self, eq: &QuadraticEquation) -> String {
        crate::poly::join_terms(eq.terms.iter().flat_map(|t| self.format_term(t)).collect())
    }
}
