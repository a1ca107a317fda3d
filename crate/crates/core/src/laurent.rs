//! Linear-size quadratization with Laurent monomials.
//!
//! For every monomial `m` of the right-hand side of `x_i'`, introduce
//! `z = m / x_i`. Then `x_i' = sum c * z * x_i`, and since `dz/dx_s` is
//! proportional to `z / x_s`, every term `m_{s,r} * dz/dx_s` of `z'` is
//! proportional to `z_{s,r} * z`. The number of new variables is at most the
//! number of monomials in the system; the result is not optimized.

use std::collections::BTreeSet;

use crate::monomial::Monomial;
use crate::poly::OdeSystem;
use crate::solver::{SearchStats, Solution};
use crate::state::SearchState;

/// The distinct quotients `m / x_i` that are not already `1` or a variable,
/// in order of first appearance.
pub fn laurent_variables(system: &OdeSystem) -> Vec<Monomial> {
    let n = system.nvars();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (i, f) in system.rhs().iter().enumerate() {
        let x = Monomial::var(n, i);
        for m in f.support() {
            let z = m.laurent_div(&x);
            if z.is_one() || z.as_variable().is_some() {
                continue;
            }
            if seen.insert(z.clone()) {
                out.push(z);
            }
        }
    }
    out
}

/// Builds the Laurent quadratization and its quadratic system.
pub fn laurent_quadratize(system: &OdeSystem) -> Solution {
    let new_vars = laurent_variables(system);
    let state = SearchState::new_laurent(system)
        .add_variables(&new_vars)
        .expect("Laurent quotients are distinct and outside V");
    assert!(
        state.is_quadratization(),
        "Laurent variables failed to quadratize the system"
    );
    Solution {
        quadratic: state.extract_quadratic_system(),
        stats: SearchStats {
            optimal_order: new_vars.len(),
            ..SearchStats::default()
        },
        new_vars,
        optimal: false,
        laurent: true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_system;

    fn m(e: &[i32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn scalar_power_matches_the_monomial_solution() {
        let sys = parse_system("x' = x^5").unwrap();
        let s = laurent_quadratize(&sys);
        assert_eq!(s.new_vars, vec![m(&[4])]);
        let q = &s.quadratic;
        assert_eq!(q.format_rhs(&q.equations[0]), "x*z1");
        assert_eq!(q.format_rhs(&q.equations[1]), "4*z1^2");
    }

    #[test]
    fn counterexample_uses_negative_exponents() {
        let sys = parse_system("x1' = x2^4\nx2' = x1^2").unwrap();
        let s = laurent_quadratize(&sys);
        assert_eq!(s.new_vars, vec![m(&[-1, 4]), m(&[2, -1])]);
        for (g, p) in s.quadratic.generalized.iter().zip(s.quadratic.expand()) {
            assert_eq!(sys.lie_derivative(&g.monomial), p);
        }
    }

    #[test]
    fn duplicates_and_trivial_quotients_are_skipped() {
        // x*y / x = y and x*y / y = x are already variables; y^2 / x twice
        let sys = parse_system("x' = x*y + y^2\ny' = x*y + 2*y^2").unwrap();
        let z = laurent_variables(&sys);
        assert!(z.len() <= sys.monomial_count());
        assert_eq!(z, vec![m(&[-1, 2])]);
        assert!(laurent_quadratize(&sys).quadratic.equations.len() == 3);
    }
}
