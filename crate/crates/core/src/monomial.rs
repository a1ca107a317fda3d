//! Exponent-vector monomials.
//!
//! A [`Monomial`] is a dense vector of integer exponents, index-aligned with the
//! variable list of whatever it is a monomial in (state variables of an
//! [`OdeSystem`](crate::OdeSystem), or its parameters when used as the parameter
//! part of a coefficient). Exponents are nonnegative except for Laurent monomials.
//!
//! Monomials are totally ordered by graded lexicographic order: total degree
//! first, then the exponent vectors compared lexicographically. With this order
//! `1 < x2 < x1 < x2^2 < x1*x2 < x1^2` for two variables, and every tie-break in
//! the solver goes through it.

use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub(crate) type Exponents = SmallVec<[i32; 8]>;

/// A monomial `x_1^{d_1} ... x_n^{d_n}` stored as its exponent vector.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Exponents);

impl Monomial {
    /// The monomial `1` in `nvars` variables.
    pub fn one(nvars: usize) -> Self {
        Monomial(smallvec::smallvec![0; nvars])
    }

    /// The variable with index `index`, as a monomial in `nvars` variables.
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[index] = 1;
        m
    }

    pub fn new(exponents: impl AsRef<[i32]>) -> Self {
        Monomial(Exponents::from_slice(exponents.as_ref()))
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn exponents(&self) -> &[i32] {
        &self.0
    }

    pub fn exponent(&self, index: usize) -> i32 {
        self.0[index]
    }

    /// Total degree (sum of the exponents).
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&d| i64::from(d)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// True if no exponent is negative, i.e. this is an ordinary monomial.
    pub fn is_standard(&self) -> bool {
        self.0.iter().all(|&d| d >= 0)
    }

    /// True if every exponent is even, i.e. the monomial is a square.
    pub fn is_square(&self) -> bool {
        self.0.iter().all(|&d| d % 2 == 0)
    }

    /// Index of the variable this monomial equals, if it is a single variable.
    pub fn as_variable(&self) -> Option<usize> {
        let mut found = None;
        for (i, &d) in self.0.iter().enumerate() {
            match d {
                0 => {}
                1 if found.is_none() => found = Some(i),
                _ => return None,
            }
        }
        found
    }

    /// Componentwise sum of the exponents.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference of the exponents, negative entries allowed.
    pub fn laurent_div(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// `self / divisor` if the quotient is an ordinary monomial, `None` otherwise.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(self.laurent_div(divisor))
        } else {
            None
        }
    }

    /// True if `self` divides `other` with a nonnegative quotient.
    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.nvars(), other.nvars());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Number of monomial divisors, `prod (d_i + 1)`.
    ///
    /// This is also the number of ordered factorizations `m = m1 * m2`.
    pub fn divisor_count(&self) -> u64 {
        debug_assert!(self.is_standard());
        self.0.iter().map(|&d| d as u64 + 1).product()
    }

    /// All divisors, in lexicographic order of their exponent vectors.
    pub fn divisors(&self) -> Vec<Monomial> {
        debug_assert!(self.is_standard());
        let mut out = Vec::with_capacity(self.divisor_count() as usize);
        let mut current = Self::one(self.nvars());
        loop {
            out.push(current.clone());
            // odometer with the last variable running fastest
            let mut i = self.nvars();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                if current.0[i] < self.0[i] {
                    current.0[i] += 1;
                    break;
                }
                current.0[i] = 0;
            }
        }
    }

    /// Unordered factorizations `self = m1 * m2`, each listed once.
    ///
    /// Pairs are normalized so that `m1` is lexicographically no larger than
    /// `m2`, and the list is sorted by `m1`'s exponent vector. `(1, self)` is
    /// always the first entry.
    pub fn decompositions(&self) -> Vec<(Monomial, Monomial)> {
        self.divisors()
            .into_iter()
            .filter_map(|d| {
                let rest = self.laurent_div(&d);
                (d.0 <= rest.0).then_some((d, rest))
            })
            .collect()
    }

    /// Render with the given variable names, e.g. `x1*x2^2`; `1` for the unit.
    pub fn format<S: AsRef<str>>(&self, names: &[S]) -> String {
        let mut parts = Vec::new();
        for (name, &d) in names.iter().zip(&self.0) {
            match d {
                0 => {}
                1 => parts.push(name.as_ref().to_string()),
                _ => parts.push(format!("{}^{}", name.as_ref(), d)),
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.0.as_slice())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[i32]) -> Monomial {
        Monomial::new(e)
    }

    #[test]
    fn multiplication_adds_exponents() {
        assert_eq!(m(&[1]).mul(&m(&[1])), m(&[2]));
        assert_eq!(Monomial::one(2).mul(&m(&[3, 1])), m(&[3, 1]));
        assert_eq!(m(&[1, 2]).mul(&m(&[0, 1])), m(&[1, 3]));
    }

    #[test]
    fn division() {
        assert_eq!(m(&[3]).div(&m(&[1])), Some(m(&[2])));
        assert_eq!(m(&[1]).div(&m(&[2])), None);
        assert_eq!(m(&[1, 2]).div(&m(&[0, 2])), Some(m(&[1, 0])));
        assert_eq!(m(&[1]).laurent_div(&m(&[2])), m(&[-1]));
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(m(&[3]).divisor_count(), 4);
        assert_eq!(Monomial::one(3).divisor_count(), 1);
        assert_eq!(m(&[2, 1]).divisor_count(), 6);
    }

    #[test]
    fn decompositions_of_small_monomials() {
        assert_eq!(
            m(&[3]).decompositions(),
            vec![(m(&[0]), m(&[3])), (m(&[1]), m(&[2]))]
        );
        assert_eq!(
            m(&[2]).decompositions(),
            vec![(m(&[0]), m(&[2])), (m(&[1]), m(&[1]))]
        );
        let pairs = m(&[1, 1]).decompositions();
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0], (m(&[0, 0]), m(&[1, 1])));
        let (a, b) = &pairs[1];
        let mut got = [a.clone(), b.clone()];
        got.sort();
        assert_eq!(got, [m(&[0, 1]), m(&[1, 0])]);
    }

    #[test]
    fn graded_lex_order() {
        let mut v = vec![m(&[2, 0]), m(&[0, 1]), m(&[0, 0]), m(&[1, 1]), m(&[1, 0]), m(&[0, 2])];
        v.sort();
        assert_eq!(
            v,
            vec![m(&[0, 0]), m(&[0, 1]), m(&[1, 0]), m(&[0, 2]), m(&[1, 1]), m(&[2, 0])]
        );
    }

    #[test]
    fn formatting() {
        assert_eq!(m(&[1, 2]).format(&["x1", "x2"]), "x1*x2^2");
        assert_eq!(m(&[0, 0]).format(&["x1", "x2"]), "1");
        assert_eq!(m(&[-1, 4]).format(&["x1", "x2"]), "x1^-1*x2^4");
    }

    #[test]
    fn single_variable_detection() {
        assert_eq!(m(&[0, 1, 0]).as_variable(), Some(1));
        assert_eq!(m(&[0, 2, 0]).as_variable(), None);
        assert_eq!(m(&[1, 1, 0]).as_variable(), None);
        assert_eq!(m(&[0, 0, 0]).as_variable(), None);
    }
}
