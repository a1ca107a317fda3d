//! Sparse polynomials with exact coefficients, and polynomial ODE systems.
//!
//! A [`Polynomial`] maps state-variable monomials to [`Coefficient`]s. A
//! coefficient is itself a sparse polynomial in the system parameters with
//! rational scalars, so a right-hand side such as `(a + b)*x*y` has a single
//! state monomial `x*y`. Zero coefficients are never stored: the support of a
//! polynomial is exactly its key set, which is what the search works with.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

pub type Rational = BigRational;

pub(crate) fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// A polynomial in the parameters with rational scalars.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coefficient {
    nparams: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl Coefficient {
    pub fn zero(nparams: usize) -> Self {
        Coefficient {
            nparams,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nparams: usize, value: Rational) -> Self {
        Self::term(Monomial::one(nparams), value)
    }

    pub fn integer(nparams: usize, value: i64) -> Self {
        Self::constant(nparams, rational(value))
    }

    /// `value * params^exponents`.
    pub fn term(params: Monomial, value: Rational) -> Self {
        let mut c = Self::zero(params.nvars());
        if !value.is_zero() {
            c.terms.insert(params, value);
        }
        c
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The rational value if this coefficient does not involve parameters.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self
                .terms
                .iter()
                .next()
                .filter(|(p, _)| p.is_one())
                .map(|(_, r)| r.clone()),
            _ => None,
        }
    }

    /// `(parameter monomial, scalar)` pairs in increasing graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn add_assign(&mut self, other: &Coefficient) {
        for (p, r) in &other.terms {
            add_entry(&mut self.terms, p.clone(), r.clone());
        }
    }

    pub fn mul(&self, other: &Coefficient) -> Coefficient {
        let mut out = Coefficient::zero(self.nparams);
        for (p, r) in &self.terms {
            for (q, s) in &other.terms {
                add_entry(&mut out.terms, p.mul(q), r * s);
            }
        }
        out
    }

    pub fn scale(&self, factor: &Rational) -> Coefficient {
        if factor.is_zero() {
            return Coefficient::zero(self.nparams);
        }
        Coefficient {
            nparams: self.nparams,
            terms: self
                .terms
                .iter()
                .map(|(p, r)| (p.clone(), r * factor))
                .collect(),
        }
    }

    pub fn neg(&self) -> Coefficient {
        self.scale(&rational(-1))
    }

    /// Signed summands of `self * factors`, ready for [`join_terms`].
    ///
    /// A coefficient with several parameter terms is parenthesized when it
    /// multiplies something, and expanded otherwise.
    pub(crate) fn scaled_terms<S: AsRef<str>>(
        &self,
        params: &[S],
        factors: &[String],
    ) -> Vec<(bool, String)> {
        if self.terms.len() > 1 && !factors.is_empty() {
            let inner = join_terms(self.scaled_terms(params, &[]));
            return vec![(false, format!("({})*{}", inner, factors.join("*")))];
        }
        self.terms
            .iter()
            .rev()
            .map(|(p, r)| {
                let mut all = Vec::new();
                if !p.is_one() {
                    all.push(p.format(params));
                }
                all.extend(factors.iter().cloned());
                format_product(r, &all)
            })
            .collect()
    }

    pub fn format<S: AsRef<str>>(&self, params: &[S]) -> String {
        join_terms(self.scaled_terms(params, &[]))
    }
}

fn add_entry(map: &mut BTreeMap<Monomial, Rational>, key: Monomial, value: Rational) {
    use std::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            if !value.is_zero() {
                e.insert(value);
            }
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

/// `scalar * f1 * f2 * ...` as a (negative, body) pair.
pub(crate) fn format_product(scalar: &Rational, factors: &[String]) -> (bool, String) {
    let negative = scalar.is_negative();
    let magnitude = scalar.abs();
    let body = if factors.is_empty() {
        magnitude.to_string()
    } else if magnitude.is_one() {
        factors.join("*")
    } else {
        format!("{}*{}", magnitude, factors.join("*"))
    };
    (negative, body)
}

pub(crate) fn join_terms(terms: Vec<(bool, String)>) -> String {
    if terms.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, (negative, body)) in terms.into_iter().enumerate() {
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&body);
    }
    out
}

/// A sparse polynomial in the state variables with [`Coefficient`] coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Polynomial {
    nvars: usize,
    nparams: usize,
    terms: BTreeMap<Monomial, Coefficient>,
}

impl Polynomial {
    pub fn zero(nvars: usize, nparams: usize) -> Self {
        Polynomial {
            nvars,
            nparams,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, coefficient: Coefficient) -> Self {
        Self::term(Monomial::one(nvars), coefficient)
    }

    pub fn variable(nvars: usize, nparams: usize, index: usize) -> Self {
        Self::term(Monomial::var(nvars, index), Coefficient::integer(nparams, 1))
    }

    pub fn term(monomial: Monomial, coefficient: Coefficient) -> Self {
        let mut p = Self::zero(monomial.nvars(), coefficient.nparams());
        p.add_term(monomial, coefficient);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct monomials.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Monomials with nonzero coefficient, in increasing graded-lex order.
    pub fn support(&self) -> impl DoubleEndedIterator<Item = &Monomial> + ExactSizeIterator {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> Option<&Coefficient> {
        self.terms.get(monomial)
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Adds `coefficient * monomial`, dropping the entry if it cancels.
    pub fn add_term(&mut self, monomial: Monomial, coefficient: Coefficient) {
        use std::collections::btree_map::Entry;
        debug_assert_eq!(monomial.nvars(), self.nvars);
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(monomial) {
            Entry::Vacant(e) => {
                e.insert(coefficient);
            }
            Entry::Occupied(mut e) => {
                e.get_mut().add_assign(&coefficient);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            nparams: self.nparams,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero(self.nvars, self.nparams);
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                out.add_term(m.mul(n), c.mul(d));
            }
        }
        out
    }

    pub fn mul_monomial(&self, monomial: &Monomial) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            nparams: self.nparams,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(monomial), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, exponent: u32) -> Polynomial {
        let mut out = Polynomial::constant(self.nvars, Coefficient::integer(self.nparams, 1));
        for _ in 0..exponent {
            out = out.mul(self);
        }
        out
    }

    /// Fully expanded rendering, highest monomials first, e.g. `2*a*x^2 - y + 1`.
    pub fn format<S: AsRef<str>, T: AsRef<str>>(&self, vars: &[S], params: &[T]) -> String {
        let mut terms = Vec::new();
        for (m, c) in self.terms.iter().rev() {
            let factors: Vec<String> = if m.is_one() {
                vec![]
            } else {
                vec![m.format(vars)]
            };
            for (p, r) in c.terms().rev() {
                let mut all = Vec::new();
                if !p.is_one() {
                    all.push(p.format(params));
                }
                all.extend(factors.iter().cloned());
                terms.push(format_product(r, &all));
            }
        }
        join_terms(terms)
    }
}

/// A polynomial ODE system `x_i' = f_i(x)` with symbolic parameters.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OdeSystem {
    variables: Vec<String>,
    parameters: Vec<String>,
    rhs: Vec<Polynomial>,
}

impl OdeSystem {
    /// Builds a system, checking names and shapes.
    pub fn new(variables: Vec<String>, parameters: Vec<String>, rhs: Vec<Polynomial>) -> Result<Self> {
        if variables.is_empty() {
            return Err(Error::InvalidSystem("a system needs at least one variable".into()));
        }
        if variables.len() != rhs.len() {
            return Err(Error::InvalidSystem(format!(
                "{} variables but {} right-hand sides",
                variables.len(),
                rhs.len()
            )));
        }
        let mut seen = std::collections::HashSet::new();
        for name in variables.iter().chain(&parameters) {
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidSystem(format!("name `{}` declared twice", name)));
            }
        }
        for (name, f) in variables.iter().zip(&rhs) {
            if f.nvars() != variables.len() || f.nparams() != parameters.len() {
                return Err(Error::InvalidSystem(format!(
                    "right-hand side of `{}` has the wrong shape",
                    name
                )));
            }
            if f.support().any(|m| !m.is_standard()) {
                return Err(Error::InvalidSystem(format!(
                    "right-hand side of `{}` has a negative exponent",
                    name
                )));
            }
            if f.terms().any(|(_, c)| c.terms().any(|(p, _)| !p.is_standard())) {
                return Err(Error::InvalidSystem(format!(
                    "right-hand side of `{}` has a negative parameter exponent",
                    name
                )));
            }
        }
        Ok(OdeSystem {
            variables,
            parameters,
            rhs,
        })
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn nparams(&self) -> usize {
        self.parameters.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn parameters(&self) -> &[String] {
        &self.parameters
    }

    pub fn rhs(&self) -> &[Polynomial] {
        &self.rhs
    }

    /// Per-variable degree bounds `D_i = max_j deg_{x_i} f_j`.
    pub fn degree_bounds(&self) -> Vec<i32> {
        (0..self.nvars())
            .map(|i| {
                self.rhs
                    .iter()
                    .flat_map(|f| f.support())
                    .map(|m| m.exponent(i))
                    .max()
                    .unwrap_or(0)
            })
            .collect()
    }

    /// Total number of monomials over all right-hand sides.
    pub fn monomial_count(&self) -> usize {
        self.rhs.iter().map(Polynomial::len).sum()
    }

    /// True if every right-hand side has degree at most two.
    pub fn is_quadratic(&self) -> bool {
        self.rhs.iter().all(|f| f.degree().unwrap_or(0) <= 2)
    }

    /// Time derivative of the monomial `z` along the system:
    /// `sum_s f_s * dz/dx_s`.
    ///
    /// Works for Laurent monomials too; the result is then a Laurent polynomial.
    pub fn lie_derivative(&self, z: &Monomial) -> Polynomial {
        assert_eq!(z.nvars(), self.nvars(), "monomial has the wrong number of variables");
        let mut out = Polynomial::zero(self.nvars(), self.nparams());
        for (s, f) in self.rhs.iter().enumerate() {
            let d = z.exponent(s);
            if d == 0 {
                continue;
            }
            let partial = z.laurent_div(&Monomial::var(self.nvars(), s));
            let scale = rational(i64::from(d));
            for (m, c) in f.terms() {
                out.add_term(m.mul(&partial), c.scale(&scale));
            }
        }
        out
    }
}

impl fmt::Display for OdeSystem {
    /// One `name' = rhs` line per variable, in the input format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (name, rhs) in self.variables.iter().zip(&self.rhs) {
            writeln!(f, "{}' = {}", name, rhs.format(&self.variables, &self.parameters))?;
        }
        Ok(())
    }
}
