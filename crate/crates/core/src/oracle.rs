//! Brute-force references for testing the solver.
//!
//! Nothing here is used by the search itself. The routines deliberately take
//! different routes from the production code: derivatives are recomputed from
//! the raw right-hand side terms, `V^2` is materialized as explicit products,
//! and C4*-freeness is checked by walking closed 4-edge walks.

use std::collections::{HashMap, HashSet};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use num::Zero;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::{OdeSystem, Rational};

/// Cooperative cancellation for long enumerations.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }

    fn check(&self) -> Result<()> {
        if self.is_cancelled() {
            Err(Error::Cancelled)
        } else {
            Ok(())
        }
    }
}

type Exps = Vec<i32>;

/// Support of the derivative of `z`, computed term by term from the raw
/// right-hand sides with exact cancellation.
fn derivative_support(system: &OdeSystem, z: &[i32]) -> Vec<Exps> {
    let mut acc: HashMap<(Exps, Exps), Rational> = HashMap::new();
    for (s, f) in system.rhs().iter().enumerate() {
        let d = z[s];
        if d == 0 {
            continue;
        }
        for (m, c) in f.terms() {
            let mut e: Exps = m.exponents().iter().zip(z).map(|(a, b)| a + b).collect();
            e[s] -= 1;
            for (p, r) in c.terms() {
                let key = (e.clone(), p.exponents().to_vec());
                *acc.entry(key).or_insert_with(Rational::zero) += r * Rational::from_integer(d.into());
            }
        }
    }
    let mut out: Vec<Exps> = acc
        .into_iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|((e, _), _)| e)
        .collect();
    out.sort();
    out.dedup();
    out
}

/// A monomial of some derivative that is not a product of two generalized
/// variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub variable: Monomial,
    pub monomial: Monomial,
}

/// Checks that `new_vars` quadratize `system`: every monomial in the
/// derivative of every `v` in `V = {1, x_1..x_n} + new_vars` must be a product
/// of two elements of `V`. Returns all violations; empty means valid.
///
/// With `laurent` the new variables may have negative exponents.
pub fn check_quadratization(system: &OdeSystem, new_vars: &[Monomial], laurent: bool) -> Vec<Violation> {
    let n = system.nvars();
    let mut vars: Vec<Exps> = vec![vec![0; n]];
    vars.extend((0..n).map(|i| Monomial::var(n, i).exponents().to_vec()));
    vars.extend(new_vars.iter().map(|m| m.exponents().to_vec()));

    let mut violations = Vec::new();
    let distinct: HashSet<&Exps> = vars.iter().collect();
    if distinct.len() != vars.len() {
        violations.extend(new_vars.iter().filter(|m| m.is_one() || m.as_variable().is_some()).map(|m| {
            Violation {
                variable: m.clone(),
                monomial: m.clone(),
            }
        }));
    }
    if !laurent {
        for m in new_vars.iter().filter(|m| !m.is_standard()) {
            violations.push(Violation {
                variable: m.clone(),
                monomial: m.clone(),
            });
        }
    }

    let mut products: HashSet<Exps> = HashSet::new();
    for a in &vars {
        for b in &vars {
            products.insert(a.iter().zip(b).map(|(x, y)| x + y).collect());
        }
    }
    for v in vars.iter().skip(1) {
        for t in derivative_support(system, v) {
            if !products.contains(&t) {
                violations.push(Violation {
                    variable: Monomial::new(v),
                    monomial: Monomial::new(&t),
                });
            }
        }
    }
    violations
}

/// Per-variable exponent bounds of a candidate monomial pool.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBox {
    pub bounds: Vec<i32>,
}

impl DegreeBox {
    /// `0 <= d_i <= D_i` with `D_i` the largest degree of `x_i` in the system.
    pub fn tight(system: &OdeSystem) -> Self {
        DegreeBox {
            bounds: system.degree_bounds(),
        }
    }

    /// `0 <= d_i <= D` for all `i`, with `D = max D_i`.
    pub fn extended(system: &OdeSystem) -> Self {
        let d = system.degree_bounds().into_iter().max().unwrap_or(0);
        Self::uniform(system.nvars(), d)
    }

    pub fn uniform(nvars: usize, degree: i32) -> Self {
        DegreeBox {
            bounds: vec![degree; nvars],
        }
    }

    /// Box monomials other than `1` and the variables.
    pub fn pool(&self) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut current = vec![0i32; self.bounds.len()];
        loop {
            let m = Monomial::new(&current);
            if !m.is_one() && m.as_variable().is_none() {
                out.push(m);
            }
            let mut i = 0;
            loop {
                if i == current.len() {
                    return out;
                }
                if current[i] < self.bounds[i] {
                    current[i] += 1;
                    break;
                }
                current[i] = 0;
                i += 1;
            }
        }
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

struct Bits(Vec<u64>);

impl Bits {
    fn new(len: usize) -> Self {
        Bits(vec![0; len.div_ceil(64)])
    }
    fn set(&mut self, i: usize, on: bool) {
        if on {
            self.0[i / 64] |= 1 << (i % 64);
        } else {
            self.0[i / 64] &= !(1 << (i % 64));
        }
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
}

/// Smallest subset of the box pool that quadratizes the system, found by
/// trying all subsets in order of increasing size.
///
/// The answer is optimal among quadratizations inside the box only; an
/// optimum may use monomials outside it. Fails with [`Error::PoolTooLarge`]
/// before starting a subset size whose cumulative number of subsets would
/// exceed `limit`.
pub fn brute_force_optimal(
    system: &OdeSystem,
    degree_box: &DegreeBox,
    limit: u64,
    cancel: &CancelToken,
) -> Result<(usize, Vec<Monomial>)> {
    let n = system.nvars();
    let pool = degree_box.pool();
    let base = n + 1;
    // universe: 1, x_1..x_n, then the pool
    let mut universe: Vec<Exps> = vec![vec![0; n]];
    universe.extend((0..n).map(|i| Monomial::var(n, i).exponents().to_vec()));
    universe.extend(pool.iter().map(|m| m.exponents().to_vec()));
    let index: HashMap<&Exps, usize> = universe.iter().enumerate().map(|(i, e)| (e, i)).collect();

    // For each universe element, its derivative monomials; for each such
    // monomial, the index pairs of the universe whose product it is.
    let mut pairs_of: HashMap<Exps, Vec<(usize, usize)>> = HashMap::new();
    let mut derivs: Vec<Vec<usize>> = Vec::with_capacity(universe.len());
    let mut targets: Vec<Exps> = Vec::new();
    let mut target_ids: HashMap<Exps, usize> = HashMap::new();
    for u in &universe {
        let mut ids = Vec::new();
        if u.iter().any(|&d| d != 0) {
            for t in derivative_support(system, u) {
                let id = *target_ids.entry(t.clone()).or_insert_with(|| {
                    targets.push(t);
                    targets.len() - 1
                });
                ids.push(id);
            }
        }
        derivs.push(ids);
    }
    for t in &targets {
        let mut pairs = Vec::new();
        for (i, u) in universe.iter().enumerate() {
            let rest: Exps = t.iter().zip(u).map(|(a, b)| a - b).collect();
            if let Some(&j) = index.get(&rest) {
                if i <= j {
                    pairs.push((i, j));
                }
            }
        }
        pairs_of.insert(t.clone(), pairs);
    }
    let target_pairs: Vec<&Vec<(usize, usize)>> = targets.iter().map(|t| &pairs_of[t]).collect();

    let mut in_v = Bits::new(universe.len());
    for i in 0..base {
        in_v.set(i, true);
    }
    let covered = |in_v: &Bits, u: usize| {
        derivs[u]
            .iter()
            .all(|&t| target_pairs[t].iter().any(|&(i, j)| in_v.get(i) && in_v.get(j)))
    };

    let mut budget: u64 = 0;
    for k in 0..=pool.len() {
        budget = budget.saturating_add(binomial(pool.len(), k));
        if budget > limit {
            return Err(Error::PoolTooLarge {
                pool: pool.len(),
                limit,
            });
        }
        cancel.check()?;
        let mut combo: Vec<usize> = (0..k).collect();
        let mut visited: u64 = 0;
        loop {
            visited += 1;
            if visited.is_multiple_of(4096) {
                cancel.check()?;
            }
            for &c in &combo {
                in_v.set(base + c, true);
            }
            let ok = (1..base).all(|u| covered(&in_v, u))
                && combo.iter().all(|&c| covered(&in_v, base + c));
            for &c in &combo {
                in_v.set(base + c, false);
            }
            if ok {
                return Ok((k, combo.iter().map(|&c| pool[c].clone()).collect()));
            }
            if !next_combination(&mut combo, pool.len()) {
                break;
            }
        }
    }
    unreachable!("the full box always quadratizes the system")
}

/// Advances `combo` to the next increasing `k`-subset of `0..n` in
/// lexicographic order; false when it was the last one.
fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    for i in (0..k).rev() {
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// True if the pseudograph on `n` vertices with the given edges (loops and
/// repeated edges allowed) has no closed walk of four edges in which every
/// two consecutive edges, including the last and the first, are distinct.
pub fn is_c4_star_free(n: usize, edges: &[(usize, usize)]) -> bool {
    // incidence: (edge id, other endpoint)
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(a, b)) in edges.iter().enumerate() {
        incident[a].push((id, b));
        if a != b {
            incident[b].push((id, a));
        }
    }
    for v0 in 0..n {
        for &(e1, v1) in &incident[v0] {
            for &(e2, v2) in &incident[v1] {
                if e2 == e1 {
                    continue;
                }
                for &(e3, v3) in &incident[v2] {
                    if e3 == e2 {
                        continue;
                    }
                    for &(e4, end) in &incident[v3] {
                        if e4 != e3 && e4 != e1 && end == v0 {
                            return false;
                        }
                    }
                }
            }
        }
    }
    true
}

/// Largest numbers of edges of C4*-free pseudographs on `n` vertices with at
/// most `m` loops, for `m = 0..=n`, by exhaustive search.
pub fn exhaustive_c4_row(n: usize, cancel: &CancelToken) -> Result<Vec<usize>> {
    const MAX_N: usize = 6;
    if n > MAX_N {
        return Err(Error::TooLargeForExhaustive { n, max: MAX_N });
    }
    // Repeated edges and repeated loops always close a forbidden walk, so it
    // suffices to search subsets of the simple edges and single loops.
    let mut slots = Vec::new();
    for a in 0..n {
        for b in a..n {
            slots.push((a, b));
        }
    }
    let mut search = C4Search {
        n,
        slots,
        adj: vec![vec![false; n]; n],
        best: vec![0; n + 1],
        nodes: 0,
        cancel,
    };
    search.extend(0, 0, 0)?;
    let mut row = search.best;
    for m in 1..row.len() {
        row[m] = row[m].max(row[m - 1]);
    }
    Ok(row)
}

/// `C(n, m)` by exhaustive search; `n <= 6`.
pub fn exhaustive_c4_capacity(n: usize, m: usize, cancel: &CancelToken) -> Result<usize> {
    let row = exhaustive_c4_row(n, cancel)?;
    Ok(row[m.min(n)])
}

struct C4Search<'c> {
    n: usize,
    slots: Vec<(usize, usize)>,
    adj: Vec<Vec<bool>>,
    /// best[l]: most edges seen with exactly l loops
    best: Vec<usize>,
    nodes: u64,
    cancel: &'c CancelToken,
}

impl C4Search<'_> {
    fn extend(&mut self, next: usize, edges: usize, loops: usize) -> Result<()> {
        self.nodes += 1;
        if self.nodes.is_multiple_of(65536) {
            self.cancel.check()?;
        }
        self.best[loops] = self.best[loops].max(edges);
        for s in next..self.slots.len() {
            let (a, b) = self.slots[s];
            self.adj[a][b] = true;
            self.adj[b][a] = true;
            if !self.closes_walk(a, b) {
                self.extend(s + 1, edges + 1, loops + usize::from(a == b))?;
            }
            self.adj[a][b] = false;
            self.adj[b][a] = false;
        }
        Ok(())
    }

    /// Whether the just-added edge `{a, b}` lies on a forbidden closed walk.
    ///
    /// In a graph without repeated edges, consecutive edges of the walk
    /// `v0 v1 v2 v3 v0` differ iff `v0 != v2` and `v1 != v3`.
    fn closes_walk(&self, a: usize, b: usize) -> bool {
        for (v0, v1) in [(a, b), (b, a)] {
            for v2 in 0..self.n {
                if v2 == v0 || !self.adj[v1][v2] {
                    continue;
                }
                for v3 in 0..self.n {
                    if v3 != v1 && self.adj[v2][v3] && self.adj[v3][v0] {
                        return true;
                    }
                }
            }
        }
        false
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
    fn checker_accepts_and_rejects() {
        let sys = parse_system("x' = x^5").unwrap();
        assert!(check_quadratization(&sys, &[m(&[4])], false).is_empty());
        let v = check_quadratization(&sys, &[], false);
        assert_eq!(v, vec![Violation { variable: m(&[1]), monomial: m(&[5]) }]);
        assert!(!check_quadratization(&sys, &[m(&[1])], false).is_empty());
        assert!(!check_quadratization(&sys, &[m(&[-1])], false).is_empty());
    }

    #[test]
    fn brute_force_examples() {
        let cancel = CancelToken::new();
        let sys = parse_system("x' = x^5").unwrap();
        let (order, witness) = brute_force_optimal(&sys, &DegreeBox::uniform(1, 5), 1 << 20, &cancel).unwrap();
        assert_eq!((order, witness), (1, vec![m(&[4])]));

        let sys = parse_system("x' = x^4 + x^3").unwrap();
        let (order, _) = brute_force_optimal(&sys, &DegreeBox::uniform(1, 4), 1 << 20, &cancel).unwrap();
        assert_eq!(order, 2);

        let sys = parse_system("x1' = x2^4\nx2' = x1^2").unwrap();
        let (order, mut witness) =
            brute_force_optimal(&sys, &DegreeBox::extended(&sys), 1 << 20, &cancel).unwrap();
        witness.sort();
        assert_eq!(order, 3);
        assert_eq!(witness, vec![m(&[0, 3]), m(&[1, 2]), m(&[3, 0])]);
        // the tight box misses it
        let (order, _) = brute_force_optimal(&sys, &DegreeBox::tight(&sys), 1 << 20, &cancel).unwrap();
        assert!(order > 3);
    }

    #[test]
    fn brute_force_guard_and_cancel() {
        let sys = parse_system("x1' = x2^4\nx2' = x1^2").unwrap();
        let err = brute_force_optimal(&sys, &DegreeBox::extended(&sys), 100, &CancelToken::new());
        assert!(matches!(err, Err(Error::PoolTooLarge { .. })));
        let cancel = CancelToken::new();
        cancel.cancel();
        let err = brute_force_optimal(&sys, &DegreeBox::extended(&sys), 1 << 30, &cancel);
        assert!(matches!(err, Err(Error::Cancelled)));
    }

    #[test]
    fn forbidden_configurations() {
        // two loops at a vertex
        assert!(!is_c4_star_free(1, &[(0, 0), (0, 0)]));
        // a double edge
        assert!(!is_c4_star_free(2, &[(0, 1), (0, 1)]));
        // two looped vertices joined by an edge
        assert!(!is_c4_star_free(2, &[(0, 0), (1, 1), (0, 1)]));
        // a 4-cycle
        assert!(!is_c4_star_free(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]));
        // simple C4-free graphs
        assert!(is_c4_star_free(3, &[(0, 1), (1, 2), (2, 0)]));
        assert!(is_c4_star_free(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]));
        assert!(is_c4_star_free(2, &[(0, 0), (0, 1)]));
    }

    #[test]
    fn small_capacities() {
        let cancel = CancelToken::new();
        assert_eq!(exhaustive_c4_capacity(1, 1, &cancel).unwrap(), 1);
        assert_eq!(exhaustive_c4_capacity(2, 2, &cancel).unwrap(), 2);
        assert_eq!(exhaustive_c4_capacity(4, 3, &cancel).unwrap(), 6);
        assert_eq!(exhaustive_c4_capacity(3, 7, &cancel).unwrap(), exhaustive_c4_capacity(3, 3, &cancel).unwrap());
        assert!(matches!(
            exhaustive_c4_capacity(7, 0, &cancel),
            Err(Error::TooLargeForExhaustive { .. })
        ));
    }

    #[test]
    fn box_pool() {
        assert_eq!(DegreeBox::uniform(1, 3).pool(), vec![m(&[2]), m(&[3])]);
        assert_eq!(DegreeBox::uniform(2, 2).pool().len(), 9 - 3);
        assert_eq!(binomial(121, 3), 287_980);
    }
}
