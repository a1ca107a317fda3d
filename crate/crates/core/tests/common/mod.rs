//! Shared fixtures for the integration tests.
#![allow(dead_code)]

use monoquad::{parse_system, OdeSystem};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const COUNTEREXAMPLE: &str = "x1' = x2^4\nx2' = x1^2";
pub const FIGURE_SYSTEM: &str = "x' = x^4 + x^3";

/// The worked examples as `(label, source)`.
pub fn worked_examples() -> Vec<(&'static str, String)> {
    vec![
        ("scalar power x^5", "x' = x^5".to_string()),
        ("counterexample", COUNTEREXAMPLE.to_string()),
        ("figure system", FIGURE_SYSTEM.to_string()),
        ("rabinovich-fabrikant", monoquad::benchmarks::benchmark_source("rf", 0).unwrap()),
    ]
}

/// Source text of a random system with 1 to 3 variables, 1 to 3 terms per
/// equation, total degree at most 4 and small nonzero integer coefficients.
pub fn random_source(rng: &mut impl Rng) -> String {
    let n = rng.gen_range(1..=3);
    let mut lines = Vec::new();
    for i in 0..n {
        let terms = rng.gen_range(1..=3);
        let mut rhs = Vec::new();
        for _ in 0..terms {
            let degree = rng.gen_range(0..=4);
            let mut exps = vec![0; n];
            for _ in 0..degree {
                exps[rng.gen_range(0..n)] += 1;
            }
            let mut c: i32 = rng.gen_range(1..=3);
            if rng.gen_bool(0.3) {
                c = -c;
            }
            let mut factors = vec![c.to_string()];
            for (k, &e) in exps.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", k + 1)),
                    _ => factors.push(format!("x{}^{}", k + 1, e)),
                }
            }
            rhs.push(factors.join("*"));
        }
        lines.push(format!("x{}' = {}", i + 1, rhs.join(" + ")));
    }
    lines.join("\n")
}

/// `count` random systems from a fixed seed.
pub fn random_corpus(seed: u64, count: usize) -> Vec<OdeSystem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| parse_system(&random_source(&mut rng)).expect("generated source parses"))
        .collect()
}
