//! Generators for the built-in benchmark systems.

use crate::error::{Error, Result};
use crate::parse::parse_system;
use crate::poly::OdeSystem;

pub const BENCHMARK_NAMES: [&str; 4] = ["cubic_cycle", "cubic_bicycle", "rf", "scalar_power"];

/// Source text of a benchmark system.
///
/// * `cubic_cycle(n)`: `x_i' = x_{i+1}^3` cyclically, `n > 1`.
/// * `cubic_bicycle(n)`: `x_i' = x_{i-1}^3 + x_{i+1}^3` cyclically, `n > 1`.
/// * `rf`: the Rabinovich-Fabrikant system with parameters `a`, `b`; `n` is ignored.
/// * `scalar_power(n)`: `x' = x^n`, `n >= 1`.
pub fn benchmark_source(name: &str, n: usize) -> Result<String> {
    let invalid = || Error::InvalidBenchmarkSize {
        name: name.to_string(),
        n,
    };
    let lines: Vec<String> = match name {
        "cubic_cycle" => {
            if n < 2 {
                return Err(invalid());
            }
            (1..=n)
                .map(|i| format!("x{}' = x{}^3", i, i % n + 1))
                .collect()
        }
        "cubic_bicycle" => {
            if n < 2 {
                return Err(invalid());
            }
            (1..=n)
                .map(|i| {
                    let prev = if i == 1 { n } else { i - 1 };
                    format!("x{}' = x{}^3 + x{}^3", i, prev, i % n + 1)
                })
                .collect()
        }
        "rf" => vec![
            "x' = y*(z - 1 + x^2) + a*x".into(),
            "y' = x*(3*z + 1 - x^2) + a*y".into(),
            "z' = -2*z*(b + x*y)".into(),
        ],
        "scalar_power" => {
            if n < 1 {
                return Err(invalid());
            }
            vec![format!("x' = x^{}", n)]
        }
        _ => return Err(Error::UnknownBenchmark(name.to_string())),
    };
    Ok(lines.join("\n"))
}

/// The named benchmark system, see [`benchmark_source`].
pub fn benchmark_system(name: &str, n: usize) -> Result<OdeSystem> {
    Ok(parse_system(&benchmark_source(name, n)?)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cubic_cycle() {
        let sys = benchmark_system("cubic_cycle", 3).unwrap();
        assert_eq!(sys.to_string(), "x1' = x2^3\nx2' = x3^3\nx3' = x1^3\n");
    }

    #[test]
    fn cubic_bicycle_merges_coefficients() {
        let sys = benchmark_system("cubic_bicycle", 2).unwrap();
        assert_eq!(sys.to_string(), "x1' = 2*x2^3\nx2' = 2*x1^3\n");
        let sys = benchmark_system("cubic_bicycle", 4).unwrap();
        assert_eq!(sys.rhs()[0].format(sys.variables(), sys.parameters()), "x2^3 + x4^3");
    }

    #[test]
    fn rf_has_symbolic_parameters() {
        let sys = benchmark_system("rf", 0).unwrap();
        assert_eq!(sys.variables(), ["x", "y", "z"]);
        assert_eq!(sys.parameters(), ["a", "b"]);
        assert_eq!(
            sys.rhs()[2].format(sys.variables(), sys.parameters()),
            "-2*x*y*z - 2*b*z"
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(benchmark_system("circular", 3), Err(Error::UnknownBenchmark(_))));
        assert!(matches!(
            benchmark_system("cubic_cycle", 1),
            Err(Error::InvalidBenchmarkSize { .. })
        ));
        assert!(benchmark_system("scalar_power", 0).is_err());
        assert_eq!(benchmark_system("scalar_power", 5).unwrap().to_string(), "x' = x^5\n");
    }
}
