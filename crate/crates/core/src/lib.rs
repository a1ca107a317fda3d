//! Optimal monomial quadratization of polynomial ODE systems.
//!
//! Given `x' = f(x)` with polynomial right-hand sides, a *quadratization* is a
//! list of new variables `z_j = g_j(x)` such that the derivatives of all
//! original and new variables can be written as polynomials of degree at most
//! two in `x` and `z`. This crate searches for quadratizations whose new
//! variables are monomials, and finds one with the fewest new variables by a
//! depth-first branch-and-bound with two pruning rules.
//!
//! ```
//! use monoquad::{parse_system, solve, SolveOptions};
//!
//! let system = parse_system("x' = x^5").unwrap();
//! let solution = solve(&system, &SolveOptions::default());
//! assert_eq!(solution.order(), 1); // z1 = x^4
//! let q = &solution.quadratic;
//! assert_eq!(q.format_rhs(&q.equations[0]), "x*z1");
//! assert_eq!(q.format_rhs(&q.equations[1]), "4*z1^2");
//! ```
//!
//! Module map:
//!
//! * [`monomial`] and [`poly`]: exact sparse arithmetic and Lie derivatives;
//! * [`parse`] and [`render`]: the text input format and the text/JSON output;
//! * [`state`]: search subproblems, nonsquares, extraction of the quadratic system;
//! * [`branching`] and [`pruning`]: children of a subproblem and the lower bounds;
//! * [`solver`]: the branch-and-bound driver; [`laurent`]: the Laurent construction;
//! * [`benchmarks`]: built-in systems; [`oracle`]: brute-force references for tests.

pub mod benchmarks;
pub mod branching;
pub mod error;
pub mod laurent;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod pruning;
pub mod render;
pub mod solver;
pub mod state;

pub use benchmarks::benchmark_system;
pub use error::{Error, Result};
pub use laurent::laurent_quadratize;
pub use monomial::Monomial;
pub use parse::{parse_system, ParseError};
pub use poly::{Coefficient, OdeSystem, Polynomial, Rational};
pub use render::{render_result, Format, ResultDocument};
pub use solver::{bnb_search, initial_incumbent, solve, SearchStats, Solution, SolveOptions};
pub use state::{QuadraticSystem, SearchState};
