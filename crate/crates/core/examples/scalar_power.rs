//! The smallest case: `x' = x^5` needs one new variable, `z = x^4`.
//!
//! `cargo run --example scalar_power -- 7` solves `x' = x^7` instead.

use monoquad::{benchmark_system, render_result, solve, Format, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let system = benchmark_system("scalar_power", n)?;
    let solution = solve(&system, &SolveOptions::default());
    print!("{}", render_result(&solution, Format::Text, true));
    Ok(())
}
