//! A chaotic system with symbolic parameters `a` and `b`. Parameters stay in
//! the coefficients and never become search variables.

use monoquad::{benchmark_system, render_result, solve, Format, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let system = benchmark_system("rf", 0)?;
    println!("input:\n{}", system);
    let solution = solve(&system, &SolveOptions::default());
    print!("{}", render_result(&solution, Format::Text, true));
    Ok(())
}
