//! With Laurent monomials (negative exponents allowed) a quadratization with
//! at most one new variable per right-hand-side monomial always exists.

use monoquad::oracle::check_quadratization;
use monoquad::{laurent_quadratize, parse_system, render_result, Format};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let system = parse_system("x1' = x2^4\nx2' = x1^2")?;
    let solution = laurent_quadratize(&system);
    print!("{}", render_result(&solution, Format::Text, false));
    let violations = check_quadratization(&system, &solution.new_vars, true);
    println!(
        "\n{} new variables for {} monomials, {} violations",
        solution.order(),
        system.monomial_count(),
        violations.len()
    );
    Ok(())
}
