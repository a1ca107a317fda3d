//! Cross-check the branch-and-bound order against exhaustive search over a
//! box of candidate monomials, for a few small systems. The box is
//! `0 <= d_i <= max D_i`; for the last system every optimal quadratization
//! leaves it, so brute force reports one more variable than the search.

use monoquad::oracle::{brute_force_optimal, CancelToken, DegreeBox};
use monoquad::{parse_system, solve, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cancel = CancelToken::new();
    for src in [
        "x' = x^5",
        "x' = x^4 + x^3",
        "x1' = x2^4\nx2' = x1^2",
        "x' = y^3\ny' = x^3",
        "x1' = -2*x1^2*x2 - x2^2\nx2' = 3*x1*x2 + 2*x1 + 3\nx3' = -3*x1*x2*x3^2 + 3*x1 - 2",
    ] {
        let system = parse_system(src)?;
        let search = solve(&system, &SolveOptions::default()).order();
        let extended = DegreeBox::extended(&system);
        let (boxed, _) = brute_force_optimal(&system, &extended, 20_000_000, &cancel)?;
        println!(
            "{:<60} search {}  brute force in 0..={} box {}",
            src.replace('\n', "; "),
            search,
            extended.bounds[0],
            boxed
        );
    }
    Ok(())
}
