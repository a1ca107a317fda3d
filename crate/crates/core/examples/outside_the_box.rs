//! `x1' = x2^4, x2' = x1^2` has a unique optimal quadratization of order 3,
//! and it uses `x1^3`, whose `x1`-degree exceeds every degree in the input.
//! Searching only among monomials bounded by the input degrees misses it.

use monoquad::oracle::{brute_force_optimal, CancelToken, DegreeBox};
use monoquad::{parse_system, render_result, solve, Format, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let system = parse_system("x1' = x2^4\nx2' = x1^2")?;
    let solution = solve(&system, &SolveOptions::default());
    print!("{}", render_result(&solution, Format::Text, false));

    let cancel = CancelToken::new();
    let tight = DegreeBox::tight(&system);
    let (order, _) = brute_force_optimal(&system, &tight, 10_000_000, &cancel)?;
    println!(
        "\nbest inside 0 <= d_i <= D_i, D = {:?}: order {}",
        tight.bounds, order
    );
    Ok(())
}
