//! Node counts of the search with and without the two pruning rules on the
//! cubic cycle and bicycle families.
//!
//! `cargo run --release --example pruning_rules -- 6` goes up to n = 6.

use monoquad::{benchmark_system, solve, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let max_n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    println!("{:<16}{:>6}{:>10}{:>10}{:>10}{:>10}", "system", "order", "none", "quadratic", "C4", "both");
    for name in ["cubic_cycle", "cubic_bicycle"] {
        for n in 3..=max_n {
            let system = benchmark_system(name, n)?;
            let mut order = 0;
            let mut nodes = Vec::new();
            for (q, c) in [(false, false), (true, false), (false, true), (true, true)] {
                let s = solve(&system, &SolveOptions::with_rules(q, c));
                order = s.order();
                nodes.push(s.stats.nodes_visited);
            }
            println!(
                "{:<16}{:>6}{:>10}{:>10}{:>10}{:>10}",
                format!("{}({})", name, n),
                order,
                nodes[0],
                nodes[1],
                nodes[2],
                nodes[3]
            );
        }
    }
    Ok(())
}
