//! Largest number of edges in a pseudograph on `n` vertices with at most `m`
//! loops and no 4-cycle, computed exhaustively and compared with the table
//! used by the pruning rule.

use monoquad::oracle::{exhaustive_c4_row, CancelToken};
use monoquad::pruning::c4_capacity;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cancel = CancelToken::new();
    for n in 1..=6 {
        let row = exhaustive_c4_row(n, &cancel)?;
        let table: Vec<usize> = (0..=n).map(|m| c4_capacity(n, m)).collect();
        println!("n = {}: {:?}{}", n, row, if row == table { "" } else { "  (table differs)" });
    }
    for n in [8, 12, 20] {
        println!("n = {}: bound {} with no loops", n, c4_capacity(n, 0));
    }
    Ok(())
}
