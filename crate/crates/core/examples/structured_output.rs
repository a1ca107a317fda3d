//! Parse a system from text and print the JSON document the CLI emits with
//! `--format structured`. Reads stdin when given `-`.

use std::io::Read;

use monoquad::{parse_system, render_result, solve, Format, SolveOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut text = String::from("x' = a*x^3 + y\ny' = -x*y^2");
    if std::env::args().nth(1).as_deref() == Some("-") {
        text.clear();
        std::io::stdin().read_to_string(&mut text)?;
    }
    let system = match parse_system(&text) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("{}", e);
            std::process::exit(1);
        }
    };
    let solution = solve(&system, &SolveOptions::default());
    print!("{}", render_result(&solution, Format::Structured, false));
    Ok(())
}
