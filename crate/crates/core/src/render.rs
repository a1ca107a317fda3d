//! Text and JSON output for solutions.
//!
//! The JSON document has a fixed key order and no floating point values, so
//! two runs on the same input produce byte-identical output.

use serde::Serialize;

use crate::solver::{SearchStats, Solution};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NewVariable {
    pub name: String,
    pub exponents: Vec<i32>,
    pub monomial: String,
}

/// `coefficient * factors[0] * factors[1]`, with `"1"` for a unit factor.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Term {
    pub coefficient: String,
    pub factors: [String; 2],
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Equation {
    pub lhs: String,
    pub rhs: String,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResultDocument {
    pub variables: Vec<String>,
    pub parameters: Vec<String>,
    pub laurent: bool,
    pub optimal: bool,
    pub order: usize,
    pub new_variables: Vec<NewVariable>,
    pub quadratic_system: Vec<Equation>,
    pub stats: SearchStats,
}

impl ResultDocument {
    pub fn from_solution(solution: &Solution) -> Self {
        let q = &solution.quadratic;
        let factor_name = |f: Option<usize>| match f {
            Some(i) => q.generalized[i].name.clone(),
            None => "1".to_string(),
        };
        ResultDocument {
            variables: q.variables.clone(),
            parameters: q.parameters.clone(),
            laurent: solution.laurent,
            optimal: solution.optimal,
            order: solution.order(),
            new_variables: q
                .new_variables()
                .iter()
                .map(|g| NewVariable {
                    name: g.name.clone(),
                    exponents: g.monomial.exponents().to_vec(),
                    monomial: g.monomial.format(&q.variables),
                })
                .collect(),
            quadratic_system: q
                .equations
                .iter()
                .map(|eq| Equation {
                    lhs: q.generalized[eq.lhs].name.clone(),
                    rhs: q.format_rhs(eq),
                    terms: eq
                        .terms
                        .iter()
                        .map(|t| Term {
                            coefficient: t.coefficient.format(&q.parameters),
                            factors: [factor_name(t.left), factor_name(t.right)],
                        })
                        .collect(),
                })
                .collect(),
            stats: solution.stats.clone(),
        }
    }

    /// Human-readable equations, optionally followed by the search statistics.
    pub fn to_text(&self, with_stats: bool) -> String {
        let mut out = String::new();
        let kind = if self.laurent { "Laurent monomial" } else { "monomial" };
        let quality = if self.laurent {
            ""
        } else if self.optimal {
            ", optimal"
        } else {
            ", optimality not certified"
        };
        out.push_str(&format!(
            "# {} quadratization of order {}{}\n",
            kind, self.order, quality
        ));
        for v in &self.new_variables {
            out.push_str(&format!("{} = {}\n", v.name, v.monomial));
        }
        out.push('\n');
        for eq in &self.quadratic_system {
            out.push_str(&format!("{}' = {}\n", eq.lhs, eq.rhs));
        }
        if with_stats {
            let s = &self.stats;
            out.push_str(&format!(
                "\n# nodes visited: {}\n# pruned (quadratic bound): {}\n# pruned (C4 bound): {}\n# pruned (order): {}\n# incumbent updates: {}\n",
                s.nodes_visited, s.pruned_by_quadratic, s.pruned_by_c4, s.pruned_by_order, s.incumbent_updates
            ));
        }
        out
    }

    pub fn to_structured(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Renders a solution in the requested format.
pub fn render_result(solution: &Solution, format: Format, with_stats: bool) -> String {
    let doc = ResultDocument::from_solution(solution);
    match format {
        Format::Text => doc.to_text(with_stats),
        Format::Structured => doc.to_structured(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_system;
    use crate::solver::{bnb_search, SolveOptions};

    #[test]
    fn scalar_power_text() {
        let sys = parse_system("x' = x^5").unwrap();
        let text = render_result(&bnb_search(&sys, &SolveOptions::default()), Format::Text, false);
        assert!(text.contains("z1 = x^4\n"));
        assert!(text.contains("x' = x*z1\n"));
        assert!(text.contains("z1' = 4*z1^2\n"));
        assert!(!text.contains("nodes visited"));
    }

    #[test]
    fn quadratic_input_structured() {
        let sys = parse_system("x' = x*y\ny' = -y").unwrap();
        let doc = ResultDocument::from_solution(&bnb_search(&sys, &SolveOptions::default()));
        assert!(doc.new_variables.is_empty());
        assert_eq!(doc.quadratic_system[0].rhs, "x*y");
        assert_eq!(doc.quadratic_system[1].rhs, "-y");
        assert_eq!(
            doc.quadratic_system[1].terms,
            vec![Term {
                coefficient: "-1".into(),
                factors: ["1".into(), "y".into()]
            }]
        );
        let json: serde_json::Value = serde_json::from_str(&doc.to_structured()).unwrap();
        assert_eq!(json["new_variables"], serde_json::json!([]));
    }

    #[test]
    fn counterexample_lists_new_variables() {
        let sys = parse_system("x1' = x2^4\nx2' = x1^2").unwrap();
        let doc = ResultDocument::from_solution(&bnb_search(&sys, &SolveOptions::default()));
        let mut monomials: Vec<_> = doc.new_variables.iter().map(|v| v.monomial.clone()).collect();
        monomials.sort();
        assert_eq!(monomials, ["x1*x2^2", "x1^3", "x2^3"]);
    }

    #[test]
    fn structured_key_order_is_fixed() {
        let sys = parse_system("x' = x^5").unwrap();
        let out = render_result(&bnb_search(&sys, &SolveOptions::default()), Format::Structured, false);
        let keys = [
            "\"variables\"",
            "\"parameters\"",
            "\"laurent\"",
            "\"optimal\"",
            "\"order\"",
            "\"new_variables\"",
            "\"quadratic_system\"",
            "\"stats\"",
        ];
        let positions: Vec<usize> = keys.iter().map(|k| out.find(k).unwrap()).collect();
        assert!(positions.windows(2).all(|w| w[0] < w[1]));
    }
}
