//! The hexagon O6 is the canonical non-orthomodular ortholattice: the
//! quantum-equivalence premise `a ==q b = 1` can hold with `a != b`.
//! This example finds the counterexample and shows the equational form
//! of orthomodularity failing at the same valuation.

use qlmc::check::{check_horn, CheckOptions};
use qlmc::lattice::{builtin, find_o6_subalgebra};
use qlmc::term::builtin_condition;

fn main() {
    let o6 = builtin("O6").unwrap();
    let opts = CheckOptions::default();

    for name in ["OM_horn", "OM_eq", "OM_unit"] {
        let cond = builtin_condition(name).unwrap();
        let r = check_horn(&o6, &cond, &opts).unwrap();
        match &r.witness {
            None => println!("{name}: holds on O6 (all {} valuations)", r.scanned),
            Some(w) => {
                let assign: Vec<String> = w
                    .assignment
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect();
                println!(
                    "{name}: fails on O6 at ({}) - sides evaluate to {} vs {}",
                    assign.join(", "),
                    w.lhs,
                    w.rhs
                );
            }
        }
    }

    // Holland's criterion: an ortholattice is orthomodular exactly when
    // it has no hexagon subalgebra. O6 is its own witness.
    let hexagon = find_o6_subalgebra(&o6).unwrap();
    let labels: Vec<&str> = hexagon.elements.iter().map(|&i| o6.label(i)).collect();
    println!("hexagon subalgebra: {{{}}}", labels.join(", "));
}
