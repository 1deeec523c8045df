//! Defining a lattice in the text format, building it with full
//! invariant verification, and checking conditions on it. The example
//! uses MO2 (the 2-atom modular ortholattice): orthomodular, but not
//! commensurable, so distributivity fails.

use qlmc::check::{check_horn, CheckOptions};
use qlmc::lattice::{build_from_hasse, parse_lattice};
use qlmc::term::{builtin_condition, parse_condition};

const MO2_TEXT: &str = "\
# two incomparable atom pairs under a common top
lattice MO2-custom
elements 0 a a' b b' 1
covers 0 a ; 0 a' ; 0 b ; 0 b' ; a 1 ; a' 1 ; b 1 ; b' 1
ortho 0 1 ; a a' ; b b'
";

const CUSTOM_CONDITION: &str = "\
# modularity restricted to comparable first arguments
condition modular_law
vars a b c
premise a ^ c = a
conclude a v b ^ c = (a v b) ^ c
";

fn main() {
    let spec = parse_lattice(MO2_TEXT).unwrap();
    let lat = build_from_hasse(&spec).unwrap();
    println!(
        "built `{}`: {} elements, invariants hold: {}",
        lat.name(),
        lat.len(),
        lat.table_invariants_hold()
    );

    let opts = CheckOptions::default();
    for name in ["OM_horn", "COMM", "DIST_eq"] {
        let cond = builtin_condition(name).unwrap();
        let r = check_horn(&lat, &cond, &opts).unwrap();
        println!("  {name}: {}", if r.pass { "pass" } else { "fail" });
    }

    // conditions can come from files too
    let modular = parse_condition(CUSTOM_CONDITION).unwrap();
    let r = check_horn(&lat, &modular, &opts).unwrap();
    println!("  {}: {}", modular.name, if r.pass { "pass" } else { "fail" });
}
