//! Desk-scale soundness: every axiom schema of each system, with its
//! metavariables instantiated by distinct fresh variables, must be
//! valid in a model lattice, and the modus ponens rule must preserve
//! validity. QL is sound on every weakly orthomodular lattice, CL on
//! every weakly distributive one; both families include O6.

use qlmc::check::CheckOptions;
use qlmc::lattice::builtin;
use qlmc::logic::{soundness_suite, System};

fn main() {
    let opts = CheckOptions::default();
    for (system, lattices) in [
        (System::QL, vec!["O6", "O7", "O8", "MO2", "B8"]),
        (System::CL, vec!["O6", "B2", "B4", "B8", "B16"]),
    ] {
        for name in lattices {
            let lat = builtin(name).unwrap();
            let report = soundness_suite(system, &lat, &opts).unwrap();
            println!(
                "{} on {:<4}: {} ({} axiom schemata valid, rule {})",
                system.tag(),
                name,
                if report.pass { "sound" } else { "NOT SOUND" },
                report.axioms.iter().filter(|(_, r)| r.pass).count(),
                if report.rule.pass { "preserved" } else { "broken" }
            );
        }
    }
}
