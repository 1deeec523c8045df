//! Variety profile of every builtin lattice: which of the equational /
//! Horn classes (OL, WOML, WOML1, WOML2, OML, WDL, DL and the starred
//! set-differences) each one satisfies.

use qlmc::check::{classify, CheckOptions};
use qlmc::lattice::{builtin, BUILTIN_NAMES};

fn main() {
    let opts = CheckOptions::default();
    println!(
        "{:<6} {:>3} {:>5} {:>6} {:>6} {:>4} {:>4} {:>3} {:>6} {:>7} {:>7} {:>5}",
        "", "OL", "WOML", "WOML1", "WOML2", "OML", "WDL", "DL", "WOML*", "WOML1*", "WOML2*", "WDL*"
    );
    for name in BUILTIN_NAMES {
        let lat = builtin(name).unwrap();
        let p = classify(&lat, &opts).unwrap();
        let t = |b: bool| if b { "x" } else { "." };
        println!(
            "{:<6} {:>3} {:>5} {:>6} {:>6} {:>4} {:>4} {:>3} {:>6} {:>7} {:>7} {:>5}",
            name,
            t(p.ol),
            t(p.woml),
            t(p.woml1),
            t(p.woml2),
            t(p.oml),
            t(p.wdl),
            t(p.dl),
            t(p.woml_star),
            t(p.woml1_star),
            t(p.woml2_star),
            t(p.wdl_star)
        );
    }
}
