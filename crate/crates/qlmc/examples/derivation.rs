//! Hilbert-style derivation checking: a modus ponens chain in QL is
//! accepted, and the same derivation under CL is rejected because CL's
//! rule uses the classical arrow while the lines use Kalmbach's.

use qlmc::logic::{parse_derivation, verify_derivation};

const QL_CHAIN: &str = "\
system QL
hyp 0 p0
hyp 1 p0 ->3 p1
line 1 hyp 0 p0
line 2 hyp 1 p0 ->3 p1
line 3 mp 1 2 p1
";

const A9_INSTANCE: &str = "\
system QL
line 1 axiom A9 (p0 v p1) ==q ~~(p0 v p1)
";

fn main() {
    for (label, text) in [("modus ponens chain", QL_CHAIN), ("A9 instance", A9_INSTANCE)] {
        let d = parse_derivation(text).unwrap();
        match verify_derivation(&d) {
            Ok(conclusion) => println!("{label}: ok, proves {}", conclusion.to_ascii()),
            Err(e) => println!("{label}: rejected - {e}"),
        }
    }

    // The same chain under CL is not a valid derivation: R1 of CL
    // detaches over ->c, not ->3.
    let confused = QL_CHAIN.replace("system QL", "system CL");
    let d = parse_derivation(&confused).unwrap();
    match verify_derivation(&d) {
        Ok(_) => println!("CL reading: unexpectedly accepted"),
        Err(e) => println!("CL reading: rejected - {e}"),
    }
}
