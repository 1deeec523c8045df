//! Acceptance suite: one test per acceptance criterion, each printing a
//! single `ACCEPTANCE <n>: pass/fail` line (plus divergence notes where
//! the computation contradicts a published claim — those are reported,
//! never hidden).
//!
//! Expected values marked by the `oracle` module are recomputed here
//! from an independent transcription of the Hasse diagrams using a
//! different closure algorithm than the library uses.

use qlmc::check::{
    check_horn, classify, cross_validate_oml, eval, oml_equiv2, CheckOptions, CheckResult, Witness,
};
use qlmc::lattice::{
    builtin, find_isomorphism, find_o6_subalgebra, from_subset_family, SubsetFamilySpec,
    BUILTIN_NAMES,
};
use qlmc::logic::{
    parse_derivation, soundness_suite, verify_derivation, LogicError, System,
};
use qlmc::tables::paper_tables;
use qlmc::term::{builtin_condition, parse_term, parse_term_with_vars, Ast, Equation};

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn assignment(w: &Witness) -> Vec<(&str, &str)> {
    w.assignment
        .iter()
        .map(|(k, v)| (k.as_str(), v.as_str()))
        .collect()
}

fn run(lattice: &str, condition: &str) -> CheckResult {
    let lat = builtin(lattice).unwrap();
    let cond = builtin_condition(condition).unwrap();
    check_horn(&lat, &cond, &opts()).unwrap()
}

/// Independent oracle: order, meet, and join recomputed from a fresh
/// transcription of the cover lists by fixpoint reachability (the
/// library uses Floyd-Warshall over a parsed specification instead).
mod oracle {
    pub struct Poset {
        pub labels: Vec<&'static str>,
        pub leq: Vec<Vec<bool>>,
    }

    impl Poset {
        pub fn new(labels: &[&'static str], covers: &[(&'static str, &'static str)]) -> Poset {
            let n = labels.len();
            let idx = |l: &str| labels.iter().position(|&x| x == l).unwrap();
            let mut leq = vec![vec![false; n]; n];
            for (i, row) in leq.iter_mut().enumerate() {
                row[i] = true;
            }
            for (a, b) in covers {
                leq[idx(a)][idx(b)] = true;
            }
            // fixpoint transitive closure
            loop {
                let mut changed = false;
                for a in 0..n {
                    for b in 0..n {
                        if !leq[a][b] {
                            let via = (0..n).any(|c| leq[a][c] && leq[c][b]);
                            if via {
                                leq[a][b] = true;
                                changed = true;
                            }
                        }
                    }
                }
                if !changed {
                    break;
                }
            }
            Poset {
                labels: labels.to_vec(),
                leq,
            }
        }

        pub fn idx(&self, l: &str) -> usize {
            self.labels.iter().position(|&x| x == l).unwrap()
        }

        /// Unique greatest lower bound, by brute-force scan.
        pub fn meet(&self, a: usize, b: usize) -> usize {
            let n = self.labels.len();
            let lower: Vec<usize> = (0..n)
                .filter(|&c| self.leq[c][a] && self.leq[c][b])
                .collect();
            let glb: Vec<usize> = lower
                .iter()
                .copied()
                .filter(|&g| lower.iter().all(|&c| self.leq[c][g]))
                .collect();
            assert_eq!(glb.len(), 1, "not a lattice at ({a},{b})");
            glb[0]
        }

        pub fn join(&self, a: usize, b: usize) -> usize {
            let n = self.labels.len();
            let upper: Vec<usize> = (0..n)
                .filter(|&c| self.leq[a][c] && self.leq[b][c])
                .collect();
            let lub: Vec<usize> = upper
                .iter()
                .copied()
                .filter(|&g| upper.iter().all(|&c| self.leq[g][c]))
                .collect();
            assert_eq!(lub.len(), 1, "not a lattice at ({a},{b})");
            lub[0]
        }
    }

    pub fn o6() -> Poset {
        Poset::new(
            &["0", "x", "y'", "y", "x'", "1"],
            &[("0", "x"), ("0", "y'"), ("x", "y"), ("y'", "x'"), ("y", "1"), ("x'", "1")],
        )
    }

    pub fn o8() -> Poset {
        Poset::new(
            &[
                "0", "w", "v'", "x'", "z", "u'", "s'", "y'", "t", "r", "r'", "t'", "y", "s",
                "u", "z'", "x", "v", "w'", "1",
            ],
            &[
                ("0", "w"), ("0", "v'"), ("0", "x'"),
                ("w", "z"), ("w", "r"), ("v'", "z"), ("v'", "u'"), ("x'", "y'"), ("x'", "s'"),
                ("z", "y"), ("z", "t"), ("u'", "t"), ("u'", "r'"), ("s'", "t'"), ("s'", "r'"),
                ("y'", "z'"),
                ("t", "s"), ("r", "s"), ("r", "u"), ("t'", "z'"), ("t'", "u"), ("r'", "w'"),
                ("y", "x"), ("s", "x"), ("u", "v"), ("z'", "w'"), ("z'", "v"),
                ("x", "1"), ("v", "1"), ("w'", "1"),
            ],
        )
    }
}

#[test]
fn criterion_01_orthomodularity_failures_with_witnesses() {
    // O6 and O7: first witness is (a=x, b=y) with sides x vs y for both
    // the Horn and the equational form of orthomodularity.
    for lattice in ["O6", "O7"] {
        for condition in ["OM_horn", "OM_eq"] {
            let r = run(lattice, condition);
            assert!(!r.pass, "{condition} must fail on {lattice}");
            let w = r.witness.unwrap();
            assert_eq!(assignment(&w), vec![("a", "x"), ("b", "y")], "{lattice} {condition}");
            assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("x", "y"), "{lattice} {condition}");
        }
    }

    // Oracle re-verification on O6: x u (x' n (x u y)) = x and x u y = y,
    // computed from an independent transcription of the Hasse diagram.
    let o6 = oracle::o6();
    let (x, xp, y) = (o6.idx("x"), o6.idx("x'"), o6.idx("y"));
    assert_eq!(o6.join(x, y), y);
    assert_eq!(o6.join(x, o6.meet(xp, o6.join(x, y))), x);

    // O8: the stated counterexample (a=w, b=y) genuinely violates OM_eq
    // (sides z vs y, re-verified by the oracle), but it is NOT the first
    // in lexicographic scan order over the pinned reading-order element
    // list: the first is (a=w, b=r) with sides w vs r.
    let o8 = oracle::o8();
    let (w8, y8, wp) = (o8.idx("w"), o8.idx("y"), o8.idx("w'"));
    assert_eq!(o8.join(w8, y8), y8);
    assert_eq!(o8.labels[o8.join(w8, o8.meet(wp, o8.join(w8, y8)))], "z");
    let (r8, _) = (o8.idx("r"), ());
    assert_eq!(o8.join(w8, r8), r8, "w <= r in O8");
    assert_eq!(o8.labels[o8.join(w8, o8.meet(wp, o8.join(w8, r8)))], "w");

    for condition in ["OM_horn", "OM_eq"] {
        let r = run("O8", condition);
        assert!(!r.pass);
        let w = r.witness.unwrap();
        assert_eq!(assignment(&w), vec![("a", "w"), ("b", "r")], "O8 {condition}");
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("w", "r"));
    }
    let t = paper_tables(&opts()).unwrap();
    let stated_o8 = t
        .stated_witnesses
        .iter()
        .find(|s| s.lattice == "O8")
        .unwrap();
    assert!(stated_o8.violates);
    assert_eq!((stated_o8.lhs.as_str(), stated_o8.rhs.as_str()), ("z", "y"));
    assert!(!stated_o8.stated_is_first);

    eprintln!(
        "ACCEPTANCE 1: pass - OM_horn/OM_eq fail with first witness (x,y) on O6 and O7; \
         DIVERGENCE on O8: stated (w,y) violates OM_eq (sides z vs y) but the first \
         lexicographic witness is (w,r) with sides w vs r, and (w,y) does not even \
         satisfy the OM_horn premise"
    );
}

#[test]
fn criterion_02_om_unit_holds_in_every_ol() {
    for lattice in ["O6", "O7", "O8", "MO2", "B2", "B4", "B8", "B16"] {
        let r = run(lattice, "OM_unit");
        assert!(r.pass, "OM_unit on {lattice}");
        let lat = builtin(lattice).unwrap();
        assert_eq!(r.scanned, (lat.len() as u64).pow(2), "exhaustive on {lattice}");
    }
    eprintln!("ACCEPTANCE 2: pass - OM_unit exhaustively valid on all eight builtins");
}

#[test]
fn criterion_03_weak_orthomodularity_passes_o6_o7_o8() {
    for lattice in ["O6", "O7", "O8"] {
        for condition in ["WOM_horn1", "WOM_horn2"] {
            assert!(run(lattice, condition).pass, "{condition} on {lattice}");
        }
    }
    eprintln!("ACCEPTANCE 3: pass - WOM_horn1 and WOM_horn2 pass O6, O7, O8");
}

#[test]
fn criterion_04_soundness_suites() {
    let o = opts();
    for name in ["O6", "O7", "O8", "MO2", "B8"] {
        let lat = builtin(name).unwrap();
        let rep = soundness_suite(System::QL, &lat, &o).unwrap();
        assert!(rep.pass, "QL on {name}");
        assert!(rep.rule.pass, "QL R1 on {name}");
        assert_eq!(rep.axioms.len(), 12);
    }
    for name in ["O6", "B2", "B4", "B8", "B16"] {
        let lat = builtin(name).unwrap();
        let rep = soundness_suite(System::CL, &lat, &o).unwrap();
        assert!(rep.pass, "CL on {name}");
        assert!(rep.rule.pass, "CL R1 on {name}");
        assert_eq!(rep.axioms.len(), 4);
    }
    eprintln!(
        "ACCEPTANCE 4: pass - every QL schema valid and R1(->3) preserved on O6/O7/O8/MO2/B8; \
         every CL schema valid and R1(->c) preserved on O6/B2..B16 \
         (note: the printed QL list A2-A10, A12-A14 has 12 schemata, not 13)"
    );
}

#[test]
fn criterion_05_o6_classification() {
    assert!(run("O6", "COMM").pass, "COMM on O6");

    let r = run("O6", "DIST_eq");
    assert!(!r.pass);
    let w = r.witness.unwrap();
    // first witness in scan order
    assert_eq!(assignment(&w), vec![("a", "y"), ("b", "x"), ("c", "y'")]);
    assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("y", "x"));

    // the recorded witness (x', x, y') also violates DIST_eq with sides
    // x' vs y' - oracle: x' n (x u y') = x' n 1 = x', (x' n x) u (x' n y') = 0 u y' = y'
    let o6 = oracle::o6();
    let (x, xp, yp, one, zero) = (
        o6.idx("x"),
        o6.idx("x'"),
        o6.idx("y'"),
        o6.idx("1"),
        o6.idx("0"),
    );
    assert_eq!(o6.join(x, yp), one);
    assert_eq!(o6.meet(xp, one), xp);
    assert_eq!(o6.meet(xp, x), zero);
    assert_eq!(o6.join(zero, o6.meet(xp, yp)), yp);
    let lat = builtin("O6").unwrap();
    let cond = builtin_condition("DIST_eq").unwrap();
    let v = vec![
        lat.index_of("x'").unwrap(),
        lat.index_of("x").unwrap(),
        lat.index_of("y'").unwrap(),
    ];
    let lhs = eval(&cond.conclusion.lhs, &lat, &v);
    let rhs = eval(&cond.conclusion.rhs, &lat, &v);
    assert_eq!(lat.label(lhs), "x'");
    assert_eq!(lat.label(rhs), "y'");

    let profile = classify(&lat, &opts()).unwrap();
    assert!(profile.wdl && !profile.dl && profile.wdl_star, "O6 is a WDL*");
    eprintln!(
        "ACCEPTANCE 5: pass - COMM passes O6, DIST_eq fails (recorded witness (x',x,y') \
         gives x' vs y', verified; first witness in scan order is (y,x,y') with sides y vs x), \
         WDL* flag set"
    );
}

#[test]
fn criterion_06_hexagon_interpretation() {
    let spec = SubsetFamilySpec {
        name: "hexagon-sets".into(),
        universe: vec!["-1".into(), "0".into(), "1".into()],
        family: vec![
            vec![],
            vec![0],
            vec![2],
            vec![0, 1],
            vec![1, 2],
            vec![0, 1, 2],
        ],
    };
    let sets = from_subset_family(&spec).unwrap();
    assert!(sets.table_invariants_hold());
    let o6 = builtin("O6").unwrap();
    let map = find_isomorphism(&o6, &sets).unwrap();
    let image = |label: &str| sets.label(map[o6.index_of(label).unwrap()]).to_string();
    assert_eq!(image("x"), "{-1}");
    assert_eq!(image("y'"), "{1}");
    assert_eq!(image("y"), "{-1,0}");
    assert_eq!(image("x'"), "{0,1}");
    assert_eq!(image("0"), "{}");
    assert_eq!(image("1"), "{-1,0,1}");
    eprintln!("ACCEPTANCE 6: pass - subset-family hexagon builds and maps onto O6 as stated");
}

#[test]
fn criterion_07_holland_cross_validation() {
    for name in ["O6", "O7", "O8"] {
        let lat = builtin(name).unwrap();
        let w = find_o6_subalgebra(&lat).unwrap_or_else(|| panic!("no hexagon in {name}"));
        assert!(w.verify(&lat), "{name}");
    }
    let o7 = builtin("O7").unwrap();
    let w = find_o6_subalgebra(&o7).unwrap();
    let labels: Vec<&str> = w.elements.iter().map(|&i| o7.label(i)).collect();
    assert_eq!(labels, vec!["0", "x", "y", "y'", "x'", "1"]);

    for name in ["B2", "B4", "B8", "B16", "MO2"] {
        assert!(find_o6_subalgebra(&builtin(name).unwrap()).is_none(), "{name}");
    }
    for name in BUILTIN_NAMES {
        let lat = builtin(name).unwrap();
        assert!(cross_validate_oml(&lat, &opts()).unwrap().agree, "{name}");
    }
    eprintln!(
        "ACCEPTANCE 7: pass - hexagon subalgebra found exactly on O6/O7/O8 \
         (O7: {{0,x,y,y',x',1}}), agreeing with OM_horn on all eight builtins"
    );
}

#[test]
fn criterion_08_oml_equiv2() {
    let unit = |text: &str| {
        let t = parse_term(text).unwrap();
        let eq = Equation {
            lhs: t.ast.clone(),
            rhs: Ast::One,
        };
        oml_equiv2(&t.vars, &eq).unwrap()
    };
    assert!(unit("((a ->1 b) ==q (b ->1 a)) ==q (a ==q b)").holds);
    assert!(unit("((a ==q b)' ->1 a') ==q (a ->1 b)").holds);

    for i in 1..=5 {
        let lhs = parse_term("a ==q b").unwrap();
        let rhs = parse_term_with_vars(
            &format!("(a ->{i} b) ^ (b ->{i} a)"),
            &lhs.vars,
        )
        .unwrap();
        let r = oml_equiv2(
            &lhs.vars,
            &Equation {
                lhs: lhs.ast.clone(),
                rhs,
            },
        )
        .unwrap();
        assert!(r.holds, "EQUIV_DECOMP_{i} in OML");
    }

    let l = parse_term("a v b").unwrap();
    let r = parse_term_with_vars("a ^ b", &l.vars).unwrap();
    let out = oml_equiv2(&l.vars, &Equation { lhs: l.ast, rhs: r }).unwrap();
    assert!(!out.holds);
    let (lattice, w) = out.counterexample.unwrap();
    assert_eq!(lattice, "B2");
    assert_eq!(assignment(&w), vec![("a", "0"), ("b", "1")]);
    eprintln!(
        "ACCEPTANCE 8: pass - both key 2-variable identities and EQUIV_DECOMP_1..5 hold in OML; \
         negative control refuted on B2 at (a=0, b=1)"
    );
}

#[test]
fn criterion_09_impl_leq_conditions() {
    for i in 0..=5 {
        let name = format!("IMPL_LEQ_{i}");
        let r = run("O6", &name);
        assert!(!r.pass, "{name} on O6");
        let w = r.witness.unwrap();
        assert_eq!(assignment(&w), vec![("a", "y"), ("b", "x")], "{name}");
        assert_eq!((w.lhs.as_str(), w.rhs.as_str()), ("x", "y"), "{name}");
        for lattice in ["B2", "B4", "B8", "B16"] {
            assert!(run(lattice, &name).pass, "{name} on {lattice}");
        }
    }
    // MO2 is an OML but not a DL: the i=1..5 conditions characterize
    // OMLs and pass, while i=0 characterizes DLs and fails.
    for i in 1..=5 {
        assert!(run("MO2", &format!("IMPL_LEQ_{i}")).pass, "IMPL_LEQ_{i} on MO2");
    }
    let r0 = run("MO2", "IMPL_LEQ_0");
    assert!(!r0.pass);
    assert_eq!(assignment(&r0.witness.unwrap()), vec![("a", "a"), ("b", "b")]);
    eprintln!(
        "ACCEPTANCE 9: pass - IMPL_LEQ_0..5 all fail O6 at (a=y, b=x) and pass every \
         B-lattice; DIVERGENCE on MO2: IMPL_LEQ_1..5 pass but IMPL_LEQ_0 fails at (a,b), \
         as the characterization theorems require since MO2 is orthomodular but not \
         distributive"
    );
}

#[test]
fn criterion_10_published_table_reproduction() {
    let t = paper_tables(&opts()).unwrap();

    // Pinned regression fixtures for every computed cell (O6, O7, O8).
    let expect: &[(&str, &str, [bool; 3])] = &[
        ("WOM_horn1", "q", [true, true, true]),
        ("WOM_horn1", "c", [true, true, true]),
        ("WOM_horn1", "horn", [true, true, true]),
        ("WOML1_id", "q", [true, true, false]),
        ("WOML1_id", "c", [true, true, false]),
        ("WOML1_id", "horn", [true, true, true]),
        ("WOML2_id", "q", [true, false, false]),
        ("WOML2_id", "c", [true, false, false]),
        ("WOML2_id", "horn", [true, true, true]),
        ("OM_horn", "q", [false, false, false]),
        ("OM_horn", "c", [false, false, false]),
        ("OM_horn", "horn", [true, true, true]),
    ];
    for (cond, reading, want) in expect {
        let row = t.rows.iter().find(|r| r.condition == *cond).unwrap();
        let rr = row.readings.iter().find(|r| r.reading == *reading).unwrap();
        let got: Vec<bool> = rr.results.iter().map(|r| r.pass).collect();
        assert_eq!(got, want.to_vec(), "{cond} ({reading})");
    }

    // Subalgebra-closure meta-check: O6 embeds in both O7 and O8 (the
    // hexagon search finds it), so a premise-free identity passing the
    // larger lattice must pass O6.
    for row in &t.rows {
        let identity = builtin_condition(&row.condition)
            .map(|c| c.is_identity())
            .unwrap_or(false);
        for rr in &row.readings {
            if identity || rr.reading == "horn" {
                let (o6, o7, o8) = (rr.results[0].pass, rr.results[1].pass, rr.results[2].pass);
                assert!(!o7 || o6, "{} ({}) passes O7 but fails its O6 subalgebra", row.condition, rr.reading);
                assert!(!o8 || o6, "{} ({}) passes O8 but fails its O6 subalgebra", row.condition, rr.reading);
            }
        }
    }

    // The published identity rows (WOML1_id fail/pass/pass and WOML2_id
    // fail/fail/pass) are reproduced by no reading - which the closure
    // argument above shows is unavoidable - and the report says so.
    assert!(t.divergent);
    for cond in ["WOML1_id", "WOML2_id"] {
        let row = t.rows.iter().find(|r| r.condition == cond).unwrap();
        assert!(row.readings.iter().all(|r| !r.matches_claim), "{cond}");
    }
    for c in &t.cross_validation {
        assert!(c.agree, "{}", c.lattice);
    }
    eprintln!(
        "ACCEPTANCE 10: pass - computed matrix pinned; subalgebra-closure meta-check holds; \
         DIVERGENCE (reported, expected): no reading reproduces the published \
         WOML1_id/WOML2_id rows, which would contradict subalgebra closure since O6 \
         embeds in O7 and O8"
    );
}

#[test]
fn criterion_11_round_trip_corpus() {
    use qlmc::term::{parse_wff, Namespace};

    // Deterministic corpus: 200 wffs covering all ten derived and
    // primitive connectives, generated by a counter-driven builder.
    fn build(seed: &mut u64, depth: u32) -> String {
        let next = |s: &mut u64| {
            *s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            (*s >> 33) as usize
        };
        if depth == 0 {
            return format!("p{}", next(seed) % 2);
        }
        match next(seed) % 10 {
            0 => format!("~{}", build(seed, depth - 1)),
            1 => format!("({} v {})", build(seed, depth - 1), build(seed, depth - 1)),
            2 => format!("({} ^ {})", build(seed, depth - 1), build(seed, depth - 1)),
            3 => format!("({} ->c {})", build(seed, depth - 1), build(seed, depth - 1)),
            4 => format!("({} ->1 {})", build(seed, depth - 1), build(seed, depth - 1)),
            5 => format!("({} ->2 {})", build(seed, depth - 1), build(seed, depth - 1)),
            6 => format!("({} ->3 {})", build(seed, depth - 1), build(seed, depth - 1)),
            7 => format!("({} ->4 {})", build(seed, depth - 1), build(seed, depth - 1)),
            8 => format!("({} ->5 {})", build(seed, depth - 1), build(seed, depth - 1)),
            _ => format!("({} ==q {})", build(seed, depth - 1), build(seed, depth - 1)),
        }
    }

    let o6 = builtin("O6").unwrap();
    let mut seed = 0xfeed_beefu64;
    for case in 0..200 {
        let text = if case % 10 == 9 {
            // keep ==c in the mix too
            format!("({} ==c p0)", build(&mut seed, 2))
        } else {
            build(&mut seed, 3)
        };
        let w = parse_wff(&text).unwrap();
        // print/parse round trip on the canonical form
        let canonical = w.to_ascii();
        assert_eq!(parse_wff(&canonical).unwrap(), w, "case {case}: {text}");
        // expand is idempotent
        let e = w.ast().expand(Namespace::Wff);
        assert_eq!(e.expand(Namespace::Wff), e, "case {case}");
        // eval respects expansion, exhaustively over O6 (2 variables)
        assert!(w.ast().var_count() <= 2);
        for a in 0..o6.len() {
            for b in 0..o6.len() {
                let v = vec![a, b];
                assert_eq!(eval(w.ast(), &o6, &v), eval(&e, &o6, &v), "case {case}");
            }
        }
    }
    eprintln!(
        "ACCEPTANCE 11: pass - 200-wff corpus round-trips; expansion idempotent; \
         eval agrees with expansion exhaustively on O6"
    );
}

#[test]
fn criterion_12_derivation_verifier() {
    let hypothesis = "system QL\nhyp 0 p0\nline 1 hyp 0 p0\n";
    let axiom = "system QL\nline 1 axiom A9 p0 ==q ~~p0\n";
    let chain = "\
system QL
hyp 0 p0
hyp 1 p0 ->3 p1
line 1 hyp 0 p0
line 2 hyp 1 p0 ->3 p1
line 3 mp 1 2 p1
";
    for (label, text) in [("hypothesis", hypothesis), ("axiom", axiom), ("chain", chain)] {
        let d = parse_derivation(text).unwrap();
        assert!(verify_derivation(&d).is_ok(), "{label}");
    }

    // wrong axiom name
    let bad = axiom.replace("A9", "A11");
    assert!(matches!(
        verify_derivation(&parse_derivation(&bad).unwrap()),
        Err(LogicError::UnknownAxiom { line: 1, .. })
    ));
    // not an instance of the named schema
    let bad = axiom.replace("~~p0", "~p0");
    assert!(matches!(
        verify_derivation(&parse_derivation(&bad).unwrap()),
        Err(LogicError::NotAnAxiomInstance { line: 1, .. })
    ));
    // swapped modus ponens operands
    let bad = chain.replace("mp 1 2", "mp 2 1");
    assert!(matches!(
        verify_derivation(&parse_derivation(&bad).unwrap()),
        Err(LogicError::BadMP { line: 3, .. })
    ));
    // CL/QL rule confusion
    let bad = chain.replace("system QL", "system CL");
    assert!(matches!(
        verify_derivation(&parse_derivation(&bad).unwrap()),
        Err(LogicError::BadMP { line: 3, .. })
    ));
    // dangling hypothesis index
    let bad = hypothesis.replace("line 1 hyp 0", "line 1 hyp 1");
    assert!(matches!(
        verify_derivation(&parse_derivation(&bad).unwrap()),
        Err(LogicError::BadHypothesisIndex { line: 1, index: 1 })
    ));

    // accepted derivations are semantically sound on QL model lattices
    let d = parse_derivation(chain).unwrap();
    let conclusion = verify_derivation(&d).unwrap();
    for name in ["O6", "O7", "O8", "MO2", "B8"] {
        let lat = builtin(name).unwrap();
        assert!(soundness_suite(System::QL, &lat, &opts()).unwrap().pass);
        let r = qlmc::check::check_consequence(&lat, &d.hypotheses, &conclusion, &opts()).unwrap();
        assert!(r.pass, "{name}");
    }
    eprintln!(
        "ACCEPTANCE 12: pass - example derivations accepted, every corruption rejected \
         with its specified error kind, and accepted derivations are model-sound"
    );
}
