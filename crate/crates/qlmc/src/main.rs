//! Thin command-line front end over the library. Exit codes: 0 for
//! pass/ok, 1 for a failed check (witness printed), 2 for input or
//! usage errors.

use clap::{Parser, Subcommand};
use std::fs;
use std::process::ExitCode;

use qlmc::check::{
    check_consequence, check_horn, check_validity, classify, CheckOptions, CheckResult, Reading,
    Report, DEFAULT_BUDGET,
};
use qlmc::lattice::{build_from_hasse, builtin, find_isomorphism, parse_lattice, BUILTIN_NAMES};
use qlmc::logic::{parse_derivation, soundness_suite, verify_derivation, System};
use qlmc::tables::{paper_tables, render};
use qlmc::term::{condition_names, parse_condition, parse_wff, HornCondition};

#[derive(Parser)]
#[command(
    name = "qlmc",
    about = "Model checking for finite ortholattices and the logics they model"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build a lattice (builtin name or file) and verify every ortholattice invariant.
    Verify {
        /// Builtin name (O6, O7, O8, B2, B4, B8, B16, MO2) or path to a lattice file.
        #[arg(long)]
        lattice: String,
    },
    /// Check a named or file-defined condition on a lattice.
    Check {
        #[arg(long)]
        lattice: String,
        /// Builtin condition name or path to a condition file.
        #[arg(long)]
        condition: String,
        /// Reading of ambiguous equivalences: q, c, horn, or all.
        #[arg(long, default_value = "q")]
        reading: String,
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Compute the full variety profile of a lattice.
    Classify {
        #[arg(long)]
        lattice: String,
        #[arg(long)]
        json: bool,
    },
    /// Check that a wff is valid (evaluates to 1 everywhere) in a lattice.
    Valid {
        #[arg(long)]
        lattice: String,
        wff: String,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Check semantic consequence: premises all 1 force the conclusion to 1.
    Consequence {
        #[arg(long)]
        lattice: String,
        /// Premise wff; repeatable.
        #[arg(long = "premise")]
        premises: Vec<String>,
        conclusion: String,
    },
    /// Derivation-level commands.
    Proof {
        #[command(subcommand)]
        cmd: ProofCmd,
    },
    /// Run the axiom/rule soundness suite of a system on one or more lattices.
    Soundness {
        /// CL or QL.
        system: String,
        /// Lattices to test (builtin names or files).
        lattices: Vec<String>,
    },
    /// Search for an ortho-isomorphism between two lattices.
    Iso {
        lattice1: String,
        lattice2: String,
    },
    /// Reproduce the published condition table on O6/O7/O8 and report divergences.
    PaperTables {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Subcommand)]
enum ProofCmd {
    /// Verify every line of a derivation file.
    Verify { path: String },
}

fn load_lattice(reference: &str) -> Result<qlmc::lattice::FiniteOrtholattice, String> {
    if BUILTIN_NAMES.contains(&reference) {
        return builtin(reference).map_err(|e| e.to_string());
    }
    let text = fs::read_to_string(reference)
        .map_err(|e| format!("cannot read lattice `{reference}`: {e}"))?;
    let spec = parse_lattice(&text).map_err(|e| e.to_string())?;
    build_from_hasse(&spec).map_err(|e| e.to_string())
}

fn load_condition(reference: &str, reading: Reading) -> Result<HornCondition, String> {
    if condition_names().contains(&reference) {
        return qlmc::check::builtin_condition_with_reading(reference, reading)
            .map_err(|e| e.to_string());
    }
    let text = fs::read_to_string(reference)
        .map_err(|e| format!("cannot read condition `{reference}`: {e}"))?;
    let cond = parse_condition(&text).map_err(|e| e.to_string())?;
    Ok(match reading {
        Reading::Horn => cond.horn_reading(),
        _ => cond,
    })
}

fn print_result(name: &str, lattice: &str, r: &CheckResult) {
    if r.pass {
        println!("{name} on {lattice}: pass ({} valuations)", r.scanned);
    } else {
        let w = r.witness.as_ref().expect("failed check carries a witness");
        let assign: Vec<String> = w
            .assignment
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        println!(
            "{name} on {lattice}: fail at ({}) with sides {} vs {}",
            assign.join(", "),
            w.lhs,
            w.rhs
        );
    }
}

fn run(cli: Cli) -> Result<bool, String> {
    match cli.cmd {
        Cmd::Verify { lattice } => {
            let lat = load_lattice(&lattice)?;
            assert!(lat.table_invariants_hold());
            println!(
                "{}: ok ({} elements, {} covers, bottom {}, top {})",
                lat.name(),
                lat.len(),
                lat.covers().len(),
                lat.label(lat.bottom()),
                lat.label(lat.top())
            );
            Ok(true)
        }
        Cmd::Check {
            lattice,
            condition,
            reading,
            json,
            jobs,
            budget,
        } => {
            let lat = load_lattice(&lattice)?;
            let opts = CheckOptions { budget, jobs };
            let readings: Vec<Reading> = match reading.as_str() {
                "q" => vec![Reading::Q],
                "c" => vec![Reading::C],
                "horn" => vec![Reading::Horn],
                "all" => vec![Reading::Q, Reading::C, Reading::Horn],
                other => return Err(format!("unknown reading `{other}`")),
            };
            let mut all_pass = true;
            for r in readings {
                let cond = load_condition(&condition, r)?;
                let result = check_horn(&lat, &cond, &opts).map_err(|e| e.to_string())?;
                all_pass &= result.pass;
                if json {
                    let report = Report::new(lat.name(), &condition, r, &result);
                    println!(
                        "{}",
                        serde_json::to_string(&report).expect("report serializes")
                    );
                } else {
                    print_result(
                        &format!("{condition} (reading {})", r.tag()),
                        lat.name(),
                        &result,
                    );
                }
            }
            Ok(all_pass)
        }
        Cmd::Classify { lattice, json } => {
            let lat = load_lattice(&lattice)?;
            let profile = classify(&lat, &CheckOptions::default()).map_err(|e| e.to_string())?;
            if json {
                println!(
                    "{}",
                    serde_json::to_string(&profile).expect("profile serializes")
                );
            } else {
                let flag = |b: bool| if b { "yes" } else { "no" };
                println!("{}:", profile.lattice);
                for (name, v) in [
                    ("OL", profile.ol),
                    ("WOML", profile.woml),
                    ("WOML1", profile.woml1),
                    ("WOML2", profile.woml2),
                    ("OML", profile.oml),
                    ("WDL", profile.wdl),
                    ("DL", profile.dl),
                    ("WOML*", profile.woml_star),
                    ("WOML1*", profile.woml1_star),
                    ("WOML2*", profile.woml2_star),
                    ("WDL*", profile.wdl_star),
                ] {
                    println!("  {name:<7} {}", flag(v));
                }
                for (cond, w) in &profile.witnesses {
                    let assign: Vec<String> = w
                        .assignment
                        .iter()
                        .map(|(k, v)| format!("{k}={v}"))
                        .collect();
                    println!(
                        "  witness {cond}: ({}) sides {} vs {}",
                        assign.join(", "),
                        w.lhs,
                        w.rhs
                    );
                }
            }
            Ok(true)
        }
        Cmd::Valid { lattice, wff, jobs } => {
            let lat = load_lattice(&lattice)?;
            let w = parse_wff(&wff).map_err(|e| e.to_string())?;
            let opts = CheckOptions {
                jobs: jobs.max(1),
                ..CheckOptions::default()
            };
            let r = check_validity(&lat, &w, &opts).map_err(|e| e.to_string())?;
            print_result(&format!("valid `{}`", w.to_ascii()), lat.name(), &r);
            Ok(r.pass)
        }
        Cmd::Consequence {
            lattice,
            premises,
            conclusion,
        } => {
            let lat = load_lattice(&lattice)?;
            let prem: Vec<_> = premises
                .iter()
                .map(|p| parse_wff(p).map_err(|e| e.to_string()))
                .collect::<Result<_, _>>()?;
            let conc = parse_wff(&conclusion).map_err(|e| e.to_string())?;
            let r = check_consequence(&lat, &prem, &conc, &CheckOptions::default())
                .map_err(|e| e.to_string())?;
            print_result("consequence", lat.name(), &r);
            Ok(r.pass)
        }
        Cmd::Proof { cmd } => match cmd {
            ProofCmd::Verify { path } => {
                let text = fs::read_to_string(&path)
                    .map_err(|e| format!("cannot read derivation `{path}`: {e}"))?;
                let d = parse_derivation(&text).map_err(|e| e.to_string())?;
                match verify_derivation(&d) {
                    Ok(conclusion) => {
                        println!(
                            "{}: ok, {} hypotheses |- {}",
                            d.system.tag(),
                            d.hypotheses.len(),
                            conclusion.to_ascii()
                        );
                        Ok(true)
                    }
                    Err(e) => {
                        println!("rejected: {e}");
                        Ok(false)
                    }
                }
            }
        },
        Cmd::Soundness { system, lattices } => {
            let system = match system.as_str() {
                "CL" => System::CL,
                "QL" => System::QL,
                other => return Err(format!("unknown system `{other}`")),
            };
            let mut all_pass = true;
            for reference in &lattices {
                let lat = load_lattice(reference)?;
                let report = soundness_suite(system, &lat, &CheckOptions::default())
                    .map_err(|e| e.to_string())?;
                all_pass &= report.pass;
                println!(
                    "{} on {}: {} ({} axioms, rule {})",
                    system.tag(),
                    report.lattice,
                    if report.pass { "sound" } else { "NOT SOUND" },
                    report.axioms.len(),
                    if report.rule.pass { "preserved" } else { "BROKEN" }
                );
                for (name, r) in &report.axioms {
                    if !r.pass {
                        print_result(name, &report.lattice, r);
                    }
                }
            }
            Ok(all_pass)
        }
        Cmd::Iso { lattice1, lattice2 } => {
            let l1 = load_lattice(&lattice1)?;
            let l2 = load_lattice(&lattice2)?;
            match find_isomorphism(&l1, &l2) {
                Some(map) => {
                    println!("{} and {} are ortho-isomorphic:", l1.name(), l2.name());
                    for (a, &b) in map.iter().enumerate() {
                        println!("  {} -> {}", l1.label(a), l2.label(b));
                    }
                    Ok(true)
                }
                None => {
                    println!("{} and {} are not ortho-isomorphic", l1.name(), l2.name());
                    Ok(false)
                }
            }
        }
        Cmd::PaperTables { json } => {
            let t = paper_tables(&CheckOptions::default()).map_err(|e| e.to_string())?;
            if json {
                println!("{}", serde_json::to_string(&t).expect("tables serialize"));
            } else {
                print!("{}", render(&t));
            }
            // Divergence from the published table is a finding, not a failure.
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::from(0),
        Ok(false) => ExitCode::from(1),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
