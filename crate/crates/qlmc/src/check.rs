//! Exhaustive-valuation checking: identities and Horn conditions over a
//! finite ortholattice, validity and consequence for wffs, variety
//! classification, and a 2-variable orthomodular equivalence oracle.
//!
//! A valuation assigns a lattice element to every variable. Valuations
//! are scanned in lexicographic order with variable 0 as the most
//! significant digit, so the reported witness is deterministic: it is
//! always the first falsifying valuation in that order, whether the scan
//! runs sequentially or in parallel.

use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;
use thiserror::Error;

use crate::lattice::{find_o6_subalgebra, FiniteOrtholattice, O6Subalgebra};
use crate::term::{
    builtin_condition, condition_names, Ast, Equation, EquivKind, HornCondition, ImplKind,
    TermError, Wff,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CheckError {
    #[error("scan needs {needed} valuations, over the budget of {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("oml_equiv2 accepts at most 2 variables, the equation uses {0}")]
    TooManyVariables(usize),
    #[error(transparent)]
    Condition(#[from] TermError),
}

/// One assignment of lattice elements to variables, stored by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Valuation(pub Vec<usize>);

/// Options shared by every scanning operation.
#[derive(Debug, Clone, Copy)]
pub struct CheckOptions {
    /// Maximum number of valuations a single scan may enumerate.
    pub budget: u64,
    /// Worker threads; 1 means a plain sequential scan.
    pub jobs: usize,
}

pub const DEFAULT_BUDGET: u64 = 100_000_000;

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            budget: DEFAULT_BUDGET,
            jobs: 1,
        }
    }
}

/// A falsifying valuation, reported with labels so it reads like the
/// hand-computed counterexamples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    /// Variable name -> element label.
    pub assignment: BTreeMap<String, String>,
    /// Values of the premise left-hand sides at the witness (their
    /// right-hand sides all hold there, by construction).
    pub premises: Vec<String>,
    /// Conclusion side values (lhs, rhs); these differ.
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub pass: bool,
    /// Valuations examined: the witness's 1-based position, or the full
    /// count when the check passes.
    pub scanned: u64,
    pub witness: Option<Witness>,
}

/// Evaluate a tree under a valuation by direct table lookups; derived
/// connectives are computed from their defining equations, so this agrees
/// with evaluating the expansion.
pub fn eval(ast: &Ast, lat: &FiniteOrtholattice, v: &[usize]) -> usize {
    match ast {
        Ast::Var(i) => v[*i],
        Ast::Zero => lat.bottom(),
        Ast::One => lat.top(),
        Ast::Not(a) => lat.ortho(eval(a, lat, v)),
        Ast::Or(a, b) => lat.join(eval(a, lat, v), eval(b, lat, v)),
        Ast::And(a, b) => lat.meet(eval(a, lat, v), eval(b, lat, v)),
        Ast::Imp(k, a, b) => {
            let (a, b) = (eval(a, lat, v), eval(b, lat, v));
            imp_val(lat, *k, a, b)
        }
        Ast::Equiv(k, a, b) => {
            let (a, b) = (eval(a, lat, v), eval(b, lat, v));
            match k {
                // (a ^ b) v (a' ^ b')
                EquivKind::Q => lat.join(lat.meet(a, b), lat.meet(lat.ortho(a), lat.ortho(b))),
                // (a' v b) ^ (b' v a)
                EquivKind::C => lat.meet(
                    lat.join(lat.ortho(a), b),
                    lat.join(lat.ortho(b), a),
                ),
            }
        }
    }
}

fn imp_val(lat: &FiniteOrtholattice, k: ImplKind, a: usize, b: usize) -> usize {
    let n = |x: usize| lat.ortho(x);
    match k {
        ImplKind::I0 => lat.join(n(a), b),
        ImplKind::I1 => lat.join(n(a), lat.meet(a, b)),
        ImplKind::I2 => imp_val(lat, ImplKind::I1, n(b), n(a)),
        ImplKind::I3 => lat.join(
            lat.join(lat.meet(n(a), n(b)), lat.meet(n(a), b)),
            lat.meet(a, lat.join(n(a), b)),
        ),
        ImplKind::I4 => imp_val(lat, ImplKind::I3, n(b), n(a)),
        ImplKind::I5 => lat.join(
            lat.join(lat.meet(a, b), lat.meet(n(a), b)),
            lat.meet(n(a), n(b)),
        ),
    }
}

/// Decode scan position `idx` into a valuation over `k` variables;
/// variable 0 is the most significant digit.
fn decode(idx: u64, k: usize, n: usize) -> Vec<usize> {
    let mut v = vec![0usize; k];
    let mut rest = idx;
    for slot in v.iter_mut().rev() {
        *slot = (rest % n as u64) as usize;
        rest /= n as u64;
    }
    v
}

fn scan_budget(k: usize, n: usize, budget: u64) -> Result<u64, CheckError> {
    let needed = (n as u128).pow(k as u32);
    if needed > budget as u128 {
        return Err(CheckError::BudgetExceeded { needed, budget });
    }
    Ok(needed as u64)
}

/// Check a Horn condition by exhaustive scan. An identity is the
/// premise-free case. Returns the first falsifying valuation, if any.
pub fn check_horn(
    lat: &FiniteOrtholattice,
    cond: &HornCondition,
    opts: &CheckOptions,
) -> Result<CheckResult, CheckError> {
    let k = cond.vars.len();
    let n = lat.len();
    let total = scan_budget(k, n, opts.budget)?;

    let falsifies = |idx: u64| -> bool {
        let v = decode(idx, k, n);
        for p in &cond.premises {
            if eval(&p.lhs, lat, &v) != eval(&p.rhs, lat, &v) {
                return false;
            }
        }
        eval(&cond.conclusion.lhs, lat, &v) != eval(&cond.conclusion.rhs, lat, &v)
    };

    let found = if opts.jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.jobs)
            .build()
            .expect("thread pool");
        pool.install(|| (0..total).into_par_iter().find_first(|&i| falsifies(i)))
    } else {
        (0..total).find(|&i| falsifies(i))
    };

    Ok(match found {
        None => CheckResult {
            pass: true,
            scanned: total,
            witness: None,
        },
        Some(idx) => {
            let v = decode(idx, k, n);
            CheckResult {
                pass: false,
                scanned: idx + 1,
                witness: Some(witness_at(lat, cond, &v)),
            }
        }
    })
}

fn witness_at(lat: &FiniteOrtholattice, cond: &HornCondition, v: &[usize]) -> Witness {
    let label = |e: usize| lat.label(e).to_string();
    Witness {
        assignment: cond
            .vars
            .iter()
            .zip(v)
            .map(|(name, &e)| (name.clone(), label(e)))
            .collect(),
        premises: cond
            .premises
            .iter()
            .map(|p| label(eval(&p.lhs, lat, v)))
            .collect(),
        lhs: label(eval(&cond.conclusion.lhs, lat, v)),
        rhs: label(eval(&cond.conclusion.rhs, lat, v)),
    }
}

/// Check a premise-free identity `lhs = rhs` over named variables.
pub fn check_identity(
    lat: &FiniteOrtholattice,
    name: &str,
    vars: &[String],
    eq: &Equation,
    opts: &CheckOptions,
) -> Result<CheckResult, CheckError> {
    check_horn(
        lat,
        &HornCondition {
            name: name.to_string(),
            vars: vars.to_vec(),
            premises: Vec::new(),
            conclusion: eq.clone(),
        },
        opts,
    )
}

fn wff_condition(name: &str, premises: &[Wff], conclusion: &Wff) -> HornCondition {
    let k = premises
        .iter()
        .chain(std::iter::once(conclusion))
        .map(|w| w.ast().var_count())
        .max()
        .unwrap_or(0);
    let unit = |w: &Wff| Equation {
        lhs: w.ast().clone(),
        rhs: Ast::One,
    };
    HornCondition {
        name: name.to_string(),
        vars: (0..k).map(|i| format!("p{i}")).collect(),
        premises: premises.iter().map(&unit).collect(),
        conclusion: unit(conclusion),
    }
}

/// A wff is valid in a lattice when it evaluates to 1 under every
/// valuation of its variables.
pub fn check_validity(
    lat: &FiniteOrtholattice,
    wff: &Wff,
    opts: &CheckOptions,
) -> Result<CheckResult, CheckError> {
    check_horn(lat, &wff_condition("valid", &[], wff), opts)
}

/// Semantic consequence: under every valuation making all premises 1,
/// the conclusion is 1 too.
pub fn check_consequence(
    lat: &FiniteOrtholattice,
    premises: &[Wff],
    conclusion: &Wff,
    opts: &CheckOptions,
) -> Result<CheckResult, CheckError> {
    check_horn(lat, &wff_condition("consequence", premises, conclusion), opts)
}

/// How a named condition is read when checking: as written with the
/// default `==q` equivalence, with every ambiguous `==q` swapped for
/// `==c`, or through the Horn transform `t = s  ~>  t ==q s = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reading {
    Q,
    C,
    Horn,
}

impl Reading {
    pub fn tag(self) -> &'static str {
        match self {
            Reading::Q => "q",
            Reading::C => "c",
            Reading::Horn => "horn",
        }
    }
}

/// Fetch a builtin condition under a reading. The `c` reading uses the
/// `<name>_c` twin when the catalog has one and the unchanged condition
/// otherwise (conditions with no ambiguous `≡` read the same both ways).
pub fn builtin_condition_with_reading(
    name: &str,
    reading: Reading,
) -> Result<HornCondition, TermError> {
    match reading {
        Reading::Q => builtin_condition(name),
        Reading::C => {
            let twin = format!("{name}_c");
            if condition_names().contains(&twin.as_str()) {
                builtin_condition(&twin)
            } else {
                builtin_condition(name)
            }
        }
        Reading::Horn => Ok(builtin_condition(name)?.horn_reading()),
    }
}

/// Which equational/Horn classes a single lattice satisfies.
///
/// The starred flags are the set-difference classes: the weak condition
/// holds while each of the named stronger conditions fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VarietyProfile {
    pub lattice: String,
    pub ol: bool,
    pub woml: bool,
    pub woml1: bool,
    pub woml2: bool,
    pub oml: bool,
    pub wdl: bool,
    pub dl: bool,
    pub woml_star: bool,
    pub woml1_star: bool,
    pub woml2_star: bool,
    pub wdl_star: bool,
    /// For every underlying condition that failed, its first witness.
    pub witnesses: BTreeMap<String, Witness>,
}

/// Evaluate the full catalog of class-defining conditions on a lattice.
pub fn classify(
    lat: &FiniteOrtholattice,
    opts: &CheckOptions,
) -> Result<VarietyProfile, CheckError> {
    let mut witnesses = BTreeMap::new();
    let mut run = |name: &str| -> Result<bool, CheckError> {
        let r = check_horn(lat, &builtin_condition(name)?, opts)?;
        if let Some(w) = r.witness {
            witnesses.insert(name.to_string(), w);
        }
        Ok(r.pass)
    };

    let ol = ["OL1", "OL2", "OL3", "OL4", "OL5", "OL6"]
        .iter()
        .try_fold(true, |acc, n| Ok::<_, CheckError>(acc & run(n)?))?;
    let wom1 = run("WOM_horn1")?;
    let wom2 = run("WOM_horn2")?;
    let woml1_id = run("WOML1_id")?;
    let woml2_id = run("WOML2_id")?;
    let oml = run("OM_horn")?;
    let wdl = run("COMM")?;
    let dl = run("DIST_horn")?;

    let woml = wom1 && wom2;
    let woml1 = woml && woml1_id;
    let woml2 = woml1 && woml2_id;
    Ok(VarietyProfile {
        lattice: lat.name().to_string(),
        ol,
        woml,
        woml1,
        woml2,
        oml,
        wdl,
        dl,
        woml_star: woml && !oml && !woml2_id && !woml1_id,
        woml1_star: woml1 && !oml && !woml2_id,
        woml2_star: woml2 && !oml,
        wdl_star: wdl && !dl,
        witnesses,
    })
}

/// Result of deciding a 2-variable equation against all orthomodular
/// lattices at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmlEquiv2 {
    pub holds: bool,
    /// On failure: the refuting lattice and valuation.
    pub counterexample: Option<(String, Witness)>,
}

/// Decide whether `lhs = rhs` holds in every orthomodular lattice, for
/// equations in at most two variables.
///
/// The free orthomodular lattice on two generators embeds into a direct
/// product of Boolean blocks and MO2, so a 2-variable equation holds in
/// every OML exactly when it survives an exhaustive check over B2 and
/// MO2 jointly. Guarded by self-tests on known OML identities.
pub fn oml_equiv2(vars: &[String], eq: &Equation) -> Result<OmlEquiv2, CheckError> {
    let used = eq.lhs.var_count().max(eq.rhs.var_count());
    if used > 2 || vars.len() > 2 {
        return Err(CheckError::TooManyVariables(used.max(vars.len())));
    }
    let opts = CheckOptions::default();
    for name in ["B2", "MO2"] {
        let lat = crate::lattice::builtin(name).expect("builtin");
        let r = check_identity(&lat, "oml_equiv2", vars, eq, &opts)?;
        if let Some(w) = r.witness {
            return Ok(OmlEquiv2 {
                holds: false,
                counterexample: Some((name.to_string(), w)),
            });
        }
    }
    Ok(OmlEquiv2 {
        holds: true,
        counterexample: None,
    })
}

/// Cross-validation of the two orthomodularity tests on one lattice:
/// the Horn-condition scan and the hexagon-subalgebra search must agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmlCrossValidation {
    pub om_horn: CheckResult,
    pub hexagon: Option<O6Subalgebra>,
    pub agree: bool,
}

pub fn cross_validate_oml(
    lat: &FiniteOrtholattice,
    opts: &CheckOptions,
) -> Result<OmlCrossValidation, CheckError> {
    let om_horn = check_horn(lat, &builtin_condition("OM_horn")?, opts)?;
    let hexagon = find_o6_subalgebra(lat);
    let agree = om_horn.pass == hexagon.is_none();
    Ok(OmlCrossValidation {
        om_horn,
        hexagon,
        agree,
    })
}

/// JSON report for one check, with a fixed field order.
#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub lattice: String,
    pub condition: String,
    pub reading: String,
    pub status: String,
    pub scanned: u64,
    pub witness: Option<BTreeMap<String, String>>,
    pub values: Option<ReportValues>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportValues {
    pub premises: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Report {
    pub fn new(
        lattice: &str,
        condition: &str,
        reading: Reading,
        result: &CheckResult,
    ) -> Report {
        Report {
            lattice: lattice.to_string(),
            condition: condition.to_string(),
            reading: reading.tag().to_string(),
            status: if result.pass { "pass" } else { "fail" }.to_string(),
            scanned: result.scanned,
            witness: result.witness.as_ref().map(|w| w.assignment.clone()),
            values: result.witness.as_ref().map(|w| ReportValues {
                premises: w.premises.clone(),
                lhs: w.lhs.clone(),
                rhs: w.rhs.clone(),
            }),
        }
    }
}
