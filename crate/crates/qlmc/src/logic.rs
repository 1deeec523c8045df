//! The two axiomatic systems: CL (A1–A4 + R1 over `->c`) and QL (A2–A14
//! + R1 over `->3`), axiom-schema matching, Hilbert-style derivation
//! verification, and per-lattice soundness suites.
//!
//! Axiom names follow the printed labels: QL numbering starts at A2 and
//! skips A11 (the absent labels are redundant in the source system), so
//! `CL.A1`..`CL.A4` and `QL.A2`..`QL.A14` are disjoint namespaces.

use serde::Serialize;
use thiserror::Error;

use crate::check::{check_consequence, check_validity, CheckError, CheckOptions, CheckResult};
use crate::lattice::FiniteOrtholattice;
use crate::term::{imp, parse_wff, var, Ast, ImplKind, LatticeTerm, TermError, Wff};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum System {
    CL,
    QL,
}

impl System {
    pub fn tag(self) -> &'static str {
        match self {
            System::CL => "CL",
            System::QL => "QL",
        }
    }

    /// The arrow of this system's modus ponens rule R1.
    pub fn rule_arrow(self) -> ImplKind {
        match self {
            System::CL => ImplKind::I0,
            System::QL => ImplKind::I3,
        }
    }
}

/// An axiom schema: a pattern wff whose variables `p0,p1,p2` stand for
/// the metavariables A, B, C.
#[derive(Debug, Clone)]
pub struct AxiomSchema {
    pub name: &'static str,
    pub pattern: Wff,
}

fn schema(name: &'static str, text: &str) -> AxiomSchema {
    AxiomSchema {
        name,
        pattern: parse_wff(text).expect("axiom pattern"),
    }
}

/// The axiom schemata of a system, in printed order.
pub fn axioms(system: System) -> Vec<AxiomSchema> {
    match system {
        System::CL => vec![
            schema("CL.A1", "p0 v p0 ->c p0"),
            schema("CL.A2", "p0 ->c p1 v p0"),
            schema("CL.A3", "p1 v p0 ->c p0 v p1"),
            schema("CL.A4", "(p0 ->c p1) ->c (p2 v p0 ->c p2 v p1)"),
        ],
        System::QL => vec![
            schema("QL.A2", "p0 ==q p1 ->c (p1 ==q p2 ->c p0 ==q p2)"),
            schema("QL.A3", "p0 ==q p1 ->c ~p0 ==q ~p1"),
            schema("QL.A4", "p0 ==q p1 ->c p0 ^ p2 ==q p1 ^ p2"),
            schema("QL.A5", "p0 ^ p1 ==q p1 ^ p0"),
            schema("QL.A6", "p0 ^ (p1 ^ p2) ==q (p0 ^ p1) ^ p2"),
            schema("QL.A7", "p0 ^ (p0 v p1) ==q p0"),
            schema("QL.A8", "~p0 ^ p0 ==q (~p0 ^ p0) ^ p1"),
            schema("QL.A9", "p0 ==q ~~p0"),
            schema("QL.A10", "~(p0 v p1) ==q ~p0 ^ ~p1"),
            schema("QL.A12", "(p0 ==q p1) ==q (p1 ==q p0)"),
            schema("QL.A13", "p0 ==q p1 ->c (p0 ->c p1)"),
            schema("QL.A14", "(p0 ->c p1) ->3 (p0 ->3 (p0 ->3 p1))"),
        ],
    }
}

/// Match a wff against a schema.
///
/// Both sides are first expanded to the primitive connectives, so any
/// definitionally equal spelling of an instance is accepted (e.g.
/// `~p0 v p1` where the schema says `A ->c B`). Returns the
/// metavariable substitution (in expanded form), or `None`.
pub fn match_schema(schema: &AxiomSchema, w: &Wff) -> Option<Vec<Wff>> {
    let pat = schema.pattern.expand();
    let target = w.expand();
    let k = schema.pattern.ast().var_count();
    let mut binds: Vec<Option<Ast>> = vec![None; k];

    fn go(pat: &Ast, t: &Ast, binds: &mut Vec<Option<Ast>>) -> bool {
        match (pat, t) {
            (Ast::Var(i), _) => match &binds[*i] {
                Some(b) => b == t,
                None => {
                    binds[*i] = Some(t.clone());
                    true
                }
            },
            (Ast::Not(p), Ast::Not(u)) => go(p, u, binds),
            (Ast::Or(p, q), Ast::Or(u, v)) => go(p, u, binds) && go(q, v, binds),
            _ => false,
        }
    }

    if !go(pat.ast(), target.ast(), &mut binds) {
        return None;
    }
    binds
        .into_iter()
        .map(|b| b.and_then(Wff::new))
        .collect::<Option<Vec<Wff>>>()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Justification {
    Hypothesis(usize),
    Axiom(String),
    /// `MP(i, j)`: 1-based references to earlier lines; line `j` must be
    /// `line_i -> this line` under the system's rule arrow.
    MP(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line {
    pub wff: Wff,
    pub just: Justification,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    pub system: System,
    pub hypotheses: Vec<Wff>,
    pub lines: Vec<Line>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LogicError {
    #[error("line {line}: hypothesis index {index} out of range")]
    BadHypothesisIndex { line: usize, index: usize },
    #[error("line {line}: stated wff is not hypothesis {index}")]
    HypothesisMismatch { line: usize, index: usize },
    #[error("line {line}: unknown axiom `{name}`")]
    UnknownAxiom { line: usize, name: String },
    #[error("line {line}: not an instance of axiom `{axiom}`")]
    NotAnAxiomInstance { line: usize, axiom: String },
    #[error("line {line}: bad modus ponens: {reason}")]
    BadMP { line: usize, reason: String },
    #[error("derivation has no lines")]
    EmptyDerivation,
    #[error("parse error at line {line}: {msg}")]
    File { line: usize, msg: String },
    #[error(transparent)]
    Term(#[from] TermError),
}

/// Check every line of a derivation; on success the derivation proves
/// `Γ ⊢ conclusion` where `Γ` is the hypothesis list.
pub fn verify_derivation(d: &Derivation) -> Result<Wff, LogicError> {
    let catalog = axioms(d.system);
    for (idx, line) in d.lines.iter().enumerate() {
        let line_no = idx + 1;
        match &line.just {
            Justification::Hypothesis(i) => {
                let hyp = d.hypotheses.get(*i).ok_or(LogicError::BadHypothesisIndex {
                    line: line_no,
                    index: *i,
                })?;
                if hyp.expand() != line.wff.expand() {
                    return Err(LogicError::HypothesisMismatch {
                        line: line_no,
                        index: *i,
                    });
                }
            }
            Justification::Axiom(name) => {
                let full = if name.contains('.') {
                    name.clone()
                } else {
                    format!("{}.{}", d.system.tag(), name)
                };
                let schema = catalog
                    .iter()
                    .find(|s| s.name == full)
                    .ok_or_else(|| LogicError::UnknownAxiom {
                        line: line_no,
                        name: name.clone(),
                    })?;
                if match_schema(schema, &line.wff).is_none() {
                    return Err(LogicError::NotAnAxiomInstance {
                        line: line_no,
                        axiom: schema.name.to_string(),
                    });
                }
            }
            Justification::MP(i, j) => {
                let fetch = |r: usize| -> Result<&Wff, LogicError> {
                    if r == 0 || r > idx {
                        return Err(LogicError::BadMP {
                            line: line_no,
                            reason: format!("reference {r} is not an earlier line"),
                        });
                    }
                    Ok(&d.lines[r - 1].wff)
                };
                let minor = fetch(*i)?;
                let major = fetch(*j)?;
                let arrow = d.system.rule_arrow();
                let expected = imp(arrow, minor.ast().clone(), line.wff.ast().clone());
                if major.ast().expand(crate::term::Namespace::Wff)
                    != expected.expand(crate::term::Namespace::Wff)
                {
                    let tag = if arrow == ImplKind::I0 { "->c" } else { "->3" };
                    return Err(LogicError::BadMP {
                        line: line_no,
                        reason: format!(
                            "line {j} is not `(line {i}) {tag} (line {line_no})`; R1 of {} uses {tag}",
                            d.system.tag()
                        ),
                    });
                }
            }
        }
    }
    d.lines
        .last()
        .map(|l| l.wff.clone())
        .ok_or(LogicError::EmptyDerivation)
}

/// Derivation file format:
///
/// ```text
/// system QL
/// hyp 0 p0
/// hyp 1 p0 ->3 p1
/// line 1 hyp 0 p0
/// line 2 hyp 1 p0 ->3 p1
/// line 3 mp 1 2 p1
/// ```
///
/// Hypotheses are numbered from 0, lines from 1; line justifications are
/// `hyp <i>`, `axiom <NAME>` (with or without the system prefix), and
/// `mp <i> <j>`.
pub fn parse_derivation(text: &str) -> Result<Derivation, LogicError> {
    let file_err = |line: usize, msg: String| LogicError::File { line, msg };
    let mut system: Option<System> = None;
    let mut hypotheses: Vec<Wff> = Vec::new();
    let mut lines: Vec<Line> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        let num = |t: &str| -> Result<usize, LogicError> {
            t.parse()
                .map_err(|_| file_err(line_no, format!("expected a number, got `{t}`")))
        };
        match toks[0] {
            "system" => match toks.get(1) {
                Some(&"CL") => system = Some(System::CL),
                Some(&"QL") => system = Some(System::QL),
                _ => return Err(file_err(line_no, "expected `system CL` or `system QL`".into())),
            },
            "hyp" => {
                let k = num(toks.get(1).copied().unwrap_or(""))?;
                if k != hypotheses.len() {
                    return Err(file_err(
                        line_no,
                        format!("hypotheses must be numbered in order; expected {}", hypotheses.len()),
                    ));
                }
                hypotheses.push(parse_wff(&toks[2..].join(" "))?);
            }
            "line" => {
                let k = num(toks.get(1).copied().unwrap_or(""))?;
                if k != lines.len() + 1 {
                    return Err(file_err(
                        line_no,
                        format!("lines must be numbered in order; expected {}", lines.len() + 1),
                    ));
                }
                let (just, rest) = match toks.get(2) {
                    Some(&"hyp") => (
                        Justification::Hypothesis(num(toks.get(3).copied().unwrap_or(""))?),
                        &toks[4..],
                    ),
                    Some(&"axiom") => {
                        let name = toks
                            .get(3)
                            .ok_or_else(|| file_err(line_no, "expected axiom name".into()))?;
                        (Justification::Axiom(name.to_string()), &toks[4..])
                    }
                    Some(&"mp") => (
                        Justification::MP(
                            num(toks.get(3).copied().unwrap_or(""))?,
                            num(toks.get(4).copied().unwrap_or(""))?,
                        ),
                        &toks[5..],
                    ),
                    _ => {
                        return Err(file_err(
                            line_no,
                            "expected justification `hyp <i>`, `axiom <NAME>`, or `mp <i> <j>`".into(),
                        ))
                    }
                };
                if rest.is_empty() {
                    return Err(file_err(line_no, "missing wff".into()));
                }
                lines.push(Line {
                    wff: parse_wff(&rest.join(" "))?,
                    just,
                });
            }
            other => return Err(file_err(line_no, format!("unknown directive `{other}`"))),
        }
    }

    Ok(Derivation {
        system: system.ok_or_else(|| file_err(0, "missing `system` directive".into()))?,
        hypotheses,
        lines,
    })
}

/// Translate a wff into a lattice term: `p_i` becomes the variable
/// `a_i`; every connective is carried to its lattice counterpart.
pub fn translate(w: &Wff) -> LatticeTerm {
    let k = w.ast().var_count();
    LatticeTerm {
        ast: w.ast().clone(),
        vars: (0..k).map(|i| format!("a{i}")).collect(),
    }
}

/// Per-lattice soundness report for one axiom system: every axiom
/// schema instantiated with distinct fresh variables must be valid, and
/// the rule R1 must preserve validity.
#[derive(Debug, Clone, Serialize)]
pub struct SoundnessReport {
    pub system: System,
    pub lattice: String,
    pub axioms: Vec<(String, CheckResult)>,
    pub rule: CheckResult,
    pub pass: bool,
}

pub fn soundness_suite(
    system: System,
    lat: &FiniteOrtholattice,
    opts: &CheckOptions,
) -> Result<SoundnessReport, CheckError> {
    let mut results = Vec::new();
    let mut pass = true;
    for schema in axioms(system) {
        // The pattern over p0,p1,p2 is itself the fresh-variable instance.
        let r = check_validity(lat, &schema.pattern, opts)?;
        pass &= r.pass;
        results.push((schema.name.to_string(), r));
    }
    let a = Wff::new(var(0)).unwrap();
    let b = Wff::new(var(1)).unwrap();
    let step = Wff::new(imp(system.rule_arrow(), var(0), var(1))).unwrap();
    let rule = check_consequence(lat, &[a, step], &b, opts)?;
    pass &= rule.pass;
    Ok(SoundnessReport {
        system,
        lattice: lat.name().to_string(),
        axioms: results,
        rule,
        pass,
    })
}
