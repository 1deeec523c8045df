//! Horn conditions over lattice terms: the builtin catalog and the
//! condition file format.
//!
//! A condition is a list of premise equations and one conclusion
//! equation, all over a shared list of named variables. An identity is
//! the premise-free special case.

use super::{parse_term_with_vars, Ast, LatticeTerm, TermError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equation {
    pub lhs: Ast,
    pub rhs: Ast,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HornCondition {
    pub name: String,
    pub vars: Vec<String>,
    pub premises: Vec<Equation>,
    pub conclusion: Equation,
}

impl HornCondition {
    pub fn is_identity(&self) -> bool {
        self.premises.is_empty()
    }

    /// The Horn reading of a condition: every equation `t = s` becomes
    /// `t ==q s = 1`, turning an identity between terms into a unit
    /// condition. Equations already of the form `t = 1` are kept as is.
    pub fn horn_reading(&self) -> HornCondition {
        let unitize = |eq: &Equation| -> Equation {
            if eq.rhs == Ast::One {
                return eq.clone();
            }
            Equation {
                lhs: super::equiv(super::EquivKind::Q, eq.lhs.clone(), eq.rhs.clone()),
                rhs: Ast::One,
            }
        };
        HornCondition {
            name: format!("{}_horn_reading", self.name),
            vars: self.vars.clone(),
            premises: self.premises.iter().map(&unitize).collect(),
            conclusion: unitize(&self.conclusion),
        }
    }

    pub fn side_term(&self, side: &Ast) -> LatticeTerm {
        LatticeTerm {
            ast: side.clone(),
            vars: self.vars.clone(),
        }
    }

    /// Render as condition file text.
    pub fn to_text(&self) -> String {
        let term = |a: &Ast| self.side_term(a).to_ascii();
        let mut out = format!("condition {}\nvars {}\n", self.name, self.vars.join(" "));
        for p in &self.premises {
            out.push_str(&format!("premise {} = {}\n", term(&p.lhs), term(&p.rhs)));
        }
        out.push_str(&format!(
            "conclude {} = {}\n",
            term(&self.conclusion.lhs),
            term(&self.conclusion.rhs)
        ));
        out
    }
}

fn cond(
    name: &str,
    vars: &[&str],
    premises: &[(&str, &str)],
    conclusion: (&str, &str),
) -> HornCondition {
    let vars: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
    let side = |s: &str| -> Ast {
        parse_term_with_vars(s, &vars)
            .unwrap_or_else(|e| panic!("builtin condition `{name}`, term `{s}`: {e}"))
    };
    let eq = |(l, r): (&str, &str)| Equation {
        lhs: side(l),
        rhs: side(r),
    };
    let premises: Vec<Equation> = premises.iter().copied().map(eq).collect();
    let conclusion = eq(conclusion);
    HornCondition {
        name: name.to_string(),
        vars,
        premises,
        conclusion,
    }
}

/// Names of every builtin condition, in catalog order.
pub fn condition_names() -> Vec<&'static str> {
    vec![
        "OL1", "OL2", "OL3", "OL4", "OL5", "OL6",
        "OM_horn", "DIST_horn", "OM_eq", "OM_unit", "DIST_eq",
        "WOM_horn1", "WOM_horn2", "WOM_horn2_c",
        "WOML1_id", "WOML1_id_c", "WOML2_id", "WOML2_id_c",
        "COMM", "WDIST",
        "IMPL_LEQ_0", "IMPL_LEQ_1", "IMPL_LEQ_2", "IMPL_LEQ_3", "IMPL_LEQ_4", "IMPL_LEQ_5",
        "EQUIV_DECOMP_1", "EQUIV_DECOMP_2", "EQUIV_DECOMP_3", "EQUIV_DECOMP_4", "EQUIV_DECOMP_5",
    ]
}

/// Look up a builtin condition by name.
///
/// Conditions whose source statement uses a bare `≡` default to the `==q`
/// reading; a `<name>_c` twin gives the `==c` reading so the two can be
/// compared instead of one being silently chosen.
pub fn builtin_condition(name: &str) -> Result<HornCondition, TermError> {
    let ab = &["a", "b"];
    let abc = &["a", "b", "c"];
    let c = match name {
        // Defining identities of an ortholattice.
        "OL1" => cond("OL1", ab, &[], ("a''", "a")),
        "OL2" => cond("OL2", ab, &[], ("a v a ^ b", "a")),
        "OL3" => cond("OL3", ab, &[], ("a v b", "b v a")),
        "OL4" => cond("OL4", ab, &[], ("a ^ b", "(a' v b')'")),
        "OL5" => cond("OL5", ab, &[], ("a v (b v b')", "b v b'")),
        "OL6" => cond("OL6", abc, &[], ("(a v b) v c", "a v (b v c)")),
        // Orthomodularity and distributivity, Horn and equational forms.
        "OM_horn" => cond("OM_horn", ab, &[("a ==q b", "1")], ("a", "b")),
        "DIST_horn" => cond("DIST_horn", ab, &[("a ==c b", "1")], ("a", "b")),
        "OM_eq" => cond("OM_eq", ab, &[], ("a v a' ^ (a v b)", "a v b")),
        "OM_unit" => cond("OM_unit", ab, &[], ("a v a' ^ (a v b) ==q a v b", "1")),
        "DIST_eq" => cond("DIST_eq", abc, &[], ("a ^ (b v c)", "a ^ b v a ^ c")),
        // Weak orthomodularity (two equivalent Horn forms) and the
        // WOML1/WOML2 strengthening identities.
        "WOM_horn1" => cond("WOM_horn1", ab, &[("a ->1 b", "1")], ("b' ->1 a'", "1")),
        "WOM_horn2" => cond(
            "WOM_horn2",
            abc,
            &[("a ==q b", "1")],
            ("a v c ==q b v c", "1"),
        ),
        "WOM_horn2_c" => cond(
            "WOM_horn2_c",
            abc,
            &[("a ==c b", "1")],
            ("a v c ==c b v c", "1"),
        ),
        "WOML1_id" => cond(
            "WOML1_id",
            ab,
            &[],
            ("(a ->1 b) ==q (b ->1 a)", "a ==q b"),
        ),
        "WOML1_id_c" => cond(
            "WOML1_id_c",
            ab,
            &[],
            ("(a ->1 b) ==c (b ->1 a)", "a ==c b"),
        ),
        "WOML2_id" => cond("WOML2_id", ab, &[], ("(a ==q b)' ->1 a'", "a ->1 b")),
        "WOML2_id_c" => cond("WOML2_id_c", ab, &[], ("(a ==c b)' ->1 a'", "a ->1 b")),
        // Commensurability and weak distributivity.
        "COMM" => cond(
            "COMM",
            ab,
            &[],
            ("a ^ b v a ^ b' v a' ^ b v a' ^ b'", "1"),
        ),
        "WDIST" => cond(
            "WDIST",
            abc,
            &[],
            ("a v b ^ c ==c (a v b) ^ (a v c)", "1"),
        ),
        _ => {
            // Implication-to-order and equivalence-decomposition families.
            if let Some(i) = name.strip_prefix("IMPL_LEQ_") {
                if matches!(i, "0" | "1" | "2" | "3" | "4" | "5") {
                    return Ok(cond(
                        name,
                        ab,
                        &[(&format!("a ->{i} b"), "1")],
                        ("a ^ b", "a"),
                    ));
                }
            }
            if let Some(i) = name.strip_prefix("EQUIV_DECOMP_") {
                if matches!(i, "1" | "2" | "3" | "4" | "5") {
                    return Ok(cond(
                        name,
                        ab,
                        &[],
                        ("a ==q b", &format!("(a ->{i} b) ^ (b ->{i} a)")),
                    ));
                }
            }
            return Err(TermError::UnknownCondition(name.to_string()));
        }
    };
    Ok(c)
}

/// Parse the condition file format:
///
/// ```text
/// condition <name>
/// vars a b c
/// premise <term> = <term>    # zero or more
/// conclude <term> = <term>
/// ```
pub fn parse_condition(text: &str) -> Result<HornCondition, TermError> {
    let file_err = |line: usize, msg: String| TermError::File { line, msg };
    let mut name: Option<String> = None;
    let mut vars: Vec<String> = Vec::new();
    let mut premises = Vec::new();
    let mut conclusion: Option<Equation> = None;

    // Split `t = s` at the unique `=` that is not part of `==q`/`==c`.
    let split_eq = |line_no: usize, body: &str| -> Result<(String, String), TermError> {
        let bytes = body.as_bytes();
        let mut at = None;
        for (i, &b) in bytes.iter().enumerate() {
            if b == b'='
                && (i == 0 || bytes[i - 1] != b'=')
                && bytes.get(i + 1) != Some(&b'=')
            {
                if at.is_some() {
                    return Err(file_err(line_no, "more than one top-level `=`".into()));
                }
                at = Some(i);
            }
        }
        let i = at.ok_or_else(|| file_err(line_no, "expected `<term> = <term>`".into()))?;
        Ok((body[..i].to_string(), body[i + 1..].to_string()))
    };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (directive, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        let rest = rest.trim();
        match directive {
            "condition" => {
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(file_err(line_no, "expected `condition <name>`".into()));
                }
                name = Some(rest.to_string());
            }
            "vars" => {
                vars.extend(rest.split_whitespace().map(|s| s.to_string()));
            }
            "premise" | "conclude" => {
                let (l, r) = split_eq(line_no, rest)?;
                let eq = Equation {
                    lhs: parse_term_with_vars(&l, &vars)?,
                    rhs: parse_term_with_vars(&r, &vars)?,
                };
                if directive == "premise" {
                    premises.push(eq);
                } else {
                    if conclusion.is_some() {
                        return Err(file_err(line_no, "more than one `conclude`".into()));
                    }
                    conclusion = Some(eq);
                }
            }
            other => {
                return Err(file_err(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    Ok(HornCondition {
        name: name.ok_or_else(|| file_err(0, "missing `condition <name>`".into()))?,
        vars,
        premises,
        conclusion: conclusion.ok_or_else(|| file_err(0, "missing `conclude`".into()))?,
    })
}
