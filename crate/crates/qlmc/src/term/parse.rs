//! Recursive-descent parser for wffs and lattice terms.
//!
//! Shared grammar, weakest to strongest: implications (`->c`, `->0` ..
//! `->5`), equivalences (`==q`, `==c`), `v`, `^`, negation (`~` prefix or
//! `'` postfix). `v` and `^` associate to the left; the implications and
//! equivalences do not associate at all, so chains like `a ->1 b ->1 c`
//! are rejected as ambiguous rather than silently grouped.
//!
//! Wff variables are `p0, p1, ...`; lattice variables are identifiers, and
//! only lattice terms may use the constants `0` and `1`.

use thiserror::Error;

use super::{equiv, imp, not, or, and, Ast, EquivKind, ImplKind, LatticeTerm, Wff};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TermError {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("ambiguous chain at byte {pos}: `->`/`==` do not associate; add parentheses")]
    AmbiguousChain { pos: usize },
    #[error("undeclared variable `{name}` at byte {pos}")]
    UndeclaredVariable { pos: usize, name: String },
    #[error("unknown condition `{0}`")]
    UnknownCondition(String),
    #[error("error at line {line}: {msg}")]
    File { line: usize, msg: String },
}

fn syn(pos: usize, msg: impl Into<String>) -> TermError {
    TermError::Syntax {
        pos,
        msg: msg.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Num(String),
    Tilde,
    Prime,
    Or,
    And,
    Imp(ImplKind),
    Equiv(EquivKind),
    LParen,
    RParen,
}

fn lex(text: &str) -> Result<Vec<(usize, Tok)>, TermError> {
    let bytes = text.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let start = i;
        match c {
            ' ' | '\t' | '\r' | '\n' => {
                i += 1;
            }
            '(' => {
                toks.push((start, Tok::LParen));
                i += 1;
            }
            ')' => {
                toks.push((start, Tok::RParen));
                i += 1;
            }
            '~' => {
                toks.push((start, Tok::Tilde));
                i += 1;
            }
            '\'' => {
                toks.push((start, Tok::Prime));
                i += 1;
            }
            '^' => {
                toks.push((start, Tok::And));
                i += 1;
            }
            '-' => {
                if bytes.get(i + 1) != Some(&b'>') {
                    return Err(syn(start, "expected `->` arrow"));
                }
                let k = match bytes.get(i + 2).map(|&b| b as char) {
                    Some('c') | Some('0') => ImplKind::I0,
                    Some('1') => ImplKind::I1,
                    Some('2') => ImplKind::I2,
                    Some('3') => ImplKind::I3,
                    Some('4') => ImplKind::I4,
                    Some('5') => ImplKind::I5,
                    _ => return Err(syn(start, "expected `->c` or `->0` .. `->5`")),
                };
                toks.push((start, Tok::Imp(k)));
                i += 3;
            }
            '=' => {
                if bytes.get(i + 1) != Some(&b'=') {
                    return Err(syn(start, "expected `==q` or `==c`"));
                }
                let k = match bytes.get(i + 2).map(|&b| b as char) {
                    Some('q') => EquivKind::Q,
                    Some('c') => EquivKind::C,
                    _ => return Err(syn(start, "expected `==q` or `==c`")),
                };
                toks.push((start, Tok::Equiv(k)));
                i += 3;
            }
            _ if c.is_ascii_digit() => {
                while i < bytes.len() && (bytes[i] as char).is_ascii_digit() {
                    i += 1;
                }
                toks.push((start, Tok::Num(text[start..i].to_string())));
            }
            _ if c.is_ascii_alphabetic() || c == '_' => {
                while i < bytes.len() {
                    let d = bytes[i] as char;
                    if d.is_ascii_alphanumeric() || d == '_' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let word = &text[start..i];
                if word == "v" {
                    toks.push((start, Tok::Or));
                } else {
                    toks.push((start, Tok::Ident(word.to_string())));
                }
            }
            _ => return Err(syn(start, format!("unexpected character `{c}`"))),
        }
    }
    Ok(toks)
}

/// How identifiers and numeric literals turn into leaves.
enum VarMode<'a> {
    /// `p0, p1, ...`; constants rejected.
    Wff,
    /// Named variables collected in order of first appearance; constants ok.
    Collect(&'a mut Vec<String>),
    /// Named variables restricted to a declared list; constants ok.
    Declared(&'a [String]),
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    mode: VarMode<'a>,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&(usize, Tok)> {
        self.toks.get(self.at)
    }

    fn bump(&mut self) -> Option<(usize, Tok)> {
        let t = self.toks.get(self.at).cloned();
        if t.is_some() {
            self.at += 1;
        }
        t
    }

    fn leaf(&mut self, pos: usize, tok: Tok) -> Result<Ast, TermError> {
        match tok {
            Tok::Num(n) => match (&self.mode, n.as_str()) {
                (VarMode::Wff, _) => Err(syn(pos, "constants are not wffs")),
                (_, "0") => Ok(Ast::Zero),
                (_, "1") => Ok(Ast::One),
                _ => Err(syn(pos, format!("unknown constant `{n}`"))),
            },
            Tok::Ident(name) => match &mut self.mode {
                VarMode::Wff => {
                    let idx = name
                        .strip_prefix('p')
                        .and_then(|d| if d.is_empty() { None } else { d.parse::<usize>().ok() })
                        .ok_or_else(|| {
                            syn(pos, format!("wff variables look like `p0`, got `{name}`"))
                        })?;
                    Ok(Ast::Var(idx))
                }
                VarMode::Collect(vars) => {
                    let idx = match vars.iter().position(|n| *n == name) {
                        Some(i) => i,
                        None => {
                            vars.push(name);
                            vars.len() - 1
                        }
                    };
                    Ok(Ast::Var(idx))
                }
                VarMode::Declared(vars) => vars
                    .iter()
                    .position(|n| *n == name)
                    .map(Ast::Var)
                    .ok_or(TermError::UndeclaredVariable { pos, name }),
            },
            _ => unreachable!(),
        }
    }

    fn atom(&mut self) -> Result<Ast, TermError> {
        let (pos, tok) = self
            .bump()
            .ok_or_else(|| syn(self.end, "unexpected end of input"))?;
        let mut node = match tok {
            Tok::LParen => {
                let inner = self.imp_level()?;
                match self.bump() {
                    Some((_, Tok::RParen)) => inner,
                    Some((p, _)) => return Err(syn(p, "expected `)`")),
                    None => return Err(syn(self.end, "unclosed `(`")),
                }
            }
            Tok::Tilde => not(self.atom()?),
            t @ (Tok::Ident(_) | Tok::Num(_)) => self.leaf(pos, t)?,
            _ => return Err(syn(pos, "expected a variable, constant, `~`, or `(`")),
        };
        while matches!(self.peek(), Some((_, Tok::Prime))) {
            self.bump();
            node = not(node);
        }
        Ok(node)
    }

    fn and_level(&mut self) -> Result<Ast, TermError> {
        let mut node = self.atom()?;
        while matches!(self.peek(), Some((_, Tok::And))) {
            self.bump();
            node = and(node, self.atom()?);
        }
        Ok(node)
    }

    fn or_level(&mut self) -> Result<Ast, TermError> {
        let mut node = self.and_level()?;
        while matches!(self.peek(), Some((_, Tok::Or))) {
            self.bump();
            node = or(node, self.and_level()?);
        }
        Ok(node)
    }

    fn equiv_level(&mut self) -> Result<Ast, TermError> {
        let node = self.or_level()?;
        if let Some((_, Tok::Equiv(k))) = self.peek().cloned() {
            self.bump();
            let rhs = self.or_level()?;
            if let Some(&(pos, Tok::Equiv(_))) = self.peek() {
                return Err(TermError::AmbiguousChain { pos });
            }
            return Ok(equiv(k, node, rhs));
        }
        Ok(node)
    }

    fn imp_level(&mut self) -> Result<Ast, TermError> {
        let node = self.equiv_level()?;
        if let Some((_, Tok::Imp(k))) = self.peek().cloned() {
            self.bump();
            let rhs = self.equiv_level()?;
            if let Some(&(pos, Tok::Imp(_) | Tok::Equiv(_))) = self.peek() {
                return Err(TermError::AmbiguousChain { pos });
            }
            return Ok(imp(k, node, rhs));
        }
        Ok(node)
    }

    fn full(&mut self) -> Result<Ast, TermError> {
        let ast = self.imp_level()?;
        match self.peek() {
            None => Ok(ast),
            Some(&(pos, _)) => Err(syn(pos, "trailing input")),
        }
    }
}

fn run(text: &str, mode: VarMode<'_>) -> Result<Ast, TermError> {
    let toks = lex(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        mode,
    };
    p.full()
}

/// Parse a wff over the propositional variables `p0, p1, ...`.
pub fn parse_wff(text: &str) -> Result<Wff, TermError> {
    let ast = run(text, VarMode::Wff)?;
    Ok(Wff::new(ast).expect("wff mode admits no constants"))
}

/// Parse a lattice term; variables are named by first appearance.
pub fn parse_term(text: &str) -> Result<LatticeTerm, TermError> {
    let mut vars = Vec::new();
    let ast = run(text, VarMode::Collect(&mut vars))?;
    Ok(LatticeTerm { ast, vars })
}

/// Parse a lattice term against a declared variable list; names outside
/// the list are an error.
pub fn parse_term_with_vars(text: &str, vars: &[String]) -> Result<Ast, TermError> {
    run(text, VarMode::Declared(vars))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::term::var;

    #[test]
    fn wff_round_trip() {
        let texts = [
            "p0 ->1 p1",
            "p0 ==q p1 v p2",
            "~(p0 v p1) ^ ~p2",
            "(p0 ->3 p1) ->3 (p0 ->3 p1)",
            "p0 ->c p1",
        ];
        for t in texts {
            let w = parse_wff(t).unwrap();
            assert_eq!(w.to_ascii(), t, "canonical text should round-trip");
            assert_eq!(parse_wff(&w.to_ascii()).unwrap(), w);
        }
    }

    #[test]
    fn term_round_trip_with_constants() {
        let texts = ["a ^ a' v 0", "(a v b)' ==c 1", "a ->0 b"];
        for t in texts {
            let term = parse_term(t).unwrap();
            assert_eq!(term.to_ascii(), t);
        }
    }

    #[test]
    fn precedence_matches_hand_grouping() {
        // == binds tighter than ->, v tighter than ==, ^ tighter than v
        let w = parse_wff("p0 ==q p1 ->1 p2").unwrap();
        assert_eq!(parse_wff("(p0 ==q p1) ->1 p2").unwrap(), w);
        let w2 = parse_wff("p0 v p1 ^ p2").unwrap();
        assert_eq!(parse_wff("p0 v (p1 ^ p2)").unwrap(), w2);
        // left association
        let w3 = parse_wff("p0 v p1 v p2").unwrap();
        assert_eq!(parse_wff("(p0 v p1) v p2").unwrap(), w3);
    }

    #[test]
    fn nonassociative_chains_are_ambiguous() {
        for t in ["p0 ->1 p1 ->1 p2", "p0 ==q p1 ==c p2", "p0 ->1 p1 ->c p2"] {
            assert!(
                matches!(parse_wff(t), Err(TermError::AmbiguousChain { .. })),
                "{t}"
            );
        }
        // parenthesized versions are fine
        assert!(parse_wff("(p0 ->1 p1) ->1 p2").is_ok());
        assert!(parse_wff("p0 ->1 (p1 ->1 p2)").is_ok());
    }

    #[test]
    fn wff_rejects_constants_and_bad_variables() {
        assert!(matches!(parse_wff("p0 v 1"), Err(TermError::Syntax { .. })));
        assert!(matches!(parse_wff("a v b"), Err(TermError::Syntax { .. })));
    }

    #[test]
    fn term_collects_variables_in_first_appearance_order() {
        let t = parse_term("b v a ^ b'").unwrap();
        assert_eq!(t.vars, vec!["b".to_string(), "a".to_string()]);
        assert_eq!(
            t.ast,
            crate::term::or(var(0), crate::term::and(var(1), crate::term::not(var(0))))
        );
    }

    #[test]
    fn declared_mode_rejects_unknown_names() {
        let vars = vec!["a".to_string(), "b".to_string()];
        assert!(parse_term_with_vars("a ^ b'", &vars).is_ok());
        assert!(matches!(
            parse_term_with_vars("a ^ c", &vars),
            Err(TermError::UndeclaredVariable { name, .. }) if name == "c"
        ));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        match parse_term("a v") {
            Err(TermError::Syntax { pos, .. }) => assert_eq!(pos, 3),
            other => panic!("expected syntax error, got {other:?}"),
        }
        match parse_term("a @ b") {
            Err(TermError::Syntax { pos, .. }) => assert_eq!(pos, 2),
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn prime_and_tilde_both_negate() {
        assert_eq!(parse_term("a'").unwrap().ast, parse_term("~a").unwrap().ast);
        assert_eq!(parse_term("a''").unwrap().ast, parse_term("~~a").unwrap().ast);
    }
}
