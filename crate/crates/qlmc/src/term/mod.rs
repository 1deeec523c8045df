//! Syntax trees for logic wffs and lattice terms, definitional expansion
//! into the primitive connectives, and printers.
//!
//! Wffs and lattice terms share one tree shape; they differ only in the
//! variable namespace (`p0,p1,...` versus named lattice variables) and in
//! which constants are allowed (`0`/`1` exist only for lattice terms).

mod conditions;
mod parse;

pub use conditions::{
    builtin_condition, condition_names, parse_condition, Equation, HornCondition,
};
pub use parse::{parse_term, parse_term_with_vars, parse_wff, TermError};

/// The six implication connectives; `I0` is the classical arrow, written
/// `->c` for wffs and `->0` for lattice terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ImplKind {
    I0,
    I1,
    I2,
    I3,
    I4,
    I5,
}

impl ImplKind {
    pub const ALL: [ImplKind; 6] = [
        ImplKind::I0,
        ImplKind::I1,
        ImplKind::I2,
        ImplKind::I3,
        ImplKind::I4,
        ImplKind::I5,
    ];

    pub fn index(self) -> usize {
        match self {
            ImplKind::I0 => 0,
            ImplKind::I1 => 1,
            ImplKind::I2 => 2,
            ImplKind::I3 => 3,
            ImplKind::I4 => 4,
            ImplKind::I5 => 5,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EquivKind {
    Q,
    C,
}

/// Which namespace a tree lives in. Expansion is namespace-aware because
/// the defining equations for the equivalences list their operands in
/// different orders for wffs and for lattice terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Namespace {
    Wff,
    Lattice,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ast {
    Var(usize),
    /// Lattice constant 0 (not a wff).
    Zero,
    /// Lattice constant 1 (not a wff).
    One,
    Not(Box<Ast>),
    Or(Box<Ast>, Box<Ast>),
    And(Box<Ast>, Box<Ast>),
    Imp(ImplKind, Box<Ast>, Box<Ast>),
    Equiv(EquivKind, Box<Ast>, Box<Ast>),
}

pub fn var(i: usize) -> Ast {
    Ast::Var(i)
}
pub fn not(a: Ast) -> Ast {
    Ast::Not(Box::new(a))
}
pub fn or(a: Ast, b: Ast) -> Ast {
    Ast::Or(Box::new(a), Box::new(b))
}
pub fn and(a: Ast, b: Ast) -> Ast {
    Ast::And(Box::new(a), Box::new(b))
}
pub fn imp(k: ImplKind, a: Ast, b: Ast) -> Ast {
    Ast::Imp(k, Box::new(a), Box::new(b))
}
pub fn equiv(k: EquivKind, a: Ast, b: Ast) -> Ast {
    Ast::Equiv(k, Box::new(a), Box::new(b))
}

impl Ast {
    /// Largest variable index + 1.
    pub fn var_count(&self) -> usize {
        match self {
            Ast::Var(i) => i + 1,
            Ast::Zero | Ast::One => 0,
            Ast::Not(a) => a.var_count(),
            Ast::Or(a, b) | Ast::And(a, b) | Ast::Imp(_, a, b) | Ast::Equiv(_, a, b) => {
                a.var_count().max(b.var_count())
            }
        }
    }

    pub fn for_each_var(&self, f: &mut impl FnMut(usize)) {
        match self {
            Ast::Var(i) => f(*i),
            Ast::Zero | Ast::One => {}
            Ast::Not(a) => a.for_each_var(f),
            Ast::Or(a, b) | Ast::And(a, b) | Ast::Imp(_, a, b) | Ast::Equiv(_, a, b) => {
                a.for_each_var(f);
                b.for_each_var(f);
            }
        }
    }

    /// Replace every variable by the tree the substitution maps it to.
    pub fn substitute(&self, subst: &[Ast]) -> Ast {
        match self {
            Ast::Var(i) => subst[*i].clone(),
            Ast::Zero => Ast::Zero,
            Ast::One => Ast::One,
            Ast::Not(a) => not(a.substitute(subst)),
            Ast::Or(a, b) => or(a.substitute(subst), b.substitute(subst)),
            Ast::And(a, b) => and(a.substitute(subst), b.substitute(subst)),
            Ast::Imp(k, a, b) => imp(*k, a.substitute(subst), b.substitute(subst)),
            Ast::Equiv(k, a, b) => equiv(*k, a.substitute(subst), b.substitute(subst)),
        }
    }

    /// Expand every derived connective into the primitives (negation and
    /// disjunction). Idempotent; preserves the variable set.
    pub fn expand(&self, ns: Namespace) -> Ast {
        fn andp(a: Ast, b: Ast) -> Ast {
            // a ^ b  =  ~(~a v ~b)
            not(or(not(a), not(b)))
        }
        match self {
            Ast::Var(_) | Ast::Zero | Ast::One => self.clone(),
            Ast::Not(a) => not(a.expand(ns)),
            Ast::Or(a, b) => or(a.expand(ns), b.expand(ns)),
            Ast::And(a, b) => andp(a.expand(ns), b.expand(ns)),
            Ast::Imp(k, a, b) => {
                let (a, b) = (a.expand(ns), b.expand(ns));
                match k {
                    ImplKind::I0 => or(not(a), b),
                    ImplKind::I1 => or(not(a.clone()), andp(a, b)),
                    ImplKind::I2 => {
                        // b' ->1 a'
                        let (x, y) = (not(b), not(a));
                        or(not(x.clone()), andp(x, y))
                    }
                    ImplKind::I3 => or(
                        or(
                            andp(not(a.clone()), not(b.clone())),
                            andp(not(a.clone()), b.clone()),
                        ),
                        andp(a.clone(), or(not(a), b)),
                    ),
                    ImplKind::I4 => {
                        // b' ->3 a'
                        let (x, y) = (not(b), not(a));
                        or(
                            or(
                                andp(not(x.clone()), not(y.clone())),
                                andp(not(x.clone()), y.clone()),
                            ),
                            andp(x.clone(), or(not(x), y)),
                        )
                    }
                    ImplKind::I5 => or(
                        or(
                            andp(a.clone(), b.clone()),
                            andp(not(a.clone()), b.clone()),
                        ),
                        andp(not(a.clone()), not(b)),
                    ),
                }
            }
            Ast::Equiv(k, a, b) => {
                let (a, b) = (a.expand(ns), b.expand(ns));
                match (k, ns) {
                    // (~A ^ ~B) v (A ^ B)
                    (EquivKind::Q, Namespace::Wff) => {
                        or(andp(not(a.clone()), not(b.clone())), andp(a, b))
                    }
                    // (a ^ b) v (a' ^ b')
                    (EquivKind::Q, Namespace::Lattice) => {
                        or(andp(a.clone(), b.clone()), andp(not(a), not(b)))
                    }
                    // (B ->c A) ^ (A ->c B)
                    (EquivKind::C, Namespace::Wff) => {
                        andp(or(not(b.clone()), a.clone()), or(not(a), b))
                    }
                    // (a' v b) ^ (b' v a)
                    (EquivKind::C, Namespace::Lattice) => {
                        andp(or(not(a.clone()), b.clone()), or(not(b), a))
                    }
                }
            }
        }
    }
}

/// A well-formed formula of the logics: variables are `p0, p1, ...`;
/// constants are not allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Wff {
    ast: Ast,
}

impl Wff {
    pub fn new(ast: Ast) -> Option<Wff> {
        fn no_consts(a: &Ast) -> bool {
            match a {
                Ast::Zero | Ast::One => false,
                Ast::Var(_) => true,
                Ast::Not(x) => no_consts(x),
                Ast::Or(x, y) | Ast::And(x, y) | Ast::Imp(_, x, y) | Ast::Equiv(_, x, y) => {
                    no_consts(x) && no_consts(y)
                }
            }
        }
        no_consts(&ast).then_some(Wff { ast })
    }

    pub fn ast(&self) -> &Ast {
        &self.ast
    }

    pub fn expand(&self) -> Wff {
        Wff {
            ast: self.ast.expand(Namespace::Wff),
        }
    }

    pub fn to_ascii(&self) -> String {
        print_ast(&self.ast, Namespace::Wff, false, &[])
    }

    pub fn to_unicode(&self) -> String {
        print_ast(&self.ast, Namespace::Wff, true, &[])
    }
}

/// A lattice term: named variables plus the constants 0 and 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeTerm {
    pub ast: Ast,
    pub vars: Vec<String>,
}

impl LatticeTerm {
    pub fn expand(&self) -> LatticeTerm {
        LatticeTerm {
            ast: self.ast.expand(Namespace::Lattice),
            vars: self.vars.clone(),
        }
    }

    pub fn to_ascii(&self) -> String {
        print_ast(&self.ast, Namespace::Lattice, false, &self.vars)
    }

    pub fn to_unicode(&self) -> String {
        print_ast(&self.ast, Namespace::Lattice, true, &self.vars)
    }
}

// Printer precedence levels, weakest to strongest.
const L_IMP: u8 = 0;
const L_EQUIV: u8 = 1;
const L_OR: u8 = 2;
const L_AND: u8 = 3;
const L_NOT: u8 = 4;

fn print_ast(ast: &Ast, ns: Namespace, unicode: bool, vars: &[String]) -> String {
    fn go(ast: &Ast, ns: Namespace, u: bool, vars: &[String], min: u8, out: &mut String) {
        let level = match ast {
            Ast::Var(_) | Ast::Zero | Ast::One => 5,
            Ast::Not(_) => L_NOT,
            Ast::And(..) => L_AND,
            Ast::Or(..) => L_OR,
            Ast::Equiv(..) => L_EQUIV,
            Ast::Imp(..) => L_IMP,
        };
        let parens = level < min;
        if parens {
            out.push('(');
        }
        match ast {
            Ast::Var(i) => match ns {
                Namespace::Wff => out.push_str(&format!("p{i}")),
                Namespace::Lattice => out.push_str(&vars[*i]),
            },
            Ast::Zero => out.push('0'),
            Ast::One => out.push('1'),
            Ast::Not(a) => match ns {
                Namespace::Wff => {
                    out.push_str(if u { "\u{ac}" } else { "~" });
                    go(a, ns, u, vars, L_NOT, out);
                }
                Namespace::Lattice => {
                    go(a, ns, u, vars, L_NOT, out);
                    out.push_str(if u { "\u{2032}" } else { "'" });
                }
            },
            Ast::Or(a, b) => {
                go(a, ns, u, vars, L_OR, out);
                out.push_str(match (u, ns) {
                    (false, _) => " v ",
                    (true, Namespace::Wff) => " \u{2228} ",
                    (true, Namespace::Lattice) => " \u{222a} ",
                });
                go(b, ns, u, vars, L_AND, out);
            }
            Ast::And(a, b) => {
                go(a, ns, u, vars, L_AND, out);
                out.push_str(match (u, ns) {
                    (false, _) => " ^ ",
                    (true, Namespace::Wff) => " \u{2227} ",
                    (true, Namespace::Lattice) => " \u{2229} ",
                });
                go(b, ns, u, vars, L_NOT, out);
            }
            Ast::Equiv(k, a, b) => {
                go(a, ns, u, vars, L_OR, out);
                let sym = match (k, u) {
                    (EquivKind::Q, false) => " ==q ",
                    (EquivKind::C, false) => " ==c ",
                    (EquivKind::Q, true) => " \u{2261}q ",
                    (EquivKind::C, true) => " \u{2261}c ",
                };
                out.push_str(sym);
                go(b, ns, u, vars, L_OR, out);
            }
            Ast::Imp(k, a, b) => {
                go(a, ns, u, vars, L_EQUIV, out);
                let i = k.index();
                let sym = if u {
                    if i == 0 && ns == Namespace::Wff {
                        " \u{2192}c ".to_string()
                    } else {
                        format!(" \u{2192}{i} ")
                    }
                } else if i == 0 && ns == Namespace::Wff {
                    " ->c ".to_string()
                } else {
                    format!(" ->{i} ")
                };
                out.push_str(&sym);
                go(b, ns, u, vars, L_EQUIV, out);
            }
        }
        if parens {
            out.push(')');
        }
    }
    let mut out = String::new();
    go(ast, ns, unicode, vars, 0, &mut out);
    out
}
