//! Finite ortholattices: construction from Hasse diagrams and subset
//! families, builtin lattices, and order/meet/join/orthocomplement queries.

mod builtins;
mod iso;
mod parse;

pub use builtins::{builtin, BUILTIN_NAMES};
pub use iso::{find_isomorphism, find_o6_subalgebra, O6Subalgebra};
pub use parse::parse_lattice;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("element `{0}` is not declared")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("cover `{0} < {0}` relates an element to itself")]
    SelfCover(String),
    #[error("duplicate cover pair ({0}, {1})")]
    DuplicateCover(String, String),
    #[error("ortho pairs do not partition the elements: `{0}` appears {1} times")]
    BadOrthoPartition(String, usize),
    #[error("cover relation has a cycle through `{0}`")]
    CycleInCovers(String),
    #[error("no least element")]
    NoBottom,
    #[error("no greatest element")]
    NoTop,
    #[error("not a lattice: pair ({0}, {1}) has no unique meet/join")]
    NotALattice(String, String),
    #[error("orthocomplement is not an involution at `{0}`")]
    OrthoNotInvolution(String),
    #[error("orthocomplement is not order-reversing: {0} <= {1} but not {1}' <= {0}'")]
    OrthoNotOrderReversing(String, String),
    #[error("0 and 1 must be each other's orthocomplement")]
    BoundsNotOrthoPaired,
    #[error("family is not closed under complement: missing {0}")]
    NotComplementClosed(String),
    #[error("unknown builtin lattice `{0}`")]
    UnknownBuiltin(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A finite lattice presented by its Hasse diagram.
///
/// `covers` are ordered pairs (lower, upper); `ortho` pairs each element
/// with its orthocomplement (0 with 1, and no element with itself).
#[derive(Debug, Clone)]
pub struct HasseSpec {
    pub name: String,
    pub elements: Vec<String>,
    pub covers: Vec<(String, String)>,
    pub ortho: Vec<(String, String)>,
}

/// A family of subsets of a finite universe, ordered by inclusion with
/// set complement as the orthocomplement.
#[derive(Debug, Clone)]
pub struct SubsetFamilySpec {
    pub name: String,
    pub universe: Vec<String>,
    /// Each subset is a set of indices into `universe`.
    pub family: Vec<Vec<usize>>,
}

/// A finite ortholattice with fully tabulated operations.
///
/// Immutable after construction; all queries are pure table lookups.
#[derive(Debug, Clone)]
pub struct FiniteOrtholattice {
    name: String,
    n: usize,
    labels: Vec<String>,
    leq: Vec<bool>,
    meet: Vec<usize>,
    join: Vec<usize>,
    ortho: Vec<usize>,
    bottom: usize,
    top: usize,
}

impl FiniteOrtholattice {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn meet(&self, a: usize, b: usize) -> usize {
        self.meet[a * self.n + b]
    }

    pub fn join(&self, a: usize, b: usize) -> usize {
        self.join[a * self.n + b]
    }

    pub fn ortho(&self, a: usize) -> usize {
        self.ortho[a]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    /// Cover pairs (lower, upper) recovered from the order relation.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in 0..self.n {
                if a != b && self.leq(a, b) {
                    let strictly_between = (0..self.n)
                        .any(|c| c != a && c != b && self.leq(a, c) && self.leq(c, b));
                    if !strictly_between {
                        out.push((a, b));
                    }
                }
            }
        }
        out
    }
}

/// Build an ortholattice from a Hasse specification.
///
/// The order is the reflexive-transitive closure of the cover pairs;
/// meet and join are found by explicit glb/lub search; every
/// ortholattice invariant is verified before the value is returned.
pub fn build_from_hasse(spec: &HasseSpec) -> Result<FiniteOrtholattice, LatticeError> {
    let n = spec.elements.len();
    let index = |label: &str| -> Result<usize, LatticeError> {
        spec.elements
            .iter()
            .position(|e| e == label)
            .ok_or_else(|| LatticeError::UnknownElement(label.to_string()))
    };
    for (i, e) in spec.elements.iter().enumerate() {
        if spec.elements[..i].contains(e) {
            return Err(LatticeError::DuplicateElement(e.clone()));
        }
    }
    let mut covers = Vec::with_capacity(spec.covers.len());
    for (lo, hi) in &spec.covers {
        let (a, b) = (index(lo)?, index(hi)?);
        if a == b {
            return Err(LatticeError::SelfCover(lo.clone()));
        }
        if covers.contains(&(a, b)) {
            return Err(LatticeError::DuplicateCover(lo.clone(), hi.clone()));
        }
        covers.push((a, b));
    }

    // Reflexive-transitive closure of the cover relation.
    let mut leq = vec![false; n * n];
    for a in 0..n {
        leq[a * n + a] = true;
    }
    for &(a, b) in &covers {
        leq[a * n + b] = true;
    }
    for k in 0..n {
        for a in 0..n {
            if leq[a * n + k] {
                for b in 0..n {
                    if leq[k * n + b] {
                        leq[a * n + b] = true;
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if a != b && leq[a * n + b] && leq[b * n + a] {
                return Err(LatticeError::CycleInCovers(spec.elements[a].clone()));
            }
        }
    }

    let mut seen = vec![0usize; n];
    let mut ortho = vec![usize::MAX; n];
    for (x, y) in &spec.ortho {
        let (a, b) = (index(x)?, index(y)?);
        seen[a] += 1;
        seen[b] += 1;
        ortho[a] = b;
        ortho[b] = a;
    }
    for a in 0..n {
        if seen[a] != 1 {
            return Err(LatticeError::BadOrthoPartition(
                spec.elements[a].clone(),
                seen[a],
            ));
        }
    }

    from_order(spec.name.clone(), spec.elements.clone(), leq, ortho)
}

/// Build an ortholattice from a complement-closed subset family ordered by
/// inclusion. Meet and join are derived from the order, not assumed to be
/// intersection and union.
pub fn from_subset_family(spec: &SubsetFamilySpec) -> Result<FiniteOrtholattice, LatticeError> {
    let u = spec.universe.len();
    let canon = |s: &[usize]| -> Vec<usize> {
        let mut v: Vec<usize> = s.to_vec();
        v.sort_unstable();
        v.dedup();
        v
    };
    let sets: Vec<Vec<usize>> = spec.family.iter().map(|s| canon(s)).collect();
    let label_of = |s: &[usize]| -> String {
        let inner: Vec<&str> = s.iter().map(|&i| spec.universe[i].as_str()).collect();
        format!("{{{}}}", inner.join(","))
    };
    let complement = |s: &[usize]| -> Vec<usize> { (0..u).filter(|i| !s.contains(i)).collect() };

    let n = sets.len();
    let mut ortho = vec![usize::MAX; n];
    for (i, s) in sets.iter().enumerate() {
        let c = complement(s);
        match sets.iter().position(|t| *t == c) {
            Some(j) => ortho[i] = j,
            None => return Err(LatticeError::NotComplementClosed(label_of(&c))),
        }
    }
    let mut leq = vec![false; n * n];
    for (i, s) in sets.iter().enumerate() {
        for (j, t) in sets.iter().enumerate() {
            leq[i * n + j] = s.iter().all(|x| t.contains(x));
        }
    }
    let labels: Vec<String> = sets.iter().map(|s| label_of(s)).collect();
    from_order(spec.name.clone(), labels, leq, ortho)
}

/// Common back end: derive meet/join/bounds from a poset plus an ortho
/// candidate, verifying every ortholattice invariant along the way.
fn from_order(
    name: String,
    labels: Vec<String>,
    leq: Vec<bool>,
    ortho: Vec<usize>,
) -> Result<FiniteOrtholattice, LatticeError> {
    let n = labels.len();
    let le = |a: usize, b: usize| leq[a * n + b];

    let bottom = (0..n)
        .find(|&a| (0..n).all(|b| le(a, b)))
        .ok_or(LatticeError::NoBottom)?;
    let top = (0..n)
        .find(|&a| (0..n).all(|b| le(b, a)))
        .ok_or(LatticeError::NoTop)?;

    // Explicit glb/lub search; report the first pair without a unique bound.
    let mut meet = vec![0usize; n * n];
    let mut join = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            let lower: Vec<usize> = (0..n).filter(|&c| le(c, a) && le(c, b)).collect();
            let glb = lower
                .iter()
                .copied()
                .find(|&g| lower.iter().all(|&c| le(c, g)));
            let upper: Vec<usize> = (0..n).filter(|&c| le(a, c) && le(b, c)).collect();
            let lub = upper
                .iter()
                .copied()
                .find(|&g| upper.iter().all(|&c| le(g, c)));
            match (glb, lub) {
                (Some(g), Some(l)) => {
                    meet[a * n + b] = g;
                    join[a * n + b] = l;
                }
                _ => return Err(LatticeError::NotALattice(labels[a].clone(), labels[b].clone())),
            }
        }
    }

    for a in 0..n {
        if ortho[a] >= n || ortho[ortho[a]] != a || (ortho[a] == a && n > 1) {
            return Err(LatticeError::OrthoNotInvolution(labels[a].clone()));
        }
    }
    for a in 0..n {
        for b in 0..n {
            if le(a, b) && !le(ortho[b], ortho[a]) {
                return Err(LatticeError::OrthoNotOrderReversing(
                    labels[a].clone(),
                    labels[b].clone(),
                ));
            }
        }
    }
    if ortho[bottom] != top {
        return Err(LatticeError::BoundsNotOrthoPaired);
    }
    for a in 0..n {
        if meet[a * n + ortho[a]] != bottom || join[a * n + ortho[a]] != top {
            return Err(LatticeError::BoundsNotOrthoPaired);
        }
    }

    let lat = FiniteOrtholattice {
        name,
        n,
        labels,
        leq,
        meet,
        join,
        ortho,
        bottom,
        top,
    };
    debug_assert!(lat.table_invariants_hold());
    Ok(lat)
}

impl FiniteOrtholattice {
    /// Table-level invariants: De Morgan, commutativity, associativity, and
    /// agreement of the two order characterizations.
    pub fn table_invariants_hold(&self) -> bool {
        let n = self.n;
        for a in 0..n {
            for b in 0..n {
                if self.meet(a, b) != self.ortho(self.join(self.ortho(a), self.ortho(b))) {
                    return false;
                }
                if self.meet(a, b) != self.meet(b, a) || self.join(a, b) != self.join(b, a) {
                    return false;
                }
                if (self.meet(a, b) == a) != (self.join(a, b) == b) {
                    return false;
                }
                if (self.meet(a, b) == a) != self.leq(a, b) {
                    return false;
                }
                for c in 0..n {
                    if self.meet(self.meet(a, b), c) != self.meet(a, self.meet(b, c)) {
                        return false;
                    }
                    if self.join(self.join(a, b), c) != self.join(a, self.join(b, c)) {
                        return false;
                    }
                }
            }
        }
        true
    }
}
