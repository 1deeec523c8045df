//! Ortho-isomorphism search and O6-subalgebra detection.

use super::FiniteOrtholattice;

/// Per-element signature used to prune isomorphism candidates: an
/// isomorphism can only map elements with equal signatures.
fn signature(lat: &FiniteOrtholattice, a: usize) -> (usize, usize, usize, usize) {
    let n = lat.len();
    let below = (0..n).filter(|&c| lat.leq(c, a)).count();
    let above = (0..n).filter(|&c| lat.leq(a, c)).count();
    let o = lat.ortho(a);
    let o_below = (0..n).filter(|&c| lat.leq(c, o)).count();
    let o_above = (0..n).filter(|&c| lat.leq(o, c)).count();
    (below, above, o_below, o_above)
}

/// Search for an order- and ortho-preserving bijection from `l1` to `l2`.
///
/// Returns the lexicographically first mapping in element-index order, as a
/// vector indexed by `l1` elements, or `None` if the lattices are not
/// ortho-isomorphic.
pub fn find_isomorphism(l1: &FiniteOrtholattice, l2: &FiniteOrtholattice) -> Option<Vec<usize>> {
    let n = l1.len();
    if n != l2.len() {
        return None;
    }
    let sig1: Vec<_> = (0..n).map(|a| signature(l1, a)).collect();
    let sig2: Vec<_> = (0..n).map(|a| signature(l2, a)).collect();
    {
        let mut s1 = sig1.clone();
        let mut s2 = sig2.clone();
        s1.sort_unstable();
        s2.sort_unstable();
        if s1 != s2 {
            return None;
        }
    }

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn extend(
        l1: &FiniteOrtholattice,
        l2: &FiniteOrtholattice,
        sig1: &[(usize, usize, usize, usize)],
        sig2: &[(usize, usize, usize, usize)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        next: usize,
    ) -> bool {
        let n = l1.len();
        if next == n {
            return true;
        }
        for cand in 0..n {
            if used[cand] || sig1[next] != sig2[cand] {
                continue;
            }
            // ortho partner already mapped must agree
            let o = l1.ortho(next);
            if o < next && map[o] != l2.ortho(cand) {
                continue;
            }
            // order relations with all previously mapped elements
            let ok = (0..next).all(|p| {
                l1.leq(p, next) == l2.leq(map[p], cand) && l1.leq(next, p) == l2.leq(cand, map[p])
            });
            if !ok {
                continue;
            }
            map[next] = cand;
            used[cand] = true;
            if extend(l1, l2, sig1, sig2, map, used, next + 1) {
                return true;
            }
            used[cand] = false;
            map[next] = usize::MAX;
        }
        false
    }

    if extend(l1, l2, &sig1, &sig2, &mut map, &mut used, 0) {
        Some(map)
    } else {
        None
    }
}

/// Six elements of a host lattice forming a subalgebra isomorphic to O6,
/// listed as (0, a, b, b', a', 1) with a < b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct O6Subalgebra {
    pub elements: [usize; 6],
}

/// Search for a subalgebra isomorphic to O6 (the hexagon): elements
/// {0, a, b, b', a', 1} with 0 < a < b < 1, a incomparable to b', and the
/// set closed under meet, join, and orthocomplement.
///
/// Returns the first witness in element-index order (a outer, b inner),
/// or `None`; by Holland's criterion the latter happens exactly when the
/// lattice is orthomodular.
pub fn find_o6_subalgebra(lat: &FiniteOrtholattice) -> Option<O6Subalgebra> {
    let n = lat.len();
    let bot = lat.bottom();
    let top = lat.top();
    for a in 0..n {
        if a == bot || a == top {
            continue;
        }
        for b in 0..n {
            if b == bot || b == top || b == a {
                continue;
            }
            if !lat.leq(a, b) || b == lat.ortho(a) || a == lat.ortho(b) {
                continue;
            }
            // Closure of {0, a, b, b', a', 1} forces a ∧ b' = 0 and
            // a ∨ b' = 1; the remaining table entries follow by duality.
            let bp = lat.ortho(b);
            if lat.meet(a, bp) == bot && lat.join(a, bp) == top {
                return Some(O6Subalgebra {
                    elements: [bot, a, b, bp, lat.ortho(a), top],
                });
            }
        }
    }
    None
}

impl O6Subalgebra {
    /// Verify the witness is closed under meet, join, and ortho, and that
    /// the induced order is the hexagon's.
    pub fn verify(&self, lat: &FiniteOrtholattice) -> bool {
        let e = &self.elements;
        let mut distinct = e.to_vec();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() != 6 {
            return false;
        }
        let in_set = |x: usize| e.contains(&x);
        for &x in e {
            if !in_set(lat.ortho(x)) {
                return false;
            }
            for &y in e {
                if !in_set(lat.meet(x, y)) || !in_set(lat.join(x, y)) {
                    return false;
                }
            }
        }
        let [zero, a, b, bp, ap, one] = *e;
        zero == lat.bottom()
            && one == lat.top()
            && lat.leq(a, b)
            && lat.leq(bp, ap)
            && !lat.leq(a, bp)
            && !lat.leq(bp, a)
            && lat.meet(a, bp) == zero
            && lat.join(a, bp) == one
    }
}
