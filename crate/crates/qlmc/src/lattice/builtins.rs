//! Builtin lattices. The O6/O7/O8 element lists and cover pairs are pinned
//! here in reading order (bottom row to top row, left to right); the
//! construction path re-verifies every ortholattice invariant on each call.

use super::{build_from_hasse, FiniteOrtholattice, HasseSpec, LatticeError};

pub const BUILTIN_NAMES: [&str; 8] = ["O6", "O7", "O8", "B2", "B4", "B8", "B16", "MO2"];

fn spec(name: &str, elements: &[&str], covers: &[(&str, &str)], ortho: &[(&str, &str)]) -> HasseSpec {
    HasseSpec {
        name: name.to_string(),
        elements: elements.iter().map(|s| s.to_string()).collect(),
        covers: covers
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
        ortho: ortho
            .iter()
            .map(|(a, b)| (a.to_string(), b.to_string()))
            .collect(),
    }
}

fn o6_spec() -> HasseSpec {
    spec(
        "O6",
        &["0", "x", "y'", "y", "x'", "1"],
        &[("0", "x"), ("0", "y'"), ("x", "y"), ("y'", "x'"), ("y", "1"), ("x'", "1")],
        &[("0", "1"), ("x", "x'"), ("y", "y'")],
    )
}

fn o7_spec() -> HasseSpec {
    spec(
        "O7",
        &["0", "x", "w", "z'", "y", "y'", "z", "w'", "x'", "1"],
        &[
            ("0", "x"),
            ("0", "w"),
            ("0", "z'"),
            ("x", "y"),
            ("y", "z"),
            ("y", "w'"),
            ("w", "z"),
            ("w", "y'"),
            ("z'", "y'"),
            ("z'", "w'"),
            ("y'", "x'"),
            ("z", "1"),
            ("w'", "1"),
            ("x'", "1"),
        ],
        &[("0", "1"), ("x", "x'"), ("y", "y'"), ("z", "z'"), ("w", "w'")],
    )
}

fn o8_spec() -> HasseSpec {
    spec(
        "O8",
        &[
            "0", "w", "v'", "x'", "z", "u'", "s'", "y'", "t", "r", "r'", "t'", "y", "s", "u",
            "z'", "x", "v", "w'", "1",
        ],
        &[
            ("0", "w"),
            ("0", "v'"),
            ("0", "x'"),
            ("w", "z"),
            ("w", "r"),
            ("v'", "z"),
            ("v'", "u'"),
            ("x'", "y'"),
            ("x'", "s'"),
            ("z", "y"),
            ("z", "t"),
            ("u'", "t"),
            ("u'", "r'"),
            ("s'", "t'"),
            ("s'", "r'"),
            ("y'", "z'"),
            ("t", "s"),
            ("r", "s"),
            ("r", "u"),
            ("t'", "z'"),
            ("t'", "u"),
            ("r'", "w'"),
            ("y", "x"),
            ("s", "x"),
            ("u", "v"),
            ("z'", "w'"),
            ("z'", "v"),
            ("x", "1"),
            ("v", "1"),
            ("w'", "1"),
        ],
        &[
            ("0", "1"),
            ("x", "x'"),
            ("y", "y'"),
            ("z", "z'"),
            ("w", "w'"),
            ("u", "u'"),
            ("v", "v'"),
            ("r", "r'"),
            ("s", "s'"),
            ("t", "t'"),
        ],
    )
}

fn mo2_spec() -> HasseSpec {
    spec(
        "MO2",
        &["0", "a", "a'", "b", "b'", "1"],
        &[
            ("0", "a"),
            ("0", "a'"),
            ("0", "b"),
            ("0", "b'"),
            ("a", "1"),
            ("a'", "1"),
            ("b", "1"),
            ("b'", "1"),
        ],
        &[("0", "1"), ("a", "a'"), ("b", "b'")],
    )
}

/// Powerset Boolean lattice on `k` atoms, elements in bitmask order.
fn boolean_spec(k: u32) -> HasseSpec {
    let n = 1usize << k;
    let label = |mask: usize| -> String {
        if k == 1 {
            return format!("{mask}");
        }
        (0..k)
            .rev()
            .map(|i| if mask >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    };
    let elements: Vec<String> = (0..n).map(label).collect();
    let mut covers = Vec::new();
    for mask in 0..n {
        for i in 0..k {
            if mask >> i & 1 == 0 {
                covers.push((label(mask), label(mask | 1 << i)));
            }
        }
    }
    let mut ortho = Vec::new();
    for mask in 0..n {
        let c = !mask & (n - 1);
        if mask < c {
            ortho.push((label(mask), label(c)));
        }
    }
    HasseSpec {
        name: format!("B{n}"),
        elements,
        covers,
        ortho,
    }
}

/// Look up a builtin lattice by name: O6, O7, O8, B2, B4, B8, B16, MO2.
pub fn builtin(name: &str) -> Result<FiniteOrtholattice, LatticeError> {
    let spec = match name {
        "O6" => o6_spec(),
        "O7" => o7_spec(),
        "O8" => o8_spec(),
        "MO2" => mo2_spec(),
        "B2" => boolean_spec(1),
        "B4" => boolean_spec(2),
        "B8" => boolean_spec(3),
        "B16" => boolean_spec(4),
        other => return Err(LatticeError::UnknownBuiltin(other.to_string())),
    };
    build_from_hasse(&spec)
}
