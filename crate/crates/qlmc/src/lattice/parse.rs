//! Line-oriented lattice text format.
//!
//! ```text
//! lattice O6
//! elements 0 x y' y x' 1
//! covers 0 x ; 0 y' ; x y ; y' x' ; y 1 ; x' 1
//! ortho 0 1 ; x x' ; y y'
//! ```
//!
//! `#` starts a comment; tokens are whitespace-separated; unknown
//! directives are rejected.

use super::{HasseSpec, LatticeError};

pub fn parse_lattice(text: &str) -> Result<HasseSpec, LatticeError> {
    let mut name = None;
    let mut elements = Vec::new();
    let mut covers = Vec::new();
    let mut ortho = Vec::new();

    let err = |line: usize, msg: String| LatticeError::Parse { line, msg };

    let parse_pairs = |line_no: usize, toks: &[&str]| -> Result<Vec<(String, String)>, LatticeError> {
        let mut out = Vec::new();
        for group in toks.split(|t| *t == ";") {
            if group.is_empty() {
                continue;
            }
            if group.len() != 2 {
                return Err(err(
                    line_no,
                    format!("expected `<a> <b>` pairs separated by `;`, got `{}`", group.join(" ")),
                ));
            }
            out.push((group[0].to_string(), group[1].to_string()));
        }
        Ok(out)
    };

    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "lattice" => {
                if toks.len() != 2 {
                    return Err(err(line_no, "expected `lattice <name>`".into()));
                }
                name = Some(toks[1].to_string());
            }
            "elements" => {
                elements.extend(toks[1..].iter().map(|s| s.to_string()));
            }
            "covers" => {
                covers.extend(parse_pairs(line_no, &toks[1..])?);
            }
            "ortho" => {
                ortho.extend(parse_pairs(line_no, &toks[1..])?);
            }
            other => {
                return Err(err(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    Ok(HasseSpec {
        name: name.ok_or_else(|| err(0, "missing `lattice <name>` directive".into()))?,
        elements,
        covers,
        ortho,
    })
}
