//! Text and JSON formats for restricted posets, polynomials and slide
//! expansions.
//!
//! The text poset format is line oriented:
//!
//! ```text
//! # comment
//! p=3
//! cover 3 1
//! rho 1 4
//! rho 2 3
//! rho 3 2
//! ```
//!
//! Every label needs exactly one `rho` line. The JSON form is
//! `{"p": 3, "covers": [[3, 1]], "rho": [4, 3, 2]}`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::poset::Poset;
use crate::restrict::RestrictionMap;
use crate::slide::SlideExpansion;

/// Version tag written into every JSON document.
pub const SCHEMA_VERSION: u32 = 1;

/// A poset together with its restriction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedPoset {
    pub poset: Poset,
    pub rho: RestrictionMap,
}

#[derive(Serialize, Deserialize)]
struct PosetDoc {
    p: usize,
    covers: Vec<(usize, usize)>,
    rho: Vec<i64>,
}

fn parse_err(line: usize, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("line {line}: {msg}"))
}

/// Parses either format, choosing JSON when the input starts with `{`.
pub fn parse_restricted_poset(input: &str) -> Result<RestrictedPoset> {
    if input.trim_start().starts_with('{') {
        parse_json(input)
    } else {
        parse_text(input)
    }
}

fn parse_json(input: &str) -> Result<RestrictedPoset> {
    let doc: PosetDoc = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    if doc.rho.len() != doc.p {
        return Err(Error::Parse(format!(
            "rho has {} entries for p={}",
            doc.rho.len(),
            doc.p
        )));
    }
    let mut seen = HashSet::new();
    if let Some(dup) = doc.covers.iter().find(|c| !seen.insert(**c)) {
        return Err(Error::Parse(format!("duplicate cover {} {}", dup.0, dup.1)));
    }
    let poset = Poset::from_covers(doc.p, &doc.covers)?;
    Ok(RestrictedPoset {
        poset,
        rho: RestrictionMap::new(doc.rho),
    })
}

fn parse_text(input: &str) -> Result<RestrictedPoset> {
    let mut p: Option<usize> = None;
    let mut covers: Vec<(usize, usize)> = Vec::new();
    let mut rho: Vec<(usize, usize, i64)> = Vec::new();
    for (k, raw) in input.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(v) = line.strip_prefix("p=") {
            if p.is_some() {
                return Err(parse_err(line_no, "p given twice"));
            }
            p = Some(v.trim().parse().map_err(|e| parse_err(line_no, e))?);
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields.as_slice() {
            ["cover", i, j] => {
                let i = i.parse().map_err(|e| parse_err(line_no, e))?;
                let j = j.parse().map_err(|e| parse_err(line_no, e))?;
                if covers.contains(&(i, j)) {
                    return Err(parse_err(line_no, format!("duplicate cover {i} {j}")));
                }
                covers.push((i, j));
            }
            ["rho", i, v] => {
                let i = i.parse().map_err(|e| parse_err(line_no, e))?;
                let v = v.parse().map_err(|e| parse_err(line_no, e))?;
                rho.push((line_no, i, v));
            }
            _ => return Err(parse_err(line_no, format!("unrecognised line `{line}`"))),
        }
    }
    let p = p.ok_or_else(|| Error::Parse("missing `p=` line".into()))?;
    let poset = Poset::from_covers(p, &covers)?;
    let mut bounds: Vec<Option<i64>> = vec![None; p];
    for (line_no, i, v) in rho {
        if i == 0 || i > p {
            return Err(parse_err(line_no, format!("label {i} outside 1..={p}")));
        }
        if bounds[i - 1].replace(v).is_some() {
            return Err(parse_err(line_no, format!("rho for {i} given twice")));
        }
    }
    let bounds = bounds
        .into_iter()
        .enumerate()
        .map(|(k, v)| v.ok_or_else(|| Error::Parse(format!("missing rho for {}", k + 1))))
        .collect::<Result<Vec<_>>>()?;
    Ok(RestrictedPoset {
        poset,
        rho: RestrictionMap::new(bounds),
    })
}

/// Writes the text poset format.
pub fn format_restricted_poset(rp: &RestrictedPoset) -> String {
    let mut out = format!("p={}\n", rp.poset.len());
    for &(i, j) in rp.poset.covers() {
        out.push_str(&format!("cover {i} {j}\n"));
    }
    for (k, v) in rp.rho.bounds().iter().enumerate() {
        out.push_str(&format!("rho {} {v}\n", k + 1));
    }
    out
}

/// Parses a comma separated list of integers; the empty string is the empty
/// list. Surrounding parentheses are allowed.
pub fn parse_list(s: &str) -> Result<Vec<u32>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse()
                .map_err(|e| Error::Parse(format!("`{}`: {e}", t.trim())))
        })
        .collect()
}

/// One `coeff e1 … en` line per term, in descending reverse lexicographic
/// order.
pub fn polynomial_text(poly: &IntPolynomial) -> String {
    let mut out = String::new();
    for (exps, c) in poly.terms() {
        out.push_str(&c.to_string());
        for e in exps {
            out.push(' ');
            out.push_str(&e.to_string());
        }
        out.push('\n');
    }
    if out.is_empty() {
        out.push_str("0\n");
    }
    out
}

pub fn polynomial_json(poly: &IntPolynomial) -> Value {
    let terms: Vec<Value> = poly.terms().into_iter().map(|(e, c)| json!([c, e])).collect();
    json!({ "schema": SCHEMA_VERSION, "nvars": poly.nvars(), "terms": terms })
}

/// One `coeff F(c1,...,ck)` line per term, in descending reverse
/// lexicographic order of the index; `0` for the empty expansion.
pub fn expansion_text(e: &SlideExpansion) -> String {
    if e.is_zero() {
        return "0\n".to_string();
    }
    e.iter().map(|(a, c)| format!("{c} F{a}\n")).collect()
}

pub fn expansion_json(e: &SlideExpansion) -> Value {
    let terms: Vec<Value> = e.iter().map(|(a, c)| json!([c, a.parts()])).collect();
    json!({ "schema": SCHEMA_VERSION, "terms": terms })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::WeakComposition;

    #[test]
    fn text_round_trip() {
        let src = "# running example\np=3\ncover 3 1\n\nrho 1 4\nrho 2 3\nrho 3 2\n";
        let rp = parse_restricted_poset(src).unwrap();
        assert_eq!(rp.poset.covers(), &[(3, 1)]);
        assert_eq!(rp.rho.bounds(), &[4, 3, 2]);
        assert_eq!(parse_restricted_poset(&format_restricted_poset(&rp)).unwrap(), rp);
    }

    #[test]
    fn json_input() {
        let rp = parse_restricted_poset(r#"{"p": 2, "covers": [[2, 1]], "rho": [2, 2]}"#).unwrap();
        assert!(rp.poset.lt(2, 1));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse_restricted_poset("p=2\ncover 1 2\ncover 1 2\nrho 1 1\nrho 2 1"), Err(Error::Parse(_))));
        assert!(matches!(parse_restricted_poset("p=2\nrho 1 1"), Err(Error::Parse(_))));
        assert!(matches!(parse_restricted_poset("p=2\nedge 1 2"), Err(Error::Parse(_))));
        assert!(matches!(parse_restricted_poset("cover 1 2"), Err(Error::Parse(_))));
        assert_eq!(
            parse_restricted_poset("p=2\ncover 1 2\ncover 2 1\nrho 1 1\nrho 2 1"),
            Err(Error::Cycle(1))
        );
    }

    #[test]
    fn lists() {
        assert_eq!(parse_list("0,0,2").unwrap(), vec![0, 0, 2]);
        assert_eq!(parse_list("(1, 2)").unwrap(), vec![1, 2]);
        assert_eq!(parse_list("").unwrap(), Vec::<u32>::new());
        assert!(parse_list("1,x").is_err());
    }

    #[test]
    fn expansion_lines() {
        let mut e = SlideExpansion::new();
        e.add(WeakComposition::new(vec![0, 2]), 1);
        e.add(WeakComposition::new(vec![1, 1]), -2);
        assert_eq!(expansion_text(&e), "-2 F(1,1)\n1 F(0,2)\n");
        assert_eq!(expansion_text(&SlideExpansion::new()), "0\n");
        assert_eq!(expansion_json(&e)["terms"][0], json!([-2, [1, 1]]));
    }

    #[test]
    fn polynomial_lines() {
        let mut p = IntPolynomial::zero(2);
        p.add_term(vec![2, 0], 1);
        p.add_term(vec![1, 1], 3);
        assert_eq!(polynomial_text(&p), "1 2 0\n3 1 1\n");
        assert_eq!(polynomial_json(&p)["schema"], json!(1));
    }
}
