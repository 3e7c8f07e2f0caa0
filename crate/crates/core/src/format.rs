//! Plain-text family format.
//!
//! ```text
//! n=3
//! {}
//! {1,3}
//! ```
//!
//! The first line fixes the ground size; every later non-empty line is one
//! set, written with ascending comma-separated elements. Several families may
//! share a file, each starting at its own `n=` line.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::Family;
use crate::set::{ElementSet, GroundSize};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn parse_header(line_no: usize, line: &str) -> Result<GroundSize> {
    let rest = line
        .strip_prefix("n=")
        .ok_or_else(|| parse_err(line_no, format!("expected `n=<k>` header, found `{line}`")))?;
    let n: u32 = rest.trim().parse().map_err(|_| parse_err(line_no, format!("invalid ground size `{rest}`")))?;
    GroundSize::new(n).map_err(|e| parse_err(line_no, e.to_string()))
}

/// Parses one `{a,b,...}` set over ground `n`.
pub fn parse_set(text: &str, n: GroundSize) -> std::result::Result<ElementSet, String> {
    let inner = text
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| format!("expected a set in braces, found `{text}`"))?;
    let inner = inner.trim();
    if inner.is_empty() {
        return Ok(ElementSet::EMPTY);
    }
    let mut bits = 0u32;
    let mut prev = 0u32;
    for tok in inner.split(',') {
        let tok = tok.trim();
        if tok.is_empty() || !tok.bytes().all(|c| c.is_ascii_digit()) {
            return Err(format!("invalid element `{tok}`"));
        }
        let e: u32 = tok.parse().map_err(|_| format!("invalid element `{tok}`"))?;
        if e == 0 || e > n.get() {
            return Err(format!("element {e} out of range for n={n}"));
        }
        if e <= prev {
            return Err("unsorted members".to_string());
        }
        prev = e;
        bits |= 1 << (e - 1);
    }
    Ok(ElementSet::from_bits(bits))
}

fn parse_body<'a>(n: GroundSize, lines: impl Iterator<Item = (usize, &'a str)>) -> Result<Family> {
    let mut f = Family::empty(n);
    for (line_no, line) in lines {
        let set = parse_set(line, n).map_err(|msg| parse_err(line_no, msg))?;
        if !f.insert(set).expect("parse_set keeps sets inside [n]") {
            return Err(parse_err(line_no, format!("duplicate set {set}")));
        }
    }
    Ok(f)
}

fn numbered(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty())
}

/// Parses a file holding exactly one family.
pub fn parse_family(text: &str) -> Result<Family> {
    let mut families = parse_families(text)?;
    match families.len() {
        0 => Err(parse_err(1, "missing `n=<k>` header")),
        1 => Ok(families.pop().unwrap()),
        _ => Err(parse_err(1, "expected a single family, found several `n=` headers")),
    }
}

/// Parses a file holding any number of families.
pub fn parse_families(text: &str) -> Result<Vec<Family>> {
    let mut out = Vec::new();
    let mut lines = numbered(text).peekable();
    while let Some((line_no, header)) = lines.next() {
        let n = parse_header(line_no, header)?;
        let mut body = Vec::new();
        while let Some(&(l, t)) = lines.peek() {
            if t.starts_with("n=") {
                break;
            }
            body.push((l, t));
            lines.next();
        }
        out.push(parse_body(n, body.into_iter())?);
    }
    Ok(out)
}

/// Renders a family, sets in colex order.
pub fn to_text(f: &Family) -> String {
    let mut s = String::new();
    writeln!(s, "n={}", f.ground()).unwrap();
    for set in f {
        writeln!(s, "{set}").unwrap();
    }
    s
}

/// Renders several families separated by blank lines.
pub fn families_to_text<'a>(families: impl IntoIterator<Item = &'a Family>) -> String {
    families.into_iter().map(to_text).collect::<Vec<_>>().join("\n")
}
