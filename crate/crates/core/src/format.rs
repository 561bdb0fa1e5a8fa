//! Plain-text family files.
//!
//! ```text
//! # optional comments
//! n=5
//! {1,2}
//! {}
//! {2,4,5}
//! ```
//!
//! The header is the first non-comment line. Each further non-blank line is
//! one set with strictly ascending elements in `[1, n]`. `#` starts a comment
//! anywhere on a line. The writer emits members in the family's canonical
//! order, so `write(parse(write(F)))` reproduces the text byte for byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::family::{write_set, Family, MAX_UNIVERSE};

pub fn parse_family(text: &str) -> Result<Family> {
    let mut n: Option<usize> = None;
    let mut masks = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let err = |msg: String| Error::Parse { line: line_no, msg };
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some(universe) = n else {
            let value = line
                .strip_prefix("n=")
                .ok_or_else(|| err(format!("expected header `n=<int>`, found `{line}`")))?;
            let value: usize = value
                .trim()
                .parse()
                .map_err(|_| err(format!("invalid universe size `{}`", value.trim())))?;
            if !(2..=MAX_UNIVERSE).contains(&value) {
                return Err(err(format!("universe size {value} outside 2..=63")));
            }
            n = Some(value);
            continue;
        };
        let body = line
            .strip_prefix('{')
            .and_then(|l| l.strip_suffix('}'))
            .ok_or_else(|| err(format!("expected a set like `{{1,2}}`, found `{line}`")))?;
        let mut mask = 0u64;
        let mut last = 0usize;
        if !body.trim().is_empty() {
            for tok in body.split(',') {
                let tok = tok.trim();
                let e: usize = tok.parse().map_err(|_| err(format!("invalid element `{tok}`")))?;
                if e == 0 || e > universe {
                    return Err(err(format!("element {e} outside [1, {universe}]")));
                }
                if e <= last {
                    return Err(err("elements must be strictly ascending".into()));
                }
                last = e;
                mask |= 1 << (e - 1);
            }
        }
        masks.push((line_no, mask));
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing header `n=<int>`".into() })?;
    let mut sorted: Vec<u64> = masks.iter().map(|&(_, m)| m).collect();
    sorted.sort_unstable();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        let line = masks.iter().filter(|&&(_, m)| m == w[0]).nth(1).map_or(0, |&(l, _)| l);
        return Err(Error::Parse { line, msg: "duplicate set".into() });
    }
    Family::from_masks(n, sorted)
}

pub fn write_family(family: &Family) -> String {
    let mut out = format!("n={}\n", family.universe());
    for &m in family.masks() {
        write_set(&mut out, m).expect("writing to a String");
        out.push('\n');
    }
    out
}

/// Sets as ascending element lists, the shape used in JSON output.
pub fn family_to_lists(family: &Family) -> Vec<Vec<usize>> {
    family.iter().map(|s| s.elements().collect()).collect()
}

pub fn render_inline(family: &Family) -> String {
    let mut out = String::from("{");
    for (idx, &m) in family.masks().iter().enumerate() {
        if idx > 0 {
            out.push_str(", ");
        }
        write_set(&mut out, m).expect("writing to a String");
    }
    let _ = write!(out, "}}");
    out
}
