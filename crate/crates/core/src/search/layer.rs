//! The layer-pair inequality for `s`-union families: for `1 <= i <= s/2`,
//! `|F_i| + |F_{s+1-i}| <= C(n, i)`, with equality only when `F_i` is the
//! whole layer and `F_{s+1-i}` is empty.

use serde::Serialize;

use crate::bounds::choose_u128;
use crate::error::{Error, Result};
use crate::family::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LayerCheck {
    pub i: usize,
    pub lhs: u64,
    pub rhs: u64,
    pub tight: bool,
    /// False only if the inequality or its equality case fails, which would
    /// point at a bug in the caller rather than a counterexample.
    pub consistent: bool,
}

pub fn check_layer_inequality(family: &Family, s: usize) -> Result<Vec<LayerCheck>> {
    let n = family.universe();
    if !(2..=n.saturating_sub(2)).contains(&s) {
        return Err(Error::Range(format!("need 2 <= s <= n - 2, got s = {s}, n = {n}")));
    }
    if !family.is_s_union(s) {
        return Err(Error::NotUnion(s));
    }
    let sizes = family.layer_sizes();
    let out = (1..=s / 2)
        .map(|i| {
            let lhs = (sizes[i] + sizes[s + 1 - i]) as u64;
            let rhs = choose_u128(n, i) as u64;
            let tight = lhs == rhs;
            let equality_case = sizes[i] as u64 == rhs && sizes[s + 1 - i] == 0;
            LayerCheck { i, lhs, rhs, tight, consistent: lhs <= rhs && tight == equality_case }
        })
        .collect();
    Ok(out)
}
