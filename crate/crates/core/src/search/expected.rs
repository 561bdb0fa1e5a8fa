//! The maximizer classes each theorem predicts, and matching of search
//! results against them.
//!
//! Candidate families are taken from the equality statements and kept only if
//! they satisfy the side condition and attain the bound at the given
//! parameters; a few listed families attain it only for some `r`.

use super::Kind;
use crate::bounds::{evaluate, BoundValue, Params, Validation};
use crate::constructions::{construct, ConstructionId, ConstructionTag};
use crate::error::Result;
use crate::family::Family;
use crate::iso::are_isomorphic;
use crate::shifting::max_partner;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectedClass {
    pub label: String,
    pub family: Family,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComparison {
    /// Every found class is isomorphic to an expected one.
    pub all_expected: bool,
    /// Every expected class was found.
    pub all_found: bool,
    pub missing: Vec<String>,
    pub unexpected: usize,
}

impl ClassComparison {
    pub fn exact(&self) -> bool {
        self.all_expected && self.all_found
    }
}

fn build(tag: ConstructionTag, p: Params) -> Option<Family> {
    construct(&ConstructionId::new(tag, p)).ok().map(|c| c.first().clone())
}

fn gamma_of_layer(f: &Family, layer: usize) -> usize {
    f.layer(layer).diversity()
}

/// The classes predicted at `p`, or `None` when the theorem gives no
/// equality characterization there.
pub fn expected_classes(kind: Kind, p: &Params, bound: &BoundValue) -> Result<Option<Vec<ExpectedClass>>> {
    let target = bound.as_u64().unwrap_or(u64::MAX) as usize;
    let n = p.n()?;
    let mut out = Vec::new();
    let mut push = |label: &str, f: Option<Family>, ok: &dyn Fn(&Family) -> bool| {
        if let Some(f) = f {
            if ok(&f) && !out.iter().any(|e: &ExpectedClass| e.family == f) {
                out.push(ExpectedClass { label: label.to_string(), family: f });
            }
        }
    };
    match kind {
        Kind::Hemibundled | Kind::CrossPair => {
            let (k, r) = (p.k()?, p.r()?);
            let t = if kind == Kind::CrossPair { 0 } else { p.t() };
            if n == 2 * k + t {
                return Ok(None);
            }
            let base = Params::nk(n, k).with_t(t);
            let mut cands = Vec::new();
            if r < k {
                cands.push(("r_sets", build(ConstructionTag::PairRSets, base.with_r(r))));
            }
            cands.push(("star", build(ConstructionTag::PairStar, base)));
            if k == 3 {
                cands.push(("k3", build(ConstructionTag::PairK3, base)));
            }
            let kk = k as usize;
            let r = r as usize;
            for (label, f) in cands {
                let Some(f) = f else { continue };
                let g = max_partner(&f, kk)?;
                if kind == Kind::Hemibundled {
                    push(label, Some(f), &|f| f.len() >= r && f.len() + max_partner(f, kk).unwrap().len() == target);
                } else {
                    let attains = f.len().min(g.len()) >= r && f.len() + g.len() == target;
                    if attains {
                        push(label, Some(f), &|_| true);
                        push(&format!("{label} (partner side)"), Some(g), &|_| true);
                    }
                }
            }
        }
        Kind::Capped => return Ok(None),
        Kind::Diversity => {
            let (k, r) = (p.k()?, p.r()?);
            let ok = |f: &Family| f.is_intersecting() && f.diversity() >= r as usize && f.len() == target;
            if r <= k - 2 {
                push("J_kr", build(ConstructionTag::JKr, Params::nk(n, k).with_r(r)), &ok);
            }
            push("H_k", build(ConstructionTag::Hk, Params::nk(n, k)), &ok);
            if k == 4 {
                push("G_4", build(ConstructionTag::G4, Params { n: Some(n), ..Default::default() }), &ok);
            }
        }
        Kind::SUnion => {
            let s = p.s.ok_or(crate::error::Error::MissingParam("s"))?;
            let ps = Params { n: Some(n), s: Some(s), ..Default::default() };
            let tag = if s % 2 == 0 { ConstructionTag::KatonaEven } else { ConstructionTag::KatonaOdd };
            push("katona", build(tag, ps), &|f| f.len() == target);
        }
        Kind::Conditioned => {
            let s = p.s.ok_or(crate::error::Error::MissingParam("s"))?;
            let r = p.r()?;
            let (d, odd) = (s / 2, s % 2 == 1);
            let ps = Params { n: Some(n), s: Some(s), ..Default::default() };
            let ok = |f: &Family| {
                let side = if odd { gamma_of_layer(f, d as usize + 1) } else { f.layer(d as usize + 1).len() };
                f.is_s_union(s as usize) && side >= r as usize && f.len() == target
            };
            let (wr, wstar, wsharp, sharp_d) = if odd {
                (ConstructionTag::WrOdd, ConstructionTag::WStarOdd, ConstructionTag::WSharp7, 3)
            } else {
                (ConstructionTag::WrEven, ConstructionTag::WStarEven, ConstructionTag::WSharp6, 3)
            };
            if r < d {
                push("W_r", build(wr, Params { r: Some(r), ..ps }), &ok);
            }
            push("W_star", build(wstar, ps), &ok);
            if d == sharp_d {
                push("W_sharp", build(wsharp, ps), &ok);
            }
        }
    }
    Ok(Some(out))
}

/// Bound value used to decide which listed families attain it.
pub(crate) fn strict_bound(kind: Kind, p: &Params) -> Option<BoundValue> {
    let id = kind.bound_id(p)?;
    evaluate(id, p, Validation::Strict).ok()
}

pub fn compare_classes(found: &[Family], expected: &[ExpectedClass]) -> Result<ClassComparison> {
    let mut matched = vec![false; expected.len()];
    let mut unexpected = 0;
    for f in found {
        let mut hit = false;
        for (i, e) in expected.iter().enumerate() {
            if are_isomorphic(f, &e.family)?.is_isomorphic() {
                matched[i] = true;
                hit = true;
            }
        }
        if !hit {
            unexpected += 1;
        }
    }
    let missing: Vec<String> =
        expected.iter().zip(&matched).filter(|(_, &m)| !m).map(|(e, _)| e.label.clone()).collect();
    Ok(ClassComparison { all_expected: unexpected == 0, all_found: missing.is_empty(), missing, unexpected })
}
