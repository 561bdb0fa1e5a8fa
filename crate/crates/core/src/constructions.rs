//! The named extremal families, built at their literal positions.
//!
//! Pair constructions return `(F, G)` with `G` the largest family
//! cross-intersecting `F`. Relabelings come from [`Family::permute`].

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::bounds::{choose, evaluate, BoundId, BoundValue, Params, Validation};
use crate::error::{Error, Result};
use crate::family::{k_subsets, Family};
use crate::shifting::max_partner;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstructionTag {
    #[serde(rename = "full_star")]
    FullStar,
    #[serde(rename = "ekr_extremal")]
    EkrExtremal,
    #[serde(rename = "main1_pair_r_sets")]
    PairRSets,
    #[serde(rename = "main1_pair_star_kr1")]
    PairStar,
    #[serde(rename = "main1_pair_k3")]
    PairK3,
    #[serde(rename = "J_kr")]
    JKr,
    #[serde(rename = "H_k")]
    Hk,
    #[serde(rename = "G_4")]
    G4,
    #[serde(rename = "katona_even")]
    KatonaEven,
    #[serde(rename = "katona_odd")]
    KatonaOdd,
    #[serde(rename = "W_r_even")]
    WrEven,
    #[serde(rename = "W_star_even")]
    WStarEven,
    #[serde(rename = "W_sharp_6")]
    WSharp6,
    #[serde(rename = "W_r_odd")]
    WrOdd,
    #[serde(rename = "W_star_odd")]
    WStarOdd,
    #[serde(rename = "W_sharp_7")]
    WSharp7,
}

pub const ALL_TAGS: [ConstructionTag; 16] = [
    ConstructionTag::FullStar,
    ConstructionTag::EkrExtremal,
    ConstructionTag::PairRSets,
    ConstructionTag::PairStar,
    ConstructionTag::PairK3,
    ConstructionTag::JKr,
    ConstructionTag::Hk,
    ConstructionTag::G4,
    ConstructionTag::KatonaEven,
    ConstructionTag::KatonaOdd,
    ConstructionTag::WrEven,
    ConstructionTag::WStarEven,
    ConstructionTag::WSharp6,
    ConstructionTag::WrOdd,
    ConstructionTag::WStarOdd,
    ConstructionTag::WSharp7,
];

impl ConstructionTag {
    pub fn name(self) -> &'static str {
        match self {
            ConstructionTag::FullStar => "full_star",
            ConstructionTag::EkrExtremal => "ekr_extremal",
            ConstructionTag::PairRSets => "main1_pair_r_sets",
            ConstructionTag::PairStar => "main1_pair_star_kr1",
            ConstructionTag::PairK3 => "main1_pair_k3",
            ConstructionTag::JKr => "J_kr",
            ConstructionTag::Hk => "H_k",
            ConstructionTag::G4 => "G_4",
            ConstructionTag::KatonaEven => "katona_even",
            ConstructionTag::KatonaOdd => "katona_odd",
            ConstructionTag::WrEven => "W_r_even",
            ConstructionTag::WStarEven => "W_star_even",
            ConstructionTag::WSharp6 => "W_sharp_6",
            ConstructionTag::WrOdd => "W_r_odd",
            ConstructionTag::WStarOdd => "W_star_odd",
            ConstructionTag::WSharp7 => "W_sharp_7",
        }
    }

    pub fn is_pair(self) -> bool {
        matches!(
            self,
            ConstructionTag::EkrExtremal | ConstructionTag::PairRSets | ConstructionTag::PairStar | ConstructionTag::PairK3
        )
    }
}

impl fmt::Display for ConstructionTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_TAGS
            .iter()
            .copied()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Range(format!("unknown construction `{s}`")))
    }
}

/// A construction together with its parameters. `y` is the distinguished
/// element of the odd Katona family and defaults to 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConstructionId {
    pub tag: ConstructionTag,
    pub params: Params,
    pub y: Option<i64>,
}

impl ConstructionId {
    pub fn new(tag: ConstructionTag, params: Params) -> Self {
        ConstructionId { tag, params, y: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Constructed {
    Single(Family),
    Pair(Family, Family),
}

impl Constructed {
    /// `|F|`, or `|F| + |G|` for a pair.
    pub fn total_size(&self) -> usize {
        match self {
            Constructed::Single(f) => f.len(),
            Constructed::Pair(f, g) => f.len() + g.len(),
        }
    }

    pub fn first(&self) -> &Family {
        match self {
            Constructed::Single(f) | Constructed::Pair(f, _) => f,
        }
    }
}

fn require(ok: bool, what: &str) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Range(what.to_string()))
    }
}

/// Mask of the interval `[a, b]`; empty when `a > b`.
fn interval(a: usize, b: usize) -> u64 {
    if a > b {
        0
    } else {
        ((1u64 << (b - a + 1)) - 1) << (a - 1)
    }
}

fn bit(i: usize) -> u64 {
    1u64 << (i - 1)
}

/// All sets of size at most `d`.
fn low_layers(n: usize, d: usize) -> impl Iterator<Item = u64> {
    (0..=d).flat_map(move |i| k_subsets(n, i))
}

/// Parameters after range checks, as machine integers.
struct Checked {
    n: usize,
    k: usize,
    t: usize,
    r: usize,
    l: usize,
    d: usize,
}

fn check(id: &ConstructionId) -> Result<Checked> {
    let p = &id.params;
    let n = p.n()?;
    require((2..=63).contains(&n), "2 <= n <= 63")?;
    let mut c = Checked { n: n as usize, k: 0, t: 0, r: 0, l: 0, d: 0 };
    let t = p.t();
    match id.tag {
        ConstructionTag::FullStar => {
            let k = p.k()?;
            require(k >= 1, "k >= 1")?;
            require(n >= 2 * k, "n >= 2k")?;
            c.k = k as usize;
        }
        ConstructionTag::EkrExtremal => {
            let k = p.k()?;
            let l = p.l.unwrap_or(k);
            require(1 <= l && l <= k, "1 <= l <= k")?;
            require(n >= k + l, "n >= k + l")?;
            c.k = k as usize;
            c.l = l as usize;
        }
        ConstructionTag::PairRSets | ConstructionTag::PairStar | ConstructionTag::PairK3 => {
            let k = if id.tag == ConstructionTag::PairK3 { p.k.unwrap_or(3) } else { p.k()? };
            require(k >= 2, "k >= 2")?;
            if id.tag == ConstructionTag::PairK3 {
                require(k == 3, "k = 3")?;
            }
            require(t >= 0, "t >= 0")?;
            require(n >= 2 * k + t, "n >= 2k + t")?;
            c.k = k as usize;
            c.t = t as usize;
            if id.tag == ConstructionTag::PairRSets {
                let r = p.r()?;
                require(1 <= r && r <= n - k - t + 1, "1 <= r <= n - k - t + 1")?;
                c.r = r as usize;
            }
        }
        ConstructionTag::JKr | ConstructionTag::Hk | ConstructionTag::G4 => {
            let k = if id.tag == ConstructionTag::G4 { p.k.unwrap_or(4) } else { p.k()? };
            if id.tag == ConstructionTag::G4 {
                require(k == 4, "k = 4")?;
            }
            require(k >= 3, "k >= 3")?;
            require(n > 2 * k, "n > 2k")?;
            c.k = k as usize;
            if id.tag == ConstructionTag::JKr {
                let r = p.r()?;
                require(1 <= r && r <= k - 2, "1 <= r <= k - 2")?;
                c.r = r as usize;
            }
        }
        ConstructionTag::KatonaEven | ConstructionTag::KatonaOdd => {
            let odd = id.tag == ConstructionTag::KatonaOdd;
            let d = p.d_for(odd)?;
            let s = 2 * d + odd as i64;
            require(2 <= s && s <= n - 2, "2 <= s <= n - 2")?;
            c.d = d as usize;
            if odd {
                let y = id.y.unwrap_or(1);
                require(1 <= y && y <= n, "1 <= y <= n")?;
                c.l = y as usize;
            }
        }
        ConstructionTag::WrEven
        | ConstructionTag::WStarEven
        | ConstructionTag::WSharp6
        | ConstructionTag::WrOdd
        | ConstructionTag::WStarOdd
        | ConstructionTag::WSharp7 => {
            let odd = matches!(id.tag, ConstructionTag::WrOdd | ConstructionTag::WStarOdd | ConstructionTag::WSharp7);
            let d = match id.tag {
                ConstructionTag::WSharp6 | ConstructionTag::WSharp7 if p.s.is_none() && p.d.is_none() => 3,
                _ => p.d_for(odd)?,
            };
            if matches!(id.tag, ConstructionTag::WSharp6 | ConstructionTag::WSharp7) {
                require(d == 3, if odd { "s = 7" } else { "s = 6" })?;
            }
            let s = 2 * d + odd as i64;
            require(d >= 2, "d >= 2")?;
            require(n >= s + 2, "n >= s + 2")?;
            c.d = d as usize;
            if matches!(id.tag, ConstructionTag::WrEven | ConstructionTag::WrOdd) {
                let r = p.r()?;
                require(1 <= r && r < d, "1 <= r <= d - 1")?;
                c.r = r as usize;
            }
        }
    }
    Ok(c)
}

/// `{I_{k,1}, …, I_{k,m}}` with `I_{k,j} = [2,k] ∪ {k+j}`.
fn i_sets(k: usize, m: usize) -> impl Iterator<Item = u64> {
    (1..=m).map(move |j| interval(2, k) | bit(k + j))
}

fn j_family(n: usize, k: usize, r: usize) -> impl Iterator<Item = u64> {
    let is: Vec<u64> = i_sets(k, r).collect();
    let rest = k_subsets(n, k).filter(move |&f| f & 1 == 1 && is.iter().all(|&i| f & i != 0));
    i_sets(k, r).chain(rest)
}

fn h_family(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let core = interval(2, k);
    i_sets(k, n - k).chain(k_subsets(n, k).filter(move |&f| f & 1 == 1 && f & core != 0))
}

fn g4_family(n: usize) -> impl Iterator<Item = u64> {
    let core = interval(2, 3);
    k_subsets(n, 4).filter(move |&f| if f & 1 == 0 { f & core == core } else { f & core != 0 })
}

fn pair(n: usize, k: usize, f: Family) -> Result<Constructed> {
    let g = max_partner(&f, k)?;
    debug_assert_eq!(f.universe(), n);
    Ok(Constructed::Pair(f, g))
}

pub fn construct(id: &ConstructionId) -> Result<Constructed> {
    let c = check(id)?;
    let n = c.n;
    let single = |it: Box<dyn Iterator<Item = u64>>| Family::from_masks(n, it).map(Constructed::Single);
    match id.tag {
        ConstructionTag::FullStar => single(Box::new(k_subsets(n, c.k).filter(|&f| f & 1 == 1))),
        ConstructionTag::EkrExtremal => {
            let core = interval(1, c.l);
            let f = Family::from_masks(n, k_subsets(n, c.k).filter(|&f| f & core != 0))?;
            let g = Family::from_masks(n, [core])?;
            Ok(Constructed::Pair(f, g))
        }
        ConstructionTag::PairRSets => {
            let core = interval(1, c.k + c.t - 1);
            let f = Family::from_masks(n, (1..=c.r).map(|i| core | bit(c.k + c.t - 1 + i)))?;
            pair(n, c.k, f)
        }
        ConstructionTag::PairStar => {
            let core = interval(1, c.k + c.t - 1);
            let f = Family::from_masks(n, (c.k + c.t..=n).map(|i| core | bit(i)))?;
            pair(n, c.k, f)
        }
        ConstructionTag::PairK3 => {
            let core = interval(1, c.t + 1);
            let f = Family::from_masks(n, k_subsets(n, c.t + 3).filter(|&f| f & core == core))?;
            pair(n, 3, f)
        }
        ConstructionTag::JKr => single(Box::new(j_family(n, c.k, c.r))),
        ConstructionTag::Hk => single(Box::new(h_family(n, c.k))),
        ConstructionTag::G4 => single(Box::new(g4_family(n))),
        ConstructionTag::KatonaEven => single(Box::new(low_layers(n, c.d))),
        ConstructionTag::KatonaOdd => {
            let y = bit(c.l);
            single(Box::new(low_layers(n, c.d).chain(k_subsets(n, c.d + 1).filter(move |&f| f & y != 0))))
        }
        ConstructionTag::WrEven | ConstructionTag::WStarEven => {
            let d = c.d;
            let m = if id.tag == ConstructionTag::WrEven { c.r } else { n - d };
            let ds: Vec<u64> = (1..=m).map(|i| interval(1, d) | bit(d + i)).collect();
            let middle: Box<dyn Iterator<Item = u64>> = if id.tag == ConstructionTag::WrEven {
                let ds = ds.clone();
                Box::new(k_subsets(n, d).filter(move |&f| ds.iter().all(|&x| f & x != 0)))
            } else {
                let core = interval(1, d);
                Box::new(k_subsets(n, d).filter(move |&f| f & core != 0))
            };
            single(Box::new(low_layers(n, d - 1).chain(ds).chain(middle)))
        }
        ConstructionTag::WSharp6 => {
            let core = interval(1, 2);
            single(Box::new(
                low_layers(n, 2)
                    .chain(k_subsets(n, 4).filter(move |&f| f & core == core))
                    .chain(k_subsets(n, 3).filter(move |&f| f & core != 0)),
            ))
        }
        ConstructionTag::WrOdd => single(Box::new(low_layers(n, c.d).chain(j_family(n, c.d + 1, c.r)))),
        ConstructionTag::WStarOdd => single(Box::new(low_layers(n, c.d).chain(h_family(n, c.d + 1)))),
        ConstructionTag::WSharp7 => single(Box::new(low_layers(n, 3).chain(g4_family(n)))),
    }
}

fn low_sum(n: usize, d: usize) -> BigUint {
    (0..=d).map(|i| choose(n as i64, i as i64)).sum()
}

/// Closed-form size of [`construct`]; `|F| + |G|` for pairs.
pub fn expected_size(id: &ConstructionId) -> Result<BoundValue> {
    let c = check(id)?;
    let ch = |a: usize, b: usize| choose(a as i64, b as i64);
    // signed binomial for differences whose arguments may go negative
    let chi = |a: i64, b: i64| choose(a, b);
    let (n, k, t, r, d) = (c.n, c.k, c.t, c.r, c.d);
    let value = match id.tag {
        ConstructionTag::FullStar => ch(n - 1, k - 1),
        ConstructionTag::EkrExtremal => ch(n, k) - ch(n - c.l, k) + 1u32,
        ConstructionTag::PairRSets => {
            let m = n - k - t + 1;
            ch(n, k) - ch(m, k) + chi(m as i64 - r as i64, k as i64 - r as i64) + r
        }
        ConstructionTag::PairStar => {
            let m = n - k - t + 1;
            ch(n, k) - ch(m, k) + m
        }
        ConstructionTag::PairK3 => ch(n - t - 1, 2) + ch(n, 3) - ch(n - t - 1, 3),
        ConstructionTag::JKr => ch(n - 1, k - 1) - ch(n - k, k - 1) + ch(n - k - r, k - r - 1) + r,
        ConstructionTag::Hk => ch(n - 1, k - 1) - ch(n - k, k - 1) + (n - k),
        ConstructionTag::G4 => ch(n - 3, 2) + ch(n - 1, 3) - ch(n - 3, 3),
        ConstructionTag::KatonaEven => low_sum(n, d),
        ConstructionTag::KatonaOdd => low_sum(n, d) + ch(n - 1, d),
        ConstructionTag::WrEven => low_sum(n, d) - ch(n - d, d) + ch(n - d - r, d - r) + r,
        ConstructionTag::WStarEven => low_sum(n, d) - ch(n - d, d) + (n - d),
        ConstructionTag::WSharp6 => low_sum(n, 3) - ch(n - 2, 3) + ch(n - 2, 2),
        ConstructionTag::WrOdd => {
            low_sum(n, d) + ch(n - 1, d) - ch(n - d - 1, d) + ch(n - d - r - 1, d - r) + r
        }
        ConstructionTag::WStarOdd => low_sum(n, d) + ch(n - 1, d) - ch(n - d - 1, d) + (n - d - 1),
        ConstructionTag::WSharp7 => low_sum(n, 3) + ch(n - 3, 2) + ch(n - 1, 3) - ch(n - 3, 3),
    };
    Ok(BoundValue { value, regime: id.tag.name(), unchecked: false })
}

/// The bound this construction attains at its own parameters, if it is an
/// extremal family there. The returned parameters are those of the bound.
pub fn attained_bound(id: &ConstructionId) -> Result<Option<(BoundId, Params)>> {
    let c = check(id)?;
    let (n, k, t, r, d) = (c.n as i64, c.k as i64, c.t as i64, c.r as i64, c.d as i64);
    let hemi = |r: i64| Params::nk(n, k).with_t(t).with_r(r);
    let even = |r: i64| Params { n: Some(n), s: Some(2 * d), r: Some(r), ..Default::default() };
    let odd = |r: i64| Params { n: Some(n), s: Some(2 * d + 1), r: Some(r), ..Default::default() };
    let out = match id.tag {
        ConstructionTag::FullStar => (k >= 2).then(|| (BoundId::Ekr, Params::nk(n, k))),
        ConstructionTag::EkrExtremal => {
            if c.l == c.k {
                Some((BoundId::Hm, Params::nk(n, k)))
            } else if c.l >= 2 {
                Some((BoundId::Ft, Params::nk(n, k).with_l(c.l as i64)))
            } else {
                None
            }
        }
        ConstructionTag::PairRSets => {
            let top = n - k - t + 1;
            if r < k || r == top {
                Some((BoundId::Main1, hemi(r)))
            } else {
                None
            }
        }
        ConstructionTag::PairStar | ConstructionTag::PairK3 => Some((BoundId::Main1, hemi(k))),
        ConstructionTag::JKr => Some((BoundId::Diversity, Params::nk(n, k).with_r(r))),
        ConstructionTag::Hk => Some((BoundId::Diversity, Params::nk(n, k).with_r(k - 1))),
        ConstructionTag::G4 => Some((BoundId::Diversity, Params::nk(n, 4).with_r(3))),
        ConstructionTag::KatonaEven => {
            Some((BoundId::KatonaEven, Params { n: Some(n), s: Some(2 * d), ..Default::default() }))
        }
        ConstructionTag::KatonaOdd => {
            Some((BoundId::KatonaOdd, Params { n: Some(n), s: Some(2 * d + 1), ..Default::default() }))
        }
        ConstructionTag::WrEven => Some((BoundId::Main5Even, even(r))),
        ConstructionTag::WStarEven | ConstructionTag::WSharp6 => Some((BoundId::Main5Even, even(d))),
        ConstructionTag::WrOdd => Some((BoundId::Main5Odd, odd(r))),
        ConstructionTag::WStarOdd | ConstructionTag::WSharp7 => Some((BoundId::Main5Odd, odd(d))),
    };
    Ok(out)
}

/// Evaluates [`attained_bound`].
pub fn attained_bound_value(id: &ConstructionId) -> Result<Option<BoundValue>> {
    match attained_bound(id)? {
        Some((b, p)) => evaluate(b, &p, Validation::Strict).map(Some),
        None => Ok(None),
    }
}

/// Every parameter point of `tag` with `n <= max_n` that passes the range checks.
pub fn in_range_points(tag: ConstructionTag, max_n: i64) -> Vec<ConstructionId> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for k in 0..=n {
            for t in 0..=n {
                for r in 0..=n {
                    for dl in 0..=n {
                        let mut p = Params { n: Some(n), ..Default::default() };
                        let uses_k = !matches!(
                            tag,
                            ConstructionTag::KatonaEven
                                | ConstructionTag::KatonaOdd
                                | ConstructionTag::WrEven
                                | ConstructionTag::WStarEven
                                | ConstructionTag::WSharp6
                                | ConstructionTag::WrOdd
                                | ConstructionTag::WStarOdd
                                | ConstructionTag::WSharp7
                                | ConstructionTag::G4
                        );
                        let uses_t = matches!(
                            tag,
                            ConstructionTag::PairRSets | ConstructionTag::PairStar | ConstructionTag::PairK3
                        );
                        let uses_r =
                            matches!(tag, ConstructionTag::PairRSets | ConstructionTag::JKr | ConstructionTag::WrEven | ConstructionTag::WrOdd);
                        let uses_l = tag == ConstructionTag::EkrExtremal;
                        let uses_d = matches!(
                            tag,
                            ConstructionTag::KatonaEven
                                | ConstructionTag::KatonaOdd
                                | ConstructionTag::WrEven
                                | ConstructionTag::WStarEven
                                | ConstructionTag::WrOdd
                                | ConstructionTag::WStarOdd
                        );
                        if (!uses_k && k > 0) || (!uses_t && t > 0) || (!uses_r && r > 0) || (!uses_l && !uses_d && dl > 0) {
                            continue;
                        }
                        if tag == ConstructionTag::PairK3 && k != 3 {
                            continue;
                        }
                        if uses_k && tag != ConstructionTag::PairK3 {
                            p.k = Some(k);
                        }
                        if uses_t {
                            p.t = Some(t);
                        }
                        if uses_r {
                            p.r = Some(r);
                        }
                        if uses_l {
                            p.l = Some(dl);
                        }
                        if uses_d {
                            p.d = Some(dl);
                        }
                        let id = ConstructionId::new(tag, p);
                        if check(&id).is_ok() {
                            out.push(id);
                        }
                    }
                }
            }
        }
    }
    out
}
