//! Exact evaluation of the closed-form bounds.
//!
//! Every evaluator checks the parameter range of the statement it comes from.
//! [`Validation::Unchecked`] skips those checks and evaluates the raw formula;
//! the result is flagged so callers can label it.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// `C(n, k)` as a machine integer; zero outside `0 <= k <= n`.
pub fn choose_u128(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // exact at each step: acc = C(n - k + i + 1, i + 1)
        acc = acc * (n - k + i + 1) as u128 / (i + 1) as u128;
    }
    acc
}

/// Total binomial: zero when `n < 0`, `k < 0` or `k > n`.
pub fn choose(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - k + i + 1;
        acc /= i + 1;
    }
    acc
}

/// `C(n, k)` with the usual convention `C(n, k) = 0` for `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::Range(format!("binomial needs n >= 0, got {n}")));
    }
    Ok(choose(n, k))
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub s: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<i64>,
}

impl Params {
    pub fn nk(n: i64, k: i64) -> Self {
        Params { n: Some(n), k: Some(k), ..Default::default() }
    }

    pub fn with_t(mut self, t: i64) -> Self {
        self.t = Some(t);
        self
    }

    pub fn with_r(mut self, r: i64) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_l(mut self, l: i64) -> Self {
        self.l = Some(l);
        self
    }

    pub fn with_s(mut self, s: i64) -> Self {
        self.s = Some(s);
        self
    }

    pub fn with_d(mut self, d: i64) -> Self {
        self.d = Some(d);
        self
    }

    pub fn n(&self) -> Result<i64> {
        self.n.ok_or(Error::MissingParam("n"))
    }

    pub fn k(&self) -> Result<i64> {
        self.k.ok_or(Error::MissingParam("k"))
    }

    /// `t` defaults to zero.
    pub fn t(&self) -> i64 {
        self.t.unwrap_or(0)
    }

    pub fn r(&self) -> Result<i64> {
        self.r.ok_or(Error::MissingParam("r"))
    }

    pub fn l(&self) -> Result<i64> {
        self.l.ok_or(Error::MissingParam("l"))
    }

    /// `d` given directly, or derived from `s` with the requested parity.
    pub fn d_for(&self, odd: bool) -> Result<i64> {
        match (self.s, self.d) {
            (Some(s), _) => {
                if (s % 2 == 1) != odd {
                    let want = if odd { "odd" } else { "even" };
                    return Err(Error::Range(format!("s = {s} must be {want}")));
                }
                Ok(s / 2)
            }
            (None, Some(d)) => Ok(d),
            (None, None) => Err(Error::MissingParam("s")),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, v) in [
            ("n", self.n),
            ("k", self.k),
            ("t", self.t),
            ("r", self.r),
            ("s", self.s),
            ("l", self.l),
            ("d", self.d),
        ] {
            if let Some(v) = v {
                if !first {
                    f.write_str(" ")?;
                }
                first = false;
                write!(f, "{name}={v}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Validation {
    Strict,
    Unchecked,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundValue {
    pub value: BigUint,
    pub regime: &'static str,
    pub unchecked: bool,
}

impl BoundValue {
    pub fn as_u64(&self) -> Option<u64> {
        u64::try_from(&self.value).ok()
    }
}

/// Every closed-form bound the toolkit knows.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundId {
    /// `C(n-1, k-1)` for intersecting `k`-uniform families.
    Ekr,
    /// Sum bound for non-empty cross-intersecting `k`-uniform pairs.
    Hm,
    /// Sum bound for non-empty cross-intersecting `k`- and `ℓ`-uniform pairs.
    Ft,
    /// Sum bound when both families are non-trivial.
    FtNontrivial,
    /// Hemi-bundled pairs with `F` non-empty.
    F16,
    /// Hemi-bundled pairs with `|F| >= 2`.
    W23,
    /// Hemi-bundled pairs with `|F| >= r`; regime picked from `r`.
    Main1,
    /// Cross-intersecting pairs with `|G| >= |F| >= r`; regime picked from `r`.
    F24,
    F24I,
    F24Ii,
    /// Cross-intersecting pairs with `|F ∩ G| <= r - 1`; regime picked from `r`.
    Main3,
    Main3I,
    Main3Ii,
    /// Intersecting `k`-uniform families with diversity at least `r`.
    Diversity,
    KatonaEven,
    KatonaOdd,
    /// `s`-union families with `|F_{d+1}| >= r`, `s = 2d`.
    Main5Even,
    /// `s`-union families with `γ(F_{d+1}) >= r`, `s = 2d + 1`.
    Main5Odd,
    /// `s`-union families that are not contained in the Katona family.
    NonKatonaEven,
    NonKatonaOdd,
}

pub const ALL_BOUNDS: [BoundId; 20] = [
    BoundId::Ekr,
    BoundId::Hm,
    BoundId::Ft,
    BoundId::FtNontrivial,
    BoundId::F16,
    BoundId::W23,
    BoundId::Main1,
    BoundId::F24,
    BoundId::F24I,
    BoundId::F24Ii,
    BoundId::Main3,
    BoundId::Main3I,
    BoundId::Main3Ii,
    BoundId::Diversity,
    BoundId::KatonaEven,
    BoundId::KatonaOdd,
    BoundId::Main5Even,
    BoundId::Main5Odd,
    BoundId::NonKatonaEven,
    BoundId::NonKatonaOdd,
];

impl BoundId {
    pub fn name(self) -> &'static str {
        match self {
            BoundId::Ekr => "ekr",
            BoundId::Hm => "hm",
            BoundId::Ft => "ft",
            BoundId::FtNontrivial => "ft_nontrivial",
            BoundId::F16 => "f16",
            BoundId::W23 => "w23",
            BoundId::Main1 => "main1",
            BoundId::F24 => "f24",
            BoundId::F24I => "f24_i",
            BoundId::F24Ii => "f24_ii",
            BoundId::Main3 => "main3",
            BoundId::Main3I => "main3_i",
            BoundId::Main3Ii => "main3_ii",
            BoundId::Diversity => "diversity",
            BoundId::KatonaEven => "katona_even",
            BoundId::KatonaOdd => "katona_odd",
            BoundId::Main5Even => "main5_even",
            BoundId::Main5Odd => "main5_odd",
            BoundId::NonKatonaEven => "nonkatona_even",
            BoundId::NonKatonaOdd => "nonkatona_odd",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ALL_BOUNDS
            .iter()
            .copied()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Range(format!("unknown bound `{s}`")))
    }
}

fn b(n: i64, k: i64) -> BigInt {
    BigInt::from_biguint(Sign::Plus, choose(n, k))
}

fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

/// `Σ_{0 <= i <= d} C(n, i)`.
fn layers_up_to(n: i64, d: i64) -> BigInt {
    (0..=d).map(|i| b(n, i)).sum()
}

struct Checker {
    strict: bool,
}

impl Checker {
    fn require(&self, ok: bool, what: &str) -> Result<()> {
        if self.strict && !ok {
            Err(Error::Range(what.to_string()))
        } else {
            Ok(())
        }
    }
}

pub fn evaluate(id: BoundId, p: &Params, validation: Validation) -> Result<BoundValue> {
    let c = Checker { strict: validation == Validation::Strict };
    let (value, regime) = match id {
        BoundId::Ekr => {
            let (n, k) = (p.n()?, p.k()?);
            c.require(k >= 2, "k >= 2")?;
            c.require(n >= 2 * k, "n >= 2k")?;
            (b(n - 1, k - 1), "ekr")
        }
        BoundId::Hm => {
            let (n, k) = (p.n()?, p.k()?);
            c.require(k >= 1, "k >= 1")?;
            c.require(n >= 2 * k, "n >= 2k")?;
            (b(n, k) - b(n - k, k) + 1, "hm")
        }
        BoundId::Ft | BoundId::FtNontrivial => {
            let (n, k, l) = (p.n()?, p.k()?, p.l()?);
            c.require(2 <= l && l <= k, "2 <= l <= k")?;
            c.require(n >= k + l, "n >= k + l")?;
            if id == BoundId::Ft {
                (b(n, k) - b(n - l, k) + 1, "ft")
            } else {
                (b(n, k) - 2 * b(n - l, k) + b(n - 2 * l, k) + 2, "ft_nontrivial")
            }
        }
        BoundId::F16 | BoundId::W23 => {
            let (n, k, t) = (p.n()?, p.k()?, p.t());
            let kmin = if id == BoundId::F16 { 2 } else { 3 };
            c.require(k >= kmin, if kmin == 2 { "k >= 2" } else { "k >= 3" })?;
            c.require(t >= 0, "t >= 0")?;
            c.require(n >= 2 * k + t, "n >= 2k + t")?;
            if id == BoundId::F16 {
                (b(n, k) - b(n - k - t, k) + 1, "f16")
            } else {
                (b(n, k) - b(n - k - t, k) - b(n - k - t - 1, k - 1) + 2, "w23")
            }
        }
        BoundId::Main1 => {
            let (n, k, t, r) = (p.n()?, p.k()?, p.t(), p.r()?);
            c.require(k >= 2, "k >= 2")?;
            c.require(t >= 0, "t >= 0")?;
            c.require(n >= 2 * k + t, "n >= 2k + t")?;
            c.require(r >= 1, "r >= 1")?;
            c.require(r <= n - k - t + 1, "r <= n - k - t + 1")?;
            hemibundled_value(n, k, t, r)
        }
        BoundId::F24 | BoundId::F24I | BoundId::F24Ii | BoundId::Main3 | BoundId::Main3I | BoundId::Main3Ii => {
            let (n, k, r) = (p.n()?, p.k()?, p.r()?);
            let capped = matches!(id, BoundId::Main3 | BoundId::Main3I | BoundId::Main3Ii);
            c.require(k >= 2, "k >= 2")?;
            if capped {
                c.require(n > 2 * k, "n >= 2k + 1")?;
            } else {
                c.require(n >= 2 * k, "n >= 2k")?;
            }
            c.require(r >= 1, "r >= 1")?;
            c.require(r <= n - k + 1, "r <= n - k + 1")?;
            let first = match id {
                BoundId::F24I | BoundId::Main3I => true,
                BoundId::F24Ii | BoundId::Main3Ii => false,
                _ => r < k,
            };
            if first {
                c.require(r < k, "regime (i) needs r <= k - 1")?;
            } else {
                c.require(r >= k, "regime (ii) needs r >= k")?;
            }
            let base = b(n, k) - b(n - k + 1, k);
            let v = match (first, capped) {
                (true, false) => base + b(n - k - r + 1, k - r) + r,
                (true, true) => base + b(n - k - r + 1, k - r) + r - 1,
                (false, false) => base + int(n - k + 1),
                (false, true) => base + int(n - k),
            };
            (v, if first { "(i) r <= k-1" } else { "(ii) r >= k" })
        }
        BoundId::Diversity => {
            let (n, k, r) = (p.n()?, p.k()?, p.r()?);
            c.require(k >= 3, "k >= 3")?;
            c.require(n > 2 * k, "n > 2k")?;
            c.require(r >= 1 && r <= n - k, "1 <= r <= n - k")?;
            let base = b(n - 1, k - 1) - b(n - k, k - 1);
            if r <= k - 2 {
                (base + b(n - k - r, k - r - 1) + r, "(i) r <= k-2")
            } else {
                (base + int(n - k), "(ii) r >= k-1")
            }
        }
        BoundId::KatonaEven | BoundId::KatonaOdd | BoundId::NonKatonaEven | BoundId::NonKatonaOdd => {
            let odd = matches!(id, BoundId::KatonaOdd | BoundId::NonKatonaOdd);
            let (n, d) = (p.n()?, p.d_for(odd)?);
            let s = 2 * d + odd as i64;
            c.require(s >= 2 && s <= n - 2, "2 <= s <= n - 2")?;
            let sum = layers_up_to(n, d);
            match id {
                BoundId::KatonaEven => (sum, "katona_even"),
                BoundId::KatonaOdd => (sum + b(n - 1, d), "katona_odd"),
                BoundId::NonKatonaEven => (sum - b(n - d - 1, d) + 1, "nonkatona_even"),
                _ => (sum + b(n - 1, d) - b(n - d - 2, d) + 1, "nonkatona_odd"),
            }
        }
        BoundId::Main5Even => {
            let (n, d, r) = (p.n()?, p.d_for(false)?, p.r()?);
            c.require(d >= 2, "s = 2d with d >= 2")?;
            c.require(2 * d <= n - 2, "s <= n - 2")?;
            c.require(r >= 1 && r <= n - d, "1 <= r <= n - d")?;
            let base = layers_up_to(n, d) - b(n - d, d);
            if r < d {
                (base + b(n - d - r, d - r) + r, "(i) r <= d-1")
            } else {
                (base + int(n - d), "(ii) r >= d")
            }
        }
        BoundId::Main5Odd => {
            let (n, d, r) = (p.n()?, p.d_for(true)?, p.r()?);
            c.require(d >= 2, "s = 2d+1 with d >= 2")?;
            c.require(2 * d < n - 2, "s <= n - 2")?;
            c.require(r >= 1 && r < n - d, "1 <= r <= n - d - 1")?;
            let base = layers_up_to(n, d) + b(n - 1, d) - b(n - d - 1, d);
            if r < d {
                (base + b(n - d - r - 1, d - r) + r, "(i) r <= d-1")
            } else {
                (base + int(n - d - 1), "(ii) r >= d")
            }
        }
    };
    let value = value
        .to_biguint()
        .ok_or_else(|| Error::Range(format!("{id} evaluates to a negative number at {p}")))?;
    Ok(BoundValue { value, regime, unchecked: validation == Validation::Unchecked })
}

/// Hemi-bundled sum bound with regime selection on `r`.
fn hemibundled_value(n: i64, k: i64, t: i64, r: i64) -> (BigInt, &'static str) {
    let base = b(n, k) - b(n - k - t + 1, k);
    if r < k {
        (base + b(n - k - t - r + 1, k - r) + r, "(i) r <= k-1")
    } else {
        (base + int(n - k - t + 1), "(ii) r >= k")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassicBound {
    Ekr,
    Hm,
    Ft,
    FtNontrivial,
}

pub fn bound_classic(which: ClassicBound, p: &Params) -> Result<BoundValue> {
    let id = match which {
        ClassicBound::Ekr => BoundId::Ekr,
        ClassicBound::Hm => BoundId::Hm,
        ClassicBound::Ft => BoundId::Ft,
        ClassicBound::FtNontrivial => BoundId::FtNontrivial,
    };
    evaluate(id, p, Validation::Strict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HemibundledBound {
    F16,
    W23,
    Main1,
}

pub fn bound_hemibundled(which: HemibundledBound, p: &Params) -> Result<BoundValue> {
    let id = match which {
        HemibundledBound::F16 => BoundId::F16,
        HemibundledBound::W23 => BoundId::W23,
        HemibundledBound::Main1 => BoundId::Main1,
    };
    evaluate(id, p, Validation::Strict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairBound {
    F24I,
    F24Ii,
    Main3I,
    Main3Ii,
}

pub fn bound_pairs(which: PairBound, p: &Params) -> Result<BoundValue> {
    let id = match which {
        PairBound::F24I => BoundId::F24I,
        PairBound::F24Ii => BoundId::F24Ii,
        PairBound::Main3I => BoundId::Main3I,
        PairBound::Main3Ii => BoundId::Main3Ii,
    };
    evaluate(id, p, Validation::Strict)
}

pub fn bound_diversity(p: &Params) -> Result<BoundValue> {
    evaluate(BoundId::Diversity, p, Validation::Strict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnionBound {
    KatonaEven,
    KatonaOdd,
    Main5Even,
    Main5Odd,
}

pub fn bound_union(which: UnionBound, p: &Params) -> Result<BoundValue> {
    let id = match which {
        UnionBound::KatonaEven => BoundId::KatonaEven,
        UnionBound::KatonaOdd => BoundId::KatonaOdd,
        UnionBound::Main5Even => BoundId::Main5Even,
        UnionBound::Main5Odd => BoundId::Main5Odd,
    };
    evaluate(id, p, Validation::Strict)
}
