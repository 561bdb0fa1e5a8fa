//! Subsets of `[n]` packed into one machine word, and families of them.
//!
//! Element `i` of `[n]` lives in bit `i - 1`. A [`Family`] keeps its members
//! sorted by numeric bit value with no duplicates, so two families are equal
//! exactly when their member lists are equal.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_UNIVERSE: usize = 63;

/// Bit mask of the whole universe `[n]`.
#[inline]
pub fn universe_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_universe(n: usize) -> Result<()> {
    if (2..=MAX_UNIVERSE).contains(&n) {
        Ok(())
    } else {
        Err(Error::UniverseSize(n))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset {
    bits: u64,
    n: u8,
}

impl Subset {
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        check_universe(n)?;
        if bits & !universe_mask(n) != 0 {
            let element = 64 - bits.leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, n });
        }
        Ok(Subset { bits, n: n as u8 })
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(n: usize, elements: I) -> Result<Self> {
        check_universe(n)?;
        let mut bits = 0u64;
        for e in elements {
            if e == 0 || e > n {
                return Err(Error::ElementOutOfRange { element: e, n });
            }
            bits |= 1 << (e - 1);
        }
        Ok(Subset { bits, n: n as u8 })
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn universe(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(self) -> usize {
        self.bits.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn contains(self, element: usize) -> bool {
        (1..=64).contains(&element) && self.bits >> (element - 1) & 1 == 1
    }

    pub fn elements(self) -> Elements {
        Elements(self.bits)
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, self.bits)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_set(f, self.bits)
    }
}

pub(crate) fn write_set(f: &mut impl fmt::Write, bits: u64) -> fmt::Result {
    f.write_char('{')?;
    for (idx, e) in Elements(bits).enumerate() {
        if idx > 0 {
            f.write_char(',')?;
        }
        write!(f, "{e}")?;
    }
    f.write_char('}')
}

/// Ascending 1-based elements of a bit mask.
#[derive(Clone)]
pub struct Elements(pub(crate) u64);

impl Iterator for Elements {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(tz + 1)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Elements {}

/// Iterator over all `k`-subsets of `[n]` as bit masks, in increasing numeric
/// order (Gosper's hack).
pub struct KSubsets {
    next: Option<u64>,
    limit: u64,
}

pub fn k_subsets(n: usize, k: usize) -> KSubsets {
    if k > n || n > 63 {
        return KSubsets { next: None, limit: 0 };
    }
    let first = if k == 0 { 0 } else { (1u64 << k) - 1 };
    KSubsets { next: Some(first), limit: 1u64 << n }
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur == 0 {
            self.next = None;
            return Some(0);
        }
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        let nxt = (((r ^ cur) >> 2) / c) | r;
        self.next = (nxt < self.limit && r != 0).then_some(nxt);
        Some(cur)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Family {
    n: u8,
    members: Vec<u64>,
}

/// Which derived family [`Family::restrict`] builds.
///
/// `With(i)` is `F(i)`, `Without(i)` is `F(ī)`, and the two-index variants
/// follow the same pattern: `WithWithout(i, j)` is `F(i, j̄)`. Elements named
/// as present are deleted from the selected members.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Restriction {
    With(usize),
    Without(usize),
    Both(usize, usize),
    WithWithout(usize, usize),
    Neither(usize, usize),
}

impl Family {
    pub fn empty(n: usize) -> Result<Self> {
        check_universe(n)?;
        Ok(Family { n: n as u8, members: Vec::new() })
    }

    /// Builds a family from raw masks; duplicates are dropped.
    pub fn from_masks<I: IntoIterator<Item = u64>>(n: usize, masks: I) -> Result<Self> {
        check_universe(n)?;
        let full = universe_mask(n);
        let mut members: Vec<u64> = masks.into_iter().collect();
        if let Some(bad) = members.iter().find(|&&m| m & !full != 0) {
            let element = 64 - bad.leading_zeros() as usize;
            return Err(Error::ElementOutOfRange { element, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(Family { n: n as u8, members })
    }

    pub fn from_sets<S, I>(n: usize, sets: S) -> Result<Self>
    where
        S: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let masks = sets
            .into_iter()
            .map(|s| Subset::from_elements(n, s).map(Subset::bits))
            .collect::<Result<Vec<_>>>()?;
        Family::from_masks(n, masks)
    }

    pub fn from_subsets<I: IntoIterator<Item = Subset>>(n: usize, sets: I) -> Result<Self> {
        let mut masks = Vec::new();
        for s in sets {
            if s.universe() != n {
                return Err(Error::UniverseMismatch { left: n, right: s.universe() });
            }
            masks.push(s.bits());
        }
        Family::from_masks(n, masks)
    }

    /// All `k`-subsets of `[n]`.
    pub fn complete_layer(n: usize, k: usize) -> Result<Self> {
        check_universe(n)?;
        Ok(Family { n: n as u8, members: k_subsets(n, k).collect() })
    }

    /// Members are already sorted, deduplicated and inside the universe.
    pub(crate) fn from_sorted_unchecked(n: usize, members: Vec<u64>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        Family { n: n as u8, members }
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.members.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    #[inline]
    pub fn masks(&self) -> &[u64] {
        &self.members
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Subset> + '_ {
        let n = self.n;
        self.members.iter().map(move |&bits| Subset { bits, n })
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.members.binary_search(&mask).is_ok()
    }

    pub fn contains(&self, set: Subset) -> bool {
        set.universe() == self.universe() && self.contains_mask(set.bits())
    }

    /// `Some(k)` when every member has cardinality `k`; the empty family
    /// reports `None`.
    pub fn uniformity(&self) -> Option<usize> {
        let first = self.members.first()?.count_ones();
        self.members
            .iter()
            .all(|m| m.count_ones() == first)
            .then_some(first as usize)
    }

    pub fn is_k_uniform(&self, k: usize) -> bool {
        self.members.iter().all(|m| m.count_ones() as usize == k)
    }

    /// Members of cardinality `i`.
    pub fn layer(&self, i: usize) -> Family {
        let members = self
            .members
            .iter()
            .copied()
            .filter(|m| m.count_ones() as usize == i)
            .collect();
        Family { n: self.n, members }
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.universe() + 1];
        for m in &self.members {
            sizes[m.count_ones() as usize] += 1;
        }
        sizes
    }

    pub fn union(&self, other: &Family) -> Result<Family> {
        self.same_universe(other)?;
        Family::from_masks(self.universe(), self.members.iter().chain(&other.members).copied())
    }

    pub fn difference(&self, other: &Family) -> Result<Family> {
        self.same_universe(other)?;
        let members = self
            .members
            .iter()
            .copied()
            .filter(|m| !other.contains_mask(*m))
            .collect();
        Ok(Family { n: self.n, members })
    }

    fn same_universe(&self, other: &Family) -> Result<()> {
        if self.n != other.n {
            Err(Error::UniverseMismatch { left: self.universe(), right: other.universe() })
        } else {
            Ok(())
        }
    }

    /// `|F ∩ F'| >= t` for all members, a member paired with itself included.
    pub fn is_t_intersecting(&self, t: usize) -> bool {
        let t = t as u32;
        let m = &self.members;
        for (idx, &a) in m.iter().enumerate() {
            if a.count_ones() < t {
                return false;
            }
            for &b in &m[idx + 1..] {
                if (a & b).count_ones() < t {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_intersecting(&self) -> bool {
        self.is_t_intersecting(1)
    }

    /// `|F ∪ F'| <= s` for all members, a member paired with itself included.
    pub fn is_s_union(&self, s: usize) -> bool {
        let s = s as u32;
        let m = &self.members;
        for (idx, &a) in m.iter().enumerate() {
            if a.count_ones() > s {
                return false;
            }
            for &b in &m[idx + 1..] {
                if (a | b).count_ones() > s {
                    return false;
                }
            }
        }
        true
    }

    pub fn cross_intersects(&self, other: &Family) -> Result<bool> {
        self.same_universe(other)?;
        Ok(self
            .members
            .iter()
            .all(|&a| other.members.iter().all(|&b| a & b != 0)))
    }

    /// Number of members containing each element, indexed `0..n` for
    /// elements `1..=n`.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.universe()];
        for &m in &self.members {
            for e in Elements(m) {
                deg[e - 1] += 1;
            }
        }
        deg
    }

    /// `(Δ(F), γ(F))`: the maximum element degree and `|F| - Δ(F)`.
    pub fn degree_profile(&self) -> (usize, usize) {
        let max_degree = self.degrees().into_iter().max().unwrap_or(0);
        (max_degree, self.len() - max_degree)
    }

    pub fn diversity(&self) -> usize {
        self.degree_profile().1
    }

    /// Diversity computed as `min_i |F(ī)|`.
    pub fn diversity_by_restriction(&self) -> usize {
        (1..=self.universe())
            .map(|i| self.members.iter().filter(|&&m| m >> (i - 1) & 1 == 0).count())
            .min()
            .unwrap_or(0)
    }

    pub fn restrict(&self, spec: Restriction) -> Result<Family> {
        let n = self.universe();
        let check = |i: usize| {
            if i == 0 || i > n {
                Err(Error::ElementOutOfRange { element: i, n })
            } else {
                Ok(1u64 << (i - 1))
            }
        };
        let pair = |i: usize, j: usize| -> Result<(u64, u64)> {
            let (a, b) = (check(i)?, check(j)?);
            if i == j {
                return Err(Error::InvalidIndices(format!("restriction needs distinct indices, got {i} twice")));
            }
            Ok((a, b))
        };
        // (must contain, must avoid, deleted)
        let (inside, outside) = match spec {
            Restriction::With(i) => (check(i)?, 0),
            Restriction::Without(i) => (0, check(i)?),
            Restriction::Both(i, j) => {
                let (a, b) = pair(i, j)?;
                (a | b, 0)
            }
            Restriction::WithWithout(i, j) => pair(i, j)?,
            Restriction::Neither(i, j) => {
                let (a, b) = pair(i, j)?;
                (0, a | b)
            }
        };
        Family::from_masks(
            n,
            self.members
                .iter()
                .filter(|&&m| m & inside == inside && m & outside == 0)
                .map(|&m| m & !inside),
        )
    }

    pub fn complement(&self) -> Family {
        let full = universe_mask(self.universe());
        let mut members: Vec<u64> = self.members.iter().map(|m| !m & full).collect();
        members.sort_unstable();
        Family { n: self.n, members }
    }

    /// Applies `perm` elementwise; `perm[i - 1]` is the image of `i`.
    pub fn permute(&self, perm: &[usize]) -> Result<Family> {
        let n = self.universe();
        if perm.len() != n {
            return Err(Error::InvalidIndices(format!("permutation has length {}, universe is {n}", perm.len())));
        }
        let mut seen = 0u64;
        for &p in perm {
            if p == 0 || p > n || seen >> (p - 1) & 1 == 1 {
                return Err(Error::InvalidIndices(format!("not a permutation of [1, {n}]")));
            }
            seen |= 1 << (p - 1);
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Family {
        let mut members: Vec<u64> = self.members.iter().map(|&m| map_mask(m, perm)).collect();
        members.sort_unstable();
        Family { n: self.n, members }
    }

    /// Partial lexicographic comparison on sorted member lists, used to pick
    /// canonical representatives.
    pub fn cmp_members(&self, other: &Family) -> std::cmp::Ordering {
        self.members.cmp(&other.members)
    }
}

#[inline]
pub(crate) fn map_mask(mask: u64, perm: &[usize]) -> u64 {
    Elements(mask).fold(0, |acc, e| acc | 1 << (perm[e - 1] - 1))
}

impl fmt::Debug for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Family[n={}]{{", self.n)?;
        for (idx, &m) in self.members.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write_set(f, m)?;
        }
        f.write_str("}")
    }
}

pub fn are_cross_intersecting(f: &Family, g: &Family) -> Result<bool> {
    f.cross_intersects(g)
}
