//! Shifting (left compression), lexicographic initial segments and
//! disjointness families.

use std::cmp::Ordering;

use crate::bounds::choose_u128;
use crate::error::{Error, Result};
use crate::family::{k_subsets, Elements, Family};

fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i == 0 || j > n || i >= j {
        return Err(Error::InvalidIndices(format!("shift needs 1 <= i < j <= {n}, got i={i}, j={j}")));
    }
    Ok(())
}

#[inline]
fn shift_mask(family: &Family, m: u64, ib: u64, jb: u64) -> u64 {
    if m & jb != 0 && m & ib == 0 {
        let image = (m & !jb) | ib;
        if !family.contains_mask(image) {
            return image;
        }
    }
    m
}

/// The shifting operator `s_{i,j}`: each member containing `j` but not `i`
/// trades `j` for `i`, unless the traded set is already a member.
pub fn shift_once(family: &Family, i: usize, j: usize) -> Result<Family> {
    check_pair(family.universe(), i, j)?;
    Ok(shift_unchecked(family, i, j))
}

fn shift_unchecked(family: &Family, i: usize, j: usize) -> Family {
    let (ib, jb) = (1u64 << (i - 1), 1u64 << (j - 1));
    let mut members: Vec<u64> = family.masks().iter().map(|&m| shift_mask(family, m, ib, jb)).collect();
    members.sort_unstable();
    Family::from_sorted_unchecked(family.universe(), members)
}

/// Sweeps `s_{i,j}` over ascending `j`, then ascending `i < j`, until a full
/// pass changes nothing. `Σ_F Σ_{x∈F} x` drops on every effective shift, so
/// this terminates.
pub fn fully_shift(family: &Family) -> Family {
    let n = family.universe();
    let mut cur = family.clone();
    loop {
        let mut changed = false;
        for j in 2..=n {
            for i in 1..j {
                let next = shift_unchecked(&cur, i, j);
                if next != cur {
                    changed = true;
                    cur = next;
                }
            }
        }
        if !changed {
            return cur;
        }
    }
}

/// Applies the same sweep to two families at once until both are fixed.
pub fn fully_shift_pair(f: &Family, g: &Family) -> Result<(Family, Family)> {
    if f.universe() != g.universe() {
        return Err(Error::UniverseMismatch { left: f.universe(), right: g.universe() });
    }
    let n = f.universe();
    let (mut a, mut b) = (f.clone(), g.clone());
    loop {
        let mut changed = false;
        for j in 2..=n {
            for i in 1..j {
                let na = shift_unchecked(&a, i, j);
                let nb = shift_unchecked(&b, i, j);
                if na != a || nb != b {
                    changed = true;
                    a = na;
                    b = nb;
                }
            }
        }
        if !changed {
            return Ok((a, b));
        }
    }
}

pub fn is_shifted(family: &Family) -> bool {
    family.masks().iter().all(|&m| {
        Elements(m).all(|j| {
            (1..j).all(|i| {
                let ib = 1u64 << (i - 1);
                m & ib != 0 || family.contains_mask((m & !(1 << (j - 1))) | ib)
            })
        })
    })
}

/// Closure under coordinatewise dominance, checked through lower covers:
/// every member with some element `a` such that `a - 1` is absent must have
/// the set with `a` lowered to `a - 1` as a member too.
pub fn dominance_closure_check(family: &Family) -> Result<bool> {
    if !family.is_empty() && family.uniformity().is_none() {
        return Err(Error::NotUniform);
    }
    Ok(family.masks().iter().all(|&m| {
        Elements(m)
            .filter(|&a| a > 1 && m >> (a - 2) & 1 == 0)
            .all(|a| family.contains_mask((m & !(1 << (a - 1))) | 1 << (a - 2)))
    }))
}

/// Lexicographic comparison: `F < G` iff `min(F \ G) < min(G \ F)`.
pub fn lex_cmp(a: u64, b: u64) -> Ordering {
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let low = diff & diff.wrapping_neg();
    if a & low != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

fn reflect(mask: u64, n: usize) -> u64 {
    Elements(mask).fold(0, |acc, e| acc | 1 << (n - e))
}

/// The `rank`-th (0-based) `k`-subset of `[n]` in lexicographic order.
///
/// Lexicographic order is reversed colex order on reflected sets
/// (`x ↦ n + 1 - x`), so this unranks `N - 1 - rank` in colex through the
/// combinatorial number system and reflects back.
pub fn lex_unrank(n: usize, k: usize, rank: u128) -> Result<u64> {
    let total = choose_u128(n, k);
    if rank >= total {
        return Err(Error::Range(format!("rank {rank} >= C({n},{k}) = {total}")));
    }
    let mut colex = total - 1 - rank;
    let mut mask = 0u64;
    let mut top = n;
    for i in (1..=k).rev() {
        // largest c with C(c - 1, i) <= colex
        let mut c = top;
        while choose_u128(c - 1, i) > colex {
            c -= 1;
        }
        colex -= choose_u128(c - 1, i);
        mask |= 1 << (c - 1);
        top = c - 1;
    }
    Ok(reflect(mask, n))
}

/// Successor of `mask` among `k`-subsets of `[n]` in lexicographic order.
fn lex_successor(mask: u64, n: usize) -> Option<u64> {
    let elems: Vec<usize> = Elements(mask).collect();
    let k = elems.len();
    let pos = (0..k).rev().find(|&p| elems[p] < n - (k - 1 - p))?;
    let mut next = elems.clone();
    next[pos] += 1;
    for q in pos + 1..k {
        next[q] = next[q - 1] + 1;
    }
    Some(next.iter().fold(0, |acc, e| acc | 1 << (e - 1)))
}

/// `L(n, k, m)`: the first `m` `k`-subsets of `[n]` in lexicographic order.
pub fn lex_family(n: usize, k: usize, m: u128) -> Result<Family> {
    let total = if k > n { 0 } else { choose_u128(n, k) };
    if m > total {
        return Err(Error::Range(format!("m = {m} exceeds C({n},{k}) = {total}")));
    }
    let mut masks = Vec::with_capacity(m as usize);
    let mut cur = if k == 0 { 0 } else { (1u64 << k) - 1 };
    for idx in 0..m {
        masks.push(cur);
        if idx + 1 < m {
            cur = lex_successor(cur, n).expect("m <= C(n, k)");
        }
    }
    Family::from_masks(n, masks)
}

/// `D_ℓ(F)`: the `ℓ`-sets disjoint from at least one member of `F`.
/// Its complement in `C([n], ℓ)` is the largest family cross-intersecting `F`.
pub fn disjointness_family(family: &Family, l: usize) -> Result<Family> {
    let n = family.universe();
    if l > n {
        return Err(Error::Range(format!("ℓ = {l} exceeds n = {n}")));
    }
    if !family.is_empty() {
        let k = family.uniformity().ok_or(Error::NotUniform)?;
        if n < k + l {
            return Err(Error::Range(format!("need n >= k + ℓ, got n={n}, k={k}, ℓ={l}")));
        }
    }
    let members = family.masks();
    Family::from_masks(n, k_subsets(n, l).filter(|&d| members.iter().any(|&m| m & d == 0)))
}

/// `C([n], ℓ) \ D_ℓ(F)`, the maximal partner of `F`.
pub fn max_partner(family: &Family, l: usize) -> Result<Family> {
    let n = family.universe();
    let members = family.masks();
    if l > n {
        return Err(Error::Range(format!("ℓ = {l} exceeds n = {n}")));
    }
    Family::from_masks(n, k_subsets(n, l).filter(|&d| members.iter().all(|&m| m & d != 0)))
}
