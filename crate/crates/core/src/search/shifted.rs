//! Shifted `k`-uniform families as down-sets of the dominance order.
//!
//! Sets are visited in lexicographic order, which extends dominance. A
//! down-set is grown by adding sets in increasing position, and a set may be
//! added only once all of its lower covers (one element moved down by one)
//! are present. Every down-set arises from exactly one such sequence.

use std::time::Instant;

use super::bits::Bits;
use crate::bounds::choose_u128;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::shifting::lex_family;

/// Largest poset handled by the shifted engine.
pub const SHIFTED_POSET_LIMIT: u128 = 512;

pub(crate) struct Dominance {
    pub sets: Vec<u64>,
    pub lower: Vec<Vec<usize>>,
}

impl Dominance {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        let size = choose_u128(n, k);
        if size > SHIFTED_POSET_LIMIT {
            return Err(Error::Infeasible(format!("C({n},{k}) = {size} sets exceed the shifted engine limit")));
        }
        let sets: Vec<u64> = {
            let mut v = lex_family(n, k, size)?.masks().to_vec();
            v.sort_by(|&a, &b| crate::shifting::lex_cmp(a, b));
            v
        };
        let pos = |m: u64| sets.iter().position(|&s| s == m).expect("k-set present");
        let lower = sets
            .iter()
            .map(|&s| {
                (1..n)
                    .filter(|&j| s >> j & 1 == 1 && s >> (j - 1) & 1 == 0)
                    .map(|j| pos(s & !(1 << j) | 1 << (j - 1)))
                    .collect()
            })
            .collect();
        Ok(Dominance { sets, lower })
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }
}

/// Walks every down-set whose members are pairwise compatible.
///
/// `visit` receives the members (as poset indices) and the set of later
/// positions still compatible with all of them; returning `false` skips the
/// extensions of that down-set.
pub(crate) fn walk_downsets(
    poset: &Dominance,
    compatible: &[Bits],
    deadline: Option<Instant>,
    visit: &mut dyn FnMut(&[usize], &Bits, usize) -> bool,
) -> Result<u64> {
    struct Walk<'a> {
        poset: &'a Dominance,
        compatible: &'a [Bits],
        included: Vec<bool>,
        members: Vec<usize>,
        deadline: Option<Instant>,
        nodes: u64,
        cancelled: bool,
    }

    impl Walk<'_> {
        fn go(&mut self, from: usize, cands: &Bits, visit: &mut dyn FnMut(&[usize], &Bits, usize) -> bool) {
            self.nodes += 1;
            if self.nodes.is_multiple_of(4096) && self.deadline.is_some_and(|d| Instant::now() >= d) {
                self.cancelled = true;
            }
            if self.cancelled || !visit(&self.members, cands, from) {
                return;
            }
            for j in cands.iter().filter(|&j| j >= from) {
                if !self.poset.lower[j].iter().all(|&c| self.included[c]) {
                    continue;
                }
                let child = cands.and(&self.compatible[j]);
                self.included[j] = true;
                self.members.push(j);
                self.go(j + 1, &child, visit);
                self.members.pop();
                self.included[j] = false;
                if self.cancelled {
                    return;
                }
            }
        }
    }

    let started = Instant::now();
    let mut w = Walk {
        poset,
        compatible,
        included: vec![false; poset.len()],
        members: Vec::new(),
        deadline,
        nodes: 0,
        cancelled: false,
    };
    w.go(0, &Bits::full(poset.len()), visit);
    if w.cancelled {
        return Err(Error::Timeout { elapsed_ms: started.elapsed().as_millis() });
    }
    Ok(w.nodes)
}

/// Pairwise compatibility rows over the poset; each row also holds the set itself.
pub(crate) fn compat_rows(poset: &Dominance, compat: impl Fn(u64, u64) -> bool) -> Vec<Bits> {
    let len = poset.len();
    (0..len)
        .map(|i| {
            let mut row = Bits::new(len);
            for j in 0..len {
                if i == j || compat(poset.sets[i], poset.sets[j]) {
                    row.insert(j);
                }
            }
            row
        })
        .collect()
}

/// Every shifted `k`-uniform family on `[n]` satisfying `predicate`, the
/// empty family included, in a fixed order.
pub fn enumerate_shifted(n: usize, k: usize, predicate: impl Fn(&Family) -> bool) -> Result<Vec<Family>> {
    let poset = Dominance::new(n, k)?;
    let rows = compat_rows(&poset, |_, _| true);
    let mut out = Vec::new();
    walk_downsets(&poset, &rows, None, &mut |members, _, _| {
        let fam = Family::from_masks(n, members.iter().map(|&i| poset.sets[i])).expect("sets inside [n]");
        if predicate(&fam) {
            out.push(fam);
        }
        true
    })?;
    Ok(out)
}

/// Like [`enumerate_shifted`] for a predicate that is pairwise and
/// hereditary, so incompatible branches are never entered.
pub fn enumerate_shifted_pairwise(n: usize, k: usize, compat: impl Fn(u64, u64) -> bool) -> Result<Vec<Family>> {
    let poset = Dominance::new(n, k)?;
    let rows = compat_rows(&poset, compat);
    let mut out = Vec::new();
    walk_downsets(&poset, &rows, None, &mut |members, _, _| {
        out.push(Family::from_masks(n, members.iter().map(|&i| poset.sets[i])).expect("sets inside [n]"));
        true
    })?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::k_subsets;
    use crate::shifting::is_shifted;

    /// Counts subsets of `C([n], k)` closed under dominance by checking all
    /// `2^C(n,k)` subsets directly.
    fn brute_downset_count(n: usize, k: usize) -> usize {
        let sets: Vec<u64> = k_subsets(n, k).collect();
        let dominated = |a: u64, b: u64| {
            // a <= b coordinatewise
            let ea: Vec<u32> = (0..n as u32).filter(|&i| a >> i & 1 == 1).collect();
            let eb: Vec<u32> = (0..n as u32).filter(|&i| b >> i & 1 == 1).collect();
            ea.iter().zip(&eb).all(|(x, y)| x <= y)
        };
        let m = sets.len();
        (0u64..1 << m)
            .filter(|&s| {
                (0..m).all(|i| {
                    s >> i & 1 == 0 || (0..m).all(|j| !dominated(sets[j], sets[i]) || s >> j & 1 == 1)
                })
            })
            .count()
    }

    #[test]
    fn counts_match_brute_force() {
        // frozen from the brute-force oracle above
        assert_eq!(brute_downset_count(4, 2), 8);
        assert_eq!(enumerate_shifted(4, 2, |_| true).unwrap().len(), 8);
        let oracle_5_2 = brute_downset_count(5, 2);
        assert_eq!(oracle_5_2, 16);
        assert_eq!(enumerate_shifted(5, 2, |_| true).unwrap().len(), oracle_5_2);
        assert_eq!(enumerate_shifted(5, 3, |_| true).unwrap().len(), brute_downset_count(5, 3));
    }

    #[test]
    fn every_result_is_shifted_and_distinct() {
        let all = enumerate_shifted(6, 3, |_| true).unwrap();
        let mut seen = std::collections::HashSet::new();
        for f in &all {
            assert!(is_shifted(f));
            assert!(seen.insert(f.masks().to_vec()));
        }
    }

    #[test]
    fn intersecting_filter() {
        let all = enumerate_shifted(4, 2, |f| f.is_intersecting()).unwrap();
        assert!(all.iter().all(|f| is_shifted(f) && f.is_t_intersecting(1)));
        let pairwise = enumerate_shifted_pairwise(7, 3, |a, b| a & b != 0).unwrap();
        let filtered = enumerate_shifted(7, 3, |f| f.is_intersecting()).unwrap();
        assert_eq!(pairwise, filtered);
    }
}
