//! Isomorphism of families under permutations of the ground set.
//!
//! Witness search with refinement: elements are matched only to elements with
//! the same degree profile, assignments must preserve pairwise co-degrees, and
//! every partial assignment must map the multiset of member traces on the
//! assigned elements onto the corresponding traces of the target.

use crate::error::{Error, Result};
use crate::family::{map_mask, Family};

pub const ISO_LIMIT: usize = 12;

/// A permutation witnessing `F ≅ G`, or `None` when the families are not
/// isomorphic. `perm[i - 1]` is the image of element `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoCertificate {
    pub permutation: Option<Vec<usize>>,
}

impl IsoCertificate {
    pub fn is_isomorphic(&self) -> bool {
        self.permutation.is_some()
    }
}

struct Side<'a> {
    family: &'a Family,
    profile: Vec<Vec<usize>>,
    codeg: Vec<Vec<usize>>,
}

impl<'a> Side<'a> {
    fn new(family: &'a Family) -> Self {
        let n = family.universe();
        let mut profile = vec![vec![0; n + 1]; n];
        let mut codeg = vec![vec![0; n]; n];
        for &m in family.masks() {
            let size = m.count_ones() as usize;
            for x in 0..n {
                if m >> x & 1 == 1 {
                    profile[x][size] += 1;
                    for (y, c) in codeg[x].iter_mut().enumerate() {
                        if m >> y & 1 == 1 {
                            *c += 1;
                        }
                    }
                }
            }
        }
        Side { family, profile, codeg }
    }
}

pub fn are_isomorphic(f: &Family, g: &Family) -> Result<IsoCertificate> {
    let n = f.universe();
    if n != g.universe() {
        return Err(Error::UniverseMismatch { left: n, right: g.universe() });
    }
    if n > ISO_LIMIT {
        return Err(Error::IsoLimit { n, limit: ISO_LIMIT });
    }
    let none = IsoCertificate { permutation: None };
    if f.len() != g.len() || f.layer_sizes() != g.layer_sizes() {
        return Ok(none);
    }
    let a = Side::new(f);
    let b = Side::new(g);
    let mut pa = a.profile.clone();
    let mut pb = b.profile.clone();
    pa.sort();
    pb.sort();
    if pa != pb {
        return Ok(none);
    }

    // most constrained elements first
    let class_size = |x: usize| b.profile.iter().filter(|p| **p == a.profile[x]).count();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (class_size(x), x));

    let mut search = Search { a: &a, b: &b, order, image: vec![usize::MAX; n], used: 0, n };
    if search.extend(0) {
        let perm: Vec<usize> = search.image.iter().map(|&y| y + 1).collect();
        debug_assert_eq!(&f.permute_unchecked(&perm), g);
        Ok(IsoCertificate { permutation: Some(perm) })
    } else {
        Ok(none)
    }
}

struct Search<'s, 'a> {
    a: &'s Side<'a>,
    b: &'s Side<'a>,
    order: Vec<usize>,
    image: Vec<usize>,
    used: u64,
    n: usize,
}

impl Search<'_, '_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.n {
            let perm: Vec<usize> = self.image.iter().map(|&y| y + 1).collect();
            return self.a.family.permute_unchecked(&perm) == *self.b.family;
        }
        let x = self.order[depth];
        for y in 0..self.n {
            if self.used >> y & 1 == 1 || self.a.profile[x] != self.b.profile[y] {
                continue;
            }
            if self.a.codeg[x][x] != self.b.codeg[y][y] {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&x2| {
                let y2 = self.image[x2];
                self.a.codeg[x][x2] == self.b.codeg[y][y2]
            });
            if !consistent {
                continue;
            }
            self.image[x] = y;
            self.used |= 1 << y;
            if self.traces_match(depth + 1) && self.extend(depth + 1) {
                return true;
            }
            self.used &= !(1 << y);
            self.image[x] = usize::MAX;
        }
        false
    }

    /// Multiset of member traces on the assigned prefix maps onto the target.
    fn traces_match(&self, assigned: usize) -> bool {
        let mut domain = 0u64;
        let mut perm = vec![1usize; self.n];
        for &x in &self.order[..assigned] {
            domain |= 1 << x;
            perm[x] = self.image[x] + 1;
        }
        let mut left: Vec<u64> = self
            .a
            .family
            .masks()
            .iter()
            .map(|&m| map_mask(m & domain, &perm))
            .collect();
        let mut right: Vec<u64> = self.b.family.masks().iter().map(|&m| m & self.used).collect();
        left.sort_unstable();
        right.sort_unstable();
        left == right
    }
}
