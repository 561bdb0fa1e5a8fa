//! Grouping families into isomorphism classes.

use crate::error::{Error, Result};
use crate::family::Family;
use crate::iso::are_isomorphic;

/// One isomorphism class: its lexicographically least member and how many of
/// the input families fall in it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsoClass {
    pub representative: Family,
    pub size: usize,
}

/// Partitions `families` into isomorphism classes, in order of first
/// appearance of each class.
pub fn classify_maximizers(families: &[Family]) -> Result<Vec<IsoClass>> {
    let mut classes: Vec<IsoClass> = Vec::new();
    if let Some(first) = families.first() {
        let n = first.universe();
        if let Some(bad) = families.iter().find(|f| f.universe() != n) {
            return Err(Error::UniverseMismatch { left: n, right: bad.universe() });
        }
    }
    'next: for f in families {
        for class in classes.iter_mut() {
            if are_isomorphic(&class.representative, f)?.is_isomorphic() {
                class.size += 1;
                if f.cmp_members(&class.representative).is_lt() {
                    class.representative = f.clone();
                }
                continue 'next;
            }
        }
        classes.push(IsoClass { representative: f.clone(), size: 1 });
    }
    Ok(classes)
}
