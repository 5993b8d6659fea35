//! Sets of variable indices packed into a single machine word.
//!
//! Supports of monomials, prime supports `F_j` and hypergraph edges all live
//! here. Indices are 0-based internally; the text forms are 1-based.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest ambient variable count the crate accepts.
pub const MAX_VARS: usize = 64;

#[derive(Copy, Clone, Default, PartialEq, Eq, Hash)]
pub struct VarSet(u64);

impl VarSet {
    pub const EMPTY: VarSet = VarSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VarSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VARS);
        if n == MAX_VARS {
            VarSet(u64::MAX)
        } else {
            VarSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_VARS);
        VarSet(1u64 << i)
    }

    /// Builds a set from 0-based indices, checking each against `ambient`.
    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I, ambient: usize) -> Result<Self> {
        let mut set = VarSet::EMPTY;
        for i in indices {
            if i >= ambient {
                return Err(Error::IndexOutOfRange { index: i, ambient });
            }
            set.insert(i);
        }
        Ok(set)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_VARS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        VarSet(self.0 | 1u64 << i)
    }

    pub fn without(self, i: usize) -> Self {
        VarSet(self.0 & !(1u64 << i))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VarSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VarSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn union(self, other: VarSet) -> Self {
        VarSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VarSet) -> Self {
        VarSet(self.0 & other.0)
    }

    pub fn difference(self, other: VarSet) -> Self {
        VarSet(self.0 & !other.0)
    }

    /// Smallest element, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest element, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Every subset of `self`, in increasing order of their bit patterns.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VarSet;

    fn next(&mut self) -> Option<VarSet> {
        let cur = self.next?;
        // standard submask walk, ascending
        let succ = (cur.wrapping_sub(self.mask)) & self.mask;
        self.next = (succ != 0).then_some(succ);
        Some(VarSet(cur))
    }
}

impl FromIterator<usize> for VarSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VarSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for VarSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Sets compare as their sorted index sequences, so `{0} < {0,1} < {0,2} < {1}`.
impl Ord for VarSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for VarSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// 1-based, e.g. `{1,3}`.
impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        f.write_str("}")
    }
}

/// Drops every set that strictly contains another member, removes duplicates
/// and returns the survivors in canonical order.
pub fn minimal_sets(sets: impl IntoIterator<Item = VarSet>) -> Vec<VarSet> {
    let mut sets: Vec<VarSet> = sets.into_iter().collect();
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    let mut kept: Vec<VarSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort();
    kept
}

/// Inclusion-minimal transversals (hitting sets) of `family`.
///
/// Branches on the first member not yet hit, then filters the candidates down
/// to minimal ones. An empty family has the single transversal `∅`; a family
/// containing `∅` has none.
pub fn minimal_transversals(family: &[VarSet]) -> Vec<VarSet> {
    let family = minimal_sets(family.iter().copied());
    if family.iter().any(|s| s.is_empty()) {
        return Vec::new();
    }
    let mut found = Vec::new();
    branch(&family, VarSet::EMPTY, &mut found);
    found.retain(|&t| is_minimal_transversal(&family, t));
    found.sort();
    found.dedup();
    found
}

fn branch(family: &[VarSet], current: VarSet, out: &mut Vec<VarSet>) {
    match family.iter().find(|s| !s.intersects(current)) {
        None => out.push(current),
        Some(&uncovered) => {
            for v in uncovered {
                let next = current.with(v);
                // supersets of a transversal already found are never minimal
                if out.iter().any(|t| t.is_subset(next)) {
                    continue;
                }
                branch(family, next, out);
            }
        }
    }
}

pub fn is_transversal(family: &[VarSet], t: VarSet) -> bool {
    family.iter().all(|s| s.intersects(t))
}

pub fn is_minimal_transversal(family: &[VarSet], t: VarSet) -> bool {
    is_transversal(family, t) && t.iter().all(|v| !is_transversal(family, t.without(v)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(ix: &[usize]) -> VarSet {
        ix.iter().copied().collect()
    }

    fn brute_transversals(family: &[VarSet], n: usize) -> Vec<VarSet> {
        let mut out: Vec<VarSet> = VarSet::full(n)
            .subsets()
            .filter(|&t| is_minimal_transversal(family, t))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn ordering_is_lexicographic_on_indices() {
        let mut v = vec![vs(&[1]), vs(&[0, 2]), vs(&[0]), vs(&[0, 1])];
        v.sort();
        assert_eq!(v, vec![vs(&[0]), vs(&[0, 1]), vs(&[0, 2]), vs(&[1])]);
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = vs(&[0, 2, 5]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(all[0], VarSet::EMPTY);
        assert_eq!(*all.last().unwrap(), s);
    }

    #[test]
    fn transversal_edge_cases() {
        assert_eq!(minimal_transversals(&[]), vec![VarSet::EMPTY]);
        assert!(minimal_transversals(&[VarSet::EMPTY]).is_empty());
        assert_eq!(minimal_transversals(&[vs(&[0, 1])]), vec![vs(&[0]), vs(&[1])]);
    }

    #[test]
    fn transversals_match_brute_force() {
        // path 1-2-3, triangle, 4-cycle, and a mixed family
        let cases: Vec<(usize, Vec<VarSet>)> = vec![
            (3, vec![vs(&[0, 1]), vs(&[1, 2])]),
            (3, vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[0, 2])]),
            (4, vec![vs(&[0, 1]), vs(&[1, 2]), vs(&[2, 3]), vs(&[0, 3])]),
            (5, vec![vs(&[0, 1, 2]), vs(&[2, 3]), vs(&[4]), vs(&[0, 3])]),
        ];
        for (n, fam) in cases {
            assert_eq!(minimal_transversals(&fam), brute_transversals(&fam, n));
        }
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(vs(&[0, 2]).to_string(), "{1,3}");
    }
}
