//! Exhaustive scans over integer boxes `∏ [0, cap_i]`.
//!
//! Points are visited in lexicographic order (last coordinate fastest). The
//! box is cut into contiguous index ranges that run on the rayon pool; each
//! key keeps the lexicographically first point that produced it, so the merged
//! result does not depend on scheduling.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::error::{Error, Result};

/// Largest number of lattice points a single scan may visit.
pub const SCAN_BUDGET: u128 = 100_000_000;

pub fn box_size(caps: &[u32]) -> u128 {
    caps.iter()
        .map(|&c| u128::from(c) + 1)
        .try_fold(1u128, |acc, k| acc.checked_mul(k))
        .unwrap_or(u128::MAX)
}

pub fn check_budget(caps: &[u32]) -> Result<u64> {
    let points = box_size(caps);
    if points > SCAN_BUDGET {
        return Err(Error::BudgetExceeded {
            points,
            limit: SCAN_BUDGET,
        });
    }
    Ok(points as u64)
}

fn decode(mut index: u64, caps: &[u32], out: &mut [u32]) {
    for (slot, &c) in out.iter_mut().zip(caps).rev() {
        let radix = u64::from(c) + 1;
        *slot = (index % radix) as u32;
        index /= radix;
    }
}

/// Odometer step; returns false after the last point.
fn advance(point: &mut [u32], caps: &[u32]) -> bool {
    for (slot, &c) in point.iter_mut().zip(caps).rev() {
        if *slot < c {
            *slot += 1;
            return true;
        }
        *slot = 0;
    }
    false
}

/// Evaluates `visit` at every point of the box and keeps, for each key it
/// returns, the first point in lexicographic order.
///
/// `S` is per-worker scratch space (buffers, memo tables).
pub fn scan_first_witness<K, S, F>(caps: &[u32], visit: F) -> Result<BTreeMap<K, Vec<u32>>>
where
    K: Ord + Send,
    S: Default,
    F: Fn(&[u32], &mut S) -> Option<K> + Sync,
{
    let total = check_budget(caps)?;
    let workers = rayon::current_num_threads() as u64;
    let chunk = (total / (workers * 8).max(1)).max(4096);
    let chunks = total.div_ceil(chunk);

    let merged: BTreeMap<K, u64> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk;
            let end = (start + chunk).min(total);
            let mut point = vec![0u32; caps.len()];
            decode(start, caps, &mut point);
            let mut scratch = S::default();
            let mut local: BTreeMap<K, u64> = BTreeMap::new();
            let mut index = start;
            while index < end {
                if let Some(key) = visit(&point, &mut scratch) {
                    local.entry(key).or_insert(index);
                }
                index += 1;
                if index < end {
                    advance(&mut point, caps);
                }
            }
            local
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, i) in b {
                a.entry(k).and_modify(|j| *j = (*j).min(i)).or_insert(i);
            }
            a
        });

    Ok(merged
        .into_iter()
        .map(|(k, i)| {
            let mut point = vec![0u32; caps.len()];
            decode(i, caps, &mut point);
            (k, point)
        })
        .collect())
}
