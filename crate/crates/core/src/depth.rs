//! Depth of monomial quotients.
//!
//! For square-free `J` with Stanley–Reisner complex `Δ`,
//! `pd(R/J) = max { i : H̃_{|σ|-i-1}(Δ|σ) ≠ 0 for some σ ⊆ [n] }` and
//! `depth R/J = n - pd(R/J)`. For general `I` the depth is the minimum over
//! the associated radicals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::asr::{asr_brute_force, AsrSet};
use crate::decomposition::RadicalIdeal;
use crate::error::{Error, Result};
use crate::monomial::MonomialIdeal;
use crate::varset::{VarSet, MAX_VARS};

/// Coefficient field for homology.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum Field {
    #[default]
    Rational,
    Prime(u64),
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl FromStr for Field {
    type Err = Error;

    /// `q` or `p:<prime>`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "q" {
            return Ok(Field::Rational);
        }
        let p = s
            .strip_prefix("p:")
            .and_then(|d| d.parse::<u64>().ok())
            .ok_or_else(|| Error::parse(1, 1, format!("field must be 'q' or 'p:<prime>', got '{s}'")))?;
        if !is_prime(p) || p > u64::from(u32::MAX) {
            return Err(Error::parse(1, 3, format!("{p} is not a prime below 2^32")));
        }
        Ok(Field::Prime(p))
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => f.write_str("q"),
            Field::Prime(p) => write!(f, "p:{p}"),
        }
    }
}

/// A simplicial complex on `{0..n-1}` given by its facets. The void complex
/// (no faces at all) has no facets; `{∅}` has the single facet `∅`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<VarSet>,
}

impl SimplicialComplex {
    pub fn from_facets(n: usize, facets: impl IntoIterator<Item = VarSet>) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { got: n, max: MAX_VARS });
        }
        let facets: Vec<VarSet> = facets.into_iter().collect();
        if let Some(f) = facets.iter().find(|f| !f.is_subset(VarSet::full(n))) {
            return Err(Error::Precondition(format!("facet {f} outside 1..{n}")));
        }
        Ok(Self::maximal(n, facets))
    }

    fn maximal(n: usize, facets: Vec<VarSet>) -> Self {
        let mut keep: Vec<VarSet> = facets
            .iter()
            .copied()
            .filter(|&f| !facets.iter().any(|&g| g != f && f.is_subset(g)))
            .collect();
        keep.sort();
        keep.dedup();
        SimplicialComplex { n, facets: keep }
    }

    /// Faces are the `σ` with `x_σ ∉ J`. `J` must be square-free and proper.
    pub fn stanley_reisner(j: &MonomialIdeal) -> Result<Self> {
        if !j.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        if j.is_unit() {
            return Err(Error::ImproperIdeal("the unit ideal has no Stanley-Reisner complex"));
        }
        if j.is_zero() {
            return Ok(SimplicialComplex {
                n: j.ambient(),
                facets: vec![VarSet::full(j.ambient())],
            });
        }
        Ok(Self::from_radical(&RadicalIdeal::from_square_free(j)?))
    }

    /// Facets are the complements of the prime supports.
    pub fn from_radical(r: &RadicalIdeal) -> Self {
        let full = VarSet::full(r.ambient());
        Self::maximal(r.ambient(), r.primes().iter().map(|&f| full.difference(f)).collect())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[VarSet] {
        &self.facets
    }

    pub fn contains_face(&self, s: VarSet) -> bool {
        self.facets.iter().any(|&f| s.is_subset(f))
    }

    /// `Δ|σ`: faces of `Δ` inside `σ`.
    pub fn induced(&self, sigma: VarSet) -> Self {
        Self::maximal(self.n, self.facets.iter().map(|&f| f.intersection(sigma)).collect())
    }

    /// All faces including `∅`, grouped by size (`faces()[k]` has size `k`).
    pub fn faces(&self) -> Vec<Vec<VarSet>> {
        let mut all: Vec<VarSet> = Vec::new();
        for &f in &self.facets {
            all.extend(f.subsets());
        }
        all.sort();
        all.dedup();
        let top = self.facets.iter().map(|f| f.len()).max().map_or(0, |d| d + 1);
        let mut by_size = vec![Vec::new(); top];
        for s in all {
            by_size[s.len()].push(s);
        }
        by_size
    }
}

/// Reduced homology ranks indexed by dimension `-1 ..= dim Δ`
/// (`ranks[k + 1]` is the rank in dimension `k`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyRanks {
    pub ranks: Vec<usize>,
}

impl HomologyRanks {
    pub fn in_dimension(&self, k: isize) -> usize {
        usize::try_from(k + 1).ok().and_then(|i| self.ranks.get(i).copied()).unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.ranks.iter().all(|&r| r == 0)
    }
}

/// Rank of an integer matrix over the given field.
fn matrix_rank(rows: Vec<Vec<i64>>, field: Field) -> usize {
    match field {
        Field::Rational => {
            let m = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
            rank_fraction_free(m)
        }
        Field::Prime(p) => {
            let m = rows
                .into_iter()
                .map(|r| r.into_iter().map(|v| v.rem_euclid(p as i64) as u64).collect())
                .collect();
            rank_mod_p(m, p)
        }
    }
}

/// Bareiss elimination over ℤ; the rank over ℚ.
fn rank_fraction_free(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    let mut prev = BigInt::from(1);
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&m[i][j] * &m[r][c] - &m[i][c] * &m[r][j]) / &prev;
                m[i][j] = v;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn rank_mod_p(mut m: Vec<Vec<u64>>, p: u64) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, piv);
        let inv = pow_mod(m[r][c], p - 2, p);
        for i in r + 1..rows {
            let f = m[i][c] * inv % p;
            if f == 0 {
                continue;
            }
            for j in c..cols {
                m[i][j] = (m[i][j] + p - f * m[r][j] % p) % p;
            }
        }
        r += 1;
    }
    r
}

/// Reduced homology via boundary-matrix ranks, checked against the reduced
/// Euler characteristic.
pub fn reduced_homology_ranks(d: &SimplicialComplex, field: Field) -> Result<HomologyRanks> {
    let faces = d.faces();
    if faces.is_empty() {
        // the void complex
        return Ok(HomologyRanks { ranks: Vec::new() });
    }
    let index: Vec<BTreeMap<VarSet, usize>> = faces
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(k, &f)| (f, k)).collect())
        .collect();
    // boundary_rank[k] = rank of ∂ from size-k faces to size-(k-1) faces
    let mut boundary_rank = vec![0usize; faces.len() + 1];
    for k in 1..faces.len() {
        let rows: Vec<Vec<i64>> = faces[k]
            .iter()
            .map(|&f| {
                let mut row = vec![0i64; faces[k - 1].len()];
                for (pos, v) in f.iter().enumerate() {
                    let sign = if pos % 2 == 0 { 1 } else { -1 };
                    row[index[k - 1][&f.without(v)]] = sign;
                }
                row
            })
            .collect();
        boundary_rank[k] = matrix_rank(rows, field);
    }
    let ranks: Vec<usize> = (0..faces.len())
        .map(|k| faces[k].len() - boundary_rank[k] - boundary_rank[k + 1])
        .collect();
    let chi_faces: i64 = faces.iter().enumerate().map(|(k, fs)| alt(k) * fs.len() as i64).sum();
    let chi_homology: i64 = ranks.iter().enumerate().map(|(k, &r)| alt(k) * r as i64).sum();
    if chi_faces != chi_homology {
        return Err(Error::Invariant(format!(
            "Euler characteristic mismatch: faces give {chi_faces}, homology gives {chi_homology}"
        )));
    }
    Ok(HomologyRanks { ranks })
}

fn alt(k: usize) -> i64 {
    if k.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `pd(R/J)` from the complex of `J`.
fn projective_dimension(d: &SimplicialComplex, field: Field) -> Result<usize> {
    let n = d.vertex_count();
    let sigmas: Vec<VarSet> = VarSet::full(n).subsets().collect();
    let per: Vec<usize> = sigmas
        .par_iter()
        .map(|&sigma| {
            let h = reduced_homology_ranks(&d.induced(sigma), field)?;
            // rank in dimension k = |σ| - i - 1 gives i = |σ| - k - 1 = |σ| - idx
            Ok(h.ranks
                .iter()
                .enumerate()
                .filter(|&(_, &r)| r > 0)
                .map(|(idx, _)| sigma.len() - idx)
                .max()
                .unwrap_or(0))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(per.into_iter().max().unwrap_or(0))
}

fn checked_depth(n: usize, pd: usize) -> Result<usize> {
    if pd == 0 || pd > n {
        return Err(Error::Invariant(format!("projective dimension {pd} outside 1..={n}")));
    }
    Ok(n - pd)
}

/// `depth R/J` for square-free, proper, nonzero `J`.
pub fn depth_square_free(j: &MonomialIdeal, field: Field) -> Result<usize> {
    j.require_proper_nonzero()?;
    let d = SimplicialComplex::stanley_reisner(j)?;
    checked_depth(j.ambient(), projective_dimension(&d, field)?)
}

pub fn depth_of_radical(r: &RadicalIdeal, field: Field) -> Result<usize> {
    checked_depth(r.ambient(), projective_dimension(&SimplicialComplex::from_radical(r), field)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DepthReport {
    pub per_radical: Vec<(RadicalIdeal, usize)>,
    pub depth: usize,
    /// First radical (in canonical order) attaining the minimum.
    pub argmin: RadicalIdeal,
}

/// Minimum of the radical depths over a precomputed asr set.
pub fn depth_from_asr(set: &AsrSet, field: Field) -> Result<DepthReport> {
    let radicals: Vec<RadicalIdeal> = set.radicals().cloned().collect();
    let per_radical: Vec<(RadicalIdeal, usize)> = radicals
        .into_iter()
        .map(|r| depth_of_radical(&r, field).map(|d| (r, d)))
        .collect::<Result<_>>()?;
    let (argmin, depth) = per_radical
        .iter()
        .min_by_key(|(_, d)| *d)
        .cloned()
        .ok_or_else(|| Error::Invariant("empty asr set".into()))?;
    if depth + 1 > set.ambient() {
        return Err(Error::Invariant(format!("depth {depth} exceeds n - 1 = {}", set.ambient() - 1)));
    }
    Ok(DepthReport {
        per_radical,
        depth,
        argmin,
    })
}

/// `depth R/I = min { depth R/√(I : f) : f ∉ I }`.
pub fn depth_via_hochster(i: &MonomialIdeal, field: Field) -> Result<DepthReport> {
    depth_from_asr(&asr_brute_force(i)?, field)
}
