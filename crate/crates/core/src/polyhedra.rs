//! Exact geometry of the prime-sum systems
//!
//! ```text
//! Σ_{i ∈ F_j} x_i ≤ t   (le rows)
//! Σ_{i ∈ F_j} x_i ≥ t   (ge rows)
//! x ≥ 0
//! ```
//!
//! Vertices come from nonsingular `n`-subsets of tight rows solved by Cramer's
//! rule. All feasibility tests are done on integer numerators; nothing here
//! touches floating point.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::asr::symbolic_colon_radical;
use crate::decomposition::{PrimeSupport, RadicalIdeal};
use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfspaceSystem {
    n: usize,
    le: Vec<PrimeSupport>,
    ge: Vec<PrimeSupport>,
    rhs: BigRational,
}

/// A row that holds with equality at a vertex.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Constraint {
    /// index into the le rows
    Le(usize),
    /// index into the ge rows
    Ge(usize),
    /// `x_i = 0`
    NonNeg(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub coords: Vec<BigRational>,
    /// `|det|` of the tight system, always positive.
    pub det: BigInt,
    /// Cramer numerators of the `t = 1` system: `coords = t · numerators / det`.
    pub numerators: Vec<BigInt>,
    pub tight: Vec<Constraint>,
}

impl Vertex {
    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|c| c.is_integer())
    }

    /// Coordinates as `p/q` strings (`q` omitted when 1).
    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl HalfspaceSystem {
    pub fn new(n: usize, le: Vec<PrimeSupport>, ge: Vec<PrimeSupport>, rhs: BigRational) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { got: n, max: MAX_VARS });
        }
        if !rhs.is_positive() {
            return Err(Error::Precondition("right-hand side must be positive".into()));
        }
        let full = VarSet::full(n);
        for f in le.iter().chain(&ge) {
            if f.is_empty() || !f.is_subset(full) {
                return Err(Error::Precondition(format!("row support {f} is empty or outside 1..{n}")));
            }
        }
        Ok(HalfspaceSystem { n, le, ge, rhs })
    }

    /// `C̄_t` for the target `q`: le rows are the primes of `q`, ge rows the
    /// remaining minimal primes of `primes`.
    pub fn for_radical(primes: &RadicalIdeal, q: &RadicalIdeal, t: BigRational) -> Result<Self> {
        if primes.ambient() != q.ambient() {
            return Err(Error::AmbientMismatch {
                left: primes.ambient(),
                right: q.ambient(),
            });
        }
        if let Some(f) = q.primes().iter().find(|f| !primes.primes().contains(f)) {
            return Err(Error::Precondition(format!("prime {f} is not a minimal prime of the ideal")));
        }
        let ge = primes.primes().iter().copied().filter(|f| !q.primes().contains(f)).collect();
        Self::new(primes.ambient(), q.primes().to_vec(), ge, t)
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn le_rows(&self) -> &[PrimeSupport] {
        &self.le
    }

    pub fn ge_rows(&self) -> &[PrimeSupport] {
        &self.ge
    }

    pub fn rhs(&self) -> &BigRational {
        &self.rhs
    }

    pub fn scaled(&self, t: BigRational) -> Result<Self> {
        Self::new(self.n, self.le.clone(), self.ge.clone(), t)
    }

    /// Coordinates bounded by no le row.
    pub fn uncovered(&self) -> VarSet {
        let covered = self.le.iter().fold(VarSet::EMPTY, |a, &f| a.union(f));
        VarSet::full(self.n).difference(covered)
    }

    pub fn is_bounded(&self) -> bool {
        self.uncovered().is_empty()
    }

    fn require_bounded(&self) -> Result<()> {
        let free = self.uncovered();
        if free.is_empty() {
            Ok(())
        } else {
            Err(Error::Unbounded(free.iter().map(|i| i + 1).collect()))
        }
    }

    /// Largest number of ones in a row, counting the coordinate rows.
    pub fn max_row_weight(&self) -> usize {
        self.le.iter().chain(&self.ge).map(|f| f.len()).max().unwrap_or(1).max(1)
    }

    fn row_sum(f: PrimeSupport, x: &[BigRational]) -> BigRational {
        f.iter().map(|i| &x[i]).sum()
    }

    pub fn contains_point(&self, x: &[BigRational]) -> bool {
        x.len() == self.n
            && x.iter().all(|c| !c.is_negative())
            && self.le.iter().all(|&f| Self::row_sum(f, x) <= self.rhs)
            && self.ge.iter().all(|&f| Self::row_sum(f, x) >= self.rhs)
    }

    /// Every inequality, including `x ≥ 0`, holds strictly.
    pub fn strictly_contains(&self, x: &[BigRational]) -> bool {
        x.len() == self.n
            && x.iter().all(|c| c.is_positive())
            && self.le.iter().all(|&f| Self::row_sum(f, x) < self.rhs)
            && self.ge.iter().all(|&f| Self::row_sum(f, x) > self.rhs)
    }

    fn rows(&self) -> Vec<(Constraint, PrimeSupport)> {
        let mut rows: Vec<(Constraint, PrimeSupport)> = Vec::new();
        rows.extend(self.le.iter().enumerate().map(|(j, &f)| (Constraint::Le(j), f)));
        rows.extend(self.ge.iter().enumerate().map(|(j, &f)| (Constraint::Ge(j), f)));
        rows.extend((0..self.n).map(|i| (Constraint::NonNeg(i), VarSet::singleton(i))));
        rows
    }

    /// Vertices of the (pointed) polyhedron, bounded or not, sorted by
    /// coordinates. Degenerate vertices keep the first tight set in
    /// combination order.
    pub fn vertices(&self) -> Vec<Vertex> {
        let rows = self.rows();
        let n = self.n;
        let mut found: BTreeMap<Vec<BigRational>, Vertex> = BTreeMap::new();
        for pick in Combinations::new(rows.len(), n) {
            let chosen: Vec<&(Constraint, PrimeSupport)> = pick.iter().map(|&k| &rows[k]).collect();
            let matrix: Vec<Vec<i128>> = chosen
                .iter()
                .map(|(_, f)| (0..n).map(|i| i128::from(f.contains(i))).collect())
                .collect();
            let b: Vec<i128> = chosen
                .iter()
                .map(|(c, _)| i128::from(!matches!(c, Constraint::NonNeg(_))))
                .collect();
            let d = determinant(matrix.clone());
            if d == 0 {
                continue;
            }
            let sign = d.signum();
            let nums: Vec<i128> = (0..n)
                .map(|i| {
                    let mut m = matrix.clone();
                    for (row, &bk) in m.iter_mut().zip(&b) {
                        row[i] = bk;
                    }
                    determinant(m) * sign
                })
                .collect();
            let det = d.abs();
            let sum = |f: PrimeSupport| f.iter().map(|i| nums[i]).sum::<i128>();
            let feasible = nums.iter().all(|&v| v >= 0)
                && self.le.iter().all(|&f| sum(f) <= det)
                && self.ge.iter().all(|&f| sum(f) >= det);
            if !feasible {
                continue;
            }
            let det_big = BigInt::from(det);
            let coords: Vec<BigRational> = nums
                .iter()
                .map(|&v| BigRational::new(BigInt::from(v), det_big.clone()) * &self.rhs)
                .collect();
            found.entry(coords.clone()).or_insert_with(|| Vertex {
                coords,
                det: det_big.clone(),
                numerators: nums.iter().map(|&v| BigInt::from(v)).collect(),
                tight: chosen.iter().map(|(c, _)| *c).collect(),
            });
        }
        found.into_values().collect()
    }

    /// Vertices of a bounded system; `Unbounded` lists the free coordinates.
    pub fn enumerate_vertices(&self) -> Result<Vec<Vertex>> {
        self.require_bounded()?;
        Ok(self.vertices())
    }

    /// True iff the barycenter of all vertices satisfies every inequality
    /// strictly. For a polytope that barycenter lies in the relative
    /// interior, which is the interior exactly when the polytope is
    /// full-dimensional.
    pub fn is_full_dimensional(&self) -> Result<bool> {
        let vs = self.enumerate_vertices()?;
        if vs.is_empty() {
            return Ok(false);
        }
        let center = barycenter(vs.iter().map(|v| v.coords.as_slice()));
        Ok(self.strictly_contains(&center))
    }

    /// JSON dump with 1-based supports and the right-hand side as a fraction.
    pub fn to_json(&self) -> Value {
        let rows = |v: &[PrimeSupport]| -> Vec<Vec<usize>> {
            v.iter().map(|f| f.iter().map(|i| i + 1).collect()).collect()
        };
        json!({
            "n": self.n,
            "supports": rows(&self.le).into_iter().chain(rows(&self.ge)).collect::<Vec<_>>(),
            "directions": self.le.iter().map(|_| "le").chain(self.ge.iter().map(|_| "ge")).collect::<Vec<_>>(),
            "rhs": self.rhs.to_string(),
        })
    }
}

/// `δ² ≤ b^n`, the Hadamard bound `δ ≤ b^{n/2}` without square roots.
pub fn hadamard_holds(v: &Vertex, n: usize, b: usize) -> bool {
    let lhs = &v.det * &v.det;
    let rhs = num_traits::pow(BigInt::from(b), n);
    lhs <= rhs
}

pub fn barycenter<'a>(points: impl Iterator<Item = &'a [BigRational]>) -> Vec<BigRational> {
    let mut sum: Vec<BigRational> = Vec::new();
    let mut count = 0i64;
    for p in points {
        if sum.is_empty() {
            sum = vec![BigRational::zero(); p.len()];
        }
        for (s, c) in sum.iter_mut().zip(p) {
            *s += c;
        }
        count += 1;
    }
    let k = rat(count.max(1));
    sum.into_iter().map(|s| s / &k).collect()
}

/// Fraction-free Gaussian elimination (Bareiss); exact for integer matrices
/// whose minors fit in `i128`.
pub fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Rank of a rational matrix.
pub fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in r + 1..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let factor = &rows[i][c] / &pivot;
            for j in c..cols {
                let t = &factor * &rows[r][j];
                rows[i][j] -= t;
            }
        }
        r += 1;
    }
    r
}

/// Affine rank (dimension of the affine hull plus one) of a point family.
pub fn affine_rank(points: &[&[BigRational]]) -> usize {
    match points.split_first() {
        None => 0,
        Some((first, rest)) => {
            let diffs = rest
                .iter()
                .map(|p| p.iter().zip(first.iter()).map(|(a, b)| a - b).collect())
                .collect();
            rank(diffs) + 1
        }
    }
}

/// `λ_i = ⌈α_i⌉ - α_i`.
pub fn lambda_round(alpha: &[BigRational]) -> Vec<BigRational> {
    alpha.iter().map(|a| a.ceil() - a).collect()
}

/// `⌈n · b^{(n+2)/2}⌉` in integer arithmetic. For odd `n + 2` this is
/// `⌈√(n² b^{n+2})⌉`, resolved with an integer square root.
pub fn s0_bound(n: usize, b: usize) -> Result<u64> {
    if n == 0 || b == 0 {
        return Err(Error::Precondition("n and bight must be positive".into()));
    }
    let e = n + 2;
    let big = if e.is_multiple_of(2) {
        BigUint::from(n) * num_traits::pow(BigUint::from(b), e / 2)
    } else {
        let target = BigUint::from(n * n) * num_traits::pow(BigUint::from(b), e);
        let root = target.sqrt();
        if &root * &root == target {
            root
        } else {
            root + 1u32
        }
    };
    big.to_u64().ok_or(Error::Overflow)
}

fn to_exponents(v: &[BigRational]) -> Result<Vec<u32>> {
    v.iter()
        .map(|c| {
            debug_assert!(c.is_integer());
            c.to_integer().to_u32().ok_or(Error::Overflow)
        })
        .collect()
}

/// `β = α + γ` for the lexicographically smallest integral vertex `γ` of the
/// `t = 1` system. The system may be unbounded; it is always pointed.
pub fn witness_lift(alpha: &[u32], sys: &HalfspaceSystem) -> Result<Vec<u32>> {
    if alpha.len() != sys.n {
        return Err(Error::AmbientMismatch {
            left: alpha.len(),
            right: sys.n,
        });
    }
    if !sys.rhs.is_one() {
        return Err(Error::Precondition("witness lifting needs the t = 1 system".into()));
    }
    let gamma = sys
        .vertices()
        .into_iter()
        .find(Vertex::is_integral)
        .ok_or(Error::NoIntegralVertex)?;
    let gamma = to_exponents(&gamma.coords)?;
    alpha
        .iter()
        .zip(&gamma)
        .map(|(&a, &g)| a.checked_add(g).ok_or(Error::Overflow))
        .collect()
}

/// The lexicographically first `n` affinely independent vertices on the face
/// where ge row `row` is tight, if that face is a facet.
pub fn facet_vertices(sys: &HalfspaceSystem, row: usize) -> Result<Option<Vec<Vertex>>> {
    let f = *sys
        .ge
        .get(row)
        .ok_or_else(|| Error::Precondition(format!("no ge row {row}")))?;
    let mut picked: Vec<Vertex> = Vec::new();
    for v in sys.enumerate_vertices()? {
        if HalfspaceSystem::row_sum(f, &v.coords) != sys.rhs {
            continue;
        }
        let mut trial: Vec<&[BigRational]> = picked.iter().map(|p| p.coords.as_slice()).collect();
        trial.push(&v.coords);
        if affine_rank(&trial) == trial.len() {
            picked.push(v);
            if picked.len() == sys.n {
                return Ok(Some(picked));
            }
        }
    }
    Ok(None)
}

/// ge rows whose hyperplane supports a facet.
pub fn supporting_facets(sys: &HalfspaceSystem) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for j in 0..sys.ge.len() {
        if facet_vertices(sys, j)?.is_some() {
            out.push(j);
        }
    }
    Ok(out)
}

/// `β = s·u + λ = ⌈s·u⌉` where `u` is the barycenter of the facet vertices
/// chosen by [`facet_vertices`].
pub fn barycentric_witness(sys: &HalfspaceSystem, row: usize, s: u32) -> Result<Vec<u32>> {
    if !sys.rhs.is_one() {
        return Err(Error::Precondition("barycentric witness needs the t = 1 system".into()));
    }
    let vs = facet_vertices(sys, row)?.ok_or(Error::NoSupportingFacet)?;
    let u = barycenter(vs.iter().map(|v| v.coords.as_slice()));
    let su: Vec<BigRational> = u.iter().map(|c| c * rat(i64::from(s))).collect();
    let lambda = lambda_round(&su);
    let beta: Vec<BigRational> = su.iter().zip(&lambda).map(|(a, l)| a + l).collect();
    to_exponents(&beta)
}

fn check_ff(primes: &RadicalIdeal, q: &RadicalIdeal, beta: &[u32], s: u32, what: &str) -> Result<()> {
    let wide: Vec<u64> = beta.iter().map(|&b| u64::from(b)).collect();
    match symbolic_colon_radical(primes, &wide, u64::from(s)) {
        Some(r) if &r == q => Ok(()),
        other => Err(Error::Invariant(format!(
            "{what} {beta:?} at s = {s} gives {}, expected {q}",
            other.map_or_else(|| "a unit colon".to_string(), |r| r.to_string())
        ))),
    }
}

/// Lifts a witness `α` of `q ∈ asr(I^(s))` to a witness of
/// `q ∈ asr(I^(s+1))`, re-checking both ends through the prime sums.
pub fn lift_witness(primes: &RadicalIdeal, q: &RadicalIdeal, alpha: &[u32], s: u32) -> Result<Vec<u32>> {
    check_ff(primes, q, alpha, s, "input witness")?;
    let sys = HalfspaceSystem::for_radical(primes, q, BigRational::one())?;
    let beta = witness_lift(alpha, &sys)?;
    check_ff(primes, q, &beta, s + 1, "lifted witness")?;
    Ok(beta)
}

/// A witness of `q ∈ asr(I^(s))` built from a facet barycenter, for `q` of
/// full support. `q = I` has the trivial witness `0`.
pub fn stability_witness(primes: &RadicalIdeal, q: &RadicalIdeal, s: u32) -> Result<Vec<u32>> {
    let sys = HalfspaceSystem::for_radical(primes, q, BigRational::one())?;
    if sys.ge.is_empty() {
        return Ok(vec![0; sys.n]);
    }
    let row = *supporting_facets(&sys)?.first().ok_or(Error::NoSupportingFacet)?;
    let beta = barycentric_witness(&sys, row, s)?;
    check_ff(primes, q, &beta, s, "barycentric witness")?;
    Ok(beta)
}

/// Lexicographic `k`-subsets of `0..m`.
struct Combinations {
    m: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(m: usize, k: usize) -> Self {
        Combinations {
            m,
            idx: (0..k).collect(),
            done: k > m,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.m - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}
