//! Monomials and monomial ideals in `K[x_1, .., x_n]`.
//!
//! Variable indices are 0-based in the API. A [`MonomialIdeal`] always holds
//! its minimal generating set, sorted lexicographically by exponent vector,
//! so structural equality is ideal equality.

use std::fmt;

use crate::decomposition::RadicalIdeal;
use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

/// Largest exponent accepted anywhere; products that exceed it are rejected.
pub const MAX_EXPONENT: u32 = u16::MAX as u32;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Result<Self> {
        if exps.len() > MAX_VARS {
            return Err(Error::TooManyVariables {
                got: exps.len(),
                max: MAX_VARS,
            });
        }
        if exps.iter().any(|&e| e > MAX_EXPONENT) {
            return Err(Error::Overflow);
        }
        Ok(Monomial { exps })
    }

    /// The monomial `1`.
    pub fn one(n: usize) -> Self {
        Monomial { exps: vec![0; n] }
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut exps = vec![0; n];
        exps[i] = 1;
        Monomial { exps }
    }

    /// `x_F`, the product of the variables in `set`.
    pub fn from_set(n: usize, set: VarSet) -> Self {
        let mut exps = vec![0; n];
        for i in set {
            exps[i] = 1;
        }
        Monomial { exps }
    }

    pub fn ambient(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u64 {
        self.exps.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn support(&self) -> VarSet {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn is_square_free(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    fn check_ambient(&self, other: &Monomial) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::AmbientMismatch {
                left: self.ambient(),
                right: other.ambient(),
            });
        }
        Ok(())
    }

    /// Componentwise `self ≤ other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_ambient(other)?;
        Ok(self.divides_unchecked(other))
    }

    pub(crate) fn divides_unchecked(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a.checked_add(*b).filter(|&e| e <= MAX_EXPONENT).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn pow(&self, k: u32) -> Result<Monomial> {
        let exps = self
            .exps
            .iter()
            .map(|&e| e.checked_mul(k).filter(|&e| e <= MAX_EXPONENT).ok_or(Error::Overflow))
            .collect::<Result<_>>()?;
        Ok(Monomial { exps })
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_ambient(other)?;
        Ok(self.lcm_unchecked(other))
    }

    fn lcm_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| *a.max(b)).collect(),
        }
    }

    /// `self / gcd(self, f)`: exponents `max(a_i - f_i, 0)`.
    pub fn colon(&self, f: &Monomial) -> Result<Monomial> {
        self.check_ambient(f)?;
        Ok(Monomial {
            exps: self.exps.iter().zip(&f.exps).map(|(a, b)| a.saturating_sub(*b)).collect(),
        })
    }

    pub fn square_free_part(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|&e| e.min(1)).collect(),
        }
    }

    /// Sets the exponent of `x_i` to zero.
    pub fn delete_var(&self, i: usize) -> Result<Monomial> {
        if i >= self.ambient() {
            return Err(Error::IndexOutOfRange {
                index: i,
                ambient: self.ambient(),
            });
        }
        let mut exps = self.exps.clone();
        exps[i] = 0;
        Ok(Monomial { exps })
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimalizes `gens` into an ideal of `K[x_1..x_n]`.
    pub fn new<I: IntoIterator<Item = Monomial>>(n: usize, gens: I) -> Result<Self> {
        if n > MAX_VARS {
            return Err(Error::TooManyVariables { got: n, max: MAX_VARS });
        }
        let gens: Vec<Monomial> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| g.ambient() != n) {
            return Err(Error::AmbientMismatch {
                left: n,
                right: g.ambient(),
            });
        }
        Ok(Self::from_unchecked(n, gens))
    }

    pub(crate) fn from_unchecked(n: usize, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            n,
            gens: minimalize(gens),
        }
    }

    pub fn zero(n: usize) -> Self {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn unit(n: usize) -> Self {
        MonomialIdeal {
            n,
            gens: vec![Monomial::one(n)],
        }
    }

    /// The monomial prime `(x_i : i ∈ set)`.
    pub fn prime(n: usize, set: VarSet) -> Self {
        Self::from_unchecked(n, set.iter().map(|i| Monomial::var(n, i)).collect())
    }

    /// The square-free ideal generated by `x_F` for each `F` in `sets`.
    pub fn from_supports(n: usize, sets: impl IntoIterator<Item = VarSet>) -> Self {
        Self::from_unchecked(n, sets.into_iter().map(|s| Monomial::from_set(n, s)).collect())
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn is_proper_nonzero(&self) -> bool {
        !self.is_zero() && !self.is_unit()
    }

    pub fn is_square_free(&self) -> bool {
        self.gens.iter().all(Monomial::is_square_free)
    }

    /// Rejects the zero and unit ideals.
    pub fn require_proper_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ImproperIdeal("zero ideal"))
        } else if self.is_unit() {
            Err(Error::ImproperIdeal("unit ideal"))
        } else {
            Ok(())
        }
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::AmbientMismatch { left: self.n, right: n });
        }
        Ok(())
    }

    pub fn contains(&self, f: &Monomial) -> bool {
        f.ambient() == self.n && self.gens.iter().any(|g| g.divides_unchecked(f))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> bool {
        other.gens.iter().all(|g| self.contains(g))
    }

    pub fn support(&self) -> VarSet {
        self.gens.iter().fold(VarSet::EMPTY, |acc, g| acc.union(g.support()))
    }

    /// Per-variable maximum exponent over the minimal generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut out = vec![0; self.n];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.exponents()) {
                *o = (*o).max(e);
            }
        }
        out
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let mut lcms = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                lcms.push(a.lcm_unchecked(b));
            }
        }
        Ok(Self::from_unchecked(self.n, lcms))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_ambient(other.n)?;
        let mut prods = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                prods.push(a.mul(b)?);
            }
        }
        Ok(Self::from_unchecked(self.n, prods))
    }

    /// `I^s`; `I^0` is the unit ideal.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for _ in 0..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I : f`, generated by `g / gcd(g, f)`.
    pub fn colon(&self, f: &Monomial) -> Result<MonomialIdeal> {
        self.check_ambient(f.ambient())?;
        let gens = self.gens.iter().map(|g| g.colon(f)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// `√I` as a square-free monomial ideal.
    pub fn radical(&self) -> MonomialIdeal {
        Self::from_unchecked(self.n, self.gens.iter().map(Monomial::square_free_part).collect())
    }

    /// `I[i]`: the image of `I` under `x_i ↦ 1`.
    pub fn delete_var(&self, i: usize) -> Result<MonomialIdeal> {
        if i >= self.n {
            return Err(Error::IndexOutOfRange {
                index: i,
                ambient: self.n,
            });
        }
        let gens = self.gens.iter().map(|g| g.delete_var(i)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unchecked(self.n, gens))
    }

    /// `√(I : f)` for a monomial `f ∉ I`, in canonical prime form.
    pub fn assoc_radical(&self, f: &Monomial) -> Result<RadicalIdeal> {
        self.check_ambient(f.ambient())?;
        if self.contains(f) {
            return Err(Error::MemberOfIdeal(f.to_string()));
        }
        RadicalIdeal::from_square_free(&self.colon(f)?.radical())
    }
}

/// Divisibility antichain of `gens` in lexicographic order.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides_unchecked(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

/// `(g1, g2, ..)`; the zero ideal prints as `(0)`.
impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        f.write_str("(")?;
        for (k, g) in self.gens.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {} vars", self.n)
    }
}
