//! Primary decompositions, minimal primes, symbolic powers and the canonical
//! form of square-free (radical) monomial ideals.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::lattice;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::{minimal_sets, minimal_transversals, VarSet};

/// Support `F` of a monomial prime `(x_i : i ∈ F)`.
pub type PrimeSupport = VarSet;

/// A proper, nonzero radical monomial ideal, stored as the antichain of its
/// minimal prime supports in canonical order. Derived equality and hashing
/// are ideal equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalIdeal {
    n: usize,
    primes: Vec<PrimeSupport>,
}

impl RadicalIdeal {
    /// `⋂ (x_i : i ∈ F)` over `primes`; redundant primes are dropped.
    pub fn from_primes(n: usize, primes: impl IntoIterator<Item = PrimeSupport>) -> Result<Self> {
        let primes: Vec<PrimeSupport> = primes.into_iter().collect();
        if primes.is_empty() {
            return Err(Error::ImproperIdeal("intersection of no primes is the unit ideal"));
        }
        for p in &primes {
            if p.is_empty() {
                return Err(Error::ImproperIdeal("empty prime support is the zero ideal"));
            }
            if let Some(i) = p.last().filter(|&i| i >= n) {
                return Err(Error::IndexOutOfRange { index: i, ambient: n });
            }
        }
        Ok(RadicalIdeal {
            n,
            primes: minimal_sets(primes),
        })
    }

    /// Minimal primes of a square-free ideal: the minimal transversals of its
    /// generator supports.
    pub fn from_square_free(j: &MonomialIdeal) -> Result<Self> {
        if !j.is_square_free() {
            return Err(Error::NotSquareFree);
        }
        j.require_proper_nonzero()?;
        let supports: Vec<VarSet> = j.generators().iter().map(Monomial::support).collect();
        Ok(Self::from_generator_supports(j.ambient(), &supports))
    }

    /// Radical whose minimal generators have the given supports. The family
    /// must be nonempty and free of `∅`.
    pub(crate) fn from_generator_supports(n: usize, supports: &[VarSet]) -> Self {
        RadicalIdeal {
            n,
            primes: minimal_transversals(supports),
        }
    }

    /// `primes` must already be a canonical antichain of non-empty sets.
    pub(crate) fn from_antichain_unchecked(n: usize, primes: Vec<PrimeSupport>) -> Self {
        debug_assert!(!primes.is_empty() && primes.windows(2).all(|w| w[0] < w[1]));
        RadicalIdeal { n, primes }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn primes(&self) -> &[PrimeSupport] {
        &self.primes
    }

    pub fn is_prime(&self) -> bool {
        self.primes.len() == 1
    }

    /// Union of the prime supports, which is also the variable support.
    pub fn support(&self) -> VarSet {
        self.primes.iter().fold(VarSet::EMPTY, |a, &p| a.union(p))
    }

    /// Generators are `x_τ` for the minimal transversals `τ` of the primes.
    pub fn to_monomial_ideal(&self) -> MonomialIdeal {
        MonomialIdeal::from_supports(self.n, minimal_transversals(&self.primes))
    }

    /// Re-embeds into a ring with `n` variables (`n` at least the support).
    pub fn with_ambient(&self, n: usize) -> Result<Self> {
        Self::from_primes(n, self.primes.iter().copied())
    }
}

/// `(x1,x2)∩(x2,x3)`.
impl fmt::Display for RadicalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, p) in self.primes.iter().enumerate() {
            if k > 0 {
                f.write_str("∩")?;
            }
            f.write_str("(")?;
            for (t, i) in p.iter().enumerate() {
                if t > 0 {
                    f.write_str(",")?;
                }
                write!(f, "x{}", i + 1)?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Minimal primes of a square-free monomial ideal.
pub fn square_free_decompose(j: &MonomialIdeal) -> Result<RadicalIdeal> {
    RadicalIdeal::from_square_free(j)
}

/// A monomial ideal certified primary: every support variable appears as a
/// pure power among the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimaryComponent {
    ideal: MonomialIdeal,
    support: PrimeSupport,
}

impl PrimaryComponent {
    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn prime_support(&self) -> PrimeSupport {
        self.support
    }
}

pub fn check_primary(q: &MonomialIdeal) -> Result<PrimaryComponent> {
    q.require_proper_nonzero()?;
    let support = q.support();
    for i in support {
        let pure = q.generators().iter().any(|g| g.support() == VarSet::singleton(i));
        if !pure {
            return Err(Error::NotPrimary { variable: i + 1 });
        }
    }
    Ok(PrimaryComponent {
        ideal: q.clone(),
        support,
    })
}

/// A minimal primary decomposition `I = Q_1 ∩ .. ∩ Q_t`.
#[derive(Clone, Debug)]
pub struct Decomposition {
    n: usize,
    components: Vec<PrimaryComponent>,
    minimal: Vec<bool>,
}

impl Decomposition {
    /// Validates primariness, distinct prime supports and irredundancy.
    pub fn new(n: usize, components: Vec<MonomialIdeal>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidDecomposition("no components".into()));
        }
        let mut comps = Vec::with_capacity(components.len());
        for q in &components {
            if q.ambient() != n {
                return Err(Error::AmbientMismatch {
                    left: n,
                    right: q.ambient(),
                });
            }
            comps.push(check_primary(q)?);
        }
        let supports: BTreeSet<VarSet> = comps.iter().map(|c| c.support).collect();
        if supports.len() != comps.len() {
            return Err(Error::InvalidDecomposition(
                "two components share a prime support".into(),
            ));
        }
        for k in 0..comps.len() {
            let mut rest = MonomialIdeal::unit(n);
            for (t, c) in comps.iter().enumerate() {
                if t != k {
                    rest = rest.intersect(&c.ideal)?;
                }
            }
            if comps[k].ideal.contains_ideal(&rest) {
                return Err(Error::InvalidDecomposition(format!(
                    "component {} is redundant",
                    comps[k].ideal
                )));
            }
        }
        let minimal = comps
            .iter()
            .map(|c| !comps.iter().any(|d| d.support != c.support && d.support.is_subset(c.support)))
            .collect();
        Ok(Decomposition {
            n,
            components: comps,
            minimal,
        })
    }

    /// The decomposition `J = 𝔭_1 ∩ .. ∩ 𝔭_r` of a square-free ideal.
    pub fn from_square_free(j: &MonomialIdeal) -> Result<Self> {
        Ok(Self::from_radical(&RadicalIdeal::from_square_free(j)?))
    }

    pub fn from_radical(r: &RadicalIdeal) -> Self {
        let components = r
            .primes()
            .iter()
            .map(|&p| PrimaryComponent {
                ideal: MonomialIdeal::prime(r.ambient(), p),
                support: p,
            })
            .collect::<Vec<_>>();
        Decomposition {
            n: r.ambient(),
            minimal: vec![true; components.len()],
            components,
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn components(&self) -> &[PrimaryComponent] {
        &self.components
    }

    pub fn minimal_flags(&self) -> &[bool] {
        &self.minimal
    }

    pub fn minimal_components(&self) -> impl Iterator<Item = &PrimaryComponent> {
        self.components.iter().zip(&self.minimal).filter(|(_, &m)| m).map(|(c, _)| c)
    }

    pub fn has_embedded_components(&self) -> bool {
        self.minimal.iter().any(|&m| !m)
    }

    /// The ideal `⋂ Q_i` being decomposed.
    pub fn ideal(&self) -> Result<MonomialIdeal> {
        self.components
            .iter()
            .try_fold(MonomialIdeal::unit(self.n), |acc, c| acc.intersect(&c.ideal))
    }

    /// Supports of all components, i.e. `ass(I)`.
    pub fn associated_primes(&self) -> Vec<PrimeSupport> {
        let mut v: Vec<_> = self.components.iter().map(|c| c.support).collect();
        v.sort();
        v
    }

    /// `√I` as the intersection of the minimal primes.
    pub fn minimal_primes(&self) -> RadicalIdeal {
        RadicalIdeal {
            n: self.n,
            primes: minimal_sets(self.minimal_components().map(|c| c.support)),
        }
    }

    /// Largest associated prime support.
    pub fn bight(&self) -> usize {
        self.components.iter().map(|c| c.support.len()).max().unwrap_or(0)
    }

    /// `I^(s) = ⋂ Q_i^s` over the minimal components.
    pub fn symbolic_power(&self, s: u32) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(self.n);
        for c in self.minimal_components() {
            acc = acc.intersect(&c.ideal.power(s)?)?;
        }
        Ok(acc)
    }
}

/// All supports `F` with `I : x^α = (x_i : i ∈ F)` for some `α` in the box
/// `∏ [0, d_i]`, `d_i` the largest exponent of `x_i` in `G(I)`.
///
/// `I : x^α` only depends on `min(α, d)`, so the box is exhaustive.
pub fn ass_brute_force(i: &MonomialIdeal) -> Result<BTreeSet<PrimeSupport>> {
    i.require_proper_nonzero()?;
    let gens: Vec<&[u32]> = i.generators().iter().map(|g| g.exponents()).collect();
    let caps = i.max_exponents();
    // scratch: residual supports of g / gcd(g, x^α), flagged when the
    // residual is a single variable to the first power
    let found = lattice::scan_first_witness::<_, Vec<(VarSet, bool)>, _>(&caps, |alpha, residuals| {
        residuals.clear();
        for g in &gens {
            let mut s = VarSet::EMPTY;
            let mut linear = true;
            for (k, (&e, &a)) in g.iter().zip(alpha).enumerate() {
                if e > a {
                    s.insert(k);
                    linear &= e - a == 1;
                }
            }
            if s.is_empty() {
                return None;
            }
            residuals.push((s, linear && s.len() == 1));
        }
        let vars = residuals
            .iter()
            .filter(|(_, single)| *single)
            .fold(VarSet::EMPTY, |a, &(r, _)| a.union(r));
        if vars.is_empty() {
            return None;
        }
        // the colon is (x_i : i ∈ vars) iff every residual is divisible by one of them
        residuals.iter().all(|(r, _)| r.intersects(vars)).then_some(vars)
    })?;
    Ok(found.into_keys().collect())
}

/// Big height: the largest associated prime, by box enumeration.
pub fn bight(i: &MonomialIdeal) -> Result<usize> {
    if i.is_square_free() {
        let r = RadicalIdeal::from_square_free(i)?;
        return Ok(r.primes().iter().map(|p| p.len()).max().unwrap_or(0));
    }
    Ok(ass_brute_force(i)?.iter().map(|p| p.len()).max().unwrap_or(0))
}

/// Memo for `√(I : x^α)` keyed by the minimal residual supports.
#[derive(Default)]
pub(crate) struct RadicalMemo {
    pub(crate) supports: Vec<VarSet>,
    cache: HashMap<Vec<VarSet>, RadicalIdeal>,
}

impl RadicalMemo {
    /// `√(I : x^α)` from the generator exponent vectors, or `None` when
    /// `x^α ∈ I`.
    pub(crate) fn colon_radical(&mut self, n: usize, gens: &[&[u32]], alpha: &[u32]) -> Option<RadicalIdeal> {
        self.supports.clear();
        for g in gens {
            let mut s = VarSet::EMPTY;
            for (k, (&e, &a)) in g.iter().zip(alpha).enumerate() {
                if e > a {
                    s.insert(k);
                }
            }
            if s.is_empty() {
                return None;
            }
            self.supports.push(s);
        }
        let key = minimal_sets(self.supports.drain(..));
        if let Some(r) = self.cache.get(&key) {
            return Some(r.clone());
        }
        let r = RadicalIdeal::from_generator_supports(n, &key);
        self.cache.insert(key, r.clone());
        Some(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ideal, parse_radical};

    fn id(s: &str, n: usize) -> MonomialIdeal {
        parse_ideal(s, Some(n)).unwrap()
    }

    fn vs(ix: &[usize]) -> VarSet {
        ix.iter().map(|i| i - 1).collect()
    }

    /// Independent oracle: all minimal transversals by subset enumeration.
    fn brute_primes(j: &MonomialIdeal) -> Vec<VarSet> {
        let sup: Vec<VarSet> = j.generators().iter().map(|g| g.support()).collect();
        let hits = |t: VarSet| sup.iter().all(|s| s.intersects(t));
        let mut out: Vec<VarSet> = VarSet::full(j.ambient())
            .subsets()
            .filter(|&t| hits(t) && t.iter().all(|v| !hits(t.without(v))))
            .collect();
        out.sort();
        out
    }

    #[test]
    fn check_primary_examples() {
        let c = check_primary(&id("(x1, x2^2)", 2)).unwrap();
        assert_eq!(c.prime_support(), vs(&[1, 2]));
        let q = id("(x1^2, x2^2, x3^2)", 3).power(2).unwrap();
        assert_eq!(check_primary(&q).unwrap().prime_support(), vs(&[1, 2, 3]));
        assert_eq!(check_primary(&id("(x1*x2)", 2)), Err(Error::NotPrimary { variable: 1 }));
        assert!(check_primary(&MonomialIdeal::unit(2)).is_err());
    }

    #[test]
    fn square_free_decompose_examples() {
        let cases = [
            ("(x1*x2)", 2, vec![vs(&[1]), vs(&[2])]),
            ("(x2, x1*x3)", 3, vec![vs(&[1, 2]), vs(&[2, 3])]),
            ("(x1*x2, x2*x3, x1*x3)", 3, vec![vs(&[1, 2]), vs(&[1, 3]), vs(&[2, 3])]),
        ];
        for (src, n, want) in cases {
            let j = id(src, n);
            let r = square_free_decompose(&j).unwrap();
            assert_eq!(r.primes(), want.as_slice());
            assert_eq!(brute_primes(&j), want);
            assert_eq!(r.to_monomial_ideal(), j);
        }
        assert_eq!(square_free_decompose(&id("(x1^2)", 1)), Err(Error::NotSquareFree));
    }

    #[test]
    fn symbolic_power_examples() {
        let d = Decomposition::from_square_free(&id("(x1*x2)", 2)).unwrap();
        assert_eq!(d.symbolic_power(2).unwrap(), id("(x1^2*x2^2)", 2));
        assert_eq!(d.symbolic_power(1).unwrap(), d.ideal().unwrap());
    }

    #[test]
    fn t1_decomposition_has_three_minimal_components() {
        let q1 = id("(x1^2, x2^2, x3^2)", 5).power(2).unwrap();
        let q2 = id("(x1^3, x2^3, x4)", 5);
        let q3 = id("(x3, x4)", 5);
        let d = Decomposition::new(5, vec![q1.clone(), q2.clone(), q3.clone()]).unwrap();
        assert_eq!(d.minimal_flags(), &[true, true, true]);
        let direct = q1.intersect(&q2).unwrap().intersect(&q3).unwrap();
        assert_eq!(d.symbolic_power(1).unwrap(), direct);
        assert_eq!(d.bight(), 3);
    }

    #[test]
    fn embedded_component_is_flagged() {
        // (x1^2, x1*x2) = (x1) ∩ (x1^2, x2)
        let d = Decomposition::new(2, vec![id("(x1)", 2), id("(x1^2, x2)", 2)]).unwrap();
        assert_eq!(d.minimal_flags(), &[true, false]);
        assert_eq!(d.ideal().unwrap(), id("(x1^2, x1*x2)", 2));
        assert_eq!(d.symbolic_power(1).unwrap(), id("(x1)", 2));
        assert_eq!(d.minimal_primes().to_string(), "(x1)");
    }

    #[test]
    fn decomposition_validation() {
        assert!(Decomposition::new(2, vec![id("(x1)", 2), id("(x1^2)", 2)]).is_err());
        // (x1, x2) ⊇ (x1) ∩ ... redundant
        assert!(Decomposition::new(2, vec![id("(x1)", 2), id("(x1, x2)", 2), id("(x2)", 2)]).is_err());
        assert!(matches!(
            Decomposition::new(2, vec![id("(x1*x2)", 2)]),
            Err(Error::NotPrimary { .. })
        ));
    }

    #[test]
    fn ass_examples() {
        let want: BTreeSet<_> = [vs(&[1]), vs(&[2])].into();
        assert_eq!(ass_brute_force(&id("(x1*x2)", 2)).unwrap(), want);

        let ex = id("(x1, x2^2)", 3)
            .intersect(&id("(x2, x3^3)", 3))
            .unwrap()
            .intersect(&id("(x1, x3)", 3))
            .unwrap();
        let want: BTreeSet<_> = [vs(&[1, 2]), vs(&[2, 3]), vs(&[1, 3])].into();
        assert_eq!(ass_brute_force(&ex).unwrap(), want);

        let want: BTreeSet<_> = [vs(&[1]), vs(&[1, 2])].into();
        assert_eq!(ass_brute_force(&id("(x1^2, x1*x2)", 2)).unwrap(), want);
        assert_eq!(bight(&id("(x1^2, x1*x2)", 2)).unwrap(), 2);
    }

    #[test]
    fn radical_of_example_ideal_matches_prime_intersection() {
        let ex = id("(x1, x2^2)", 3)
            .intersect(&id("(x2, x3^3)", 3))
            .unwrap()
            .intersect(&id("(x1, x3)", 3))
            .unwrap();
        let primes = parse_radical("(x1,x2)∩(x2,x3)∩(x1,x3)", Some(3)).unwrap();
        assert_eq!(ex.radical(), primes.to_monomial_ideal());
        // independent route: intersect the primes directly
        let direct = id("(x1, x2)", 3)
            .intersect(&id("(x2, x3)", 3))
            .unwrap()
            .intersect(&id("(x1, x3)", 3))
            .unwrap();
        assert_eq!(ex.radical(), direct);
    }
}
