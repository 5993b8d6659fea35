//! Associated radicals `asr(I) = { √(I : f) : f ∉ I }` of monomial ideals and
//! of their ordinary and symbolic powers.
//!
//! Two independent routes exist for symbolic powers of square-free ideals:
//! the generic box enumeration over the power itself, and a scan that reads
//! each radical directly off the prime-sum inequalities
//! `Σ_{i ∈ F_j} α_i ≤ s - 1`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use crate::decomposition::{Decomposition, PrimeSupport, RadicalIdeal, RadicalMemo};
use crate::error::{Error, Result};
use crate::lattice;
use crate::monomial::{Monomial, MonomialIdeal};
use crate::varset::VarSet;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PowerKind {
    Ordinary,
    Symbolic,
}

impl fmt::Display for PowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PowerKind::Ordinary => "ordinary",
            PowerKind::Symbolic => "symbolic",
        })
    }
}

impl FromStr for PowerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordinary" => Ok(PowerKind::Ordinary),
            "symbolic" => Ok(PowerKind::Symbolic),
            _ => Err(Error::parse(1, 1, format!("unknown power kind '{s}'"))),
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    BruteForce,
    Polyhedral,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::BruteForce => "bruteforce",
            Method::Polyhedral => "polyhedral",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bruteforce" => Ok(Method::BruteForce),
            "polyhedral" => Ok(Method::Polyhedral),
            _ => Err(Error::parse(1, 1, format!("unknown method '{s}'"))),
        }
    }
}

/// A radical together with the exponent `α` that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsrWitness {
    pub radical: RadicalIdeal,
    pub exponent: Monomial,
}

/// A set of associated radicals, each with the lexicographically first
/// witness exponent found by the scan that built it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsrSet {
    n: usize,
    members: BTreeMap<RadicalIdeal, Monomial>,
}

impl AsrSet {
    pub fn new(n: usize) -> Self {
        AsrSet {
            n,
            members: BTreeMap::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, r: &RadicalIdeal) -> bool {
        self.members.contains_key(r)
    }

    pub fn radicals(&self) -> impl Iterator<Item = &RadicalIdeal> {
        self.members.keys()
    }

    pub fn witness(&self, r: &RadicalIdeal) -> Option<&Monomial> {
        self.members.get(r)
    }

    pub fn witnesses(&self) -> impl Iterator<Item = AsrWitness> + '_ {
        self.members.iter().map(|(r, m)| AsrWitness {
            radical: r.clone(),
            exponent: m.clone(),
        })
    }

    /// Inserts `r`, keeping an existing witness.
    pub fn insert(&mut self, r: RadicalIdeal, witness: Monomial) {
        self.members.entry(r).or_insert(witness);
    }

    pub fn is_subset(&self, other: &AsrSet) -> bool {
        self.members.keys().all(|r| other.contains(r))
    }

    /// Supports of the members that are prime.
    pub fn prime_members(&self) -> BTreeSet<PrimeSupport> {
        self.members.keys().filter(|r| r.is_prime()).map(|r| r.primes()[0]).collect()
    }
}

/// Set equality; witnesses are ignored.
pub fn same_members(a: &AsrSet, b: &AsrSet) -> bool {
    a.members.len() == b.members.len() && a.members.keys().eq(b.members.keys())
}

/// `asr(I)` by enumerating `α` in `∏ [0, d_i]`, `d_i` the largest exponent of
/// `x_i` in `G(I)`. Since `I : x^α` depends only on `min(α, d)` the box
/// reaches every colon ideal.
pub fn asr_brute_force(i: &MonomialIdeal) -> Result<AsrSet> {
    i.require_proper_nonzero()?;
    let n = i.ambient();
    let gens: Vec<&[u32]> = i.generators().iter().map(|g| g.exponents()).collect();
    let caps = i.max_exponents();
    let found = lattice::scan_first_witness::<_, RadicalMemo, _>(&caps, |alpha, memo| {
        memo.colon_radical(n, &gens, alpha)
    })?;
    Ok(collect(n, found))
}

fn collect(n: usize, found: BTreeMap<RadicalIdeal, Vec<u32>>) -> AsrSet {
    AsrSet {
        n,
        members: found
            .into_iter()
            .map(|(r, a)| (r, Monomial::new(a).expect("scan points stay within exponent caps")))
            .collect(),
    }
}

/// `√(I^(s) : x^α)` for square-free `I` with minimal primes `primes`: the
/// intersection of the `𝔭_j` with `Σ_{i ∈ F_j} α_i ≤ s - 1`, or `None` when
/// no prime qualifies (`x^α ∈ I^(s)`).
pub fn symbolic_colon_radical(primes: &RadicalIdeal, alpha: &[u64], s: u64) -> Option<RadicalIdeal> {
    let chosen: Vec<PrimeSupport> = primes
        .primes()
        .iter()
        .copied()
        .filter(|f| f.iter().map(|i| alpha[i]).sum::<u64>() < s)
        .collect();
    (!chosen.is_empty()).then(|| RadicalIdeal::from_antichain_unchecked(primes.ambient(), chosen))
}

/// `asr(I^(s))` for square-free `I` read off the prime-sum inequalities.
///
/// Scans `α ∈ [0, s]^n`; capping a coordinate at `s` changes neither side of
/// any inequality. Coordinates outside the support of `I` occur in no
/// inequality and are pinned to 0.
pub fn asr_symbolic_polyhedral(primes: &RadicalIdeal, s: u32) -> Result<AsrSet> {
    if s == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    let n = primes.ambient();
    let support = primes.support();
    let caps: Vec<u32> = (0..n).map(|i| if support.contains(i) { s } else { 0 }).collect();
    let rows: Vec<Vec<usize>> = primes.primes().iter().map(|f| f.iter().collect()).collect();
    let found = lattice::scan_first_witness::<_, (), _>(&caps, |alpha, _| {
        let chosen: Vec<PrimeSupport> = rows
            .iter()
            .zip(primes.primes())
            .filter(|(row, _)| row.iter().map(|&i| alpha[i]).sum::<u32>() < s)
            .map(|(_, &f)| f)
            .collect();
        (!chosen.is_empty()).then(|| RadicalIdeal::from_antichain_unchecked(n, chosen))
    })?;
    Ok(collect(n, found))
}

/// An ideal together with enough structure to take its symbolic powers.
#[derive(Clone, Debug)]
pub struct SourceIdeal {
    ideal: MonomialIdeal,
    decomposition: Option<Decomposition>,
}

impl SourceIdeal {
    /// Square-free ideals get their prime decomposition; others only support
    /// ordinary powers.
    pub fn from_ideal(ideal: MonomialIdeal) -> Result<Self> {
        ideal.require_proper_nonzero()?;
        let decomposition = if ideal.is_square_free() {
            Some(Decomposition::from_square_free(&ideal)?)
        } else {
            None
        };
        Ok(SourceIdeal { ideal, decomposition })
    }

    pub fn from_decomposition(d: Decomposition) -> Result<Self> {
        let ideal = d.ideal()?;
        ideal.require_proper_nonzero()?;
        Ok(SourceIdeal {
            ideal,
            decomposition: Some(d),
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn decomposition(&self) -> Option<&Decomposition> {
        self.decomposition.as_ref()
    }

    pub fn ambient(&self) -> usize {
        self.ideal.ambient()
    }

    pub fn is_square_free(&self) -> bool {
        self.ideal.is_square_free()
    }

    /// Minimal primes, for square-free ideals only.
    pub fn square_free_primes(&self) -> Result<RadicalIdeal> {
        RadicalIdeal::from_square_free(&self.ideal)
    }

    pub fn power(&self, s: u32, kind: PowerKind) -> Result<MonomialIdeal> {
        match kind {
            PowerKind::Ordinary => self.ideal.power(s),
            PowerKind::Symbolic => match &self.decomposition {
                Some(d) => d.symbolic_power(s),
                None => Err(Error::Precondition(
                    "symbolic powers of a non-square-free ideal need its primary components".into(),
                )),
            },
        }
    }
}

/// Dispatches to the requested route.
pub fn asr_of_power(src: &SourceIdeal, s: u32, kind: PowerKind, method: Method) -> Result<AsrSet> {
    if s == 0 {
        return Err(Error::Precondition("power must be at least 1".into()));
    }
    match method {
        Method::BruteForce => asr_brute_force(&src.power(s, kind)?),
        Method::Polyhedral => {
            if kind != PowerKind::Symbolic || !src.is_square_free() {
                return Err(Error::Precondition(
                    "the polyhedral method needs symbolic powers of a square-free ideal".into(),
                ));
            }
            asr_symbolic_polyhedral(&src.square_free_primes()?, s)
        }
    }
}

/// Relation of the left set to the right one.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    /// left ⊊ right
    Subset,
    /// left ⊋ right
    Superset,
    Incomparable,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Equal => "equal",
            Relation::Subset => "subset",
            Relation::Superset => "superset",
            Relation::Incomparable => "incomparable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub relation: Relation,
    pub only_left: Vec<RadicalIdeal>,
    pub only_right: Vec<RadicalIdeal>,
}

impl Comparison {
    /// left ⊆ right.
    pub fn left_included(&self) -> bool {
        matches!(self.relation, Relation::Equal | Relation::Subset)
    }
}

pub fn compare_asr(a: &AsrSet, b: &AsrSet) -> Result<Comparison> {
    if a.n != b.n {
        return Err(Error::AmbientMismatch { left: a.n, right: b.n });
    }
    let only_left: Vec<_> = a.radicals().filter(|r| !b.contains(r)).cloned().collect();
    let only_right: Vec<_> = b.radicals().filter(|r| !a.contains(r)).cloned().collect();
    let relation = match (only_left.is_empty(), only_right.is_empty()) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::Subset,
        (false, true) => Relation::Superset,
        (false, false) => Relation::Incomparable,
    };
    Ok(Comparison {
        relation,
        only_left,
        only_right,
    })
}

/// Outcome of checking
/// `asr(I) = ⋃_i asr(I[i]) ∪ { J ∈ asr(I) : supp J = [n] }`.
#[derive(Clone, Debug)]
pub struct LocalizationCheck {
    /// In `asr(I)` but missing from the right-hand side.
    pub missing: Vec<RadicalIdeal>,
    /// On the right-hand side but not in `asr(I)`.
    pub extra: Vec<RadicalIdeal>,
}

impl LocalizationCheck {
    pub fn holds(&self) -> bool {
        self.missing.is_empty() && self.extra.is_empty()
    }
}

/// Computes both sides with [`asr_brute_force`]. `I[i]` stays in the same
/// ring; a unit `I[i]` contributes nothing.
pub fn localization_check(i: &MonomialIdeal) -> Result<LocalizationCheck> {
    let lhs = asr_brute_force(i)?;
    let full = VarSet::full(i.ambient());
    let mut rhs: BTreeSet<RadicalIdeal> =
        lhs.radicals().filter(|r| r.support() == full).cloned().collect();
    for k in 0..i.ambient() {
        let local = i.delete_var(k)?;
        if local.is_unit() {
            continue;
        }
        rhs.extend(asr_brute_force(&local)?.radicals().cloned());
    }
    Ok(LocalizationCheck {
        missing: lhs.radicals().filter(|r| !rhs.contains(r)).cloned().collect(),
        extra: rhs.iter().filter(|r| !lhs.contains(r)).cloned().collect(),
    })
}

/// One entry of a monotonicity scan: `asr(I^s)` against `asr(I^{s+1})`.
#[derive(Clone, Debug)]
pub struct MonotonicityStep {
    pub s: u32,
    pub comparison: Comparison,
}

/// Comparisons of consecutive powers for `s = 1 .. s_max - 1`, along with the
/// sets for `s = 1 ..= s_max`.
pub fn scan_monotonicity(
    src: &SourceIdeal,
    kind: PowerKind,
    method: Method,
    s_max: u32,
) -> Result<(Vec<AsrSet>, Vec<MonotonicityStep>)> {
    let sets = (1..=s_max)
        .map(|s| asr_of_power(src, s, kind, method))
        .collect::<Result<Vec<_>>>()?;
    let steps = sets
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            Ok(MonotonicityStep {
                s: k as u32 + 1,
                comparison: compare_asr(&w[0], &w[1])?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((sets, steps))
}

#[derive(Clone, Debug)]
pub struct StabilityReport {
    pub s0: u32,
    pub window: u32,
    pub reference: AsrSet,
    /// First `s` in `(s0, s0 + window]` with a different set.
    pub first_difference: Option<u32>,
    /// Sampled `t` whose set is not contained in the reference.
    pub sample_violations: Vec<u32>,
}

impl StabilityReport {
    pub fn stable(&self) -> bool {
        self.first_difference.is_none() && self.sample_violations.is_empty()
    }
}

/// Checks `asr(I^(s)) = asr(I^(s0))` for `s ∈ [s0, s0 + window]` and
/// `asr(I^(t)) ⊆ asr(I^(s0))` for each sampled `t`.
pub fn scan_stability(primes: &RadicalIdeal, s0: u32, window: u32, samples: &[u32]) -> Result<StabilityReport> {
    let reference = asr_symbolic_polyhedral(primes, s0)?;
    let mut first_difference = None;
    for s in s0 + 1..=s0 + window {
        if !same_members(&asr_symbolic_polyhedral(primes, s)?, &reference) {
            first_difference = Some(s);
            break;
        }
    }
    let mut sample_violations = Vec::new();
    for &t in samples {
        if !asr_symbolic_polyhedral(primes, t)?.is_subset(&reference) {
            sample_violations.push(t);
        }
    }
    Ok(StabilityReport {
        s0,
        window,
        reference,
        first_difference,
        sample_violations,
    })
}

/// Recomputes `√(I : x^α)` at every stored witness.
pub fn validate_witnesses(set: &AsrSet, ideal: &MonomialIdeal) -> Result<()> {
    for w in set.witnesses() {
        let again = ideal.assoc_radical(&w.exponent)?;
        if again != w.radical {
            return Err(Error::Invariant(format!(
                "witness {} gives {again}, stored {}",
                w.exponent, w.radical
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::{parse_ideal, parse_radical};

    fn id(s: &str, n: usize) -> MonomialIdeal {
        parse_ideal(s, Some(n)).unwrap()
    }

    fn rad(s: &str, n: usize) -> RadicalIdeal {
        parse_radical(s, Some(n)).unwrap()
    }

    fn example1() -> MonomialIdeal {
        id("(x1, x2^2)", 3)
            .intersect(&id("(x2, x3^3)", 3))
            .unwrap()
            .intersect(&id("(x1, x3)", 3))
            .unwrap()
    }

    /// For `I = ⋂ Q_j` irredundant with distinct primes, `√(I : f)` is the
    /// intersection of the `√Q_j` with `f ∉ Q_j`.
    fn component_oracle(components: &[MonomialIdeal], caps: &[u32]) -> BTreeSet<RadicalIdeal> {
        let n = caps.len();
        let mut out = BTreeSet::new();
        let mut alpha = vec![0u32; n];
        loop {
            let f = Monomial::new(alpha.clone()).unwrap();
            let primes: Vec<VarSet> =
                components.iter().filter(|q| !q.contains(&f)).map(|q| q.support()).collect();
            if !primes.is_empty() {
                out.insert(RadicalIdeal::from_primes(n, primes).unwrap());
            }
            let Some(k) = (0..n).rev().find(|&k| alpha[k] < caps[k]) else { break };
            alpha[k] += 1;
            alpha[k + 1..].iter_mut().for_each(|a| *a = 0);
        }
        out
    }

    #[test]
    fn example_ideal_has_six_radicals() {
        let components = [id("(x1, x2^2)", 3), id("(x2, x3^3)", 3), id("(x1, x3)", 3)];
        let set = asr_brute_force(&example1()).unwrap();
        let got: BTreeSet<RadicalIdeal> = set.radicals().cloned().collect();
        assert_eq!(got, component_oracle(&components, &[2, 3, 4]));
        assert_eq!(set.len(), 6);
        // I : x2 = (x1,x2) ∩ (x1,x3); no f avoids Q1 while lying outside Q2 and Q3 but f = 1
        assert!(set.contains(&rad("(x1,x2)∩(x1,x3)", 3)));
        assert!(!set.contains(&rad("(x2,x3)∩(x1,x3)", 3)));
        validate_witnesses(&set, &example1()).unwrap();
    }

    #[test]
    fn example_witness_for_x2_x3_squared() {
        let i = example1();
        let f = crate::text::parse_monomial("x2*x3^2", 3).unwrap();
        let r = i.assoc_radical(&f).unwrap();
        assert!(asr_brute_force(&i).unwrap().contains(&r));
    }

    #[test]
    fn principal_prime() {
        let set = asr_brute_force(&id("(x1)", 1)).unwrap();
        assert_eq!(set.len(), 1);
        assert!(set.contains(&rad("(x1)", 1)));
    }

    #[test]
    fn embedded_prime_ideal_contains_ass() {
        let i = id("(x1^2, x1*x2)", 2);
        let set = asr_brute_force(&i).unwrap();
        let ass = crate::decomposition::ass_brute_force(&i).unwrap();
        assert_eq!(set.prime_members(), ass);
    }

    #[test]
    fn improper_inputs_rejected() {
        assert!(asr_brute_force(&MonomialIdeal::unit(2)).is_err());
        assert!(asr_brute_force(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn lemma_ff_direct_evaluation() {
        // I = (x1,x2) ∩ (x2,x3), s = 2, α = (0,1,0): both sums are 1 ≤ 1
        let primes = rad("(x1,x2)∩(x2,x3)", 3);
        let r = symbolic_colon_radical(&primes, &[0, 1, 0], 2).unwrap();
        assert_eq!(r, primes);
        assert!(symbolic_colon_radical(&primes, &[0, 2, 0], 2).is_none());
        assert_eq!(symbolic_colon_radical(&primes, &[2, 0, 0], 2).unwrap(), rad("(x2,x3)", 3));
    }

    #[test]
    fn polyhedral_matches_brute_force_first_power() {
        let i = id("(x2, x1*x3)", 3);
        let src = SourceIdeal::from_ideal(i.clone()).unwrap();
        let poly = asr_of_power(&src, 1, PowerKind::Symbolic, Method::Polyhedral).unwrap();
        assert!(same_members(&poly, &asr_brute_force(&i).unwrap()));
    }

    #[test]
    fn dispatch_rejects_bad_combinations() {
        let src = SourceIdeal::from_ideal(id("(x1^2, x2)", 2)).unwrap();
        assert!(matches!(
            asr_of_power(&src, 1, PowerKind::Symbolic, Method::Polyhedral),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            asr_of_power(&src, 2, PowerKind::Symbolic, Method::BruteForce),
            Err(Error::Precondition(_))
        ));
        let sf = SourceIdeal::from_ideal(id("(x1*x2)", 2)).unwrap();
        assert!(asr_of_power(&sf, 1, PowerKind::Ordinary, Method::Polyhedral).is_err());
    }

    #[test]
    fn compare_relations() {
        let a = asr_brute_force(&id("(x1)", 2)).unwrap();
        let b = asr_brute_force(&id("(x2)", 2)).unwrap();
        assert_eq!(compare_asr(&a, &a).unwrap().relation, Relation::Equal);
        let c = compare_asr(&a, &b).unwrap();
        assert_eq!(c.relation, Relation::Incomparable);
        assert_eq!(c.only_left, vec![rad("(x1)", 2)]);
        let ab = asr_brute_force(&id("(x1*x2)", 2)).unwrap();
        assert_eq!(compare_asr(&a, &ab).unwrap().relation, Relation::Subset);
        assert_eq!(compare_asr(&ab, &a).unwrap().relation, Relation::Superset);
    }

    #[test]
    fn localization_examples() {
        assert!(localization_check(&example1()).unwrap().holds());
        assert!(localization_check(&id("(x1*x2)", 2)).unwrap().holds());
        assert!(localization_check(&id("(x1)", 1)).unwrap().holds());
    }

    #[test]
    fn monotone_scans() {
        let c4 = id("(x1*x3, x2*x4)", 4);
        let (_, steps) =
            scan_monotonicity(&SourceIdeal::from_ideal(c4).unwrap(), PowerKind::Ordinary, Method::BruteForce, 4).unwrap();
        assert_eq!(steps.len(), 3);
        assert!(steps.iter().all(|s| s.comparison.left_included()));

        let path = id("(x2, x1*x3)", 3);
        let (_, steps) =
            scan_monotonicity(&SourceIdeal::from_ideal(path.clone()).unwrap(), PowerKind::Ordinary, Method::BruteForce, 4)
                .unwrap();
        assert!(steps.iter().all(|s| s.comparison.left_included()));

        let (sets, steps) =
            scan_monotonicity(&SourceIdeal::from_ideal(path).unwrap(), PowerKind::Ordinary, Method::BruteForce, 1).unwrap();
        assert_eq!(sets.len(), 1);
        assert!(steps.is_empty());
    }

    #[test]
    fn single_prime_is_stable_from_one() {
        let p = rad("(x1,x2)", 3);
        let report = scan_stability(&p, 1, 4, &[]).unwrap();
        assert!(report.stable());
        assert_eq!(report.reference.len(), 1);
    }
}
