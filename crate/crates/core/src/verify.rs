//! Bundled reproduction checks behind `monrad verify`.

use std::collections::BTreeSet;

use crate::asr::{
    asr_brute_force, asr_symbolic_polyhedral, compare_asr, same_members, validate_witnesses, AsrSet,
    Relation,
};
use crate::corpus;
use crate::decomposition::{Decomposition, RadicalIdeal};
use crate::depth::{depth_from_asr, depth_of_radical, Field};
use crate::error::Result;
use crate::monomial::MonomialIdeal;
use crate::polyhedra::lift_witness;
use crate::text::{parse_ideal, parse_radical};

/// Outcome of one named check; `lines` is the human-readable log.
#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub lines: Vec<String>,
}

impl Check {
    fn new(name: &str) -> Self {
        Check {
            name: name.to_string(),
            passed: true,
            lines: Vec::new(),
        }
    }

    fn log(&mut self, line: impl Into<String>) {
        self.lines.push(line.into());
    }

    fn fail(&mut self, line: impl Into<String>) {
        self.passed = false;
        self.lines.push(line.into());
    }
}

pub const NAMES: [&str; 4] = ["example1", "t1", "t3-bipartite", "oracle"];

pub fn run(name: &str, field: Field) -> Option<Result<Check>> {
    Some(match name {
        "example1" => example1(),
        "t1" => t1(field),
        "t3-bipartite" => t3_bipartite(7, 20, 3),
        "oracle" => oracle(1, 100, 3),
        _ => return None,
    })
}

fn ideal(s: &str, n: usize) -> MonomialIdeal {
    parse_ideal(s, Some(n)).expect("built-in ideal")
}

pub fn example1_components() -> Vec<MonomialIdeal> {
    vec![ideal("(x1, x2^2)", 3), ideal("(x2, x3^3)", 3), ideal("(x1, x3)", 3)]
}

/// The six radicals listed for the example ideal, in the order given there.
pub fn example1_listed() -> Vec<RadicalIdeal> {
    [
        "(x1,x2)",
        "(x2,x3)",
        "(x1,x3)",
        "(x1,x2)∩(x2,x3)",
        "(x2,x3)∩(x1,x3)",
        "(x1,x2)∩(x2,x3)∩(x1,x3)",
    ]
    .iter()
    .map(|s| parse_radical(s, Some(3)).expect("built-in radical"))
    .collect()
}

/// `asr((x1,x2^2) ∩ (x2,x3^3) ∩ (x1,x3))` against the listed six radicals,
/// which are said to exclude `(x1,x2) ∩ (x1,x3)`.
pub fn example1() -> Result<Check> {
    let mut c = Check::new("example1");
    let comps = example1_components();
    let i = comps[1..].iter().try_fold(comps[0].clone(), |acc, q| acc.intersect(q))?;
    let set = asr_brute_force(&i)?;
    validate_witnesses(&set, &i)?;
    c.log(format!("I = {i}"));
    for w in set.witnesses() {
        c.log(format!("  {}  witness {}", w.radical, w.exponent));
    }
    let got: BTreeSet<RadicalIdeal> = set.radicals().cloned().collect();
    let listed: BTreeSet<RadicalIdeal> = example1_listed().into_iter().collect();
    let excluded = parse_radical("(x1,x2)∩(x1,x3)", Some(3)).expect("built-in radical");
    c.log(format!("computed {} radicals, listed {}", got.len(), listed.len()));
    for r in got.difference(&listed) {
        let w = set.witness(r).expect("member has a witness");
        c.fail(format!("computed but not listed: {r} (I : {w} has this radical)"));
    }
    for r in listed.difference(&got) {
        c.fail(format!("listed but not computed: {r}"));
    }
    if set.contains(&excluded) {
        c.fail(format!("{excluded} is present, expected absent"));
    }
    Ok(c)
}

/// `(x^2,y^2,z^2)^2 ∩ (x^3,y^3,u) ∩ (z,u)` in `K[x,y,z,u,v]`, variables
/// `x1..x5`.
pub fn t1_decomposition() -> Result<Decomposition> {
    let q1 = ideal("(x1^2, x2^2, x3^2)", 5).power(2)?;
    Decomposition::new(5, vec![q1, ideal("(x1^3, x2^3, x4)", 5), ideal("(x3, x4)", 5)])
}

pub const T1_EXPECTED: [usize; 5] = [1, 2, 1, 2, 1];

/// Smallest depth over all intersections of the minimal primes. Every
/// associated radical of a symbolic power is such an intersection, so no
/// symbolic power can have smaller depth.
pub fn depth_floor(d: &Decomposition, field: Field) -> Result<usize> {
    let primes = d.minimal_primes();
    let k = primes.primes().len();
    let mut best = usize::MAX;
    for mask in 1u64..(1 << k) {
        let chosen = (0..k).filter(|&j| mask >> j & 1 == 1).map(|j| primes.primes()[j]);
        let r = RadicalIdeal::from_primes(d.ambient(), chosen)?;
        best = best.min(depth_of_radical(&r, field)?);
    }
    Ok(best)
}

/// Depths of `R/I^(s)` for `s = 1..=s_max`, with the argmin radical.
pub fn symbolic_depths(d: &Decomposition, s_max: u32, field: Field) -> Result<Vec<(u32, usize, RadicalIdeal)>> {
    (1..=s_max)
        .map(|s| {
            let set = asr_brute_force(&d.symbolic_power(s)?)?;
            let report = depth_from_asr(&set, field)?;
            Ok((s, report.depth, report.argmin))
        })
        .collect()
}

pub fn t1(field: Field) -> Result<Check> {
    let mut c = Check::new("t1");
    let d = t1_decomposition()?;
    c.log(format!("I = {}", d.ideal()?));
    c.log(format!(
        "lower bound: every intersection of minimal primes has depth >= {}",
        depth_floor(&d, field)?
    ));
    for (s, depth, argmin) in symbolic_depths(&d, T1_EXPECTED.len() as u32, field)? {
        let want = T1_EXPECTED[s as usize - 1];
        let line = format!("s = {s}: depth {depth} (expected {want}), attained at {argmin}");
        if depth == want {
            c.log(line);
        } else {
            c.fail(line);
        }
    }
    Ok(c)
}

/// Lifts every witness of `asr(I^(s))` (polyhedral scan) to `s + 1`.
pub fn lift_all(primes: &RadicalIdeal, set: &AsrSet, s: u32) -> Result<usize> {
    let mut count = 0;
    for w in set.witnesses() {
        lift_witness(primes, &w.radical, w.exponent.exponents(), s)?;
        count += 1;
    }
    Ok(count)
}

/// Cover ideals of random bipartite graphs: ordinary powers agree with
/// symbolic ones, `asr(J^s) ⊆ asr(J^{s+1})`, and witness lifting holds.
pub fn t3_bipartite(max_n: usize, count: usize, s_max: u32) -> Result<Check> {
    let mut c = Check::new("t3-bipartite");
    let mut rng = corpus::rng(3);
    let mut lifts = 0;
    for _ in 0..count {
        let g = corpus::bipartite_graph(&mut rng, max_n);
        let j = g.cover_ideal()?;
        let primes = RadicalIdeal::from_square_free(&j)?;
        let d = Decomposition::from_radical(&primes);
        let mut prev: Option<AsrSet> = None;
        for s in 1..=s_max + 1 {
            let ord = j.power(s)?;
            if ord != d.symbolic_power(s)? {
                c.fail(format!("{g}: J^{s} differs from its symbolic power"));
            }
            let set = asr_brute_force(&ord)?;
            if let Some(p) = &prev {
                let cmp = compare_asr(p, &set)?;
                if !cmp.left_included() {
                    c.fail(format!("{g}: asr(J^{}) not in asr(J^{s}), missing {:?}", s - 1, cmp.only_left));
                }
            }
            if s <= s_max {
                lifts += lift_all(&primes, &asr_symbolic_polyhedral(&primes, s)?, s)?;
            }
            prev = Some(set);
        }
    }
    c.log(format!("{count} graphs, s = 1..{s_max}, {lifts} lifted witnesses validated"));
    Ok(c)
}

/// Polyhedral scan against brute force over the symbolic power.
pub fn oracle(seed: u64, count: usize, s_max: u32) -> Result<Check> {
    let mut c = Check::new("oracle");
    let mut rng = corpus::rng(seed);
    let mut compared = 0;
    for _ in 0..count {
        let primes = corpus::square_free(&mut rng, 4, 4);
        let d = Decomposition::from_radical(&primes);
        for s in 1..=s_max {
            let poly = asr_symbolic_polyhedral(&primes, s)?;
            let brute = asr_brute_force(&d.symbolic_power(s)?)?;
            compared += 1;
            if !same_members(&poly, &brute) {
                let cmp = compare_asr(&poly, &brute)?;
                debug_assert_ne!(cmp.relation, Relation::Equal);
                c.fail(format!("{primes}, s = {s}: only polyhedral {:?}, only brute {:?}", cmp.only_left, cmp.only_right));
            }
        }
    }
    c.log(format!("{count} ideals, {compared} comparisons"));
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn t1_components_are_primary_and_minimal() {
        let d = t1_decomposition().unwrap();
        assert_eq!(d.minimal_flags(), &[true, true, true]);
        assert_eq!(d.bight(), 3);
    }

    /// x5 divides no generator, so it is a cone point of every complex
    /// involved and adds one to the depth over x1..x4, which is positive
    /// because (x1,..,x4) is never among the primes.
    #[test]
    fn t1_depths_are_bounded_below_by_two() {
        let d = t1_decomposition().unwrap();
        assert_eq!(depth_floor(&d, Field::Rational).unwrap(), 2);
        for (_, depth, _) in symbolic_depths(&d, 3, Field::Rational).unwrap() {
            assert_eq!(depth, 2);
        }
    }

    #[test]
    fn example1_reports_the_listing_discrepancy() {
        let c = example1().unwrap();
        assert!(!c.passed);
        assert!(c.lines.iter().any(|l| l.contains("computed but not listed: (x1,x2)∩(x1,x3)")));
        assert!(c.lines.iter().any(|l| l.contains("listed but not computed: (x1,x3)∩(x2,x3)")));
    }

    #[test]
    fn small_oracle_run() {
        assert!(oracle(5, 10, 2).unwrap().passed);
    }

    #[test]
    fn unknown_name() {
        assert!(run("nope", Field::Rational).is_none());
    }
}
