//! Text syntax: monomials `x1^2*x3` (or `1`), ideals `(x1^2*x2, x3)`, and
//! radical ideals `(x1,x2)∩(x2,x3)`. Variables are 1-based. `&` is accepted
//! in place of `∩`.

use crate::decomposition::RadicalIdeal;
use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, MAX_EXPONENT};
use crate::varset::{VarSet, MAX_VARS};

struct Cursor {
    chars: Vec<char>,
    pos: usize,
}

impl Cursor {
    fn new(src: &str) -> Self {
        Cursor {
            chars: src.chars().collect(),
            pos: 0,
        }
    }

    fn location(&self) -> (usize, usize) {
        let mut line = 1;
        let mut col = 1;
        for &c in &self.chars[..self.pos.min(self.chars.len())] {
            if c == '\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        (line, col)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        let (line, col) = self.location();
        Err(Error::parse(line, col, msg))
    }

    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            match self.peek() {
                Some(found) => self.err(format!("expected '{c}', found '{found}'")),
                None => self.err(format!("expected '{c}', found end of input")),
            }
        }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let digits: String = self.chars[start..self.pos].iter().collect();
        match digits.parse::<u64>() {
            Ok(v) => Ok(v),
            Err(_) => {
                self.pos = start;
                self.err("number too large")
            }
        }
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }
}

/// Exponent map keyed by 0-based index; the ambient size is fixed later.
fn raw_monomial(cur: &mut Cursor) -> Result<Vec<(usize, u32)>> {
    if cur.peek() == Some('1') {
        cur.pos += 1;
        return Ok(Vec::new());
    }
    let mut factors: Vec<(usize, u32)> = Vec::new();
    loop {
        if !cur.eat('x') {
            return cur.err("expected a variable 'x<k>' or '1'");
        }
        let var_start = cur.pos;
        let k = cur.number()?;
        if k == 0 || k as usize > MAX_VARS {
            cur.pos = var_start;
            return cur.err(format!("variable index must be in 1..={MAX_VARS}"));
        }
        let mut e = 1u64;
        if cur.eat('^') {
            let exp_start = cur.pos;
            e = cur.number()?;
            if e > u64::from(MAX_EXPONENT) {
                cur.pos = exp_start;
                return cur.err(format!("exponent exceeds {MAX_EXPONENT}"));
            }
        }
        let i = k as usize - 1;
        match factors.iter_mut().find(|(j, _)| *j == i) {
            Some((_, acc)) => {
                let sum = u64::from(*acc) + e;
                if sum > u64::from(MAX_EXPONENT) {
                    return cur.err(format!("exponent exceeds {MAX_EXPONENT}"));
                }
                *acc = sum as u32;
            }
            None => factors.push((i, e as u32)),
        }
        if !cur.eat('*') {
            return Ok(factors);
        }
    }
}

fn build(factors: &[(usize, u32)], n: usize) -> Monomial {
    let mut exps = vec![0u32; n];
    for &(i, e) in factors {
        exps[i] = e;
    }
    Monomial::new(exps).expect("exponents checked during parsing")
}

fn max_index(factors: &[(usize, u32)]) -> usize {
    factors.iter().map(|&(i, _)| i + 1).max().unwrap_or(0)
}

fn check_range(cur: &Cursor, needed: usize, n: usize) -> Result<()> {
    if needed > n {
        return cur.err(format!("variable x{needed} exceeds the ambient ring of {n} variables"));
    }
    Ok(())
}

pub fn parse_monomial(src: &str, n: usize) -> Result<Monomial> {
    let mut cur = Cursor::new(src);
    let raw = raw_monomial(&mut cur)?;
    if !cur.at_end() {
        return cur.err("unexpected trailing input");
    }
    check_range(&cur, max_index(&raw), n)?;
    Ok(build(&raw, n))
}

fn raw_ideal(cur: &mut Cursor) -> Result<Vec<Vec<(usize, u32)>>> {
    cur.expect('(')?;
    let mut gens = Vec::new();
    if cur.eat(')') {
        return Ok(gens);
    }
    if cur.peek() == Some('0') {
        cur.pos += 1;
        cur.expect(')')?;
        return Ok(gens);
    }
    loop {
        gens.push(raw_monomial(cur)?);
        if cur.eat(')') {
            return Ok(gens);
        }
        cur.expect(',')?;
    }
}

/// Parses `(g1, g2, ..)`. Without `n` the ambient is the largest index used.
pub fn parse_ideal(src: &str, n: Option<usize>) -> Result<MonomialIdeal> {
    let mut cur = Cursor::new(src);
    let raw = raw_ideal(&mut cur)?;
    if !cur.at_end() {
        return cur.err("unexpected trailing input");
    }
    let needed = raw.iter().map(|f| max_index(f)).max().unwrap_or(0);
    let n = match n {
        Some(n) => {
            check_range(&cur, needed, n)?;
            n
        }
        None => needed,
    };
    MonomialIdeal::new(n, raw.iter().map(|f| build(f, n)))
}

/// Parses `(x1,x2)∩(x2,x3)`; every factor must be generated by variables.
pub fn parse_radical(src: &str, n: Option<usize>) -> Result<RadicalIdeal> {
    let mut cur = Cursor::new(src);
    let mut primes: Vec<VarSet> = Vec::new();
    loop {
        let start = cur.pos;
        let raw = raw_ideal(&mut cur)?;
        let mut set = VarSet::EMPTY;
        for f in &raw {
            if f.len() != 1 || f[0].1 != 1 {
                cur.pos = start;
                return cur.err("prime factors must be generated by variables");
            }
            set.insert(f[0].0);
        }
        if set.is_empty() {
            cur.pos = start;
            return cur.err("empty prime factor");
        }
        primes.push(set);
        if cur.at_end() {
            break;
        }
        if !(cur.eat('∩') || cur.eat('&')) {
            return cur.err("expected '∩' between prime factors");
        }
    }
    let needed = primes.iter().filter_map(|p| p.last()).max().map_or(0, |i| i + 1);
    let n = match n {
        Some(n) => {
            check_range(&cur, needed, n)?;
            n
        }
        None => needed,
    };
    RadicalIdeal::from_primes(n, primes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn monomial_forms() {
        let m = parse_monomial("x1^2*x3", 3).unwrap();
        assert_eq!(m.exponents(), &[2, 0, 1]);
        assert!(parse_monomial("1", 4).unwrap().is_one());
        assert_eq!(parse_monomial(" x2 * x2^3 ", 2).unwrap().exponents(), &[0, 4]);
    }

    #[test]
    fn errors_carry_position() {
        match parse_ideal("(x1,\n  x2^)", None) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(column, 6);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_monomial("x0", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_monomial("x3", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_monomial("x1^70000", 2), Err(Error::Parse { .. })));
        assert!(matches!(parse_ideal("(x1) x2", None), Err(Error::Parse { .. })));
    }

    #[test]
    fn ideal_forms() {
        assert!(parse_ideal("()", Some(2)).unwrap().is_zero());
        assert!(parse_ideal("(0)", Some(2)).unwrap().is_zero());
        assert!(parse_ideal("(1)", Some(2)).unwrap().is_unit());
        assert_eq!(parse_ideal("(x1^2*x2, x3)", None).unwrap().ambient(), 3);
    }

    #[test]
    fn radical_forms() {
        let r = parse_radical("(x2,x3)∩(x1,x2)", None).unwrap();
        assert_eq!(r.to_string(), "(x1,x2)∩(x2,x3)");
        assert_eq!(parse_radical("(x1,x2) & (x2,x3)", Some(4)).unwrap().ambient(), 4);
        assert!(parse_radical("(x1^2)", None).is_err());
        assert!(parse_radical("(x1*x2)", None).is_err());
    }

    fn arb_ideal() -> impl Strategy<Value = MonomialIdeal> {
        (1usize..5).prop_flat_map(|n| {
            prop::collection::vec(prop::collection::vec(0u32..4, n), 0..5)
                .prop_map(move |gens| MonomialIdeal::new(n, gens.into_iter().map(|e| Monomial::new(e).unwrap())).unwrap())
        })
    }

    proptest! {
        #[test]
        fn ideal_display_round_trips(i in arb_ideal()) {
            let back = parse_ideal(&i.to_string(), Some(i.ambient())).unwrap();
            prop_assert_eq!(back, i);
        }
    }
}
