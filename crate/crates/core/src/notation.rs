//! Text formats: planar diagram codes, braid words, Montesinos slope vectors,
//! plus constant-sign continued fractions.
//!
//! Grammars (whitespace is free between tokens):
//!
//! ```text
//! pd        := crossing ( ","? crossing )*
//! crossing  := "X" "(" int "," int "," int "," int ")"
//! braid     := "B" int ":" letter*
//! letter    := "s" int ( "^" "-"? int )?
//! montesinos:= "M" "(" rational ( "," rational )* ")"
//! rational  := "-"? int ( "/" int )?
//! ```
//!
//! A PD tuple lists the four arc labels around a crossing counterclockwise,
//! starting from the incoming under-strand.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Planar diagram code.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PDCode {
    pub crossings: Vec<[u64; 4]>,
}

/// Braid word in `n` strands with adjacent equal generators merged.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    pub strands: usize,
    pub letters: Vec<(usize, i64)>,
}

/// Ordered slopes of a Montesinos link.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MontesinosVector {
    pub slopes: Vec<BigRational>,
}

/// Continued fraction `[a0; a1, ..., an]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ContinuedFraction {
    pub terms: Vec<BigInt>,
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(src: &'a str) -> Self {
        Cursor { src, pos: 0 }
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn at_end(&mut self) -> bool {
        self.peek().is_none()
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Syntax { pos: self.pos, msg: msg.into() })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
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
                Some(got) => self.err(format!("expected `{c}`, found `{got}`")),
                None => self.err(format!("expected `{c}`, found end of input")),
            }
        }
    }

    fn digits(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let n = rest.bytes().take_while(u8::is_ascii_digit).count();
        if n == 0 {
            return self.err("expected digits");
        }
        self.pos += n;
        Ok(&rest[..n])
    }

    fn uint(&mut self) -> Result<u64> {
        let start = self.pos;
        let d = self.digits()?;
        d.parse().map_err(|_| Error::Syntax { pos: start, msg: "integer too large".into() })
    }

    fn int(&mut self) -> Result<i64> {
        let neg = self.eat('-');
        let start = self.pos;
        let d = self.digits()?;
        let v: i64 = d.parse().map_err(|_| Error::Syntax { pos: start, msg: "integer too large".into() })?;
        Ok(if neg { -v } else { v })
    }
}

/// Parses `X(a,b,c,d) X(...) ...`.
pub fn parse_pd(text: &str) -> Result<PDCode> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(Error::EmptyInput);
    }
    let mut crossings = Vec::new();
    loop {
        if !cur.eat('X') {
            return cur.err("expected `X(`");
        }
        cur.expect('(')?;
        let mut t = [0u64; 4];
        for (k, slot) in t.iter_mut().enumerate() {
            if k > 0 {
                cur.expect(',')?;
            }
            let start = cur.pos;
            *slot = cur.uint()?;
            if *slot == 0 {
                return Err(Error::Syntax { pos: start, msg: "arc labels are positive".into() });
            }
        }
        cur.expect(')')?;
        crossings.push(t);
        cur.eat(',');
        if cur.at_end() {
            break;
        }
    }
    let code = PDCode { crossings };
    code.validate()?;
    Ok(code)
}

impl PDCode {
    /// Checks that every label occurs exactly twice.
    pub fn validate(&self) -> Result<()> {
        let mut counts: BTreeMap<u64, usize> = BTreeMap::new();
        for t in &self.crossings {
            for &l in t {
                *counts.entry(l).or_default() += 1;
            }
        }
        match counts.into_iter().find(|&(_, c)| c != 2) {
            Some((label, count)) => Err(Error::ArcCount { label, count }),
            None => Ok(()),
        }
    }
}

impl fmt::Display for PDCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, t) in self.crossings.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "X({},{},{},{})", t[0], t[1], t[2], t[3])?;
        }
        Ok(())
    }
}

impl FromStr for PDCode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pd(s)
    }
}

/// Parses `Bn: s1^3 s2^-2 ...`.
pub fn parse_braid(text: &str) -> Result<BraidWord> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(Error::EmptyInput);
    }
    if !cur.eat('B') {
        return Err(Error::MissingStrandCount);
    }
    let strands = match cur.uint() {
        Ok(n) => n as usize,
        Err(_) => return Err(Error::MissingStrandCount),
    };
    cur.expect(':')?;
    if strands < 2 {
        return Err(Error::Syntax { pos: 1, msg: "a braid needs at least 2 strands".into() });
    }
    let mut raw = Vec::new();
    while !cur.at_end() {
        if !cur.eat('s') {
            return cur.err("expected generator `s<i>`");
        }
        let index = cur.uint()? as usize;
        let exponent = if cur.eat('^') { cur.int()? } else { 1 };
        if index == 0 || index >= strands {
            return Err(Error::IndexOutOfRange { index, strands });
        }
        if exponent == 0 {
            return Err(Error::ZeroExponent { index });
        }
        raw.push((index, exponent));
    }
    Ok(BraidWord::new(strands, raw))
}

impl BraidWord {
    /// Builds a word, merging adjacent letters on the same generator.
    pub fn new(strands: usize, letters: impl IntoIterator<Item = (usize, i64)>) -> Self {
        let mut merged: Vec<(usize, i64)> = Vec::new();
        for (i, e) in letters {
            match merged.last_mut() {
                Some(last) if last.0 == i => {
                    last.1 += e;
                    if last.1 == 0 {
                        merged.pop();
                    }
                }
                _ => merged.push((i, e)),
            }
        }
        BraidWord { strands, letters: merged }
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&(_, e)| e > 0)
    }

    pub fn crossing_count(&self) -> usize {
        self.letters.iter().map(|&(_, e)| e.unsigned_abs() as usize).sum()
    }

    /// Word with every exponent negated.
    pub fn inverse_signs(&self) -> Self {
        BraidWord { strands: self.strands, letters: self.letters.iter().map(|&(i, e)| (i, -e)).collect() }
    }

    /// Cycle count of the underlying permutation.
    pub fn permutation_cycles(&self) -> usize {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &(i, e) in &self.letters {
            if e % 2 != 0 {
                perm.swap(i - 1, i);
            }
        }
        let mut seen = vec![false; self.strands];
        let mut cycles = 0;
        for s in 0..self.strands {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}:", self.strands)?;
        for &(i, e) in &self.letters {
            write!(f, " s{i}^{e}")?;
        }
        Ok(())
    }
}

impl FromStr for BraidWord {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_braid(s)
    }
}

fn parse_rational(cur: &mut Cursor<'_>) -> Result<BigRational> {
    let start = cur.pos;
    let neg = cur.eat('-');
    let num = cur.digits().map_err(|_| malformed(cur, start))?;
    let den = if cur.eat('/') { Some(cur.digits().map_err(|_| malformed(cur, start))?) } else { None };
    let mut n: BigInt = num.parse().map_err(|_| malformed(cur, start))?;
    if neg {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| malformed(cur, start))?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(BigRational::new(n, d))
}

fn malformed(cur: &Cursor<'_>, start: usize) -> Error {
    let end = cur.src[start..].find([',', ')']).map(|k| start + k).unwrap_or(cur.src.len());
    Error::MalformedRational(cur.src[start..end].trim().to_string())
}

/// Parses `M(q1, q2, ..., qr)`.
pub fn parse_montesinos(text: &str) -> Result<MontesinosVector> {
    let mut cur = Cursor::new(text);
    if cur.at_end() {
        return Err(Error::EmptyInput);
    }
    if !cur.eat('M') {
        return cur.err("expected `M(`");
    }
    cur.expect('(')?;
    let mut slopes = Vec::new();
    loop {
        slopes.push(parse_rational(&mut cur)?);
        if cur.eat(')') {
            break;
        }
        cur.expect(',')?;
    }
    if !cur.at_end() {
        return cur.err("trailing input after `)`");
    }
    MontesinosVector::new(slopes)
}

impl MontesinosVector {
    pub fn new(slopes: Vec<BigRational>) -> Result<Self> {
        if let Some(q) = slopes.iter().find(|q| q.is_integer()) {
            return Err(Error::IntegerSlope(q.to_string()));
        }
        if slopes.len() < 3 {
            return Err(Error::LengthTooSmall(slopes.len()));
        }
        Ok(MontesinosVector { slopes })
    }

    /// Convenience constructor from `(numerator, denominator)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        let mut slopes = Vec::with_capacity(pairs.len());
        for &(p, q) in pairs {
            if q == 0 {
                return Err(Error::ZeroDenominator);
            }
            slopes.push(BigRational::new(p.into(), q.into()));
        }
        Self::new(slopes)
    }
}

impl fmt::Display for MontesinosVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("M(")?;
        for (i, q) in self.slopes.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{q}")?;
        }
        f.write_str(")")
    }
}

impl FromStr for MontesinosVector {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_montesinos(s)
    }
}

/// Constant-sign expansion of `num/den` over any integer type.
///
/// All nonzero terms share the sign of the quotient and `a0 = 0` when
/// `|num/den| < 1`.
pub fn continued_fraction_terms<T>(num: T, den: T) -> Result<Vec<T>>
where
    T: Integer + Signed + Clone,
{
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let negative = num.is_negative() != den.is_negative() && !num.is_zero();
    let (mut p, mut q) = (num.abs(), den.abs());
    let mut terms = Vec::new();
    loop {
        let (a, r) = p.div_rem(&q);
        terms.push(if negative { -a } else { a });
        if r.is_zero() {
            break;
        }
        p = q;
        q = r;
    }
    Ok(terms)
}

/// Constant-sign continued fraction of an exact rational.
pub fn continued_fraction(q: &BigRational) -> Result<ContinuedFraction> {
    Ok(ContinuedFraction { terms: continued_fraction_terms(q.numer().clone(), q.denom().clone())? })
}

impl ContinuedFraction {
    /// Nested evaluation `a0 + 1/(a1 + 1/(...))`.
    pub fn evaluate(&self) -> Result<BigRational> {
        let mut acc: Option<BigRational> = None;
        for a in self.terms.iter().rev() {
            let a = BigRational::from_integer(a.clone());
            acc = Some(match acc {
                None => a,
                Some(x) if x.is_zero() => return Err(Error::ZeroDenominator),
                Some(x) => a + x.recip(),
            });
        }
        acc.ok_or(Error::EmptyInput)
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn pd_trefoil() {
        let pd = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(pd.crossings.len(), 3);
        assert_eq!(pd.to_string(), "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
    }

    #[test]
    fn pd_tolerates_spacing_and_commas() {
        let pd = parse_pd("  X( 1, 4,2 ,5 ),X(3,6,4,1)\nX(5,2,6,3) ").unwrap();
        assert_eq!(pd.crossings[0], [1, 4, 2, 5]);
    }

    #[test]
    fn pd_errors() {
        assert_eq!(parse_pd(""), Err(Error::EmptyInput));
        assert_eq!(parse_pd("   "), Err(Error::EmptyInput));
        assert!(matches!(parse_pd("X(1,2,3,4)"), Err(Error::ArcCount { count: 1, .. })));
        assert!(matches!(parse_pd("X(1,2,2)"), Err(Error::Syntax { pos: 7, .. })));
        assert!(matches!(parse_pd("Y(1,1,2,2)"), Err(Error::Syntax { pos: 0, .. })));
        assert!(matches!(parse_pd("X(0,0,1,1)"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn braid_examples() {
        assert_eq!(parse_braid("B2: s1^3").unwrap(), BraidWord { strands: 2, letters: vec![(1, 3)] });
        assert_eq!(parse_braid("B3: s1^3 s2^3").unwrap(), BraidWord { strands: 3, letters: vec![(1, 3), (2, 3)] });
        assert_eq!(parse_braid("B2: s3^1"), Err(Error::IndexOutOfRange { index: 3, strands: 2 }));
        assert_eq!(parse_braid("s1^2"), Err(Error::MissingStrandCount));
        assert_eq!(parse_braid("B3: s2^0"), Err(Error::ZeroExponent { index: 2 }));
    }

    #[test]
    fn braid_merges_letters() {
        let b = parse_braid("B3: s1^2 s1 s2^-1 s2^-1").unwrap();
        assert_eq!(b.letters, vec![(1, 3), (2, -2)]);
        assert_eq!(b.to_string(), "B3: s1^3 s2^-2");
        let c = parse_braid("B3: s2 s1 s1^-1 s2").unwrap();
        assert_eq!(c.letters, vec![(2, 2)]);
    }

    #[test]
    fn braid_permutation() {
        assert_eq!(parse_braid("B2: s1^3").unwrap().permutation_cycles(), 1);
        assert_eq!(parse_braid("B2: s1^4").unwrap().permutation_cycles(), 2);
        assert_eq!(parse_braid("B3: s1^3 s2^3").unwrap().permutation_cycles(), 1);
    }

    #[test]
    fn montesinos_examples() {
        let m = parse_montesinos("M(4/3, 1/2, 4/7, -1/3)").unwrap();
        assert_eq!(m.slopes, vec![q(4, 3), q(1, 2), q(4, 7), q(-1, 3)]);
        assert_eq!(m.to_string(), "M(4/3, 1/2, 4/7, -1/3)");
        assert_eq!(parse_montesinos("M(1/2, 1/2)"), Err(Error::LengthTooSmall(2)));
        assert_eq!(parse_montesinos("M(2, 1/2, 1/3)"), Err(Error::IntegerSlope("2".into())));
        assert_eq!(parse_montesinos("M(4/2, 1/2, 1/3)"), Err(Error::IntegerSlope("2".into())));
        assert_eq!(parse_montesinos("M(1/0, 1/2, 1/3)"), Err(Error::ZeroDenominator));
        assert!(matches!(parse_montesinos("M(1/, 1/2, 1/3)"), Err(Error::MalformedRational(_))));
    }

    #[test]
    fn continued_fraction_examples() {
        let cf = |p, d| continued_fraction(&q(p, d)).unwrap().terms;
        let ints = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(cf(3, 5), ints(&[0, 1, 1, 2]));
        assert_eq!(cf(1, 2), ints(&[0, 2]));
        assert_eq!(cf(-3, 5), ints(&[0, -1, -1, -2]));
        assert_eq!(cf(7, 1), ints(&[7]));
        assert_eq!(cf(-7, 3), ints(&[-2, -3]));
        let neg = continued_fraction(&q(-3, 5)).unwrap();
        assert_eq!(neg.evaluate().unwrap(), q(-3, 5));
        assert_eq!(neg.to_string(), "[0,-1,-1,-2]");
        assert_eq!(continued_fraction_terms(3i64, 0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn continued_fraction_generic_over_machine_ints() {
        assert_eq!(continued_fraction_terms(3i32, 5).unwrap(), vec![0, 1, 1, 2]);
        assert_eq!(continued_fraction_terms(-3i64, 5).unwrap(), vec![0, -1, -1, -2]);
        assert_eq!(continued_fraction_terms(3i64, -5).unwrap(), vec![0, -1, -1, -2]);
    }
}
