//! Exact Laurent polynomials in one variable over any commutative ring.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient ring requirements.
pub trait Coeff: Clone + PartialEq + Zero + One + Add<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {}

impl<T> Coeff for T where T: Clone + PartialEq + Zero + One + Add<Output = T> + Mul<Output = T> + Neg<Output = T> {}

/// The indeterminate a polynomial is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    /// Kauffman bracket variable `A`.
    A,
    /// Jones variable `t`, stored in half-integer steps: exponent `k`
    /// means `t^(k/2)`.
    HalfT,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly<C> {
    var: Var,
    terms: BTreeMap<i64, C>,
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(var: Var) -> Self {
        LaurentPoly { var, terms: BTreeMap::new() }
    }

    pub fn one(var: Var) -> Self {
        Self::monomial(var, 0, C::one())
    }

    pub fn monomial(var: Var, degree: i64, c: C) -> Self {
        let mut p = Self::zero(var);
        p.add_term(degree, c);
        p
    }

    pub fn from_terms(var: Var, terms: impl IntoIterator<Item = (i64, C)>) -> Self {
        let mut p = Self::zero(var);
        for (d, c) in terms {
            p.add_term(d, c);
        }
        p
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn add_term(&mut self, degree: i64, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(degree).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&degree);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, degree: i64) -> C {
        self.terms.get(&degree).cloned().unwrap_or_else(C::zero)
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Nonzero terms in ascending degree.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.terms.iter().map(|(&d, c)| (d, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Multiplies by `var^k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect() }
    }

    /// Substitutes `var -> new_var^factor`.
    pub fn substitute(&self, new_var: Var, factor: i64) -> Self {
        Self::from_terms(new_var, self.terms.iter().map(|(&d, c)| (d * factor, c.clone())))
    }

    pub fn scale(&self, k: &C) -> Self {
        Self::from_terms(self.var, self.terms.iter().map(|(&d, c)| (d, c.clone() * k.clone())))
    }

    /// Value at `var = 1`.
    pub fn eval_one(&self) -> C {
        self.terms.values().fold(C::zero(), |acc, c| acc + c.clone())
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut out = Self::one(self.var);
        for _ in 0..n {
            out = &out * self;
        }
        out
    }
}

impl<C: Coeff> Add for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn add(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, c.clone());
        }
        out
    }
}

impl<C: Coeff> Sub for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn sub(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = self.clone();
        for (&d, c) in &rhs.terms {
            out.add_term(d, -c.clone());
        }
        out
    }
}

impl<C: Coeff> Mul for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn mul(self, rhs: Self) -> LaurentPoly<C> {
        let mut out = LaurentPoly::zero(self.var);
        for (&d1, c1) in &self.terms {
            for (&d2, c2) in &rhs.terms {
                out.add_term(d1 + d2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        LaurentPoly { var: self.var, terms: self.terms.iter().map(|(&d, c)| (d, -c.clone())).collect() }
    }
}

macro_rules! owned_op {
    ($tr:ident, $f:ident) => {
        impl<C: Coeff> $tr for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $f(self, rhs: Self) -> LaurentPoly<C> {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, var: Var, d: i64) -> fmt::Result {
    let name = match var {
        Var::A => "A",
        Var::HalfT => "t",
    };
    let (num, half) = match var {
        Var::HalfT if d % 2 != 0 => (d, true),
        Var::HalfT => (d / 2, false),
        Var::A => (d, false),
    };
    match (num, half) {
        (0, false) => Ok(()),
        (1, false) => write!(f, "{name}"),
        (n, false) => write!(f, "{name}^{n}"),
        (n, true) => write!(f, "{name}^({n}/2)"),
    }
}

/// Canonical text: ascending degree, explicit signs, unit coefficients
/// omitted, e.g. `2t^-4 - t^-1 + 9 - 8t + t^(5/2)`.
impl<C> fmt::Display for LaurentPoly<C>
where
    C: Coeff + fmt::Display + PartialOrd,
{
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.terms.iter().enumerate() {
            let negative = *c < C::zero();
            let mag = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let constant = match self.var {
                Var::HalfT => d == 0,
                Var::A => d == 0,
            };
            if constant || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            write_power(f, self.var, d)?;
        }
        Ok(())
    }
}

/// Parses the canonical text form (and looser spellings such as `t^{-4}`,
/// `t^-4`, `3*t^2`, `t^(1/2)`) in the given variable.
pub fn parse_laurent<C>(text: &str, var: Var) -> Result<LaurentPoly<C>>
where
    C: Coeff + FromStr,
{
    let name = match var {
        Var::A => 'A',
        Var::HalfT => 't',
    };
    let bad = |m: &str| Error::MalformedPolynomial(format!("{m} in `{text}`"));
    let s: String = text.chars().filter(|c| !c.is_whitespace() && *c != '{' && *c != '}').collect();
    if s.is_empty() {
        return Err(Error::EmptyInput);
    }
    let b = s.as_bytes();
    let mut i = 0;
    let mut out = LaurentPoly::zero(var);
    while i < b.len() {
        let mut negative = false;
        if b[i] == b'+' || b[i] == b'-' {
            negative = b[i] == b'-';
            i += 1;
        } else if i > 0 {
            return Err(bad("missing sign between terms"));
        }
        let start = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let mut coeff: C = if i > start { s[start..i].parse().map_err(|_| bad("bad coefficient"))? } else { C::one() };
        if i < b.len() && b[i] == b'*' {
            i += 1;
        }
        let mut degree = 0i64;
        if i < b.len() && b[i] as char == name {
            i += 1;
            let mut num = 1i64;
            let mut den = 1i64;
            if i < b.len() && b[i] == b'^' {
                i += 1;
                let paren = i < b.len() && b[i] == b'(';
                if paren {
                    i += 1;
                }
                let ns = i;
                if i < b.len() && b[i] == b'-' {
                    i += 1;
                }
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                num = s[ns..i].parse().map_err(|_| bad("bad exponent"))?;
                if paren {
                    if i < b.len() && b[i] == b'/' {
                        i += 1;
                        let ds = i;
                        while i < b.len() && b[i].is_ascii_digit() {
                            i += 1;
                        }
                        den = s[ds..i].parse().map_err(|_| bad("bad exponent"))?;
                    }
                    if i >= b.len() || b[i] != b')' {
                        return Err(bad("unclosed exponent"));
                    }
                    i += 1;
                }
            }
            degree = match (var, den) {
                (Var::HalfT, 1) => 2 * num,
                (Var::HalfT, 2) => num,
                (Var::A, 1) => num,
                _ => return Err(bad("unsupported fractional exponent")),
            };
        } else if i == start {
            return Err(bad("empty term"));
        }
        if negative {
            coeff = -coeff;
        }
        out.add_term(degree, coeff);
    }
    Ok(out)
}
