//! Kauffman bracket and Jones polynomial with the extreme coefficients.
//!
//! Conventions: `delta = -A^2 - A^-2`, `J = (-A^3)^(-w) <D>`, `t = A^-4`.
//! With the A-smoothing fixed in `diagram`, the A-state controls the
//! minimal degree of `J`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::diagram::{LinkDiagram, Smoothing};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::states::{self, State};

pub type BracketPoly = LaurentPoly<BigInt>;

/// Default crossing cap for bracket evaluation.
pub const DEFAULT_CROSSING_CAP: usize = 18;

/// Jones polynomial in `t`, exponents stored in half steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JonesPolynomial(pub LaurentPoly<BigInt>);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JonesReport {
    pub polynomial: JonesPolynomial,
    /// Maximal degree m, in half steps.
    pub max_half: i64,
    /// Minimal degree r, in half steps.
    pub min_half: i64,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub alpha_prime: BigInt,
    pub beta_prime: BigInt,
    pub epsilon: u8,
    pub epsilon_prime: u8,
    pub value_at_one: BigInt,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableIdentity {
    pub holds: bool,
    /// `|beta'|`.
    pub lhs: BigInt,
    /// `1 - chi(G'_A)`.
    pub rhs: i64,
    pub alpha_prime_abs: BigInt,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AdequacyObstruction {
    pub a_side_possible: bool,
    pub b_side_possible: bool,
}

fn check_cap(d: &LinkDiagram, cap: usize) -> Result<()> {
    if d.crossing_count() > cap {
        return Err(Error::CrossingCapExceeded { crossings: d.crossing_count(), cap });
    }
    Ok(())
}

fn delta() -> BracketPoly {
    BracketPoly::from_terms(Var::A, [(2, BigInt::from(-1)), (-2, BigInt::from(-1))])
}

/// Reference bracket: the sum over all `2^c` states.
pub fn bracket_state_sum(d: &LinkDiagram, cap: usize) -> Result<BracketPoly> {
    check_cap(d, cap)?;
    let c = d.crossing_count();
    // tally[(a_exp, circles)] then expand the delta powers once
    let mut tally: HashMap<(i64, usize), i64> = HashMap::new();
    for bits in 0..1u64 << c {
        let s = State::from_bits(bits, c);
        let circles = states::resolve(d, &s)?.circles.count();
        let b = bits.count_ones() as i64;
        *tally.entry((c as i64 - 2 * b, circles)).or_default() += 1;
    }
    let del = delta();
    let mut out = BracketPoly::zero(Var::A);
    for ((a, circles), n) in tally {
        let term = del.pow(circles as u32 - 1).shift(a).scale(&BigInt::from(n));
        out = &out + &term;
    }
    Ok(out)
}

/// Production bracket: skein expansion crossing by crossing, memoized on
/// how the processed part connects the open ends.
pub fn kauffman_bracket(d: &LinkDiagram) -> Result<BracketPoly> {
    kauffman_bracket_with_cap(d, DEFAULT_CROSSING_CAP)
}

pub fn kauffman_bracket_with_cap(d: &LinkDiagram, cap: usize) -> Result<BracketPoly> {
    check_cap(d, cap)?;
    let c = d.crossing_count();
    if c == 0 {
        return Ok(BracketPoly::one(Var::A));
    }
    let order = processing_order(d);
    let mut done = vec![false; c];
    // key: sorted pairs of open ends joined by a path, plus whether a closed
    // circle has been seen (the first one is not weighted by delta)
    type Key = (Vec<(u32, u32)>, bool);
    let mut table: HashMap<Key, BracketPoly> = HashMap::new();
    table.insert((Vec::new(), false), BracketPoly::one(Var::A));
    let del = delta();
    for &x in &order {
        done[x] = true;
        let mut next: HashMap<Key, BracketPoly> = HashMap::new();
        for ((pairs, closed), poly) in table {
            for s in [Smoothing::A, Smoothing::B] {
                let mut mate: HashMap<u32, u32> = HashMap::with_capacity(pairs.len() * 2 + 4);
                for &(a, b) in &pairs {
                    mate.insert(a, b);
                    mate.insert(b, a);
                }
                let mut loops = 0usize;
                for k in 0..4 {
                    let m = s.mate(k);
                    if k < m {
                        let (a, b) = ((4 * x + k) as u32, (4 * x + m) as u32);
                        mate.insert(a, b);
                        mate.insert(b, a);
                    }
                }
                for k in 0..4 {
                    let h = 4 * x + k;
                    let g = d.partner(h);
                    if !done[g / 4] || (g / 4 == x && g < h) {
                        continue;
                    }
                    let (h, g) = (h as u32, g as u32);
                    let (mh, mg) = (mate[&h], mate[&g]);
                    mate.remove(&h);
                    mate.remove(&g);
                    if mh == g {
                        loops += 1;
                    } else {
                        mate.insert(mh, mg);
                        mate.insert(mg, mh);
                    }
                }
                let mut key: Vec<(u32, u32)> = mate.iter().filter(|(a, b)| a < b).map(|(&a, &b)| (a, b)).collect();
                key.sort_unstable();
                let mut weight = poly.shift(if s == Smoothing::A { 1 } else { -1 });
                let mut now_closed = closed;
                for _ in 0..loops {
                    if now_closed {
                        weight = &weight * &del;
                    }
                    now_closed = true;
                }
                let slot = next.entry((key, now_closed)).or_insert_with(|| BracketPoly::zero(Var::A));
                *slot = &*slot + &weight;
            }
        }
        table = next;
    }
    Ok(table.remove(&(Vec::new(), true)).unwrap_or_else(|| BracketPoly::zero(Var::A)))
}

/// Greedy order keeping the set of open ends small.
fn processing_order(d: &LinkDiagram) -> Vec<usize> {
    let c = d.crossing_count();
    let mut done = vec![false; c];
    let mut order = Vec::with_capacity(c);
    for _ in 0..c {
        let best = (0..c)
            .filter(|&x| !done[x])
            .max_by_key(|&x| {
                let links = (0..4).filter(|&k| done[d.partner(4 * x + k) / 4]).count();
                (links, std::cmp::Reverse(x))
            })
            .expect("unprocessed crossing remains");
        done[best] = true;
        order.push(best);
    }
    order
}

/// `J = (-A^3)^(-w) <D>` under `A = t^(-1/4)`.
pub fn jones_from_bracket(bracket: &BracketPoly, writhe: i64) -> JonesPolynomial {
    let sign = if writhe % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let normalized = bracket.shift(-3 * writhe).scale(&sign);
    // A^k = t^(-k/4) = (t^(1/2))^(-k/2); k is always even for a link
    let mut out = LaurentPoly::zero(Var::HalfT);
    for (k, c) in normalized.terms() {
        debug_assert!(k % 2 == 0, "odd bracket exponent");
        out.add_term(-k / 2, c.clone());
    }
    JonesPolynomial(out)
}

pub fn jones_polynomial(d: &LinkDiagram) -> Result<JonesPolynomial> {
    jones_polynomial_with_cap(d, DEFAULT_CROSSING_CAP)
}

pub fn jones_polynomial_with_cap(d: &LinkDiagram, cap: usize) -> Result<JonesPolynomial> {
    Ok(jones_from_bracket(&kauffman_bracket_with_cap(d, cap)?, d.writhe()))
}

impl JonesPolynomial {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(JonesPolynomial(crate::laurent::parse_laurent(text, Var::HalfT)?))
    }

    /// `{degree: coefficient}` with degrees written like `2`, `-4` or `5/2`.
    pub fn degree_map(&self) -> Vec<(String, BigInt)> {
        self.0.terms().map(|(k, c)| (half_to_string(k), c.clone())).collect()
    }

    pub fn report(&self) -> JonesReport {
        let p = &self.0;
        let min_half = p.min_degree().unwrap_or(0);
        let max_half = p.max_degree().unwrap_or(0);
        let alpha = p.coeff(max_half);
        let beta = p.coeff(max_half - 2);
        let alpha_prime = p.coeff(min_half);
        let beta_prime = p.coeff(min_half + 2);
        JonesReport {
            epsilon: beta.is_zero() as u8,
            epsilon_prime: beta_prime.is_zero() as u8,
            value_at_one: p.eval_one(),
            polynomial: self.clone(),
            max_half,
            min_half,
            alpha,
            beta,
            alpha_prime,
            beta_prime,
        }
    }
}

impl std::fmt::Display for JonesPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Degree given in half steps, printed as an integer or `k/2`.
pub fn half_to_string(k: i64) -> String {
    if k % 2 == 0 {
        (k / 2).to_string()
    } else {
        format!("{k}/2")
    }
}

pub fn jones_report(d: &LinkDiagram) -> Result<JonesReport> {
    Ok(jones_polynomial(d)?.report())
}

/// `|beta'| = 1 - chi(G'_A)` and `|alpha'| = 1` for an A-adequate diagram.
pub fn stable_identity_check(d: &LinkDiagram) -> Result<StableIdentity> {
    let report = jones_report(d)?;
    stable_identity_from_report(d, &report)
}

pub fn stable_identity_from_report(d: &LinkDiagram, report: &JonesReport) -> Result<StableIdentity> {
    let (_, g, r) = states::graphs(d, &State::all_a(d.crossing_count()))?;
    if !states::adequacy(&g) {
        return Err(Error::NotAdequate);
    }
    let rhs = 1 - (r.vertices as i64 - r.edges.len() as i64);
    let lhs = report.beta_prime.abs();
    let alpha_prime_abs = report.alpha_prime.abs();
    let holds = lhs.to_i64() == Some(rhs) && alpha_prime_abs.is_one();
    Ok(StableIdentity { holds, lhs, rhs, alpha_prime_abs })
}

/// Necessary conditions for adequacy read from the extreme coefficients.
pub fn adequacy_obstruction(report: &JonesReport) -> AdequacyObstruction {
    AdequacyObstruction {
        a_side_possible: report.alpha_prime.abs().is_one(),
        b_side_possible: report.alpha.abs().is_one(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::{parse_braid, parse_pd};

    fn braid(s: &str) -> LinkDiagram {
        LinkDiagram::braid_closure(&parse_braid(s).unwrap()).unwrap()
    }

    fn a(terms: &[(i64, i64)]) -> BracketPoly {
        BracketPoly::from_terms(Var::A, terms.iter().map(|&(d, c)| (d, BigInt::from(c))))
    }

    #[test]
    fn bracket_small_cases() {
        assert_eq!(kauffman_bracket(&LinkDiagram::unknot()).unwrap(), a(&[(0, 1)]));
        let kink = LinkDiagram::from_pd(&parse_pd("X(1,2,2,1)").unwrap()).unwrap();
        let expect = if kink.writhe() > 0 { a(&[(3, -1)]) } else { a(&[(-3, -1)]) };
        assert_eq!(kauffman_bracket(&kink).unwrap(), expect);
        assert_eq!(bracket_state_sum(&kink, 18).unwrap(), expect);
        let hopf = braid("B2: s1^2");
        assert_eq!(kauffman_bracket(&hopf).unwrap(), a(&[(4, -1), (-4, -1)]));
    }

    #[test]
    fn trefoil_jones() {
        let j = jones_polynomial(&braid("B2: s1^3")).unwrap();
        assert_eq!(j.to_string(), "-t^-4 + t^-3 + t^-1");
        let r = j.report();
        assert_eq!(r.value_at_one, BigInt::one());
        assert_eq!((r.alpha_prime.clone(), r.beta_prime.clone()), (BigInt::from(-1), BigInt::one()));
        assert_eq!(r.beta, BigInt::zero());
        let mirror = jones_polynomial(&braid("B2: s1^-3")).unwrap();
        assert_eq!(mirror.to_string(), "t + t^3 - t^4");
    }

    #[test]
    fn figure8_jones() {
        let d = LinkDiagram::from_pd(&parse_pd("X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)").unwrap()).unwrap();
        assert_eq!(jones_polynomial(&d).unwrap().to_string(), "t^-2 - t^-1 + 1 - t + t^2");
    }

    #[test]
    fn hopf_has_half_integer_degrees() {
        let r = jones_report(&braid("B2: s1^4")).unwrap();
        assert_eq!(r.value_at_one, BigInt::from(-2));
        let hopf = jones_polynomial(&braid("B2: s1^2")).unwrap();
        assert_eq!(hopf.to_string(), "-t^(-5/2) - t^(-1/2)");
    }

    #[test]
    fn cap_enforced() {
        let d = braid("B2: s1^19");
        assert_eq!(jones_polynomial(&d), Err(Error::CrossingCapExceeded { crossings: 19, cap: 18 }));
        assert!(jones_polynomial_with_cap(&d, 19).is_ok());
    }

    #[test]
    fn obstruction_on_known_polynomials() {
        let k95 = JonesPolynomial::parse("2t^2-3t^3+5t^4-6t^5+6t^6-5t^7+4t^8-2t^9").unwrap();
        let o = adequacy_obstruction(&k95.report());
        assert!(!o.a_side_possible && !o.b_side_possible);
        let k706 = JonesPolynomial::parse("2t^-4-4t^-3+6t^-2-8t^-1+9-8t+6t^2-4t^3+2t^4").unwrap();
        let o = adequacy_obstruction(&k706.report());
        assert!(!o.a_side_possible && !o.b_side_possible);
    }
}
