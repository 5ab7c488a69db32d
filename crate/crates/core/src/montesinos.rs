//! Montesinos links: reduced normal forms, admissible diagrams built from
//! rational tangles, and the slope-level counts that go with them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::diagram::{LinkDiagram, Orientation, Wiring};
use crate::error::Result;
use crate::notation::{continued_fraction, MontesinosVector};
use crate::states::{self, State};

/// Reduced slope vector: every slope in `(-1, 1)` or all slopes of one sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MontesinosNormalForm {
    pub slopes: Vec<BigRational>,
    pub positive_count: usize,
    pub negative_count: usize,
    pub sum: BigRational,
    /// `q_i mod 1`, in `(0, 1)`.
    pub fractional_parts: Vec<BigRational>,
}

impl MontesinosNormalForm {
    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    /// True when all slopes share a sign, i.e. the diagram is alternating.
    pub fn is_alternating(&self) -> bool {
        self.positive_count == 0 || self.negative_count == 0
    }

    /// Number of slopes with `|q| ∈ [1/2, 1)`.
    pub fn q_half(&self) -> usize {
        q_half(&self.slopes)
    }

    pub fn to_vector(&self) -> MontesinosVector {
        MontesinosVector { slopes: self.slopes.clone() }
    }
}

pub fn q_half(slopes: &[BigRational]) -> usize {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    slopes.iter().filter(|q| q.abs() >= half && q.abs() < BigRational::one()).count()
}

fn frac(q: &BigRational) -> BigRational {
    q - q.floor()
}

/// Every rotation and reflection of `v`.
fn dihedral_images<T: Clone>(v: &[T]) -> Vec<Vec<T>> {
    let n = v.len();
    let mut out = Vec::with_capacity(2 * n);
    for k in 0..n {
        let rot: Vec<T> = (0..n).map(|i| v[(i + k) % n].clone()).collect();
        let mut rev = rot.clone();
        rev.reverse();
        out.push(rot);
        out.push(rev);
    }
    out
}

fn canonical(v: &[BigRational]) -> Vec<BigRational> {
    dihedral_images(v).into_iter().min().unwrap_or_default()
}

/// Brings a slope vector to reduced form, moving integers between tangles,
/// then picks the lexicographically least dihedral image.
pub fn normalize(m: &MontesinosVector) -> MontesinosNormalForm {
    let n = m.slopes.len();
    let floors: Vec<BigInt> = m.slopes.iter().map(|q| q.floor().to_integer()).collect();
    let fracs: Vec<BigRational> = m.slopes.iter().map(frac).collect();
    let total: BigInt = floors.iter().sum();
    let len = BigInt::from(n);
    let one = BigRational::one();

    let slopes: Vec<BigRational> = if !total.is_negative() {
        place_surplus(fracs.clone(), total)
    } else if total <= -len.clone() {
        place_surplus(fracs.iter().map(|f| f - &one).collect(), total + len)
    } else {
        // -n < total < 0: exactly -total tangles drop below zero
        let k: usize = (-total).try_into().unwrap_or(0);
        let mut order: Vec<usize> = (0..n).filter(|&i| m.slopes[i].is_negative()).collect();
        order.extend((0..n).filter(|&i| !m.slopes[i].is_negative()));
        let mut s = fracs.clone();
        for &i in order.iter().take(k) {
            s[i] -= &one;
        }
        canonical(&s)
    };
    let positive_count = slopes.iter().filter(|q| q.is_positive()).count();
    MontesinosNormalForm {
        positive_count,
        negative_count: n - positive_count,
        sum: slopes.iter().fold(BigRational::zero(), |a, q| a + q),
        fractional_parts: slopes.iter().map(frac).collect(),
        slopes,
    }
}

/// Least dihedral image over every tangle that could carry the integer
/// surplus `extra`.
fn place_surplus(base: Vec<BigRational>, extra: BigInt) -> Vec<BigRational> {
    let extra = BigRational::from_integer(extra);
    (0..base.len())
        .map(|j| {
            let mut v = base.clone();
            v[j] += &extra;
            canonical(&v)
        })
        .min()
        .unwrap_or(base)
}

/// Same link type: equal slope sums and dihedrally equal fractional parts.
pub fn equivalent(a: &MontesinosVector, b: &MontesinosVector) -> bool {
    let sum = |m: &MontesinosVector| m.slopes.iter().fold(BigRational::zero(), |acc, q| acc + q);
    if a.slopes.len() != b.slopes.len() || sum(a) != sum(b) {
        return false;
    }
    let fa: Vec<BigRational> = a.slopes.iter().map(frac).collect();
    let fb: Vec<BigRational> = b.slopes.iter().map(frac).collect();
    canonical(&fa) == canonical(&fb)
}

#[derive(Debug, Clone, Copy)]
struct Tangle {
    nw: usize,
    ne: usize,
    sw: usize,
    se: usize,
}

/// Crossing for a tangle of slope sign `positive`, as (nw, ne, sw, se).
/// Positive crossings have vertical A-smoothing, negative ones horizontal.
fn tangle_crossing(w: &mut Wiring, positive: bool) -> (usize, usize, usize, usize) {
    let s = w.crossing();
    if positive {
        (s[0], s[3], s[1], s[2])
    } else {
        (s[3], s[2], s[0], s[1])
    }
}

fn rational_tangle(w: &mut Wiring, q: &BigRational) -> Tangle {
    let terms = continued_fraction(q).expect("slope has nonzero denominator").terms;
    let positive = q.is_positive();
    let last = terms.len() - 1;
    let (a, b) = (w.point(), w.point());
    let (c, d) = (w.point(), w.point());
    w.wire(a, b);
    w.wire(c, d);
    let mut t = if last.is_multiple_of(2) {
        Tangle { nw: a, ne: b, sw: c, se: d }
    } else {
        Tangle { nw: a, sw: b, ne: c, se: d }
    };
    for j in (0..=last).rev() {
        let count: usize = terms[j].abs().try_into().unwrap_or(usize::MAX);
        for _ in 0..count {
            let (nw, ne, sw, se) = tangle_crossing(w, positive);
            if j % 2 == 1 {
                w.wire(sw, t.nw);
                w.wire(se, t.ne);
                t.nw = nw;
                t.ne = ne;
            } else if positive {
                w.wire(nw, t.ne);
                w.wire(sw, t.se);
                t.ne = ne;
                t.se = se;
            } else {
                w.wire(ne, t.nw);
                w.wire(se, t.sw);
                t.nw = nw;
                t.sw = sw;
            }
        }
    }
    t
}

/// Admissible diagram: rational tangles in a row, cyclically summed and
/// closed by joining the outer NW to NE and SW to SE ends.
pub fn build_diagram(n: &MontesinosNormalForm) -> Result<LinkDiagram> {
    let mut w = Wiring::new();
    let tangles: Vec<Tangle> = n.slopes.iter().map(|q| rational_tangle(&mut w, q)).collect();
    let r = tangles.len();
    for i in 0..r {
        let (a, b) = (tangles[i], tangles[(i + 1) % r]);
        w.wire(a.ne, b.nw);
        w.wire(a.se, b.sw);
    }
    w.assemble(Orientation::Free)
}

/// Sum of `|a_j|` over every continued fraction.
pub fn expected_crossings(n: &MontesinosNormalForm) -> usize {
    n.slopes
        .iter()
        .flat_map(|q| continued_fraction(q).expect("nonzero denominator").terms)
        .map(|a| usize::try_from(a.abs()).unwrap_or(usize::MAX))
        .sum()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MontesinosReport {
    pub r: usize,
    pub s: usize,
    pub a_adequate: bool,
    pub b_adequate: bool,
    pub twist_number: usize,
    pub q_half: usize,
    pub components: usize,
    pub chi_a: i64,
    pub chi_b: i64,
    /// χ₋(guts(M_A)), present when `r ≥ 3`.
    pub guts_a: Option<i64>,
    pub guts_b: Option<i64>,
    pub hyperbolic_sufficient: bool,
    /// `-χ(G'_A) - χ(G'_B) = t(D) - Q_{1/2}`, present when `r, s ≥ 3`.
    pub identity_holds: Option<bool>,
    pub notes: Vec<String>,
}

pub fn montesinos_report(n: &MontesinosNormalForm) -> Result<MontesinosReport> {
    let d = build_diagram(n)?;
    let c = d.crossing_count();
    let (_, ga, ra) = states::graphs(&d, &State::all_a(c))?;
    let (_, gb, rb) = states::graphs(&d, &State::all_b(c))?;
    let ea = states::euler_data(&ga, &ra);
    let eb = states::euler_data(&gb, &rb);
    let (r, s) = (n.positive_count, n.negative_count);
    let twist_number = d.twist_regions().twist_number;
    let q = n.q_half();
    let mut notes = Vec::new();
    let guts_a = if r >= 3 {
        Some(ea.chi_minus_reduced)
    } else {
        notes.push(format!("guts_A not determined: {r} positive tangles, need 3"));
        None
    };
    let guts_b = if s >= 3 {
        Some(eb.chi_minus_reduced)
    } else {
        notes.push(format!("guts_B not determined: {s} negative tangles, need 3"));
        None
    };
    let both = r >= 3 && s >= 3;
    let identity_holds = if both {
        Some(-ea.chi_reduced - eb.chi_reduced == twist_number as i64 - q as i64)
    } else {
        notes.push("identity needs at least 3 positive and 3 negative tangles".to_string());
        None
    };
    Ok(MontesinosReport {
        r,
        s,
        a_adequate: !ga.has_loop(),
        b_adequate: !gb.has_loop(),
        twist_number,
        q_half: q,
        components: d.component_count(),
        chi_a: ea.chi_reduced,
        chi_b: eb.chi_reduced,
        guts_a,
        guts_b,
        hyperbolic_sufficient: both,
        identity_holds,
        notes,
    })
}

/// Kinds of 2-edge loop an admissible diagram can carry in G_A.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LoopClass {
    /// Parallel edges cobounding bigons of one twist region.
    TwistRegion,
    /// Loop running across a negative tangle of slope in `(-1, -1/2]`.
    NegativeTangle,
    /// Exactly two positive tangles.
    TwoPositive,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictedLoop {
    pub class: LoopClass,
    /// The tangle responsible, when there is one.
    pub tangle: Option<usize>,
}

/// 2-edge loops in G_A predicted from the slopes alone. Loops across a
/// negative tangle only arise next to positive tangles.
pub fn negative_loop_taxonomy(n: &MontesinosNormalForm) -> Vec<PredictedLoop> {
    let mut out = Vec::new();
    let minus_half = BigRational::new(BigInt::from(-1), BigInt::from(2));
    for (i, q) in n.slopes.iter().enumerate() {
        let terms = continued_fraction(q).expect("nonzero denominator").terms;
        // a band is a short A-region when its crossings' A-smoothings merge
        // its bigons: vertical bands of positive tangles and horizontal
        // bands of negative ones
        let parity = if q.is_positive() { 1 } else { 0 };
        if terms.iter().enumerate().any(|(j, a)| j % 2 == parity && a.abs() >= BigInt::from(2)) {
            out.push(PredictedLoop { class: LoopClass::TwistRegion, tangle: Some(i) });
        }
        if n.positive_count > 0 && q.is_negative() && *q > -BigRational::one() && *q <= minus_half {
            out.push(PredictedLoop { class: LoopClass::NegativeTangle, tangle: Some(i) });
        }
    }
    if n.positive_count == 2 {
        out.push(PredictedLoop { class: LoopClass::TwoPositive, tangle: None });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_montesinos;

    fn nf(s: &str) -> MontesinosNormalForm {
        normalize(&parse_montesinos(s).unwrap())
    }

    fn rats(v: &[(i64, i64)]) -> Vec<BigRational> {
        v.iter().map(|&(p, q)| BigRational::new(p.into(), q.into())).collect()
    }

    #[test]
    fn normalize_transfers_integers() {
        let n = nf("M(4/3, 1/2, 4/7, -1/3)");
        let mut sorted = n.slopes.clone();
        sorted.sort();
        assert_eq!(sorted, rats(&[(1, 3), (1, 2), (4, 7), (2, 3)]));
        assert_eq!(n.sum, BigRational::new(29.into(), 14.into()));
        assert_eq!((n.positive_count, n.negative_count), (4, 0));
    }

    #[test]
    fn normalize_fixed_points() {
        let n = nf("M(1/3,-1/3,1/3,-1/3,1/3,-1/3)");
        assert!(equivalent(&n.to_vector(), &parse_montesinos("M(1/3,-1/3,1/3,-1/3,1/3,-1/3)").unwrap()));
        assert_eq!((n.positive_count, n.negative_count), (3, 3));
        let a = nf("M(-1/2,-1/3,-1/5)");
        assert_eq!(a.negative_count, 3);
        let mut s = a.slopes.clone();
        s.sort();
        assert_eq!(s, rats(&[(-1, 2), (-1, 3), (-1, 5)]));
    }

    #[test]
    fn normalize_all_negative_with_surplus() {
        let n = nf("M(-5/3, -1/2, -1/5)");
        assert!(n.slopes.iter().all(|q| q.is_negative()));
        assert_eq!(n.sum, BigRational::new((-71).into(), 30.into()));
    }

    #[test]
    fn equivalence() {
        let a = parse_montesinos("M(4/3,1/2,4/7,-1/3)").unwrap();
        let b = parse_montesinos("M(1/2,4/7,2/3,1/3)").unwrap();
        assert!(equivalent(&a, &b));
        let c = parse_montesinos("M(1/3,1/3,1/3)").unwrap();
        let d = parse_montesinos("M(1/3,1/3,-2/3)").unwrap();
        assert!(!equivalent(&c, &d));
        let mut rev = a.clone();
        rev.slopes.reverse();
        assert!(equivalent(&a, &rev));
    }

    #[test]
    fn pretzel_diagram() {
        let n = nf("M(1/3,-1/3,1/3,-1/3,1/3,-1/3)");
        let d = build_diagram(&n).unwrap();
        assert_eq!(d.crossing_count(), 18);
        assert_eq!(d.twist_regions().twist_number, 6);
        let rep = montesinos_report(&n).unwrap();
        assert_eq!((rep.chi_a, rep.chi_b), (-3, -3));
        assert_eq!((rep.guts_a, rep.guts_b), (Some(3), Some(3)));
        assert_eq!(rep.q_half, 0);
        assert_eq!(rep.identity_holds, Some(true));
        assert!(rep.hyperbolic_sufficient);
    }

    #[test]
    fn alternating_pretzel() {
        let n = nf("M(-1/2,-1/3,-1/5)");
        let d = build_diagram(&n).unwrap();
        assert_eq!(d.crossing_count(), 10);
        assert_eq!(d.twist_regions().twist_number, 3);
        let rep = montesinos_report(&n).unwrap();
        assert!(rep.a_adequate && rep.b_adequate);
        assert!(rep.guts_a.is_none() && rep.guts_b.is_some());
    }

    #[test]
    fn q_half_counts() {
        assert_eq!(q_half(&rats(&[(1, 2), (1, 2), (-1, 2), (-1, 2), (1, 3), (-1, 3)])), 4);
    }

    #[test]
    fn crossing_count_matches_terms() {
        for s in ["M(3/5, 1/2, 1/3)", "M(4/3, 1/2, 4/7, -1/3)", "M(2/5,-3/7,5/8,-1/3)"] {
            let n = nf(s);
            assert_eq!(build_diagram(&n).unwrap().crossing_count(), expected_crossings(&n), "{s}");
        }
    }
}
