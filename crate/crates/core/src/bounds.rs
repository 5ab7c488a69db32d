//! Hyperbolic volume bounds from state graphs, twist numbers and stable
//! Jones coefficients. Integer factors stay exact; the geometric constant is
//! multiplied in last.

use num_bigint::BigInt;
use num_traits::{Float, Signed, ToPrimitive};

use crate::diagram::LinkDiagram;
use crate::error::{Error, Result};
use crate::jones::{self, JonesReport};
use crate::montesinos::{self, MontesinosNormalForm};
use crate::notation::BraidWord;
use crate::polyhedra;
use crate::states::{self, State};

/// Volume of the regular ideal tetrahedron.
#[allow(clippy::excessive_precision)]
pub const V3: f64 = 1.014_941_606_409_653_625_02;
/// Volume of the regular ideal octahedron.
#[allow(clippy::excessive_precision)]
pub const V8: f64 = 3.663_862_376_708_876_060_22;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricConstants<T> {
    pub v3: T,
    pub v8: T,
}

impl<T: Float> GeometricConstants<T> {
    pub fn new() -> Self {
        GeometricConstants { v3: cast(V3), v8: cast(V8) }
    }
}

impl<T: Float> Default for GeometricConstants<T> {
    fn default() -> Self {
        Self::new()
    }
}

fn cast<T: Float>(x: f64) -> T {
    T::from(x).expect("float conversion")
}

fn int<T: Float>(x: i64) -> T {
    T::from(x).expect("float conversion")
}

fn big<T: Float>(x: &BigInt) -> T {
    T::from(x.abs().to_f64().unwrap_or(f64::INFINITY)).expect("float conversion")
}

/// Which result a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    /// `v8 * chi_-(guts)`, using the lower end of the guts interval.
    GutsLower,
    /// `10 v3 (t - 1)`.
    AgolThurston,
    /// `(2 v8 / 3) t` for positive braids.
    PositiveBraidTwist,
    /// `v8 / 4 (t - #K)`.
    MontesinosTwist,
    /// `v8 / 2 (t - Q_{1/2})`.
    MontesinosQHalf,
    /// `2 v8 t`.
    MontesinosUpper,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::GutsLower => "guts_lower",
            Method::AgolThurston => "agol_thurston",
            Method::PositiveBraidTwist => "positive_braid_twist",
            Method::MontesinosTwist => "montesinos_twist",
            Method::MontesinosQHalf => "montesinos_q_half",
            Method::MontesinosUpper => "montesinos_upper",
        }
    }
}

/// Bounds in terms of `beta` and `beta'`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesForm<T> {
    pub lower: T,
    pub upper: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct VolumeBounds<T> {
    pub lower: T,
    pub upper: T,
    pub lower_strict: bool,
    pub upper_strict: bool,
    pub lower_method: Method,
    pub upper_method: Method,
    /// Hypotheses the caller vouches for.
    pub assumptions: Vec<String>,
    /// Advisory signs that an assumption fails.
    pub warnings: Vec<String>,
    /// Preconditions that were checked, with their outcome.
    pub checks: Vec<(String, bool)>,
    pub jones_form: Option<JonesForm<T>>,
}

impl<T: Float> VolumeBounds<T> {
    pub fn is_consistent(&self) -> bool {
        self.lower >= T::zero() && self.lower <= self.upper
    }

    /// `upper / lower`, infinite when the lower bound vanishes.
    pub fn gap(&self) -> T {
        if self.lower > T::zero() {
            self.upper / self.lower
        } else {
            T::infinity()
        }
    }
}

/// Heuristic signs that a diagram's link is not hyperbolic.
pub fn nonhyperbolic_flags(d: &LinkDiagram) -> Vec<String> {
    let mut out = Vec::new();
    if d.crossing_count() == 0 {
        out.push("trivial diagram".to_string());
        return out;
    }
    let p = d.primeness();
    if !p.is_prime {
        out.push("diagram is composite".to_string());
    }
    if p.has_nugatory {
        out.push("diagram has a nugatory crossing".to_string());
    }
    let t = d.twist_regions().twist_number;
    if t <= 1 {
        out.push("single twist region: (2, q) torus link".to_string());
    }
    out
}

fn agol_thurston<T: Float>(k: &GeometricConstants<T>, twist: usize) -> T {
    k.v3 * int(10 * (twist as i64 - 1).max(0))
}

/// Guts lower bound with the Agol-Thurston twist upper bound.
pub fn general_lower<T: Float>(d: &LinkDiagram) -> Result<VolumeBounds<T>> {
    let k = GeometricConstants::<T>::new();
    let guts = polyhedra::guts_interval(d, None)?;
    if !d.primeness().is_prime {
        return Err(Error::NotPrime);
    }
    let twist = d.twist_regions().twist_number;
    Ok(VolumeBounds {
        lower: k.v8 * int(guts.lo),
        upper: agol_thurston(&k, twist),
        lower_strict: false,
        upper_strict: true,
        lower_method: Method::GutsLower,
        upper_method: Method::AgolThurston,
        assumptions: vec!["K hyperbolic".to_string()],
        warnings: nonhyperbolic_flags(d),
        checks: vec![(format!("guts interval {} [{}, {}]", guts.justification.name(), guts.lo, guts.hi), true)],
        jones_form: None,
    })
}

/// Twist-number bounds for a positive braid with every exponent at least 3.
pub fn positive_braid_bounds<T: Float>(b: &BraidWord) -> Result<VolumeBounds<T>> {
    if !b.is_positive() {
        return Err(Error::NotPositive);
    }
    if let Some((i, &(_, e))) = b.letters.iter().enumerate().find(|(_, &(_, e))| e < 3) {
        return Err(Error::ExponentTooSmall { index: i, exponent: e });
    }
    if b.strands <= 2 {
        return Err(Error::TorusBraid(b.strands));
    }
    let d = LinkDiagram::braid_closure(b)?;
    if !d.primeness().is_prime {
        return Err(Error::NotPrimeDiagram);
    }
    let k = GeometricConstants::<T>::new();
    let twist = d.twist_regions().twist_number;
    let (_, g, r) = states::graphs(&d, &State::all_a(d.crossing_count()))?;
    let e = states::euler_data(&g, &r);
    let checks = vec![
        ("G_A has no parallel edges".to_string(), g.edges.len() == r.edges.len()),
        ("3 chi(G'_A) <= -2 t(D)".to_string(), 3 * e.chi_reduced <= -2 * twist as i64),
    ];
    let mut warnings = nonhyperbolic_flags(&d);
    let jones_form = match jones::jones_report(&d) {
        Ok(rep) => Some(positive_jones_form(&k, &rep)),
        Err(Error::CrossingCapExceeded { .. }) => {
            warnings.push("Jones form skipped: crossing cap".to_string());
            None
        }
        Err(err) => return Err(err),
    };
    Ok(VolumeBounds {
        lower: k.v8 * int(2 * twist as i64) / int(3),
        upper: agol_thurston(&k, twist),
        lower_strict: false,
        upper_strict: true,
        lower_method: Method::PositiveBraidTwist,
        upper_method: Method::AgolThurston,
        assumptions: vec!["K hyperbolic".to_string()],
        warnings,
        checks,
        jones_form,
    })
}

/// `[v8 (|beta'| - 1), 15 v3 (|beta'| - 1) - 10 v3)`.
pub fn positive_jones_form<T: Float>(k: &GeometricConstants<T>, rep: &JonesReport) -> JonesForm<T> {
    let b = big::<T>(&rep.beta_prime) - T::one();
    JonesForm { lower: k.v8 * b, upper: k.v3 * (int::<T>(15) * b - int(10)) }
}

/// Bounds for a Montesinos link with at least three positive and three
/// negative tangles, which is then hyperbolic.
pub fn montesinos_bounds<T: Float>(n: &MontesinosNormalForm) -> Result<VolumeBounds<T>> {
    let (r, s) = (n.positive_count, n.negative_count);
    if r < 3 || s < 3 {
        return Err(Error::HypothesisNotMet { positive: r, negative: s });
    }
    let k = GeometricConstants::<T>::new();
    let d = montesinos::build_diagram(n)?;
    let twist = d.twist_regions().twist_number as i64;
    let comps = d.component_count() as i64;
    let q = n.q_half() as i64;
    let by_twist = k.v8 * int(twist - comps) / int(4);
    let by_q = k.v8 * int(twist - q) / int(2);
    let (lower, lower_method) =
        if by_q >= by_twist { (by_q, Method::MontesinosQHalf) } else { (by_twist, Method::MontesinosTwist) };
    let mut warnings = Vec::new();
    let jones_form = match jones::jones_report(&d) {
        Ok(rep) => Some(montesinos_jones_form(&k, &rep, comps)),
        Err(Error::CrossingCapExceeded { .. }) => {
            warnings.push("Jones form skipped: crossing cap".to_string());
            None
        }
        Err(err) => return Err(err),
    };
    Ok(VolumeBounds {
        lower: lower.max(T::zero()),
        upper: k.v8 * int(2 * twist),
        lower_strict: false,
        upper_strict: true,
        lower_method,
        upper_method: Method::MontesinosUpper,
        assumptions: Vec::new(),
        warnings,
        checks: vec![("twist-number upper bound is sharp only over a family".to_string(), true)],
        jones_form,
    })
}

/// `[v8 (max(|beta|, |beta'|) - 1), 4 v8 (|beta| + |beta'| - 2) + 2 v8 #K)`.
pub fn montesinos_jones_form<T: Float>(k: &GeometricConstants<T>, rep: &JonesReport, comps: i64) -> JonesForm<T> {
    let (b, bp) = (big::<T>(&rep.beta), big::<T>(&rep.beta_prime));
    JonesForm { lower: k.v8 * (b.max(bp) - T::one()), upper: k.v8 * (int::<T>(4) * (b + bp - int(2)) + int(2 * comps)) }
}
