//! JSON report builders shared by the subcommands.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use knotstate::bounds::{self, VolumeBounds};
use knotstate::jones::{self, half_to_string, JonesReport};
use knotstate::montesinos::{self, MontesinosNormalForm};
use knotstate::polyhedra::{self, GutsInterval, GutsJustification, MontesinosHint};
use knotstate::states::{self, State};
use knotstate::{LinkDiagram, Smoothing};

use crate::input::{Input, Source};
use crate::json::{bigint, bounds as bounds_json, core_error, float, guts as guts_json, or_error};

pub fn diagram_stats(d: &LinkDiagram) -> Value {
    let twist = d.twist_regions();
    let p = d.primeness();
    json!({
        "crossings": d.crossing_count(),
        "components": d.component_count(),
        "writhe": d.writhe(),
        "twist_number": twist.twist_number,
        "twist_reduced": twist.twist_reduced,
        "prime": p.is_prime,
        "nugatory": p.has_nugatory,
    })
}

pub fn state_block(d: &LinkDiagram, state: &State) -> Value {
    let (h, g, r) = match states::graphs(d, state) {
        Ok(x) => x,
        Err(e) => return core_error(&e),
    };
    let e = states::euler_data(&g, &r);
    let fiber = or_error(states::fiber_report(d, state), |f| {
        json!({
            "is_fiber": f.is_fiber,
            "genus": f.genus.map(|g| if *g.denom() == 1 { json!(g.numer()) } else { json!(g.to_string()) }),
        })
    });
    json!({
        "adequate": states::adequacy(&g),
        "homogeneous": states::is_homogeneous(&h),
        "circles": e.v,
        "edges": e.e,
        "edges_reduced": e.e_reduced,
        "chi": e.chi,
        "chi_reduced": e.chi_reduced,
        "n_sep": e.n_sep,
        "orientable": states::orientability(&g),
        "fiber": fiber,
    })
}

pub fn hint_for(input: &Input, side: Smoothing) -> Option<MontesinosHint> {
    match &input.source {
        Source::Montesinos(n) => Some(MontesinosHint {
            reduced_admissible: true,
            positive_tangles: match side {
                Smoothing::A => n.positive_count,
                Smoothing::B => n.negative_count,
            },
        }),
        _ => None,
    }
}

pub fn guts_pair(input: &Input) -> (knotstate::Result<GutsInterval>, knotstate::Result<GutsInterval>) {
    let d = &input.diagram;
    (
        polyhedra::guts_interval(d, hint_for(input, Smoothing::A)),
        polyhedra::guts_interval_b(d, hint_for(input, Smoothing::B)),
    )
}

pub fn guts_block(input: &Input) -> Value {
    let (a, b) = guts_pair(input);
    json!({
        "A": or_error(a, |g| guts_json(&g)),
        "B": or_error(b, |g| guts_json(&g)),
    })
}

pub fn jones_json(rep: &JonesReport) -> Value {
    let coefficients: serde_json::Map<String, Value> =
        rep.polynomial.degree_map().into_iter().map(|(k, c)| (k, bigint(&c))).collect();
    let obstruction = jones::adequacy_obstruction(rep);
    json!({
        "polynomial": rep.polynomial.to_string(),
        "coefficients": coefficients,
        "max_degree": half_to_string(rep.max_half),
        "min_degree": half_to_string(rep.min_half),
        "alpha": bigint(&rep.alpha),
        "beta": bigint(&rep.beta),
        "alpha_prime": bigint(&rep.alpha_prime),
        "beta_prime": bigint(&rep.beta_prime),
        "epsilon": rep.epsilon,
        "epsilon_prime": rep.epsilon_prime,
        "value_at_one": bigint(&rep.value_at_one),
        "obstruction": {
            "a_side_possible": obstruction.a_side_possible,
            "b_side_possible": obstruction.b_side_possible,
        },
    })
}

pub fn jones_block(d: &LinkDiagram, cap: usize) -> (Value, Option<JonesReport>) {
    match jones::jones_polynomial_with_cap(d, cap) {
        Ok(p) => {
            let rep = p.report();
            let mut v = jones_json(&rep);
            let identity = |d: &LinkDiagram, rep: &JonesReport| {
                or_error(jones::stable_identity_from_report(d, rep), |s| {
                    json!({
                        "holds": s.holds,
                        "beta_prime_abs": bigint(&s.lhs),
                        "one_minus_chi": s.rhs,
                        "alpha_prime_abs": bigint(&s.alpha_prime_abs),
                    })
                })
            };
            let mirrored = mirror_report(&rep);
            v["stable_identity"] = json!({
                "A": identity(d, &rep),
                "B": identity(&d.mirror(), &mirrored),
            });
            (v, Some(rep))
        }
        Err(e) => (core_error(&e), None),
    }
}

/// Report of the mirror image, read off without recomputing.
pub fn mirror_report(rep: &JonesReport) -> JonesReport {
    let p = &rep.polynomial.0;
    let terms: Vec<(i64, BigInt)> = p.terms().map(|(k, c)| (-k, c.clone())).collect();
    let poly = knotstate::laurent::LaurentPoly::from_terms(p.var(), terms);
    jones::JonesPolynomial(poly).report()
}

/// The most specific bounds that apply to the input.
pub fn volume_bounds(input: &Input) -> knotstate::Result<(&'static str, VolumeBounds<f64>)> {
    match &input.source {
        Source::Montesinos(n) if n.positive_count >= 3 && n.negative_count >= 3 => {
            Ok(("montesinos", bounds::montesinos_bounds(n)?))
        }
        Source::Braid(b) if b.is_positive() && b.letters.iter().all(|&(_, e)| e >= 3) => {
            match bounds::positive_braid_bounds(b) {
                Ok(v) => Ok(("positive_braid", v)),
                Err(_) => Ok(("general", bounds::general_lower(&input.diagram)?)),
            }
        }
        _ => Ok(("general", bounds::general_lower(&input.diagram)?)),
    }
}

pub fn volume_block(input: &Input) -> Value {
    or_error(volume_bounds(input), |(family, b)| {
        let mut v = bounds_json(&b);
        v["family"] = json!(family);
        v
    })
}

pub fn montesinos_block(n: &MontesinosNormalForm) -> Value {
    or_error(montesinos::montesinos_report(n), |r| {
        json!({
            "normal_form": n.to_vector().to_string(),
            "sum": n.sum.to_string(),
            "r": r.r,
            "s": r.s,
            "A_adequate": r.a_adequate,
            "B_adequate": r.b_adequate,
            "twist_number": r.twist_number,
            "q_half": r.q_half,
            "components": r.components,
            "chi_A": r.chi_a,
            "chi_B": r.chi_b,
            "guts_A": r.guts_a,
            "guts_B": r.guts_b,
            "hyperbolic_sufficient": r.hyperbolic_sufficient,
            "identity_holds": r.identity_holds,
            "notes": r.notes,
        })
    })
}

/// Cross-field checks; every entry should hold.
pub fn consistency(d: &LinkDiagram, guts_a: Option<&GutsInterval>, jones: Option<&JonesReport>) -> Vec<Value> {
    let mut out = Vec::new();
    let fiber_a = states::fiber_report(d, &State::all_a(d.crossing_count())).ok().map(|f| f.is_fiber);
    if let (Some(true), Some(g)) = (fiber_a, guts_a) {
        out.push(json!({"check": "fiber(A) implies guts_A exact 0", "holds": g.exact && g.lo == 0}));
        if let Some(rep) = jones {
            out.push(json!({"check": "fiber(A) implies beta' = 0", "holds": rep.beta_prime.is_zero()}));
        }
    }
    if let (Some(g), Some(rep)) = (guts_a, jones) {
        if g.exact && matches!(g.justification, GutsJustification::OnlyBigonLoops | GutsJustification::Montesinos) {
            let expected = BigInt::from(g.lo + 1 - i64::from(rep.epsilon_prime));
            out.push(json!({
                "check": "exact guts_A = |beta'| - 1 + epsilon'",
                "holds": rep.beta_prime.abs() == expected,
            }));
        }
    }
    out
}

pub fn analyze(input: &Input, cap: usize) -> Value {
    let d = &input.diagram;
    let c = d.crossing_count();
    let (ga, gb) = guts_pair(input);
    let (jones_value, jones_rep) = jones_block(d, cap);
    let mut warnings: Vec<String> = bounds::nonhyperbolic_flags(d);
    let checks = consistency(d, ga.as_ref().ok(), jones_rep.as_ref());
    for chk in &checks {
        if chk["holds"] != json!(true) {
            warnings.push(format!("inconsistent: {}", chk["check"].as_str().unwrap_or("")));
        }
    }
    let mut v = json!({
        "input": input.echo(),
        "diagram": diagram_stats(d),
        "states": {
            "A": state_block(d, &State::all_a(c)),
            "B": state_block(d, &State::all_b(c)),
            "seifert": state_block(d, &State::seifert(d)),
        },
        "guts": {
            "A": or_error(ga, |g| guts_json(&g)),
            "B": or_error(gb, |g| guts_json(&g)),
        },
        "jones": jones_value,
        "volume": volume_block(input),
        "turaev_genus": states::turaev_genus(d),
        "consistency": checks,
        "warnings": warnings,
    });
    if let Source::Montesinos(n) = &input.source {
        v["montesinos"] = montesinos_block(n);
    }
    v
}

pub fn fibered(d: &LinkDiagram) -> Value {
    let c = d.crossing_count();
    let block = |s: State| {
        or_error(states::fiber_report(d, &s), |f| {
            json!({
                "is_fiber": f.is_fiber,
                "genus": f.genus.map(|g| if *g.denom() == 1 { json!(g.numer()) } else { json!(g.to_string()) }),
            })
        })
    };
    json!({
        "A": block(State::all_a(c)),
        "B": block(State::all_b(c)),
        "seifert": block(State::seifert(d)),
    })
}

pub fn float_pair(lower: f64, upper: f64) -> Value {
    json!({"lower": float(lower), "upper": float(upper)})
}
