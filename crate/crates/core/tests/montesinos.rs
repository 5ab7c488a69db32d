mod common;

use std::collections::BTreeSet;

use knotstate::montesinos::{self, LoopClass};
use knotstate::notation::{continued_fraction, MontesinosVector};
use knotstate::polyhedra;
use knotstate::states::{self, State};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn sum(v: &[BigRational]) -> BigRational {
    v.iter().fold(BigRational::zero(), |a, q| a + q)
}

/// Tangle index of each crossing, in build order.
fn owners(n: &montesinos::MontesinosNormalForm) -> Vec<usize> {
    let mut out = Vec::new();
    for (i, q) in n.slopes.iter().enumerate() {
        let c: usize = continued_fraction(q).unwrap().terms.iter().map(|a| usize::try_from(a.abs()).unwrap()).sum();
        out.extend(std::iter::repeat_n(i, c));
    }
    out
}

fn any_vector() -> impl Strategy<Value = MontesinosVector> {
    prop::collection::vec(common::slope(), 3..=6).prop_map(|slopes| MontesinosVector { slopes })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn normalize_preserves_class(m in any_vector()) {
        let n = montesinos::normalize(&m);
        prop_assert_eq!(&n.sum, &sum(&m.slopes));
        prop_assert!(montesinos::equivalent(&n.to_vector(), &m));
        let one = BigRational::from_integer(1.into());
        let mixed = n.positive_count > 0 && n.negative_count > 0;
        if mixed {
            prop_assert!(n.slopes.iter().all(|q| q.abs() < one));
        }
        prop_assert_eq!(montesinos::normalize(&n.to_vector()), n);
    }

    #[test]
    fn built_diagram_shape(m in any_vector()) {
        let n = montesinos::normalize(&m);
        prop_assume!(montesinos::expected_crossings(&n) <= 40);
        let d = montesinos::build_diagram(&n).unwrap();
        prop_assert_eq!(d.crossing_count(), montesinos::expected_crossings(&n));
        prop_assert!(d.twist_regions().twist_reduced);
        let c = d.crossing_count();
        let alternating = states::turaev_genus(&d) == 0;
        prop_assert_eq!(alternating, n.is_alternating());
        let (_, ga, _) = states::graphs(&d, &State::all_a(c)).unwrap();
        prop_assert_eq!(states::adequacy(&ga), n.positive_count != 1);
    }

    #[test]
    fn twist_identity_and_bound(m in common::mixed_vector(3, 4)) {
        let n = montesinos::normalize(&m);
        let rep = montesinos::montesinos_report(&n).unwrap();
        prop_assert_eq!(rep.identity_holds, Some(true));
        let lhs = -rep.chi_a - rep.chi_b;
        prop_assert_eq!(lhs, rep.twist_number as i64 - n.q_half() as i64);
        prop_assert!(2 * lhs >= rep.twist_number as i64 - rep.components as i64);
    }

    #[test]
    fn loop_taxonomy_matches(m in common::mixed_vector(2, 4)) {
        let n = montesinos::normalize(&m);
        let d = montesinos::build_diagram(&n).unwrap();
        let (_, g, _) = states::graphs(&d, &State::all_a(d.crossing_count())).unwrap();
        let owner = owners(&n);
        let twist = d.twist_regions();
        let short_a: BTreeSet<usize> = polyhedra::a_regions(&twist).into_iter().collect();
        // loops cobounding bigons lie in a short A-region; others are told
        // apart by where their edges sit
        let observed: BTreeSet<(LoopClass, Option<usize>)> = polyhedra::two_edge_loops(&g, &twist)
            .iter()
            .map(|l| {
                let (a, b) = (owner[l.edges.0], owner[l.edges.1]);
                let region = twist.region_of[l.edges.0];
                if l.same_twist_region && short_a.contains(&region) {
                    (LoopClass::TwistRegion, Some(a))
                } else if a == b {
                    (LoopClass::NegativeTangle, Some(a))
                } else {
                    (LoopClass::TwoPositive, None)
                }
            })
            .collect();
        let predicted: BTreeSet<(LoopClass, Option<usize>)> =
            montesinos::negative_loop_taxonomy(&n).iter().map(|p| (p.class, p.tangle)).collect();
        prop_assert_eq!(observed, predicted);
    }
}

#[test]
fn report_examples() {
    let n = montesinos::normalize(&MontesinosVector::from_pairs(&[(-1, 2), (-1, 3), (-1, 5)]).unwrap());
    let rep = montesinos::montesinos_report(&n).unwrap();
    assert_eq!((rep.r, rep.s, rep.twist_number), (0, 3, 3));
    assert!(rep.guts_a.is_none());
    assert_eq!(rep.guts_b, Some(0));
    let q = MontesinosVector::from_pairs(&[(1, 2), (1, 2), (-1, 2), (-1, 2), (1, 3), (-1, 3)]).unwrap();
    assert_eq!(montesinos::normalize(&q).q_half(), 4);
    let t = montesinos::normalize(&MontesinosVector::from_pairs(&[(3, 5), (1, 2), (1, 3)]).unwrap());
    assert_eq!(montesinos::build_diagram(&t).unwrap().twist_regions().twist_number, 5);
}
