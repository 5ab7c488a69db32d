mod common;

use knotstate::jones;
use knotstate::states::{self, State};
use knotstate::LinkDiagram;
use proptest::prelude::*;

fn circle_count(d: &LinkDiagram, s: State) -> usize {
    states::resolve(d, &s).unwrap().circles.count()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pd_round_trip_keeps_invariants(b in common::braid_word(10)) {
        let d = common::closure(&b);
        let e = LinkDiagram::from_pd(&d.to_pd()).unwrap();
        prop_assert_eq!(e.crossing_count(), d.crossing_count());
        prop_assert_eq!(e.writhe(), d.writhe());
        prop_assert_eq!(e.component_count(), d.component_count());
        prop_assert_eq!(e.faces().count(), d.faces().count());
        prop_assert_eq!(jones::jones_polynomial(&e).unwrap(), jones::jones_polynomial(&d).unwrap());
    }

    #[test]
    fn mirror_swaps_states(b in common::braid_word(12)) {
        let d = common::closure(&b);
        let m = d.mirror();
        let c = d.crossing_count();
        prop_assert_eq!(m.writhe(), -d.writhe());
        prop_assert_eq!(m.mirror(), d.clone());
        prop_assert_eq!(circle_count(&m, State::all_a(c)), circle_count(&d, State::all_b(c)));
        prop_assert_eq!(circle_count(&m, State::all_b(c)), circle_count(&d, State::all_a(c)));
    }

    #[test]
    fn regions_are_circles_plus_one(b in common::braid_word(12), bits in any::<u64>()) {
        let d = common::closure(&b);
        let s = State::from_bits(bits, d.crossing_count());
        let h = states::resolve(&d, &s).unwrap();
        prop_assert_eq!(h.region_count, h.circles.count() + 1);
    }

    #[test]
    fn euler_formula_for_faces(b in common::braid_word(14)) {
        let d = common::closure(&b);
        prop_assert_eq!(d.faces().count(), d.crossing_count() + 2);
    }

    #[test]
    fn cable_keeps_reduced_a_graph_euler(b in common::braid_word(8), n in 2usize..=3) {
        let d = common::closure(&b);
        let (_, g, r) = states::graphs(&d, &State::all_a(d.crossing_count())).unwrap();
        prop_assume!(states::adequacy(&g));
        let cab = d.cable(n).unwrap();
        prop_assert_eq!(cab.crossing_count(), n * n * d.crossing_count());
        let (_, gc, rc) = states::graphs(&cab, &State::all_a(cab.crossing_count())).unwrap();
        prop_assert!(states::adequacy(&gc));
        prop_assert_eq!(states::euler_data(&gc, &rc).chi_reduced, states::euler_data(&g, &r).chi_reduced);
    }

    #[test]
    fn cable_component_count(b in common::braid_word(8), n in 2usize..=3) {
        let d = common::closure(&b);
        prop_assert_eq!(d.cable(n).unwrap().component_count(), n * d.component_count());
    }
}

#[test]
fn turaev_genus_of_alternating_is_zero() {
    let d = common::closure(&knotstate::notation::parse_braid("B3: s1 s2^-1 s1 s2^-1").unwrap());
    assert_eq!(states::turaev_genus(&d), 0);
}
