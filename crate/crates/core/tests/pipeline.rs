//! End-to-end consistency across modules, each quantity reached by two routes.

use cayley_core::ambient::restriction_table;
use cayley_core::cayley::{enumerate_fixed_points, gkm_graph, Label};
use cayley_core::equivariant::{
    ab_integrate, hyperplane_class, schubert_classes, schubert_ring, SchubertVector,
};
use cayley_core::exact::{int, to_i64};
use cayley_core::invariants::{chern_classes, euler_by_localization, hilbert_polynomial};
use proptest::prelude::*;

fn label() -> impl Strategy<Value = Label> {
    (0..Label::ALL.len()).prop_map(|i| Label::ALL[i])
}

#[test]
fn structure_constants_are_triple_intersections() {
    let s = schubert_classes().unwrap();
    let ring = schubert_ring().unwrap();
    for (&(a, b), v) in &ring.table {
        for c in Label::ALL.iter().filter(|c| c.codim == a.codim + b.codim) {
            let triple = s.class(a).mul(s.class(b)).mul(s.class(c.dual()));
            assert_eq!(
                ab_integrate(&triple).unwrap(),
                int(v.get(*c)),
                "{a}·{b} at {c}"
            );
        }
    }
}

#[test]
fn degree_from_localization_ring_and_hilbert_polynomial() {
    let ring = schubert_ring().unwrap();
    let by_localization = ab_integrate(&hyperplane_class().pow(8)).unwrap();
    let by_hilbert = hilbert_polynomial(10).unwrap().degree();
    assert_eq!(by_localization, int(182));
    assert_eq!(by_hilbert, int(182));
    assert_eq!(ring.degrees[&Label::new(1, 0)], 182);
}

#[test]
fn euler_characteristic_three_ways() {
    let chern = chern_classes(schubert_classes().unwrap()).unwrap();
    let points = enumerate_fixed_points().unwrap().len() as i64;
    assert_eq!(points, 15);
    assert_eq!(euler_by_localization().unwrap(), points);
    assert_eq!(chern.euler_characteristic(), points);
}

#[test]
fn hilbert_polynomial_obeys_serre_duality_and_vanishing() {
    // The canonical bundle is O(-4), read off c1 = 4σ1.
    let chern = chern_classes(schubert_classes().unwrap()).unwrap();
    assert_eq!(chern.c(1).get(Label::new(1, 0)), 4);
    let h = hilbert_polynomial(10).unwrap();
    for k in -10..=10 {
        assert_eq!(h.eval(-4 - k), h.eval(k), "k = {k}");
    }
    for k in -3..=-1 {
        assert_eq!(h.eval(k), int(0));
    }
    assert_eq!(to_i64(&h.eval(0)), Some(1));
}

#[test]
fn hyperplane_restricts_to_hyperplane() {
    let ring = schubert_ring().unwrap();
    let t = restriction_table(ring).unwrap();
    let tau1 = t.entries.iter().find(|(l, _)| l.size() == 1).unwrap().1;
    assert_eq!(
        tau1.terms().collect::<Vec<_>>(),
        vec![(Label::new(1, 0), 1)]
    );
}

#[test]
fn gkm_graph_has_36_edges_and_is_connected() {
    let g = gkm_graph();
    assert_eq!(g.edges.len(), 36);
    for l in Label::ALL {
        let n = g.neighbours(l).count();
        assert!((1..=8).contains(&n), "{l}: {n}");
    }
    assert!(g.is_connected());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn products_pair_with_duals_symmetrically(a in label(), b in label(), c in label()) {
        prop_assume!(a.codim + b.codim + c.codim == 8);
        let s = schubert_classes().unwrap();
        let abc = ab_integrate(&s.class(a).mul(s.class(b)).mul(s.class(c))).unwrap();
        let ring = schubert_ring().unwrap();
        let ab = ring.multiply(
            &SchubertVector::from_pairs(&[(a, 1)]),
            &SchubertVector::from_pairs(&[(b, 1)]),
        );
        prop_assert_eq!(abc, int(ab.get(c.dual())));
    }
}
