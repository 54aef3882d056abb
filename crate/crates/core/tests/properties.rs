use polyball::hull::{Polytope, SignedPermutation};
use polyball::{enumerate_vertices, facet_orbit};
use proptest::prelude::*;

fn vector(m: usize) -> impl Strategy<Value = Vec<f64>> {
    proptest::collection::vec(-5.0..5.0f64, m)
}

fn element(m: usize) -> impl Strategy<Value = SignedPermutation> {
    (Just((0..m).collect::<Vec<_>>()).prop_shuffle(), proptest::collection::vec(prop_oneof![Just(-1i8), Just(1i8)], m))
        .prop_map(|(perm, signs)| SignedPermutation::from_parts(perm, signs).unwrap())
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn gauge_is_a_symmetric_norm((x, y, g, lambda) in (1usize..=10).prop_flat_map(|m| (vector(m), vector(m), element(m), -20.0..20.0f64))) {
        let p = Polytope::new(x.len()).unwrap();
        let gx = p.gauge(&x).unwrap();
        let scaled: Vec<f64> = x.iter().map(|v| lambda * v).collect();
        prop_assert!((p.gauge(&scaled).unwrap() - lambda.abs() * gx).abs() <= 1e-12 * gx.max(1.0) * lambda.abs().max(1.0));
        let sum: Vec<f64> = x.iter().zip(&y).map(|(a, b)| a + b).collect();
        prop_assert!(p.gauge(&sum).unwrap() <= gx + p.gauge(&y).unwrap() + 1e-12);
        prop_assert_eq!(p.gauge(&g.apply(&x)).unwrap(), gx);
    }

    #[test]
    fn support_bounds_every_point_of_the_body((x, w) in (1usize..=8).prop_flat_map(|m| (vector(m), vector(m)))) {
        let p = Polytope::new(x.len()).unwrap();
        let g = p.gauge(&x).unwrap();
        prop_assume!(g > 0.0);
        // x / gauge(x) lies on the boundary of C_m
        let on_boundary: Vec<f64> = x.iter().map(|v| v / g).collect();
        prop_assert!(dot(&on_boundary, &w) <= p.support(&w).unwrap() + 1e-12 * p.support(&w).unwrap().max(1.0));
    }

    #[test]
    fn support_equals_vertex_maximum(w in (1usize..=4).prop_flat_map(vector)) {
        let p = Polytope::new(w.len()).unwrap();
        let exhaustive = enumerate_vertices(w.len()).unwrap().iter().map(|v| dot(v.coords(), &w)).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!((p.support(&w).unwrap() - exhaustive).abs() <= 1e-12);
    }

    #[test]
    fn gauge_equals_max_over_facet_orbit(x in (1usize..=4).prop_flat_map(vector)) {
        let p = Polytope::new(x.len()).unwrap();
        let by_facets = facet_orbit(x.len()).unwrap().iter().map(|n| dot(n.coords(), &x)).fold(f64::NEG_INFINITY, f64::max);
        prop_assert!((p.gauge(&x).unwrap() - by_facets).abs() <= 1e-12);
    }

    #[test]
    fn cone_location_reconstructs(w in (1usize..=10).prop_flat_map(vector)) {
        prop_assume!(w.iter().any(|&v| v != 0.0));
        let p = Polytope::new(w.len()).unwrap();
        let loc = p.cone_locate(&w).unwrap();
        let sorted = loc.group_element().apply_inverse(&w);
        prop_assert!(sorted.iter().all(|&v| v >= 0.0));
        prop_assert!(sorted.windows(2).all(|s| s[0] >= s[1]));
        prop_assert!(loc.coefficients().iter().all(|&c| c >= 0.0));
        for (a, b) in loc.reconstruct().iter().zip(&w) {
            prop_assert!((a - b).abs() <= 1e-12);
        }
        // scale invariance: the same cone locates every point of the ray
        let scaled: Vec<f64> = w.iter().map(|v| 3.5 * v).collect();
        let again = p.cone_locate(&scaled).unwrap();
        prop_assert_eq!(again.group_element(), loc.group_element());
    }
}

#[test]
fn cone_location_handles_rounded_ties() {
    let p = Polytope::new(4).unwrap();
    let loc = p.cone_locate(&[0.5, -0.5, 0.0, 0.5]).unwrap();
    assert_eq!(loc.group_element().perm(), &[0, 1, 3, 2]);
    assert_eq!(loc.group_element().signs(), &[1, -1, 1, 1]);
    assert_eq!(loc.coefficients()[0], 0.0);
    assert_eq!(loc.coefficients()[1], 0.0);
    assert!(loc.coefficients()[2] > 0.0);
    assert_eq!(loc.coefficients()[3], 0.0);
}
