use proptest::prelude::*;
use zetakit::spectral_torus::{
    eisenstein, epstein_accelerated, epstein_direct, torus_length_bound, BinaryQuadraticForm,
    Lattice2D, UpperHalfPoint,
};

fn form() -> impl Strategy<Value = BinaryQuadraticForm> {
    (0.3..3.0f64, 0.3..3.0f64, -0.95..0.95f64)
        .prop_map(|(a, c, t)| BinaryQuadraticForm::new(a, t * 2.0 * (a * c).sqrt(), c).unwrap())
}

fn lattice() -> impl Strategy<Value = Lattice2D> {
    (0.5..2.0f64, -0.5..0.5f64, -1.0..1.0f64, 0.5..2.0f64)
        .prop_filter_map("degenerate", |(a, b, c, d)| Lattice2D::new([a, b], [c, d]).ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn direct_sum_within_reported_bound(q in form(), s in 1.5..4.0f64) {
        let d = epstein_direct(&q, s, 60.0).unwrap();
        let acc = epstein_accelerated(&q, s).unwrap();
        prop_assert!((d.value - acc).abs() <= d.error_bound, "{q:?} s={s}");
    }

    #[test]
    fn indefinite_forms_rejected(a in -3.0..3.0f64, b in -6.0..6.0f64, c in -3.0..3.0f64) {
        prop_assume!(b * b >= 4.0 * a * c || a <= 0.0);
        prop_assert!(BinaryQuadraticForm::new(a, b, c).is_err());
    }

    #[test]
    fn eisenstein_modular(x in -1.0..1.0f64, y in 0.3..3.0f64, s in 1.2..5.0f64) {
        let tau = UpperHalfPoint::new(x, y).unwrap();
        let e = eisenstein(&tau, s).unwrap();
        prop_assert!((eisenstein(&tau.translate(), s).unwrap() - e).abs() <= 1e-10);
        prop_assert!((eisenstein(&tau.invert(), s).unwrap() - e).abs() <= 1e-10);
    }

    #[test]
    fn unimodular_substitutions(q in form(), s in 1.2..5.0f64) {
        let base = epstein_accelerated(&q, s).unwrap();
        for (al, be, ga, de) in [(1, 1, 0, 1), (0, -1, 1, 0), (2, 1, 1, 1)] {
            let v = epstein_accelerated(&q.substitute(al, be, ga, de).unwrap(), s).unwrap();
            prop_assert!((v - base).abs() <= 1e-12 * base.max(1.0));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn length_bound_triangle(x in lattice(), y in lattice(), z in lattice()) {
        let d = |a: &Lattice2D, b: &Lattice2D| torus_length_bound(a, b, 2.0, 3.0, 150).unwrap().value;
        prop_assert!(d(&x, &z) <= d(&x, &y) + d(&y, &z) + 1e-12);
        prop_assert!((d(&x, &y) - d(&y, &x)).abs() <= 1e-12);
    }
}
