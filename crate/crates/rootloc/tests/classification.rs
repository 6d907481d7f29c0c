use bodies::{ball_polynomial, cube_polynomial, measures_to_polynomial, BodySpec, CrossMeasures};
use exact_scalar::{rat, PiHalfValue, RBig};
use poly_core::{derivative, even_odd_parts, ExactPoly};
use proptest::prelude::*;
use rootloc::*;
use weyl::{surface_weyl_polynomial, WeylIndex};

fn opts() -> ClassifyOptions {
    ClassifyOptions::default()
}

fn q(a: i64, b: i64) -> RBig {
    rat(a, b)
}

#[test]
fn sphere_weyl_roots_are_tangents() {
    let p = surface_weyl_polynomial(&BodySpec::Ball(10), WeylIndex::Finite(1)).unwrap();
    let mut got: Vec<f64> = numeric_roots(&p, 256).unwrap().iter().map(|z| z.im).collect();
    got.sort_by(f64::total_cmp);
    let mut want: Vec<f64> = (1..=4)
        .flat_map(|k| {
            let t = (k as f64 * std::f64::consts::PI / 10.0).tan();
            [t, -t]
        })
        .collect();
    want.sort_by(f64::total_cmp);
    assert_eq!(got.len(), want.len());
    for (a, b) in got.iter().zip(&want) {
        assert!((a - b).abs() < 1e-12, "{a} vs {b}");
    }
}

#[test]
fn regular_bodies_are_dissipative_with_negative_roots() {
    for n in [3, 8, 15] {
        for m in [ball_polynomial(n), cube_polynomial(n)] {
            let r = classify(&m, Mode::Dissipative, &opts()).unwrap();
            assert_eq!(r.label, Label::Dissipative);
            assert!(r.roots.iter().all(|z| z.im.abs() < 1e-9 * (z.norm() + 1.0)));
        }
    }
}

#[test]
fn low_dimensional_surfaces_are_conservative() {
    for p in [WeylIndex::Finite(1), WeylIndex::Finite(2), WeylIndex::Finite(4), WeylIndex::Infinite] {
        let w = surface_weyl_polynomial(&BodySpec::adjoint(BodySpec::Ball(4), 1), p).unwrap();
        let r = classify(&w, Mode::Conservative, &opts()).unwrap();
        assert_eq!(r.label, Label::Conservative, "{p}");
    }
}

#[test]
fn n30_counterexample_has_failing_fifth_minor() {
    let w = counterexample_search(30, &default_families(30), usize::MAX).expect("witness");
    assert_eq!(w.failing_k, 5);
    assert!(w.delta_sign < 0);
}

#[test]
fn delta_five_sign_matches_direct_determinant() {
    let w = counterexample_search(30, &default_families(30), usize::MAX).unwrap();
    let v: Vec<RBig> = w.v.iter().map(|s| exact_scalar::parse_rational(s).unwrap()).collect();
    let m = measures_to_polynomial(&CrossMeasures::from_rationals(&v).unwrap());
    let block: Vec<Vec<PiHalfValue>> = hurwitz_matrix(&descending(&m))[..5].iter().map(|r| r[..5].to_vec()).collect();
    assert!(exact_scalar::sign(&determinant(block)) < 0);
}

fn left_factor() -> impl Strategy<Value = ExactPoly> {
    prop_oneof![
        (1i64..20, 1i64..8).prop_map(|(a, b)| ExactPoly::from_rationals(&[q(a, b), RBig::ONE])),
        (1i64..20, 1i64..20, 1i64..8).prop_map(|(b, c, d)| {
            ExactPoly::from_rationals(&[q(c, d), q(b, d), RBig::ONE])
        }),
    ]
}

fn dissipative_poly() -> impl Strategy<Value = ExactPoly> {
    prop::collection::vec(left_factor(), 1..5).prop_map(|fs| fs.iter().fold(ExactPoly::one(), |acc, f| &acc * f))
}

fn conservative_poly() -> impl Strategy<Value = ExactPoly> {
    prop::collection::btree_set(1i64..60, 1..5).prop_map(|bs| {
        bs.iter().fold(ExactPoly::one(), |acc, &b| &acc * &ExactPoly::from_rationals(&[q(b, 4), RBig::ZERO, RBig::ONE]))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn certificate_matches_numeric_roots(c in prop::collection::vec(1i64..30, 2..11)) {
        let p = ExactPoly::from_ints(&c);
        let full = classify(&p, Mode::Dissipative, &opts()).unwrap();
        for parity in [Parity::Even, Parity::Odd] {
            let o = ClassifyOptions { shortcut: Some(parity), ..opts() };
            let lc = classify(&p, Mode::Dissipative, &o).unwrap();
            prop_assert_eq!(lc.label, full.label);
        }
    }

    #[test]
    fn hermite_biehler_round_trip(m in dissipative_poly()) {
        let r = hermite_biehler_check(&m, &opts()).unwrap();
        prop_assert!(r.dissipative && r.interlacing && r.even_conservative && r.odd_conservative);
        let (e, o) = even_odd_parts(&m);
        if e.degree().unwrap_or(0) > 0 {
            prop_assert_eq!(classify(&e, Mode::Conservative, &opts()).unwrap().label, Label::Conservative);
        }
        if o.degree().unwrap_or(0) > 1 {
            prop_assert_eq!(classify(&o, Mode::Conservative, &opts()).unwrap().label, Label::Conservative);
        }
    }

    #[test]
    fn conservative_plus_derivative_is_dissipative(w in conservative_poly()) {
        prop_assert_eq!(classify(&w, Mode::Conservative, &opts()).unwrap().label, Label::Conservative);
        let m = &w + &derivative(&w);
        prop_assert_eq!(classify(&m, Mode::Dissipative, &opts()).unwrap().label, Label::Dissipative);
    }

    #[test]
    fn conservative_labels_are_simple(w in conservative_poly()) {
        let r = classify(&w, Mode::Conservative, &opts()).unwrap();
        let rmax = r.roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
        for i in 0..r.roots.len() {
            for j in i + 1..r.roots.len() {
                prop_assert!((r.roots[i] - r.roots[j]).norm() > 1e-9 * (rmax + 1.0));
            }
        }
    }

    #[test]
    fn log_concave_low_dimensions(n in 3u32..6, r in 1i64..100, steps in prop::collection::vec(0i64..50, 6)) {
        // log v_k = k² log(r/100) minus a convex ramp keeps strict log-concavity
        let mut v = Vec::new();
        let mut acc = RBig::ONE;
        for k in 0..=n as usize {
            if k > 0 {
                acc = acc * q(r, 101) * q(100, 100 + steps[..k].iter().sum::<i64>());
            }
            v.push(acc.clone());
        }
        let cm = CrossMeasures::from_rationals(&v).unwrap();
        prop_assume!(af_inequalities(&cm).all_hold);
        prop_assert!(low_dim_inequalities(&cm, n).unwrap().all_hold);
        let m = measures_to_polynomial(&cm);
        prop_assert_eq!(classify(&m, Mode::Dissipative, &opts()).unwrap().label, Label::Dissipative);
    }
}
