use bodies::*;
use exact_scalar::{rat, sign, unit_ball_volume, PiHalfValue};
use poly_core::ExactPoly;
use proptest::prelude::*;

fn leaf() -> impl Strategy<Value = BodySpec> {
    prop_oneof![(1u32..4).prop_map(BodySpec::Ball), (1u32..4).prop_map(BodySpec::Cube)]
}

fn spec() -> impl Strategy<Value = BodySpec> {
    leaf().prop_recursive(2, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), 1u32..3).prop_map(|(b, q)| BodySpec::adjoint(b, q)),
            (inner.clone(), inner).prop_map(|(a, b)| BodySpec::product(a, b)),
        ]
    })
}

fn volume(spec: &BodySpec) -> PiHalfValue {
    match spec {
        BodySpec::Ball(n) => unit_ball_volume(*n),
        BodySpec::Cube(n) => PiHalfValue::from_int(1 << n),
        BodySpec::Adjoint { .. } => PiHalfValue::zero(),
        BodySpec::Product(a, b) => &volume(a) * &volume(b),
        _ => unreachable!(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn end_coefficients(s in spec()) {
        let m = minkowski_polynomial(&s).unwrap();
        let n = s.ambient_dim();
        prop_assert_eq!(m.degree(), Some(n as usize));
        prop_assert_eq!(m.coeff(0), volume(&s));
        prop_assert_eq!(m.coeff(n as usize), unit_ball_volume(n));
        if s.is_solid() {
            prop_assert!(m.coeffs().iter().all(|c| sign(c) > 0));
        } else {
            prop_assert!(m.coeffs().iter().all(|c| sign(c) >= 0));
        }
    }

    #[test]
    fn lift_composes(s in spec(), q1 in 1u32..4, q2 in 1u32..4) {
        let m = minkowski_polynomial(&s).unwrap();
        prop_assert_eq!(adjoint_lift(&m, q1 + q2), adjoint_lift(&adjoint_lift(&m, q1), q2));
    }

    #[test]
    fn products_commute_and_associate(a in spec(), b in spec(), c in leaf()) {
        let (ma, mb, mc) = (
            minkowski_polynomial(&a).unwrap(),
            minkowski_polynomial(&b).unwrap(),
            minkowski_polynomial(&c).unwrap(),
        );
        prop_assert_eq!(cartesian_product_polynomial(&ma, &mb), cartesian_product_polynomial(&mb, &ma));
        prop_assert_eq!(
            cartesian_product_polynomial(&cartesian_product_polynomial(&ma, &mb), &mc),
            cartesian_product_polynomial(&ma, &cartesian_product_polynomial(&mb, &mc))
        );
    }

    #[test]
    fn measures_round_trip_for_solids(s in spec()) {
        prop_assume!(s.is_solid());
        let m = minkowski_polynomial(&s).unwrap();
        let v = polynomial_to_measures(&m, s.ambient_dim()).unwrap();
        prop_assert_eq!(measures_to_polynomial(&v), m);
    }
}

#[test]
fn cube_closed_form_matches_products() {
    let q1 = minkowski_polynomial(&BodySpec::Cube(1)).unwrap();
    let mut acc = q1.clone();
    for n in 2..=4 {
        acc = cartesian_product_polynomial(&acc, &q1);
        assert_eq!(acc, minkowski_polynomial(&BodySpec::Cube(n)).unwrap(), "n = {n}");
    }
}

#[test]
fn doubling_the_cube_is_monotone() {
    for n in 1..=6 {
        let m = minkowski_polynomial(&BodySpec::Cube(n)).unwrap();
        let big = scaled(&m, n, &rat(2, 1));
        for k in 0..=n as usize {
            assert!(sign(&(&big.coeff(k) - &m.coeff(k))) >= 0, "n = {n}, k = {k}");
        }
    }
}

#[test]
fn lift_of_the_disc() {
    let disc = minkowski_polynomial(&BodySpec::Ball(2)).unwrap();
    let lifted = adjoint_lift(&disc, 1);
    assert_eq!(lifted.coeff(1), &disc.coeff(0) * &PiHalfValue::from_int(2));
    // γ_k^{(2)} written through ball volumes
    let two = adjoint_lift(&disc, 2);
    for k in 0..=2u32 {
        let want = (&disc.coeff(k as usize) * &unit_ball_volume(k + 2))
            .div_exact(&unit_ball_volume(k))
            .unwrap();
        assert_eq!(two.coeff(k as usize + 2), want);
    }
    assert_eq!(adjoint_lift(&ExactPoly::from_ints(&[2, 2]), 1).coeff(2), PiHalfValue::pi());
}
