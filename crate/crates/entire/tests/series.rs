use std::f64::consts::PI;

use bodies::{minkowski_polynomial, BodySpec};
use entire::*;
use exact_scalar::{PiHalfValue, RBig};
use num_complex::Complex64;
use poly_core::jensen_polynomial;
use proptest::prelude::*;
use statrs::function::gamma::gamma;
use weyl::{surface_weyl_polynomial, WeylIndex};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1.0)
}

/// `J_ν(t)` from its power series, summed in f64.
fn bessel_j(nu: f64, t: f64) -> f64 {
    let x = t / 2.0;
    let mut term = x.powf(nu) / gamma(nu + 1.0);
    let mut sum = term;
    for l in 1..80 {
        term *= -x * x / (l as f64 * (nu + l as f64));
        sum += term;
    }
    sum
}

#[test]
fn ball_series_is_a_bessel_function() {
    for p in 1..=6u32 {
        let spec = SeriesSpec::WBall(WeylIndex::Finite(p));
        let nu = p as f64 / 2.0;
        for i in 1..=40 {
            let t = i as f64 * 0.25;
            let want = gamma(nu + 1.0) * (t / 2.0).powf(-nu) * bessel_j(nu, t);
            let got = series_eval_auto(&spec, c(t)).unwrap().re;
            assert!((got - want).abs() < 1e-10 * want.abs().max(1.0), "p = {p}, t = {t}: {got} vs {want}");
        }
    }
}

fn weyl_families(p: WeylIndex) -> Vec<SeriesSpec> {
    vec![SeriesSpec::WBall(p), SeriesSpec::WBallCyl(p), SeriesSpec::WCube(p), SeriesSpec::WCubeCyl(p)]
}

#[test]
fn index_multiplier_maps_limit_series_to_finite_index() {
    for fam in weyl_families(WeylIndex::Infinite) {
        let inf = taylor_coefficients(&fam, 41).unwrap();
        for p in 1..=8 {
            let want = match &fam {
                SeriesSpec::WBall(_) => SeriesSpec::WBall(WeylIndex::Finite(p)),
                SeriesSpec::WBallCyl(_) => SeriesSpec::WBallCyl(WeylIndex::Finite(p)),
                SeriesSpec::WCube(_) => SeriesSpec::WCube(WeylIndex::Finite(p)),
                _ => SeriesSpec::WCubeCyl(WeylIndex::Finite(p)),
            };
            assert_eq!(laguerre_multiplier_map(&inf, p).unwrap(), taylor_coefficients(&want, 41).unwrap());
        }
    }
}

fn closed_families() -> Vec<SeriesSpec> {
    let f = WeylIndex::Finite;
    vec![
        SeriesSpec::MBallAdjoint(0),
        SeriesSpec::MBallAdjoint(2),
        SeriesSpec::MBallAdjoint(4),
        SeriesSpec::WBall(f(1)),
        SeriesSpec::WBall(f(2)),
        SeriesSpec::WBall(WeylIndex::Infinite),
        SeriesSpec::WBallCyl(f(2)),
        SeriesSpec::WBallCyl(f(4)),
        SeriesSpec::WBallCyl(WeylIndex::Infinite),
        SeriesSpec::WBallCylSine(2),
        SeriesSpec::WBallCylSine(4),
        SeriesSpec::WCube(WeylIndex::Infinite),
        SeriesSpec::WCubeCyl(WeylIndex::Infinite),
        SeriesSpec::MittagLeffler,
    ]
}

/// Sixty terms of the series in its own variable (`t²` for the even families).
fn sixty(spec: &SeriesSpec) -> usize {
    if spec.is_even() {
        120
    } else {
        60
    }
}

#[test]
fn closed_forms_match_series_on_disc() {
    for spec in closed_families() {
        for r in [5e-4, 0.1, 0.5, 1.7, 3.0, 5.0] {
            for k in 0..12 {
                let t = Complex64::from_polar(r, k as f64 * PI / 6.0);
                let a = closed_form_eval(&spec, t).unwrap();
                let b = series_eval(&spec, t, sixty(&spec)).unwrap();
                assert!(close(a, b, 1e-10), "{spec} at {t}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn i4_closed_form_and_series_agree() {
    // ((2z²−6z+6)e^z + (z²−6))/z⁴ → 1/4 at the origin, so 𝓜₄(0) = 1
    let m = SeriesSpec::MBallAdjoint(4);
    for z in [-8.0, -1.5, 0.01, 0.3, 2.0, 7.5] {
        let a = closed_form_eval(&m, c(z)).unwrap();
        let b = series_eval_auto(&m, c(z)).unwrap();
        assert!(close(a, b, 1e-10), "{z}: {a} vs {b}");
    }
}

#[test]
fn integral_representations_match_series() {
    let mut specs = vec![SeriesSpec::MittagLeffler, SeriesSpec::WBallCyl(WeylIndex::Infinite)];
    for k in [1u32, 2, 3, 4, 6] {
        specs.push(SeriesSpec::MBallAdjoint(k));
        specs.push(SeriesSpec::WBallCyl(WeylIndex::Finite(k)));
        specs.push(SeriesSpec::WBallCylSine(k));
        specs.push(SeriesSpec::WBall(WeylIndex::Finite(k)));
    }
    for spec in &specs {
        for i in -20..=20 {
            let t = i as f64 * 0.5;
            let a = integral_rep_eval(spec, t, 96).unwrap();
            let b = series_eval_auto(spec, c(t)).unwrap().re;
            assert!((a - b).abs() < 1e-8 * b.abs().max(1.0), "{spec} at {t}: {a} vs {b}");
        }
    }
    let p1 = integral_rep_eval(&SeriesSpec::WBallCyl(WeylIndex::Finite(1)), 2.0, 64).unwrap();
    assert!((p1 - series_eval(&SeriesSpec::WBallCyl(WeylIndex::Finite(1)), c(2.0), 120).unwrap().re).abs() < 1e-10);
}

/// `W(t) = W(0) · 𝒥_n(𝓦; i n t)`: the multipliers `Π_{i<2l}(1 − i/n)` are
/// indexed by the degree in `t` and built on the surface dimension `n`; the
/// result has degree `2⌊n/2⌋` because the odd coefficients vanish.
fn check_weyl_renormalization(body: BodySpec, n: u32, spec: SeriesSpec, p: WeylIndex) {
    let w = surface_weyl_polynomial(&body, p).unwrap();
    let deg = 2 * (n / 2);
    let j = jensen_polynomial(&taylor_coefficients(&spec, n as usize + 1).unwrap(), n).unwrap();
    assert_eq!(w.degree(), Some(deg as usize), "{body:?}");
    assert_eq!(j.degree(), Some(deg as usize), "{body:?}");
    for l in 0..=deg / 2 {
        let mut s = RBig::from(n).pow(2 * l as usize);
        if l % 2 == 1 {
            s = -s;
        }
        let want = &w.coeff(0) * &j.coeff(2 * l as usize).scale(&s);
        assert_eq!(w.coeff(2 * l as usize), want, "{body:?}, p = {p}, l = {l}");
    }
}

#[test]
fn weyl_polynomials_are_jensen_polynomials_in_t_degree() {
    for n in 1..=12u32 {
        for p in [WeylIndex::Finite(1), WeylIndex::Finite(2), WeylIndex::Finite(3), WeylIndex::Infinite] {
            check_weyl_renormalization(BodySpec::Ball(n + 1), n, SeriesSpec::WBall(p), p);
            check_weyl_renormalization(BodySpec::adjoint(BodySpec::Ball(n), 1), n, SeriesSpec::WBallCyl(p), p);
            check_weyl_renormalization(BodySpec::Cube(n + 1), n, SeriesSpec::WCube(p), p);
            check_weyl_renormalization(BodySpec::adjoint(BodySpec::Cube(n), 1), n, SeriesSpec::WCubeCyl(p), p);
        }
    }
}

#[test]
fn squeezed_ball_minkowski_polynomials_are_jensen_polynomials() {
    // M_{B^n×0^q}(t) = [t^q] M · t^q · 𝒥_n(𝓜_q; n t)
    for q in 0..=4u32 {
        for n in 1..=10u32 {
            let body = if q == 0 { BodySpec::Ball(n) } else { BodySpec::adjoint(BodySpec::Ball(n), q) };
            let m = minkowski_polynomial(&body).unwrap();
            let j = jensen_polynomial(&taylor_coefficients(&SeriesSpec::MBallAdjoint(q), n as usize + 1).unwrap(), n)
                .unwrap();
            let lead = m.coeff(q as usize);
            for k in 0..=n as usize {
                let want = &lead * &j.coeff(k).scale(&RBig::from(n).pow(k));
                assert_eq!(m.coeff(k + q as usize), want, "q = {q}, n = {n}, k = {k}");
            }
        }
    }
}

#[test]
fn asymptotic_examples() {
    let m4 = SeriesSpec::MBallAdjoint(4);
    let left = asymptotic_eval(&m4, c(-50.0), Sector::Left).unwrap();
    let exact = series_eval_auto(&m4, c(-50.0)).unwrap() / left.normalization;
    assert!(((left.approx - exact) / exact).norm() < 0.1, "{} vs {exact}", left.approx);
    for (z, s) in [(-50.0, Sector::Left), (20.0, Sector::Right)] {
        let a = asymptotic_eval(&m4, c(z), s).unwrap();
        let exact = series_eval_auto(&m4, c(z)).unwrap() / a.normalization;
        assert!((a.approx - exact).norm() <= a.error_bound);
    }
    let right = asymptotic_eval(&m4, c(20.0), Sector::Right).unwrap();
    assert!((right.approx.re - 4.0 / 400.0 * 20f64.exp()).abs() < 1e-6 * right.approx.re);
}

#[test]
fn asymptotic_bounds_hold_off_the_measurement_grid() {
    let cases = [
        (SeriesSpec::MBallAdjoint(1), Sector::Right, Complex64::from_polar(17.0, 0.4)),
        (SeriesSpec::MBallAdjoint(3), Sector::Left, Complex64::from_polar(23.0, 2.9)),
        (SeriesSpec::MBallAdjoint(6), Sector::Imaginary, Complex64::from_polar(33.0, 1.5)),
        (SeriesSpec::WBallCyl(WeylIndex::Finite(5)), Sector::Right, Complex64::from_polar(31.0, 0.2)),
        (SeriesSpec::WBallCyl(WeylIndex::Finite(3)), Sector::Left, Complex64::from_polar(12.5, 3.0)),
        (SeriesSpec::WBallCyl(WeylIndex::Finite(6)), Sector::Imaginary, Complex64::from_polar(18.0, -1.2)),
        (SeriesSpec::MittagLeffler, Sector::Right, Complex64::from_polar(26.0, -0.7)),
        (SeriesSpec::MittagLeffler, Sector::Left, Complex64::from_polar(35.0, 2.6)),
    ];
    for (spec, sector, z) in cases {
        let a = asymptotic_eval(&spec, z, sector).unwrap();
        let exact = series_eval_auto(&spec, z).unwrap() / a.normalization;
        assert!((a.approx - exact).norm() <= a.error_bound, "{spec} {sector:?} {z}");
    }
}

#[test]
fn cylinder_m_series_has_no_right_half_plane_roots() {
    let degrees: Vec<u32> = (1..=12).map(|k| 5 * k).collect();
    let r = truncation_root_trend(
        &SeriesSpec::MBallAdjoint(1),
        &degrees,
        TrendMode::RightHalfPlane,
        &TrendOptions::default(),
    )
    .unwrap();
    assert!(r.rows.iter().all(|row| row.count_off_axis == 0 && row.max_violation < 0.0));
}

#[test]
fn bessel_family_truncations_are_real_rooted() {
    let r = truncation_root_trend(
        &SeriesSpec::WBall(WeylIndex::Finite(2)),
        &[10, 31, 60, 100],
        TrendMode::OffAxis,
        &TrendOptions::default(),
    )
    .unwrap();
    assert!(r.rows.iter().all(|row| row.count_off_axis == 0));
}

#[test]
fn kakeya_polya_for_the_cylinder_weight() {
    // φ(ξ) = ξ is the q = 2 weight
    let w: Vec<f64> = (0..=200).map(|i| i as f64 / 200.0).collect();
    let grid: Vec<Complex64> =
        (0..=40).flat_map(|x| (-100..=100).map(move |y| Complex64::new(x as f64 / 2.0, y as f64 / 2.0))).collect();
    let r = kakeya_polya_check(&w, &grid).unwrap();
    assert!(r.all_nonzero);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn index_multiplier_is_exact(p in 1u32..40) {
        let inf = taylor_coefficients(&SeriesSpec::WBall(WeylIndex::Infinite), 21).unwrap();
        let fin = taylor_coefficients(&SeriesSpec::WBall(WeylIndex::Finite(p)), 21).unwrap();
        prop_assert_eq!(laguerre_multiplier_map(&inf, p).unwrap(), fin);
    }

    #[test]
    fn closed_form_matches_series_anywhere_on_disc(r in 0.0f64..5.0, phi in 0.0f64..6.3, which in 0usize..14) {
        let spec = &closed_families()[which];
        let t = Complex64::from_polar(r, phi);
        let a = closed_form_eval(spec, t).unwrap();
        let b = series_eval(spec, t, sixty(spec)).unwrap();
        prop_assert!(close(a, b, 1e-10), "{} at {}: {} vs {}", spec, t, a, b);
    }

    #[test]
    fn coefficients_are_real_multiples_of_pi_powers(k in 0usize..30) {
        let c = taylor_coefficients(&SeriesSpec::MBallAdjoint(3), k + 1).unwrap();
        prop_assert!(c[k].as_monomial().is_some());
        prop_assert!(c[k] != PiHalfValue::zero());
    }
}
