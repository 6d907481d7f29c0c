use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;
use weyl::WeylIndex;

use crate::integral::mittag_leffler_quadrature;
use crate::series::series_eval;
use crate::spec::SeriesSpec;
use crate::EntireError;

fn i() -> Complex64 {
    Complex64::new(0.0, 1.0)
}

/// `J₁(t) = (1/2π) ∫₀^{2π} cos(τ − t sin τ) dτ`; the trapezoid rule is
/// spectrally accurate on a periodic analytic integrand.
fn bessel_j1(t: Complex64) -> Complex64 {
    let m = 32 + 4 * t.norm().ceil() as usize;
    let h = 2.0 * PI / m as f64;
    let s: Complex64 = (0..m)
        .map(|j| {
            let tau = j as f64 * h;
            (tau - t * tau.sin()).cos()
        })
        .sum();
    s / m as f64
}

fn m2(t: Complex64) -> Complex64 {
    2.0 * ((t - 1.0) * t.exp() + 1.0) / (t * t)
}

fn m4(t: Complex64) -> Complex64 {
    let t2 = t * t;
    4.0 * ((2.0 * t2 - 6.0 * t + 6.0) * t.exp() + (t2 - 6.0)) / (t2 * t2)
}

/// Radius below which the closed expression loses digits to cancellation.
fn fallback_radius(spec: &SeriesSpec) -> f64 {
    match spec {
        SeriesSpec::MBallAdjoint(4) | SeriesSpec::WBallCyl(WeylIndex::Finite(4)) | SeriesSpec::WBallCylSine(4) => {
            0.25
        }
        SeriesSpec::MBallAdjoint(2) | SeriesSpec::WBallCyl(WeylIndex::Finite(2)) | SeriesSpec::WBallCylSine(2) => {
            0.05
        }
        _ => 1e-3,
    }
}

/// Evaluates a family with an elementary (or Bessel, or Mittag-Leffler)
/// closed form. Near the removable singularity at the origin the series
/// is used instead.
pub fn closed_form_eval(spec: &SeriesSpec, t: Complex64) -> Result<Complex64, EntireError> {
    let none = || EntireError::Unsupported(format!("{spec} has no closed form"));
    let closed: fn(Complex64) -> Complex64 = match spec {
        SeriesSpec::MBallAdjoint(0) => |t| t.exp(),
        SeriesSpec::MBallAdjoint(2) => m2,
        SeriesSpec::MBallAdjoint(4) => m4,
        SeriesSpec::WBall(WeylIndex::Finite(1)) => |t| t.sin() / t,
        SeriesSpec::WBall(WeylIndex::Finite(2)) => |t| 2.0 * bessel_j1(t) / t,
        SeriesSpec::WBall(WeylIndex::Infinite) => |t| (-t * t / 2.0).exp(),
        SeriesSpec::WBallCyl(WeylIndex::Finite(2)) => |t| 0.5 * (m2(i() * t) + m2(-i() * t)),
        SeriesSpec::WBallCyl(WeylIndex::Finite(4)) => |t| 0.5 * (m4(i() * t) + m4(-i() * t)),
        SeriesSpec::WBallCyl(WeylIndex::Infinite) => |t| mittag_leffler_quadrature(-t * t / 2.0),
        SeriesSpec::WBallCylSine(2) => |t| (m2(i() * t) - m2(-i() * t)) / (2.0 * i()),
        SeriesSpec::WBallCylSine(4) => |t| (m4(i() * t) - m4(-i() * t)) / (2.0 * i()),
        SeriesSpec::WCube(WeylIndex::Infinite) => |t| {
            let x = FRAC_PI_2.sqrt() * t;
            x.sin() / x
        },
        SeriesSpec::WCubeCyl(WeylIndex::Infinite) => |t| (FRAC_PI_2.sqrt() * t).cos(),
        SeriesSpec::MittagLeffler => mittag_leffler_quadrature,
        _ => return Err(none()),
    };
    if t.norm() < fallback_radius(spec) {
        return series_eval(spec, t, 40);
    }
    Ok(closed(t))
}
