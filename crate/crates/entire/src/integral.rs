use std::f64::consts::FRAC_PI_2;
use std::sync::OnceLock;

use exact_scalar::gamma_half_monomial;
use gauss_quad::GaussLegendre;
use num_complex::Complex64;
use weyl::WeylIndex;

use crate::spec::SeriesSpec;
use crate::EntireError;

fn rule(points: usize) -> Result<GaussLegendre, EntireError> {
    GaussLegendre::new(points).map_err(|e| EntireError::Precondition(e.to_string()))
}

/// `∫_a^b f` for complex-valued `f` with a prebuilt rule on `[−1, 1]`.
fn integrate_c(rule: &GaussLegendre, a: f64, b: f64, f: impl Fn(f64) -> Complex64) -> Complex64 {
    let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
    rule.as_node_weight_pairs().iter().map(|&(x, w)| w * f(mid + half * x)).sum::<Complex64>() * half
}

/// `√π ℰ_{1,1/2}(z) = 1 + z ∫₀¹ (1−ξ)^{−1/2} e^{zξ} dξ`, with `ξ = 1 − u²`.
pub(crate) fn mittag_leffler_quadrature(z: Complex64) -> Complex64 {
    static RULE: OnceLock<GaussLegendre> = OnceLock::new();
    let r = RULE.get_or_init(|| GaussLegendre::new(256).expect("valid degree"));
    1.0 + 2.0 * z * integrate_c(r, 0.0, 1.0, |u| (z * (1.0 - u * u)).exp())
}

/// `Γ(two_x / 2)` in floating point.
fn gamma_f64(two_x: u32) -> f64 {
    gamma_half_monomial(two_x).expect("positive").to_f64()
}

/// Evaluates a family through its integral representation. Weights
/// `(1 − ξ²)^{s}` are handled by `ξ = sin θ`, which removes the endpoint
/// singularity for every index `≥ 1`; the Mittag-Leffler weight
/// `(1 − ξ)^{−1/2}` by `ξ = 1 − u²`.
pub fn integral_rep_eval(spec: &SeriesSpec, t: f64, quadrature_points: usize) -> Result<f64, EntireError> {
    let g = rule(quadrature_points)?;
    let theta = |f: &dyn Fn(f64, f64) -> f64| g.integrate(0.0, FRAC_PI_2, |th: f64| f(th.sin(), th.cos()));
    Ok(match spec {
        // q ∫₀¹ (1−ξ²)^{q/2−1} ξ e^{ξt} dξ
        SeriesSpec::MBallAdjoint(q) if *q >= 1 => {
            let q = *q;
            q as f64 * theta(&|s, c| c.powi(q as i32 - 1) * s * (t * s).exp())
        }
        // p ∫₀¹ (1−ξ²)^{p/2−1} ξ cos(tξ) dξ
        SeriesSpec::WBallCyl(WeylIndex::Finite(p)) => {
            let p = *p;
            p as f64 * theta(&|s, c| c.powi(p as i32 - 1) * s * (t * s).cos())
        }
        // p ∫₀¹ (1−ξ²)^{p/2−1} ξ sin(tξ) dξ
        SeriesSpec::WBallCylSine(p) => {
            let p = *p;
            p as f64 * theta(&|s, c| c.powi(p as i32 - 1) * s * (t * s).sin())
        }
        // Γ(ν+1)(t/2)^{−ν} J_ν(t) with ν = p/2, by the Poisson integral
        SeriesSpec::WBall(WeylIndex::Finite(p)) => {
            let p = *p;
            let k = 2.0 * gamma_f64(p + 2) / (gamma_f64(p + 1) * gamma_f64(1));
            k * theta(&|s, c| c.powi(p as i32) * (t * s).cos())
        }
        SeriesSpec::WBallCyl(WeylIndex::Infinite) => {
            let z = Complex64::new(-t * t / 2.0, 0.0);
            1.0 + 2.0 * z.re * g.integrate(0.0, 1.0, |u| (z.re * (1.0 - u * u)).exp())
        }
        SeriesSpec::MittagLeffler => 1.0 + 2.0 * t * g.integrate(0.0, 1.0, |u| (t * (1.0 - u * u)).exp()),
        _ => return Err(EntireError::Unsupported(format!("{spec} has no integral representation here"))),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values_at_zero() {
        assert!((integral_rep_eval(&SeriesSpec::MBallAdjoint(2), 0.0, 32).unwrap() - 1.0).abs() < 1e-14);
        assert!((integral_rep_eval(&SeriesSpec::MittagLeffler, 0.0, 32).unwrap() - 1.0).abs() < 1e-14);
        assert!((integral_rep_eval(&SeriesSpec::WBall(WeylIndex::Finite(3)), 0.0, 32).unwrap() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn sine_of_ball() {
        // p = 1 on the sphere: sin t / t
        let v = integral_rep_eval(&SeriesSpec::WBall(WeylIndex::Finite(1)), 2.0, 64).unwrap();
        assert!((v - 2f64.sin() / 2.0).abs() < 1e-14);
    }
}
