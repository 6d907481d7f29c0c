//! Root-location tables for the two Fox-Wright families parameterized by
//! `λ ∈ [0, 2]`. Nothing here decides the conjectures; the tables report
//! what the truncations do.

use std::str::FromStr;

use exact_scalar::{IBig, PiHalfValue, RBig, UBig};
use poly_core::jensen_polynomial;
use rayon::prelude::*;
use rootloc::numeric_roots_detailed;
use serde::Serialize;
use statrs::function::gamma::ln_gamma;

use crate::trend::{TrendOptions, MAX_DEGREE};
use crate::EntireError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Conjecture {
    /// `₁Ψ₁{(1/2,1); (1/2,1+λ)}` has all roots in the open left half-plane.
    HalfPlane,
    /// `₁Ψ₂{(1,1); (1,1/2), (1,1+λ)}` has only negative simple roots.
    NegativeReal,
}

impl FromStr for Conjecture {
    type Err = EntireError;
    fn from_str(s: &str) -> Result<Self, EntireError> {
        match s {
            "1" | "half-plane" => Ok(Conjecture::HalfPlane),
            "2" | "negative-real" => Ok(Conjecture::NegativeReal),
            _ => Err(EntireError::Domain(format!("unknown conjecture `{s}`"))),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjectureRow {
    pub lambda: f64,
    pub degree: u32,
    pub violations: usize,
    /// Largest `Re z` (half-plane) or `max(Re z, |Im z|)` (negative-real).
    pub max_violation: f64,
}

/// `e^{ln}` as an exact dyadic rational, free of underflow.
fn rational_from_ln(ln: f64) -> RBig {
    let e = (ln / std::f64::consts::LN_2).floor();
    let m = (ln - e * std::f64::consts::LN_2).exp();
    let mant = (m * (1u64 << 52) as f64).round() as u64;
    let shift = e as i64 - 52;
    if shift >= 0 {
        RBig::from(IBig::from(mant) << shift as usize)
    } else {
        RBig::from_parts(IBig::from(mant), UBig::ONE << (-shift) as usize)
    }
}

fn log_coefficient(which: Conjecture, lambda: f64, k: u32) -> f64 {
    let k = k as f64;
    match which {
        Conjecture::HalfPlane => ln_gamma(k / 2.0 + 1.0) - ln_gamma(k / 2.0 + 1.0 + lambda) - ln_gamma(k + 1.0),
        Conjecture::NegativeReal => -ln_gamma(k + 0.5) - ln_gamma(k + 1.0 + lambda),
    }
}

fn row(which: Conjecture, lambda: f64, n: u32, opts: &TrendOptions) -> Result<ConjectureRow, EntireError> {
    let coeffs: Vec<PiHalfValue> =
        (0..=n).map(|k| PiHalfValue::from_rational(rational_from_ln(log_coefficient(which, lambda, k)))).collect();
    let j = jensen_polynomial(&coeffs, n).map_err(|e| EntireError::Domain(e.to_string()))?;
    let roots = numeric_roots_detailed(&j, opts.precision_bits.max(128 + 2 * n as usize))?;
    let mut violations = 0;
    let mut worst = f64::NEG_INFINITY;
    for &(z, m) in &roots.distinct {
        let slack = opts.tol * (z.norm() + 1.0);
        let (bad, measure) = match which {
            Conjecture::HalfPlane => (z.re >= -slack, z.re),
            Conjecture::NegativeReal => (z.re >= -slack || z.im.abs() > slack || m > 1, z.re.max(z.im.abs())),
        };
        violations += m * bad as usize;
        worst = worst.max(measure);
    }
    Ok(ConjectureRow { lambda, degree: n, violations, max_violation: worst })
}

/// One row per `(λ, n)`, from the Jensen polynomial `𝒥_n` of the series
/// with coefficients computed through `ln Γ`.
pub fn conjecture_scan(
    which: Conjecture,
    lambdas: &[f64],
    degrees: &[u32],
    opts: &TrendOptions,
) -> Result<Vec<ConjectureRow>, EntireError> {
    if let Some(l) = lambdas.iter().find(|l| !(0.0..=2.0).contains(*l)) {
        return Err(EntireError::Precondition(format!("lambda must lie in [0, 2], got {l}")));
    }
    if let Some(&n) = degrees.iter().find(|&&n| n == 0 || n > MAX_DEGREE) {
        return Err(EntireError::Precondition(format!("degrees must lie in 1..={MAX_DEGREE}, got {n}")));
    }
    let grid: Vec<(f64, u32)> = lambdas.iter().flat_map(|&l| degrees.iter().map(move |&n| (l, n))).collect();
    grid.par_iter().map(|&(l, n)| row(which, l, n, opts)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_conversion() {
        assert_eq!(rational_from_ln(0.0), RBig::ONE);
        assert_eq!(rational_from_ln(8f64.ln()), RBig::from(8));
        let tiny = rational_from_ln(-2000.0);
        assert!(tiny > RBig::ZERO);
    }

    #[test]
    fn lambda_zero_is_exponential() {
        // λ = 0 gives e^t: the Jensen polynomials are (1 + t/n)^n
        let rows = conjecture_scan(Conjecture::HalfPlane, &[0.0], &[6], &TrendOptions::default()).unwrap();
        assert_eq!(rows[0].violations, 0);
        // a sextuple root, which coefficient rounding splits by about 6ε^{1/6}
        assert!((rows[0].max_violation + 6.0).abs() < 0.1);
        assert!(conjecture_scan(Conjecture::HalfPlane, &[2.5], &[6], &TrendOptions::default()).is_err());
    }
}
