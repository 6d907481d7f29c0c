use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::{tube_volume_estimate, McError, SampleableBody};

#[derive(Clone, Debug, Serialize)]
pub struct PolyFit {
    /// Ascending coefficients.
    pub coeffs: Vec<f64>,
    /// One standard error per coefficient.
    pub stderr: Vec<f64>,
}

/// Weighted least-squares fit of `Σ c_j t^j`, `j ≤ degree`, with weights
/// `1/σ_i²`.
pub fn fit_polynomial(ts: &[f64], ys: &[f64], sigmas: &[f64], degree: usize) -> Result<PolyFit, McError> {
    let m = ts.len();
    if ys.len() != m || sigmas.len() != m {
        return Err(McError::Precondition("mismatched fit inputs".into()));
    }
    if m <= degree {
        return Err(McError::Precondition(format!("{m} points cannot fit degree {degree}")));
    }
    if !sigmas.iter().all(|s| *s > 0.0) {
        return Err(McError::Precondition("standard errors must be positive".into()));
    }
    let a = DMatrix::from_fn(m, degree + 1, |i, j| ts[i].powi(j as i32) / sigmas[i]);
    let b = DVector::from_fn(m, |i, _| ys[i] / sigmas[i]);
    let ata = a.transpose() * &a;
    let cov = ata
        .clone()
        .cholesky()
        .ok_or_else(|| McError::Precondition("singular design matrix".into()))?
        .inverse();
    let c = &cov * (a.transpose() * b);
    Ok(PolyFit {
        coeffs: c.iter().copied().collect(),
        stderr: (0..=degree).map(|j| cov[(j, j)].sqrt()).collect(),
    })
}

/// Independent estimates at each `t` (seeds `seed, seed + 1, …`), fitted by
/// [`fit_polynomial`].
pub fn fit_tube_polynomial(
    body: &SampleableBody,
    ts: &[f64],
    degree: usize,
    samples: u64,
    seed: u64,
) -> Result<PolyFit, McError> {
    let est: Vec<_> = ts
        .iter()
        .enumerate()
        .map(|(i, &t)| tube_volume_estimate(body, t, samples, seed.wrapping_add(i as u64)))
        .collect::<Result<_, _>>()?;
    let ys: Vec<f64> = est.iter().map(|e| e.estimate).collect();
    let ss: Vec<f64> = est.iter().map(|e| e.stderr).collect();
    fit_polynomial(ts, &ys, &ss, degree)
}
