//! Monte Carlo estimates of tube volumes `Vol(V + tB)`, used as an oracle
//! independent of the polynomial machinery.

mod body;
mod compare;
mod estimate;
mod fit;

pub use body::{Part, SampleableBody, MAX_DIM};
pub use compare::{compare_oracle, limit_spec, CompareRow, CompareTable};
pub use estimate::{tube_volume_curve, tube_volume_estimate, Estimate, MIN_SAMPLES};
pub use fit::{fit_polynomial, fit_tube_polynomial, PolyFit};

#[derive(Debug, thiserror::Error)]
pub enum McError {
    #[error("unsupported body: {0}")]
    Unsupported(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("ellipsoid projection did not converge after {iterations} iterations")]
    NoConvergence { iterations: usize },
    #[error(transparent)]
    Body(#[from] bodies::BodyError),
}
