//! The entire functions whose Jensen polynomials are the renormalized
//! Minkowski and Weyl polynomials of balls, cubes and their cylinders.
//!
//! Functions are carried as exact Taylor prefixes, with closed forms,
//! integral representations and leading asymptotics as independent
//! numeric evaluators. The root scans over Jensen truncations are
//! evidence, never proof.

mod asymptotic;
mod closed;
mod conjecture;
mod integral;
mod kakeya;
mod series;
mod spec;
mod trend;

use thiserror::Error;

pub use asymptotic::{asymptotic_eval, log_parabola, measure_remainder_constant, AsymptoticValue, Sector};
pub use closed::closed_form_eval;
pub use conjecture::{conjecture_scan, Conjecture, ConjectureRow};
pub use integral::integral_rep_eval;
pub use kakeya::{kakeya_polya_check, KakeyaReport};
pub use series::{laguerre_multiplier_map, series_eval, series_eval_auto, taylor_coefficients};
pub use spec::{FoxWrightParams, SeriesSpec};
pub use trend::{truncation_root_trend, TrendMode, TrendOptions, TrendReport, TrendRow};

#[derive(Debug, Error)]
pub enum EntireError {
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error(transparent)]
    Roots(#[from] rootloc::RootError),
}
