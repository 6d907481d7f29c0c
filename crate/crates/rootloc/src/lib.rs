//! Root location for Minkowski and Weyl polynomials.
//!
//! Exact certificates (Routh–Hurwitz and conservativity determinants over
//! `ℚ[√π]`) are always paired with multiprecision numeric roots, and the two
//! verdicts must agree.

mod aberth;
mod classify;
mod determinants;
mod inequalities;
mod roots;
mod search;
mod squarefree;

use num_complex::Complex64;
use thiserror::Error;

pub use classify::{
    classify, classify_batch, hermite_biehler_check, Certificate, CertificateKind, ClassifyOptions,
    DeterminantSign, InterlacingReport, Label, Mode, Parity, RootClassification,
};
pub use determinants::{
    conservativity_companion, conservativity_determinants, descending, determinant, hurwitz_determinants,
    hurwitz_matrix, leading_minors,
};
pub use inequalities::{af_inequalities, low_dim_inequalities, AfReport, ChainCheck, LowDimCheck, LowDimReport};
pub use roots::{numeric_roots, numeric_roots_detailed, RootSet};
pub use search::{counterexample_search, default_families, Family, Witness};
pub use squarefree::{distinct_root_count, gcd_with_derivative_degree};

#[derive(Debug, Error)]
pub enum RootError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("root iteration did not converge ({} partial roots)", partial.len())]
    NoConvergence { partial: Vec<Complex64> },
    #[error("certificate and numeric roots disagree: {0}")]
    Consistency(String),
    #[error("{0}")]
    Domain(String),
}
