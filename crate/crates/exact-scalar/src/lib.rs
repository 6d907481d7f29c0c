//! Exact scalars of the form `Σ q_m π^{m/2}`.
//!
//! Every coefficient of a Minkowski or Weyl polynomial of a ball, cube or
//! squeezed cylinder is a rational multiple of a half-integer power of π, and
//! determinants built from them mix such powers. [`PiHalfValue`] keeps these
//! exact; [`sign_and_float`] decides signs rigorously.

mod gamma;
mod numeric;
mod value;

pub use gamma::{
    binomial, double_factorial, factorial, gamma_half, gamma_half_monomial, gamma_multiplier,
    gamma_ratio, index_factor, m_product_weight, unit_ball_volume, PiMonomial,
};
pub use numeric::{sign, sign_and_float, BigFloat, FloatEval};
pub use value::{fmt_rational, parse_rational, PiHalfValue, Rational};

pub use dashu_int::{IBig, UBig};
pub use dashu_ratio::RBig;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("parse error: {0}")]
    Parse(String),
}

/// Arithmetic operation selector for [`ring_arithmetic`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Applies `op` to `a` and `b` (`b` is ignored for negation).
pub fn ring_arithmetic(a: &PiHalfValue, b: &PiHalfValue, op: RingOp) -> PiHalfValue {
    match op {
        RingOp::Add => a + b,
        RingOp::Sub => a - b,
        RingOp::Mul => a * b,
        RingOp::Neg => -a,
    }
}

/// `num/den` as an exact rational.
pub fn rat(num: i64, den: i64) -> RBig {
    RBig::from_parts_signed(IBig::from(num), IBig::from(den))
}
