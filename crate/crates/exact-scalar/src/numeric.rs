//! Floating evaluation: rigorous sign decisions and working-precision values.

use dashu_base::SquareRoot;
use dashu_float::round::mode::{Down, HalfEven, Up};
use dashu_float::round::Round;
use dashu_float::{Context, FBig};

use crate::PiHalfValue;

/// Binary float used for all high-precision numerics.
pub type BigFloat = FBig<HalfEven, 2>;

const MAX_SIGN_PRECISION: usize = 1 << 22;

fn sqrt_pi_bound<R: Round>(prec: usize) -> FBig<R, 2> {
    let ctx = Context::<R>::new(prec);
    ctx.pi::<2>().value().sqrt()
}

fn rounded<R: Round>(x: FBig<R, 2>, prec: usize) -> FBig<R, 2> {
    x.with_precision(prec).value()
}

/// Lower and upper bounds of `x` at working precision `prec`.
fn enclose(x: &PiHalfValue, prec: usize) -> (FBig<Down, 2>, FBig<Up, 2>) {
    let s_lo = sqrt_pi_bound::<Down>(prec);
    let s_hi = sqrt_pi_bound::<Up>(prec);
    let mut lo = rounded(FBig::<Down, 2>::ZERO, prec);
    let mut hi = rounded(FBig::<Up, 2>::ZERO, prec);
    for (m, q) in x.terms() {
        let p_lo = s_lo.powi(m.into());
        let p_hi = s_hi.powi(m.into());
        let q_lo: FBig<Down, 2> = q.to_float(prec).value();
        let q_hi: FBig<Up, 2> = q.to_float(prec).value();
        if q_lo.sign() == dashu_base::Sign::Positive {
            lo += &q_lo * &p_lo;
            hi += &q_hi * &p_hi;
        } else {
            lo += &q_lo * &p_hi.clone().with_rounding::<Down>();
            hi += &q_hi * &p_lo.clone().with_rounding::<Up>();
        }
    }
    (lo, hi)
}

/// Exact sign of `x` together with an approximate value.
///
/// Zero is decided structurally (empty term map). Otherwise the value is
/// enclosed in an interval whose precision doubles until zero is excluded;
/// this terminates because a non-empty map never represents zero.
pub fn sign_and_float(x: &PiHalfValue, precision_bits: usize) -> (i8, f64) {
    if x.is_zero() {
        return (0, 0.0);
    }
    let mut prec = precision_bits.max(64);
    loop {
        let (lo, hi) = enclose(x, prec);
        let lo_pos = lo.sign() == dashu_base::Sign::Positive && !lo.repr().is_zero();
        let hi_neg = hi.sign() == dashu_base::Sign::Negative && !hi.repr().is_zero();
        if lo_pos || hi_neg {
            let mid = (lo.with_rounding::<HalfEven>() + hi.with_rounding::<HalfEven>()) / BigFloat::from(2);
            let approx = mid.to_f64().value();
            return (if lo_pos { 1 } else { -1 }, approx);
        }
        if prec >= MAX_SIGN_PRECISION {
            panic!("sign of a nonzero value not resolved at {prec} bits");
        }
        prec *= 2;
    }
}

/// Sign only; see [`sign_and_float`].
pub fn sign(x: &PiHalfValue) -> i8 {
    if let Some(s) = x.trivial_sign() {
        return match s {
            dashu_base::Sign::Positive => 1,
            dashu_base::Sign::Negative => -1,
        };
    }
    sign_and_float(x, 64).0
}

/// Evaluates scalars to [`BigFloat`] at a fixed precision, caching the
/// powers of `√π`.
pub struct FloatEval {
    prec: usize,
    sqrt_pi: BigFloat,
    powers: Vec<BigFloat>,
}

impl FloatEval {
    pub fn new(precision_bits: usize) -> Self {
        let prec = precision_bits.max(53);
        let guard = prec + 32;
        let sqrt_pi = sqrt_pi_bound::<HalfEven>(guard);
        Self {
            prec,
            sqrt_pi: sqrt_pi.clone(),
            powers: vec![rounded(BigFloat::ONE, guard)],
        }
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    fn power(&mut self, m: usize) -> &BigFloat {
        while self.powers.len() <= m {
            let next = self.powers.last().expect("seeded") * &self.sqrt_pi;
            self.powers.push(next);
        }
        &self.powers[m]
    }

    pub fn eval(&mut self, x: &PiHalfValue) -> BigFloat {
        let guard = self.prec + 32;
        let mut acc = rounded(BigFloat::ZERO, guard);
        for (m, q) in x.terms() {
            let qf: BigFloat = q.to_float(guard).value();
            acc += qf * self.power(m as usize);
        }
        rounded(acc, self.prec)
    }

    pub fn eval_f64(&mut self, x: &PiHalfValue) -> f64 {
        self.eval(x).to_f64().value()
    }
}

impl PiHalfValue {
    /// Nearest double (may overflow to infinity for huge values).
    pub fn to_f64(&self) -> f64 {
        FloatEval::new(128).eval_f64(self)
    }
}
