use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use exact_scalar::{BigFloat, FloatEval, PiHalfValue, RBig};
use serde::{Deserialize, Serialize};

/// Dense univariate polynomial with [`PiHalfValue`] coefficients, stored in
/// ascending degree with trailing zeros trimmed.
#[derive(Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "RawPoly", into = "RawPoly")]
pub struct ExactPoly {
    coeffs: Vec<PiHalfValue>,
}

#[derive(Serialize, Deserialize)]
struct RawPoly {
    coeffs: Vec<PiHalfValue>,
}

impl From<RawPoly> for ExactPoly {
    fn from(r: RawPoly) -> Self {
        ExactPoly::new(r.coeffs)
    }
}

impl From<ExactPoly> for RawPoly {
    fn from(p: ExactPoly) -> Self {
        RawPoly { coeffs: p.coeffs }
    }
}

impl ExactPoly {
    pub fn new(mut coeffs: Vec<PiHalfValue>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(PiHalfValue::one())
    }

    pub fn constant(c: PiHalfValue) -> Self {
        Self::new(vec![c])
    }

    /// `c · t^k`.
    pub fn monomial(c: PiHalfValue, k: usize) -> Self {
        let mut v = vec![PiHalfValue::zero(); k];
        v.push(c);
        Self::new(v)
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| PiHalfValue::from_int(x)).collect())
    }

    pub fn from_rationals(c: &[RBig]) -> Self {
        Self::new(c.iter().cloned().map(PiHalfValue::from_rational).collect())
    }

    pub fn coeffs(&self) -> &[PiHalfValue] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<PiHalfValue> {
        self.coeffs
    }

    /// Coefficient of `t^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> PiHalfValue {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&PiHalfValue> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &PiHalfValue) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_rational(&self, q: &RBig) -> Self {
        Self::new(self.coeffs.iter().map(|x| x.scale(q)).collect())
    }

    /// Multiply by `t^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![PiHalfValue::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    /// Divide by `t^k`; `None` when one of the lowest `k` coefficients is nonzero.
    pub fn shift_down(&self, k: usize) -> Option<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(self.coeffs.iter().skip(k).cloned().collect()))
    }

    /// `P(λ t)` for rational `λ`.
    pub fn rescale_argument(&self, lambda: &RBig) -> Self {
        let mut pow = RBig::ONE;
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.scale(&pow));
            pow = &pow * lambda;
        }
        Self::new(out)
    }

    /// `P(-t)`.
    pub fn reflect(&self) -> Self {
        self.rescale_argument(&RBig::NEG_ONE)
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(|c| c.is_zero())
    }

    pub fn is_odd(&self) -> bool {
        self.coeffs.iter().step_by(2).all(|c| c.is_zero())
    }

    /// For an even `P(t) = Q(t²)`, returns `Q`.
    pub fn even_to_square_variable(&self) -> Option<Self> {
        if !self.is_even() {
            return None;
        }
        Some(Self::new(self.coeffs.iter().step_by(2).cloned().collect()))
    }

    /// `Q(t²)` from `Q`.
    pub fn square_variable(&self) -> Self {
        let mut v = Vec::with_capacity(2 * self.coeffs.len());
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                v.push(PiHalfValue::zero());
            }
            v.push(c.clone());
        }
        Self::new(v)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        let mut ev = FloatEval::new(128);
        self.coeffs.iter().map(|c| ev.eval_f64(c)).collect()
    }

    pub fn to_big_coeffs(&self, ev: &mut FloatEval) -> Vec<BigFloat> {
        self.coeffs.iter().map(|c| ev.eval(c)).collect()
    }

    /// Horner evaluation in double precision.
    pub fn eval_f64(&self, t: f64) -> f64 {
        horner(&self.to_f64_coeffs(), t)
    }

    /// Exact value at a rational point.
    pub fn eval_rational(&self, t: &RBig) -> PiHalfValue {
        let mut acc = PiHalfValue::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.scale(t);
            acc += c;
        }
        acc
    }
}

pub fn horner(c: &[f64], t: f64) -> f64 {
    c.iter().rev().fold(0.0, |acc, &a| acc * t + a)
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}] t")?,
                _ => write!(f, "[{c}] t^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPoly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut out = vec![PiHalfValue::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPoly::new(out)
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $f(self, rhs: ExactPoly) -> ExactPoly {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&ExactPoly> for ExactPoly {
            type Output = ExactPoly;
            fn $f(self, rhs: &ExactPoly) -> ExactPoly {
                (&self).$f(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = ExactPoly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(ExactPoly::from_ints(&[0, 0]).degree(), None);
    }

    #[test]
    fn binomial_cube() {
        let l = ExactPoly::from_ints(&[1, 1]);
        assert_eq!(&(&l * &l) * &l, ExactPoly::from_ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn json_shape() {
        let p = ExactPoly::new(vec![PiHalfValue::from_int(4), PiHalfValue::from_int(0), PiHalfValue::pi()]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"coeffs":[[[0,"4/1"]],[],[[2,"1/1"]]]}"#);
        let back: ExactPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn square_variable_round_trip() {
        let q = ExactPoly::from_ints(&[3, 0, 5, 7]);
        let p = q.square_variable();
        assert_eq!(p, ExactPoly::from_ints(&[3, 0, 0, 0, 5, 0, 7]));
        assert_eq!(p.even_to_square_variable(), Some(q));
    }

    #[test]
    fn exact_evaluation() {
        let p = ExactPoly::from_ints(&[1, 1, 1]);
        let v = p.eval_rational(&exact_scalar::rat(1, 2));
        assert_eq!(v, PiHalfValue::ratio(7, 4));
        assert!((p.eval_f64(2.0) - 7.0).abs() < 1e-15);
    }
}
