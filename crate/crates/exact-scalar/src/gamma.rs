//! Γ at half-integers and the π-monomials built from it.

use std::ops::{Div, Mul};

use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;

use crate::{PiHalfValue, ScalarError};

/// `coeff · π^{exp/2}` with a possibly negative exponent.
///
/// Ratios of half-integer Γ values live here before they are folded back
/// into [`PiHalfValue`], which only admits non-negative exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PiMonomial {
    pub coeff: RBig,
    pub exp: i32,
}

impl PiMonomial {
    pub fn new(coeff: RBig, exp: i32) -> Self {
        Self { coeff, exp }
    }

    pub fn rational(coeff: RBig) -> Self {
        Self { coeff, exp: 0 }
    }

    /// `π^{k/2}`.
    pub fn pi_half_power(k: i32) -> Self {
        Self { coeff: RBig::ONE, exp: k }
    }

    pub fn recip(&self) -> Self {
        Self {
            coeff: RBig::ONE / &self.coeff,
            exp: -self.exp,
        }
    }

    pub fn to_value(&self) -> Result<PiHalfValue, ScalarError> {
        if self.exp < 0 {
            return Err(ScalarError::Domain(format!(
                "negative power pi^({}/2) is outside the coefficient ring",
                self.exp
            )));
        }
        Ok(PiHalfValue::monomial(self.coeff.clone(), self.exp as u32))
    }

    pub fn to_f64(&self) -> f64 {
        self.coeff.to_f64().value() * std::f64::consts::PI.powf(self.exp as f64 / 2.0)
    }
}

impl Mul for &PiMonomial {
    type Output = PiMonomial;
    fn mul(self, rhs: &PiMonomial) -> PiMonomial {
        PiMonomial {
            coeff: &self.coeff * &rhs.coeff,
            exp: self.exp + rhs.exp,
        }
    }
}

impl Div for &PiMonomial {
    type Output = PiMonomial;
    fn div(self, rhs: &PiMonomial) -> PiMonomial {
        PiMonomial {
            coeff: &self.coeff / &rhs.coeff,
            exp: self.exp - rhs.exp,
        }
    }
}

pub fn factorial(n: u32) -> UBig {
    (1..=n as u64).fold(UBig::ONE, |acc, k| acc * UBig::from(k))
}

/// `n!! = n (n-2) (n-4) ...`, with `0!! = (-1)!! = 1`.
pub fn double_factorial(n: i64) -> UBig {
    let mut acc = UBig::ONE;
    let mut k = n;
    while k > 1 {
        acc *= UBig::from(k as u64);
        k -= 2;
    }
    acc
}

pub fn binomial(n: u32, k: u32) -> UBig {
    if k > n {
        return UBig::ZERO;
    }
    let k = k.min(n - k);
    let mut acc = UBig::ONE;
    for i in 0..k {
        acc = acc * UBig::from((n - i) as u64) / UBig::from((i + 1) as u64);
    }
    acc
}

/// `Γ(two_x / 2)` as a π-monomial, `two_x ≥ 1`.
pub fn gamma_half_monomial(two_x: u32) -> Result<PiMonomial, ScalarError> {
    if two_x == 0 {
        return Err(ScalarError::Domain("gamma pole at 0".into()));
    }
    if two_x % 2 == 0 {
        Ok(PiMonomial::rational(RBig::from(factorial(two_x / 2 - 1))))
    } else {
        // Γ(k + 1/2) = (2k-1)!! / 2^k · √π
        let k = (two_x - 1) / 2;
        let num = double_factorial(2 * k as i64 - 1);
        let den = UBig::ONE << k as usize;
        Ok(PiMonomial::new(RBig::from_parts(IBig::from(num), den), 1))
    }
}

/// Exact `Γ(two_x / 2)` for a positive `two_x`.
pub fn gamma_half(two_x: i64) -> Result<PiHalfValue, ScalarError> {
    if two_x <= 0 {
        return Err(ScalarError::Domain(format!(
            "gamma_half needs a positive argument, got {two_x}/2"
        )));
    }
    gamma_half_monomial(two_x as u32)?.to_value()
}

/// `Γ(two_a/2) / Γ(two_b/2)`.
pub fn gamma_ratio(two_a: u32, two_b: u32) -> Result<PiMonomial, ScalarError> {
    Ok(&gamma_half_monomial(two_a)? / &gamma_half_monomial(two_b)?)
}

/// `ω_p = π^{p/2} / Γ(p/2 + 1)`, the volume of the unit ball in `R^p`.
pub fn unit_ball_volume(p: u32) -> PiHalfValue {
    let g = gamma_half_monomial(p + 2).expect("p + 2 > 0");
    (&PiMonomial::pi_half_power(p as i32) / &g)
        .to_value()
        .expect("exponent p - (p mod 2) is non-negative")
}

/// `γ_k^{(q)} = π^{q/2} Γ(k/2+1) / Γ((k+q)/2+1)`, which equals `ω_{k+q}/ω_k`.
pub fn gamma_multiplier(k: u32, q: u32) -> PiHalfValue {
    let r = gamma_ratio(k + 2, k + q + 2).expect("arguments positive");
    (&PiMonomial::pi_half_power(q as i32) * &r)
        .to_value()
        .expect("parity makes the exponent non-negative")
}

/// `Γ(k/2+1) Γ(l/2+1) / Γ((k+l)/2+1)`, the monomial weight of the M-product.
pub fn m_product_weight(k: u32, l: u32) -> PiHalfValue {
    let a = gamma_half_monomial(k + 2).expect("positive");
    let b = gamma_half_monomial(l + 2).expect("positive");
    let c = gamma_half_monomial(k + l + 2).expect("positive");
    (&(&a * &b) / &c)
        .to_value()
        .expect("at most one square root survives in the numerator")
}

/// `2^{-l} Γ(p/2+1) / Γ(p/2+l+1) = 1 / ((p+2)(p+4)...(p+2l))`.
pub fn index_factor(p: u32, l: u32) -> RBig {
    let mut den = UBig::ONE;
    for i in 1..=l {
        den *= UBig::from((p + 2 * i) as u64);
    }
    RBig::from_parts(IBig::ONE, den)
}
