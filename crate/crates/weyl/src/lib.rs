//! Weyl-side transforms of Minkowski polynomials.
//!
//! For a convex body `V ⊂ R^{n+1}` with boundary `𝓜`, the odd part of `M_V`
//! carries the Weyl coefficients `k_{2l} = (2l+1)!! m_{2l+1}` of `𝓜`, and the
//! tube of radius `t` in codimension `p` has volume `ω_p t^p W^p_𝓜(t)` with
//!
//! ```text
//! W^p(t) = Σ k_{2l} t^{2l} / ((p+2)(p+4)…(p+2l)),     W^∞(t) = Σ k_{2l} t^{2l}.
//! ```

use std::fmt;
use std::str::FromStr;

use bodies::{adjoint_lift, minkowski_polynomial, BodyError, BodySpec};
use exact_scalar::{double_factorial, index_factor, unit_ball_volume, IBig, PiHalfValue, RBig, UBig};
use poly_core::{even_odd_parts, ExactPoly};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WeylError {
    #[error(transparent)]
    Body(#[from] BodyError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("identity failed: {0}")]
    Consistency(String),
}

/// Codimension index `p ≥ 1` or the limiting index `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WeylIndex {
    Finite(u32),
    Infinite,
}

impl FromStr for WeylIndex {
    type Err = WeylError;
    fn from_str(s: &str) -> Result<Self, WeylError> {
        match s.trim() {
            "inf" | "infinity" | "∞" => Ok(WeylIndex::Infinite),
            x => match x.parse::<u32>() {
                Ok(p) if p >= 1 => Ok(WeylIndex::Finite(p)),
                _ => Err(WeylError::Domain(format!("index must be a positive integer or inf, got `{x}`"))),
            },
        }
    }
}

impl fmt::Display for WeylIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeylIndex::Finite(p) => write!(f, "{p}"),
            WeylIndex::Infinite => write!(f, "inf"),
        }
    }
}

/// `k_0, k_2, …, k_{2⌊n/2⌋}` of an `n`-dimensional surface.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeylCoefficients {
    pub surface_dim: u32,
    pub k: Vec<PiHalfValue>,
}

impl WeylCoefficients {
    /// `k_{2l}`, zero beyond the stored range.
    pub fn get(&self, l: usize) -> PiHalfValue {
        self.k.get(l).cloned().unwrap_or_default()
    }
}

/// `W¹ = ᴼM(t)/t`.
pub fn weyl1_from_minkowski(m: &ExactPoly) -> ExactPoly {
    let (_, odd) = even_odd_parts(m);
    odd.shift_down(1).expect("odd part has no constant term")
}

/// `k_{2l} = 2^l Γ(l+3/2)/Γ(3/2) m_{2l+1} = (2l+1)!! m_{2l+1}`.
pub fn weyl_coefficients(m: &ExactPoly, n: u32) -> Result<WeylCoefficients, WeylError> {
    if m.degree() != Some(n as usize + 1) {
        return Err(WeylError::Domain(format!(
            "Minkowski polynomial of degree {:?} does not bound an {n}-dimensional surface",
            m.degree()
        )));
    }
    let k = (0..=n / 2)
        .map(|l| {
            let f = RBig::from(double_factorial(2 * l as i64 + 1));
            m.coeff(2 * l as usize + 1).scale(&f)
        })
        .collect();
    Ok(WeylCoefficients { surface_dim: n, k })
}

/// Weight of `k_{2l}` in `W^p`.
pub fn index_weight(p: WeylIndex, l: u32) -> RBig {
    match p {
        WeylIndex::Finite(p) => index_factor(p, l),
        WeylIndex::Infinite => RBig::ONE,
    }
}

pub fn weyl_index_p(kc: &WeylCoefficients, p: WeylIndex) -> ExactPoly {
    let mut c = Vec::with_capacity(2 * kc.k.len());
    for (l, k) in kc.k.iter().enumerate() {
        if l > 0 {
            c.push(PiHalfValue::zero());
        }
        c.push(k.scale(&index_weight(p, l as u32)));
    }
    ExactPoly::new(c)
}

/// `W⁺(t) = (M(t) − M(0))/t`, the exterior half-tube polynomial.
pub fn halftube_polynomial(m: &ExactPoly) -> ExactPoly {
    let mut c = m.coeffs().to_vec();
    if c.is_empty() {
        return ExactPoly::zero();
    }
    c.remove(0);
    ExactPoly::new(c)
}

/// Weyl coefficients of `∂V` for an exact body `V`, including squeezed ones.
pub fn surface_weyl_coefficients(spec: &BodySpec) -> Result<WeylCoefficients, WeylError> {
    let m = minkowski_polynomial(spec)?;
    let d = spec.ambient_dim();
    weyl_coefficients(&m, d - 1)
}

pub fn surface_weyl_polynomial(spec: &BodySpec, p: WeylIndex) -> Result<ExactPoly, WeylError> {
    Ok(weyl_index_p(&surface_weyl_coefficients(spec)?, p))
}

/// Outcome of checking the index-shift identity for `∂(V×0^q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReductionReport {
    pub p: u32,
    pub q: u32,
    /// Index on the reduced side.
    pub reduced_p: u32,
    /// 0 (bare `∂V`) for even `q`, 1 (`∂(V×0)`) for odd `q`.
    pub reduced_q: u32,
    /// `ω_p t^p W^p_{∂(V×0^q)}`.
    pub lhs: ExactPoly,
    /// `ω_{p'} t^{p'} W^{p'}` of the reduced surface.
    pub rhs: ExactPoly,
    pub holds: bool,
}

fn tube_polynomial(m: &ExactPoly, p: u32) -> Result<ExactPoly, WeylError> {
    let n = m.degree().ok_or_else(|| WeylError::Domain("zero polynomial".into()))? as u32;
    let kc = weyl_coefficients(m, n - 1)?;
    Ok(weyl_index_p(&kc, WeylIndex::Finite(p))
        .scale(&unit_ball_volume(p))
        .shift_up(p as usize))
}

/// Checks, for even `q`,
/// `ω_p t^p W^p_{∂(V×0^q)} = ω_{p+q} t^{p+q} W^{p+q}_{∂V}`,
/// and for odd `q` the same with `p+q−1` and `∂(V×0)` on the right.
pub fn adjoint_weyl_reduction(base: &BodySpec, p: u32, q: u32) -> Result<ReductionReport, WeylError> {
    if p == 0 || q == 0 {
        return Err(WeylError::Domain("p and q must be positive".into()));
    }
    let m = minkowski_polynomial(base)?;
    let lhs = tube_polynomial(&adjoint_lift(&m, q), p)?;
    let (reduced_p, reduced_q) = if q % 2 == 0 { (p + q, 0) } else { (p + q - 1, 1) };
    let reduced_m = if reduced_q == 0 { m } else { adjoint_lift(&m, 1) };
    let rhs = tube_polynomial(&reduced_m, reduced_p)?;
    let holds = lhs == rhs;
    let report = ReductionReport { p, q, reduced_p, reduced_q, lhs, rhs, holds };
    if !holds {
        return Err(WeylError::Consistency(format!(
            "index shift for {base}, p = {p}, q = {q}: {} != {}",
            report.lhs, report.rhs
        )));
    }
    Ok(report)
}

/// Ratios `[t^{2l}] W^p(√p t) / k_{2l} = p^l / ((p+2)…(p+2l))`, one per `p`.
pub fn scaling_limit_report(
    kc: &WeylCoefficients,
    p_list: &[u32],
    l: u32,
) -> Result<Vec<RBig>, WeylError> {
    if l > kc.surface_dim / 2 {
        return Err(WeylError::Domain(format!(
            "l = {l} exceeds {} for surface dimension {}",
            kc.surface_dim / 2,
            kc.surface_dim
        )));
    }
    p_list
        .iter()
        .map(|&p| {
            if p == 0 {
                return Err(WeylError::Domain("p must be positive".into()));
            }
            let pl = RBig::from(UBig::from(p).pow(l as usize));
            Ok(pl * index_factor(p, l))
        })
        .collect()
}

/// `k_{2m}(S^{2m})` against `(2π)^m χ(S^{2m}) = 2 (2π)^m`.
pub fn sphere_euler_check(m: u32) -> Result<(PiHalfValue, PiHalfValue), WeylError> {
    let kc = surface_weyl_coefficients(&BodySpec::Ball(2 * m + 1))?;
    let got = kc.get(m as usize);
    let want = PiHalfValue::monomial(RBig::from(IBig::from(2u8) << m as usize), 2 * m);
    Ok((got, want))
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_scalar::rat;

    fn ball3() -> ExactPoly {
        minkowski_polynomial(&BodySpec::Ball(3)).unwrap()
    }

    #[test]
    fn sphere_two() {
        let w3 = unit_ball_volume(3);
        assert_eq!(weyl1_from_minkowski(&ball3()), ExactPoly::new(vec![w3.scale(&rat(3, 1)), PiHalfValue::zero(), w3.clone()]));
        let kc = weyl_coefficients(&ball3(), 2).unwrap();
        let four_pi = PiHalfValue::monomial(4.into(), 2);
        assert_eq!(kc.k, vec![four_pi.clone(), four_pi.clone()]);
        let w1 = weyl_index_p(&kc, WeylIndex::Finite(1));
        assert_eq!(w1, ExactPoly::new(vec![four_pi.clone(), 0.into(), four_pi.scale(&rat(1, 3))]));
        let winf = weyl_index_p(&kc, WeylIndex::Infinite);
        assert_eq!(winf, ExactPoly::new(vec![four_pi.clone(), 0.into(), four_pi]));
    }

    #[test]
    fn flat_cases() {
        let sq = ExactPoly::new(vec![4.into(), 8.into(), PiHalfValue::pi()]);
        assert_eq!(weyl1_from_minkowski(&sq), ExactPoly::from_ints(&[8]));
        assert!(weyl1_from_minkowski(&ExactPoly::from_ints(&[1, 0, 5])).is_zero());
        let seg = surface_weyl_coefficients(&BodySpec::adjoint(BodySpec::Ball(1), 1)).unwrap();
        assert_eq!(seg.k[0], PiHalfValue::from_int(4));
    }

    #[test]
    fn decoded_factor() {
        let kc = WeylCoefficients { surface_dim: 2, k: vec![1.into(), 1.into()] };
        assert_eq!(weyl_index_p(&kc, WeylIndex::Finite(2)).coeff(2), PiHalfValue::ratio(1, 4));
    }

    #[test]
    fn half_tube() {
        let w3 = unit_ball_volume(3);
        assert_eq!(halftube_polynomial(&ball3()), ExactPoly::from_ints(&[3, 3, 1]).scale(&w3));
        assert!(halftube_polynomial(&ExactPoly::from_ints(&[5])).is_zero());
    }

    #[test]
    fn scaling_ratios() {
        let kc = surface_weyl_coefficients(&BodySpec::Ball(5)).unwrap();
        assert_eq!(scaling_limit_report(&kc, &[2, 98], 0).unwrap(), vec![RBig::ONE, RBig::ONE]);
        assert_eq!(scaling_limit_report(&kc, &[2, 98], 1).unwrap(), vec![rat(1, 2), rat(49, 50)]);
        assert!(scaling_limit_report(&kc, &[2], 3).is_err());
    }

    #[test]
    fn index_parsing() {
        assert_eq!("inf".parse::<WeylIndex>().unwrap(), WeylIndex::Infinite);
        assert_eq!("4".parse::<WeylIndex>().unwrap(), WeylIndex::Finite(4));
        assert!("0".parse::<WeylIndex>().is_err());
    }

    #[test]
    fn reduction_examples() {
        let r = adjoint_weyl_reduction(&BodySpec::Ball(3), 1, 2).unwrap();
        assert_eq!((r.reduced_p, r.reduced_q), (3, 0));
        let r = adjoint_weyl_reduction(&BodySpec::Cube(2), 2, 3).unwrap();
        assert_eq!((r.reduced_p, r.reduced_q), (4, 1));
        let r = adjoint_weyl_reduction(&BodySpec::Ball(2), 3, 1).unwrap();
        assert_eq!(r.reduced_p, 3);
    }
}
