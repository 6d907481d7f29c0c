//! Convex bodies described symbolically, and their exact Minkowski polynomials
//! `M_V(t) = Vol(V + tB)`.

mod spec;

pub use spec::BodySpec;

use exact_scalar::{binomial, gamma_multiplier, sign, unit_ball_volume, PiHalfValue, RBig};
use poly_core::{m_product, ExactPoly};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BodyError {
    #[error("invalid body: {0}")]
    InvalidSpec(String),
    #[error("no exact Minkowski polynomial for {0}")]
    UnsupportedExact(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

/// Cross-sectional measures `v_0..v_n`, all strictly positive.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawMeasures", into = "RawMeasures")]
pub struct CrossMeasures {
    v: Vec<PiHalfValue>,
}

#[derive(Serialize, Deserialize)]
struct RawMeasures {
    n: u32,
    v: Vec<PiHalfValue>,
}

impl TryFrom<RawMeasures> for CrossMeasures {
    type Error = BodyError;
    fn try_from(r: RawMeasures) -> Result<Self, BodyError> {
        if r.v.len() != r.n as usize + 1 {
            return Err(BodyError::InvalidSpec(format!(
                "expected {} measures for n = {}, got {}",
                r.n + 1,
                r.n,
                r.v.len()
            )));
        }
        CrossMeasures::new(r.v)
    }
}

impl From<CrossMeasures> for RawMeasures {
    fn from(m: CrossMeasures) -> Self {
        RawMeasures { n: m.n(), v: m.v }
    }
}

impl CrossMeasures {
    pub fn new(v: Vec<PiHalfValue>) -> Result<Self, BodyError> {
        if v.len() < 2 {
            return Err(BodyError::InvalidSpec("need at least v_0 and v_1".into()));
        }
        if let Some(k) = v.iter().position(|x| sign(x) <= 0) {
            return Err(BodyError::InvariantViolation(format!("v_{k} is not positive")));
        }
        Ok(Self { v })
    }

    pub fn from_rationals(v: &[RBig]) -> Result<Self, BodyError> {
        Self::new(v.iter().cloned().map(PiHalfValue::from_rational).collect())
    }

    pub fn n(&self) -> u32 {
        (self.v.len() - 1) as u32
    }

    pub fn values(&self) -> &[PiHalfValue] {
        &self.v
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.v.iter().map(|x| x.to_f64()).collect()
    }
}

/// `M_V(t) = Σ C(n,k) v_{n−k} t^k`.
pub fn measures_to_polynomial(v: &CrossMeasures) -> ExactPoly {
    let n = v.n();
    ExactPoly::new(
        (0..=n)
            .map(|k| v.v[(n - k) as usize].scale(&RBig::from(binomial(n, k))))
            .collect(),
    )
}

/// Inverse of [`measures_to_polynomial`]; fails if the result is not positive.
pub fn polynomial_to_measures(m: &ExactPoly, n: u32) -> Result<CrossMeasures, BodyError> {
    if m.degree() != Some(n as usize) {
        return Err(BodyError::InvalidSpec(format!(
            "degree {:?} does not match dimension {n}",
            m.degree()
        )));
    }
    let v = (0..=n)
        .map(|j| {
            let k = n - j;
            m.coeff(k as usize)
                .scale(&(RBig::ONE / RBig::from(binomial(n, k))))
        })
        .collect();
    CrossMeasures::new(v)
}

/// `M_{V×0^q}(t) = Σ m_k γ_k^{(q)} t^{k+q}`.
pub fn adjoint_lift(m: &ExactPoly, q: u32) -> ExactPoly {
    let lifted = ExactPoly::new(
        m.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| c * &gamma_multiplier(k as u32, q))
            .collect(),
    );
    lifted.shift_up(q as usize)
}

/// `M_{V₁×V₂} = M_{V₁} ⊛ M_{V₂}`.
pub fn cartesian_product_polynomial(a: &ExactPoly, b: &ExactPoly) -> ExactPoly {
    m_product(a, b)
}

/// `M_{λV}` in dimension `n`: `m_k → λ^{n−k} m_k`.
pub fn scaled(m: &ExactPoly, n: u32, lambda: &RBig) -> ExactPoly {
    ExactPoly::new(
        m.coeffs()
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let mut f = RBig::ONE;
                for _ in k as u32..n {
                    f = &f * lambda;
                }
                c.scale(&f)
            })
            .collect(),
    )
}

pub fn ball_polynomial(n: u32) -> ExactPoly {
    let w = unit_ball_volume(n);
    ExactPoly::new(
        (0..=n)
            .map(|k| w.scale(&RBig::from(binomial(n, k))))
            .collect(),
    )
}

/// Cube `[−1,1]^n`: `m_k = C(n,k) 2^{n−k} ω_k`.
pub fn cube_polynomial(n: u32) -> ExactPoly {
    ExactPoly::new(
        (0..=n)
            .map(|k| {
                let c = RBig::from(binomial(n, k) << (n - k) as usize);
                unit_ball_volume(k).scale(&c)
            })
            .collect(),
    )
}

pub fn minkowski_polynomial(spec: &BodySpec) -> Result<ExactPoly, BodyError> {
    spec.validate()?;
    Ok(match spec {
        BodySpec::Ball(n) => ball_polynomial(*n),
        BodySpec::Cube(n) => cube_polynomial(*n),
        BodySpec::Adjoint { base, q } => adjoint_lift(&minkowski_polynomial(base)?, *q),
        BodySpec::Product(a, b) => {
            cartesian_product_polynomial(&minkowski_polynomial(a)?, &minkowski_polynomial(b)?)
        }
        BodySpec::Measures(v) => measures_to_polynomial(v),
        BodySpec::Ellipsoid { .. } => return Err(BodyError::UnsupportedExact(spec.to_string())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_scalar::rat;

    #[test]
    fn balls_and_cubes() {
        let pi = PiHalfValue::pi();
        let two_pi = PiHalfValue::monomial(2.into(), 2);
        assert_eq!(
            minkowski_polynomial(&BodySpec::Ball(2)).unwrap(),
            ExactPoly::new(vec![pi.clone(), two_pi, pi.clone()])
        );
        assert_eq!(minkowski_polynomial(&BodySpec::Cube(1)).unwrap(), ExactPoly::from_ints(&[2, 2]));
        assert_eq!(
            minkowski_polynomial(&BodySpec::Cube(2)).unwrap(),
            ExactPoly::new(vec![4.into(), 8.into(), pi])
        );
    }

    #[test]
    fn stadium() {
        let s = minkowski_polynomial(&BodySpec::adjoint(BodySpec::Ball(1), 1)).unwrap();
        assert_eq!(s, ExactPoly::new(vec![0.into(), 4.into(), PiHalfValue::pi()]));
        let lifted = adjoint_lift(&ball_polynomial(2), 1);
        // m_1 of a squeezed body is twice the base volume
        assert_eq!(lifted.coeff(1), PiHalfValue::monomial(2.into(), 2));
    }

    #[test]
    fn point_product_is_lift() {
        let m = cube_polynomial(3);
        let point = ExactPoly::from_ints(&[0, 2]);
        assert_eq!(cartesian_product_polynomial(&point, &m), adjoint_lift(&m, 1));
    }

    #[test]
    fn measures_round_trip() {
        let v = polynomial_to_measures(&ball_polynomial(3), 3).unwrap();
        assert!(v.values().iter().all(|x| x == &unit_ball_volume(3)));
        let ones = CrossMeasures::from_rationals(&[rat(1, 1), rat(1, 1), rat(1, 1)]).unwrap();
        assert_eq!(measures_to_polynomial(&ones), ExactPoly::from_ints(&[1, 2, 1]));
        let q2 = polynomial_to_measures(&cube_polynomial(2), 2).unwrap();
        assert_eq!(q2.values(), &[PiHalfValue::pi(), 4.into(), 4.into()]);
        let lift = adjoint_lift(&ball_polynomial(1), 1);
        assert!(matches!(
            polynomial_to_measures(&lift, 2),
            Err(BodyError::InvariantViolation(_))
        ));
    }

    #[test]
    fn ellipsoid_is_not_exact() {
        let e: BodySpec = "ellipsoid:2,1,1/100".parse().unwrap();
        assert!(matches!(minkowski_polynomial(&e), Err(BodyError::UnsupportedExact(_))));
    }

    #[test]
    fn scaling() {
        let m = cube_polynomial(2);
        let big = scaled(&m, 2, &rat(2, 1));
        assert_eq!(big, cube_polynomial(2).rescale_argument(&rat(1, 2)).scale_rational(&rat(4, 1)));
    }
}
