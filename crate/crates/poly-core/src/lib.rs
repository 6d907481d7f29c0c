//! Dense exact polynomials over [`PiHalfValue`] and the structural transforms
//! used throughout: even/odd split, Jensen polynomials and the M-product.

mod poly;

pub use poly::{horner, ExactPoly};

use exact_scalar::{m_product_weight, IBig, PiHalfValue, RBig, UBig};
use gauss_quad::GaussLegendre;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("domain error: {0}")]
    Domain(String),
}

/// `(ᵉP, ᵒP)` with `ᵉP(t) = (P(t) + P(−t))/2` and `ᵒP(t) = (P(t) − P(−t))/2`.
pub fn even_odd_parts(p: &ExactPoly) -> (ExactPoly, ExactPoly) {
    let mut even = Vec::with_capacity(p.coeffs().len());
    let mut odd = Vec::with_capacity(p.coeffs().len());
    for (k, c) in p.coeffs().iter().enumerate() {
        if k % 2 == 0 {
            even.push(c.clone());
            odd.push(PiHalfValue::zero());
        } else {
            even.push(PiHalfValue::zero());
            odd.push(c.clone());
        }
    }
    (ExactPoly::new(even), ExactPoly::new(odd))
}

pub fn derivative(p: &ExactPoly) -> ExactPoly {
    ExactPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&RBig::from(k as u64)))
            .collect(),
    )
}

/// Jensen multiplier `j_{n,l} = Π_{i<l} (1 − i/n) = n! / ((n−l)! nˡ)`.
pub fn jensen_multiplier(n: u32, l: u32) -> RBig {
    if l > n {
        return RBig::ZERO;
    }
    let mut num = UBig::ONE;
    let mut den = UBig::ONE;
    for i in 1..l {
        num *= UBig::from((n - i) as u64);
        den *= UBig::from(n as u64);
    }
    RBig::from_parts(IBig::from(num), den)
}

/// `𝒥_n(f)(t) = Σ_{l≤n} j_{n,l} a_l tˡ`; coefficients beyond the given prefix
/// count as zero.
pub fn jensen_polynomial(coeffs: &[PiHalfValue], n: u32) -> Result<ExactPoly, PolyError> {
    if n == 0 {
        return Err(PolyError::Domain("Jensen polynomial needs n >= 1".into()));
    }
    if coeffs.is_empty() {
        return Err(PolyError::Domain("no Taylor coefficients given".into()));
    }
    Ok(ExactPoly::new(
        coeffs
            .iter()
            .take(n as usize + 1)
            .enumerate()
            .map(|(l, a)| a.scale(&jensen_multiplier(n, l as u32)))
            .collect(),
    ))
}

/// Bilinear extension of `tᵏ ⊛ tˡ = Γ(k/2+1)Γ(l/2+1)/Γ((k+l)/2+1) t^{k+l}`.
pub fn m_product(a: &ExactPoly, b: &ExactPoly) -> ExactPoly {
    if a.is_zero() || b.is_zero() {
        return ExactPoly::zero();
    }
    let mut out = vec![PiHalfValue::zero(); a.coeffs().len() + b.coeffs().len() - 1];
    for (k, x) in a.coeffs().iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (l, y) in b.coeffs().iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            out[k + l] += &(x * y) * &m_product_weight(k as u32, l as u32);
        }
    }
    ExactPoly::new(out)
}

/// Evaluates `(A ⊛ B)(t)` twice: from the exact product and from
/// `A(t)B(0) + ∫₀ᵗ A(√(t²−τ²)) B′(τ) dτ`.
///
/// The boundary term is `A(t)B(0)`: the `l = 0` terms of `B` carry no
/// `dB` mass, so they must come from it, while `a_0 B(t)` would count the
/// `k = 0` column twice.
///
/// The integral uses `τ = t sin θ`, which removes the square-root endpoint
/// singularity, and Gauss–Legendre rules whose size doubles from
/// `quadrature_points` until two successive values agree to 1e-14.
pub fn m_product_integral_check(
    a: &ExactPoly,
    b: &ExactPoly,
    t: f64,
    quadrature_points: usize,
) -> Result<(f64, f64), PolyError> {
    if !(t > 0.0) {
        return Err(PolyError::Domain(format!("t must be positive, got {t}")));
    }
    if quadrature_points < 64 {
        return Err(PolyError::Domain("at least 64 quadrature points required".into()));
    }
    let algebraic = m_product(a, b).eval_f64(t);
    let ac = a.to_f64_coeffs();
    let db = derivative(b).to_f64_coeffs();
    let head = a.eval_f64(t) * b.coeff(0).to_f64();
    let integrand = |th: f64| {
        let (s, c) = th.sin_cos();
        horner(&ac, t * c) * horner(&db, t * s) * t * c
    };
    let mut deg = quadrature_points;
    let mut prev = f64::NAN;
    let mut value;
    loop {
        let rule = GaussLegendre::new(deg).expect("degree >= 2");
        value = head + rule.integrate(0.0, std::f64::consts::FRAC_PI_2, integrand);
        if (value - prev).abs() <= 1e-14 * value.abs().max(1.0) || deg >= 4096 {
            break;
        }
        prev = value;
        deg *= 2;
    }
    Ok((algebraic, value))
}
