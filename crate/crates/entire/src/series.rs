use dashu_base::EstimatedLog2;
use exact_scalar::{
    factorial, gamma_half_monomial, index_factor, BigFloat, FloatEval, PiHalfValue, PiMonomial, RBig, UBig,
};
use num_complex::Complex64;
use weyl::WeylIndex;

use crate::spec::{FoxWrightParams, SeriesSpec};
use crate::EntireError;

fn gamma(two_x: u32) -> PiMonomial {
    gamma_half_monomial(two_x).expect("positive argument")
}

fn inv_factorial(n: u32) -> RBig {
    RBig::from_parts(1.into(), factorial(n))
}

/// `Γ(q/2+1) Γ(k/2+1) / (Γ((k+q)/2+1) k!)`.
fn m_adjoint(q: u32, k: u32) -> PiHalfValue {
    let g = &(&gamma(q + 2) * &gamma(k + 2)) / &gamma(k + q + 2);
    PiMonomial::new(g.coeff * inv_factorial(k), g.exp)
        .to_value()
        .expect("square roots cancel in pairs")
}

fn neg_half_pow(l: u32) -> RBig {
    let r = RBig::from_parts(1.into(), UBig::ONE << l as usize);
    if l % 2 == 1 {
        -r
    } else {
        r
    }
}

fn w_coefficient(spec: &SeriesSpec, l: u32) -> PiHalfValue {
    let (base, p) = match spec {
        SeriesSpec::WBall(p) => (PiHalfValue::from_rational(inv_factorial(l)), p),
        SeriesSpec::WBallCyl(p) => {
            // Γ(1/2) / Γ(l + 1/2) is rational
            let g = &gamma(1) / &gamma(2 * l + 1);
            (PiHalfValue::from_rational(g.coeff), p)
        }
        SeriesSpec::WCube(p) => (PiHalfValue::monomial(inv_factorial(2 * l + 1), 2 * l), p),
        SeriesSpec::WCubeCyl(p) => (PiHalfValue::monomial(inv_factorial(2 * l), 2 * l), p),
        _ => unreachable!("not a Weyl family"),
    };
    let mut c = base.scale(&neg_half_pow(l));
    if let WeylIndex::Finite(p) = p {
        c = c.scale(&index_factor(*p, l));
    }
    c
}

fn half_integer(x: &RBig, what: &str) -> Result<i64, EntireError> {
    let two = x * RBig::from(2);
    let (num, den) = (two.numerator().clone(), two.denominator().clone());
    if den != UBig::ONE {
        return Err(EntireError::Unsupported(format!(
            "{what} must be a multiple of 1/2 for exact coefficients"
        )));
    }
    i64::try_from(num).map_err(|_| EntireError::Unsupported(format!("{what} is too large")))
}

fn fox_wright(f: &FoxWrightParams, k: u32) -> Result<PiHalfValue, EntireError> {
    let g = |pairs: &[(RBig, RBig)]| -> Result<PiMonomial, EntireError> {
        let mut acc = PiMonomial::rational(RBig::ONE);
        for (a, b) in pairs {
            let two_x = half_integer(a, "a Fox-Wright slope")? * k as i64 + half_integer(b, "a Fox-Wright shift")?;
            if two_x <= 0 {
                return Err(EntireError::Unsupported(format!("gamma pole at {two_x}/2")));
            }
            acc = &acc * &gamma(two_x as u32);
        }
        Ok(acc)
    };
    let m = &g(&f.upper)? / &g(&f.lower)?;
    PiMonomial::new(m.coeff * inv_factorial(k), m.exp)
        .to_value()
        .map_err(|e| EntireError::Unsupported(e.to_string()))
}

/// The first `count` Taylor coefficients `c_0, …, c_{count−1}` in `t`.
pub fn taylor_coefficients(spec: &SeriesSpec, count: usize) -> Result<Vec<PiHalfValue>, EntireError> {
    if count == 0 {
        return Err(EntireError::Precondition("count must be at least 1".into()));
    }
    (0..count as u32)
        .map(|k| {
            Ok(match spec {
                SeriesSpec::MBallAdjoint(q) => m_adjoint(*q, k),
                s if s.is_even() => {
                    if k % 2 == 0 {
                        w_coefficient(s, k / 2)
                    } else {
                        PiHalfValue::zero()
                    }
                }
                SeriesSpec::WBallCylSine(p) => {
                    if k % 2 == 1 {
                        let c = m_adjoint(*p, k);
                        if k % 4 == 3 {
                            -c
                        } else {
                            c
                        }
                    } else {
                        PiHalfValue::zero()
                    }
                }
                SeriesSpec::MittagLeffler => {
                    PiHalfValue::from_rational((&gamma(1) / &gamma(2 * k + 1)).coeff)
                }
                SeriesSpec::FoxWright(f) => fox_wright(f, k)?,
                _ => unreachable!(),
            })
        })
        .collect()
}

/// Multiplies the coefficient of `t^{2l}` by `ψ_p(2l) = 2^{−l} Γ(p/2+1) / Γ(p/2+l+1)`.
pub fn laguerre_multiplier_map(coeffs: &[PiHalfValue], p: u32) -> Result<Vec<PiHalfValue>, EntireError> {
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if k % 2 == 1 {
                if !c.is_zero() {
                    return Err(EntireError::Domain("the multiplier acts on even series only".into()));
                }
                Ok(PiHalfValue::zero())
            } else {
                Ok(c.scale(&index_factor(p, k as u32 / 2)))
            }
        })
        .collect()
}

fn big(x: f64, prec: usize) -> BigFloat {
    BigFloat::try_from(x).expect("finite").with_precision(prec).value()
}

fn log2_abs(x: &BigFloat) -> f64 {
    if x.repr().is_zero() {
        f64::NEG_INFINITY
    } else {
        x.log2_est() as f64
    }
}

/// `log2 |c_k t^k|` for every coefficient, from a cheap low-precision pass.
fn term_sizes(coeffs: &[PiHalfValue], r: f64) -> Vec<f64> {
    let mut ev = FloatEval::new(64);
    let lr = if r > 0.0 { r.log2() } else { f64::NEG_INFINITY };
    coeffs
        .iter()
        .enumerate()
        .map(|(k, c)| {
            if c.is_zero() {
                f64::NEG_INFINITY
            } else if k == 0 {
                log2_abs(&ev.eval(c))
            } else {
                log2_abs(&ev.eval(c)) + k as f64 * lr
            }
        })
        .collect()
}

fn horner(coeffs: &[PiHalfValue], t: Complex64) -> Complex64 {
    let sizes = term_sizes(coeffs, t.norm());
    let peak = sizes.iter().cloned().fold(0.0f64, f64::max);
    let prec = 160 + peak.ceil() as usize;
    let mut ev = FloatEval::new(prec);
    let (x, y) = (big(t.re, prec), big(t.im, prec));
    let mut re = big(0.0, prec);
    let mut im = big(0.0, prec);
    for c in coeffs.iter().rev() {
        let nre = &re * &x - &im * &y + ev.eval(c);
        let nim = &re * &y + &im * &x;
        re = nre;
        im = nim;
    }
    Complex64::new(re.to_f64().value(), im.to_f64().value())
}

/// The truncated series `Σ_{k<terms} c_k t^k`, summed in multiprecision so
/// that cancellation between large terms costs nothing.
pub fn series_eval(spec: &SeriesSpec, t: Complex64, terms: usize) -> Result<Complex64, EntireError> {
    Ok(horner(&taylor_coefficients(spec, terms)?, t))
}

/// As [`series_eval`], with the number of terms grown until the tail is
/// below `2^{−80}` of the smallest plausible value. Cancellation can shrink
/// the sum to about the reciprocal of the largest term (as for `e^{−t²/2}`),
/// so the tail must fall that far below 1.
pub fn series_eval_auto(spec: &SeriesSpec, t: Complex64) -> Result<Complex64, EntireError> {
    let mut count = 64;
    loop {
        let coeffs = taylor_coefficients(spec, count)?;
        let sizes = term_sizes(&coeffs, t.norm());
        let peak = sizes.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let peak_at = sizes.iter().position(|&s| s == peak).unwrap_or(0);
        let tail = sizes[count - 8..].iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        if peak_at < count - 8 && tail < -peak.max(0.0) - 80.0 {
            return Ok(horner(&coeffs, t));
        }
        if count >= 8192 {
            return Err(EntireError::Domain(format!("series did not settle within {count} terms")));
        }
        count *= 2;
    }
}
