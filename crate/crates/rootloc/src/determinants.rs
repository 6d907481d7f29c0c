//! Hurwitz matrices and their leading minors, computed exactly.
//!
//! Routh–Hurwitz is usually stated for `P(t) = a_0 tⁿ + a_1 t^{n−1} + … + a_n`,
//! descending, while [`ExactPoly`] stores ascending coefficients;
//! [`descending`] converts. The Hurwitz matrix has entry `(i, j) = a_{2j−i}` (1-based), zero outside `0..=n`.

use exact_scalar::{sign, PiHalfValue, RBig};
use poly_core::{derivative, ExactPoly};

use crate::RootError;

pub fn descending(p: &ExactPoly) -> Vec<PiHalfValue> {
    p.coeffs().iter().rev().cloned().collect()
}

pub fn hurwitz_matrix(desc: &[PiHalfValue]) -> Vec<Vec<PiHalfValue>> {
    let n = desc.len().saturating_sub(1);
    let a = |k: isize| -> PiHalfValue {
        if (0..=n as isize).contains(&k) {
            desc[k as usize].clone()
        } else {
            PiHalfValue::zero()
        }
    };
    (1..=n as isize)
        .map(|i| (1..=n as isize).map(|j| a(2 * j - i)).collect())
        .collect()
}

/// Fraction-free determinant with row pivoting.
pub fn determinant(mut m: Vec<Vec<PiHalfValue>>) -> PiHalfValue {
    let n = m.len();
    if n == 0 {
        return PiHalfValue::one();
    }
    let mut prev = PiHalfValue::one();
    let mut negate = false;
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return PiHalfValue::zero(),
            }
        }
        bareiss_step(&mut m, k, &prev);
        prev = m[k][k].clone();
    }
    if negate {
        -&prev
    } else {
        prev
    }
}

fn bareiss_step(m: &mut [Vec<PiHalfValue>], k: usize, prev: &PiHalfValue) {
    let n = m.len();
    let pivot = m[k][k].clone();
    for i in k + 1..n {
        let mik = m[i][k].clone();
        for j in k + 1..n {
            let num = &(&m[i][j] * &pivot) - &(&mik * &m[k][j]);
            m[i][j] = num.div_exact(prev).expect("Bareiss quotients are exact");
        }
        m[i][k] = PiHalfValue::zero();
    }
}

/// `Δ_1, …, Δ_n`, the leading principal minors.
///
/// One Bareiss sweep yields all of them as successive pivots; a zero pivot
/// makes the remaining minors fall back to separate pivoted determinants.
pub fn leading_minors(m: &[Vec<PiHalfValue>]) -> Vec<PiHalfValue> {
    let n = m.len();
    let mut work = m.to_vec();
    let mut out = Vec::with_capacity(n);
    let mut prev = PiHalfValue::one();
    for k in 0..n {
        if work[k][k].is_zero() {
            for size in k + 1..=n {
                let block = m[..size].iter().map(|r| r[..size].to_vec()).collect();
                out.push(determinant(block));
            }
            return out;
        }
        out.push(work[k][k].clone());
        bareiss_step(&mut work, k, &prev);
        prev = work[k][k].clone();
    }
    out
}

fn require_positive(desc: &[PiHalfValue], what: &str) -> Result<(), RootError> {
    if let Some(j) = desc.iter().position(|a| sign(a) <= 0) {
        return Err(RootError::Precondition(format!(
            "{what}: coefficient a_{j} (descending) is not positive"
        )));
    }
    Ok(())
}

/// Routh–Hurwitz determinants of a polynomial with positive coefficients.
pub fn hurwitz_determinants(p: &ExactPoly) -> Result<Vec<PiHalfValue>, RootError> {
    if p.degree().unwrap_or(0) < 1 {
        return Err(RootError::Precondition("degree must be at least 1".into()));
    }
    let desc = descending(p);
    require_positive(&desc, "Routh-Hurwitz")?;
    Ok(leading_minors(&hurwitz_matrix(&desc)))
}

/// `W + W′/2`, whose descending coefficients satisfy `a_{2l+1} = (m−l) a_{2l}`.
pub fn conservativity_companion(w: &ExactPoly) -> ExactPoly {
    &derivative(w).scale_rational(&RBig::from_parts(1.into(), 2u8.into())) + w
}

/// `D_1, …, D_{2m}` for an even `W` of degree `2m` with positive coefficients:
/// the Hurwitz determinants of `W + W′/2`.
pub fn conservativity_determinants(w: &ExactPoly) -> Result<Vec<PiHalfValue>, RootError> {
    let deg = w.degree().unwrap_or(0);
    if deg < 2 || !w.is_even() {
        return Err(RootError::Precondition(
            "conservativity criterion needs an even polynomial of positive degree".into(),
        ));
    }
    let even: Vec<PiHalfValue> = w.coeffs().iter().step_by(2).cloned().collect();
    require_positive(&even, "conservativity criterion")?;
    let m = conservativity_companion(w);
    Ok(leading_minors(&hurwitz_matrix(&descending(&m))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<Vec<PiHalfValue>> {
        let n = (v.len() as f64).sqrt() as usize;
        v.chunks(n)
            .map(|r| r.iter().map(|&x| PiHalfValue::from_int(x)).collect())
            .collect()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(determinant(ints(&[2, 1, 1, 3])), 5.into());
        assert_eq!(determinant(ints(&[0, 1, 1, 0])), (-1).into());
        assert_eq!(determinant(ints(&[1, 2, 3, 4, 5, 6, 7, 8, 9])), 0.into());
        assert_eq!(leading_minors(&ints(&[0, 1, 1, 0])), vec![0.into(), (-1).into()]);
    }

    #[test]
    fn quadratic_examples() {
        let d = hurwitz_determinants(&ExactPoly::from_ints(&[1, 2, 1])).unwrap();
        assert_eq!(d, vec![2.into(), 2.into()]);
        let d = hurwitz_determinants(&ExactPoly::from_ints(&[1, 1, 1])).unwrap();
        assert_eq!(d, vec![1.into(), 1.into()]);
        assert!(hurwitz_determinants(&ExactPoly::from_ints(&[-1, 0, 1])).is_err());
    }

    #[test]
    fn conservativity_examples() {
        let d = conservativity_determinants(&ExactPoly::from_ints(&[3, 0, 1])).unwrap();
        assert_eq!(d, vec![1.into(), 3.into()]);
        let w = ExactPoly::from_rationals(&[
            RBig::ONE,
            RBig::ZERO,
            RBig::ONE,
            RBig::ZERO,
            exact_scalar::rat(1, 3),
        ]);
        let d = conservativity_determinants(&w).unwrap();
        assert!(d.iter().any(|x| sign(x) <= 0));
        assert!(conservativity_determinants(&ExactPoly::from_ints(&[1, 1, 1])).is_err());
    }

    #[test]
    fn closed_forms_for_low_degree() {
        // D_3 = a_0((m−1)a_2² − 2m a_0 a_4) for m = 2
        let (a0, a2, a4) = (3i64, 7, 2);
        let w = ExactPoly::from_ints(&[a4, 0, a2, 0, a0]);
        let d = conservativity_determinants(&w).unwrap();
        assert_eq!(d[0], (2 * a0).into());
        assert_eq!(d[1], (a0 * a2).into());
        assert_eq!(d[2], (a0 * (a2 * a2 - 4 * a0 * a4)).into());
        assert_eq!(d[3], (a0 * a4 * (a2 * a2 - 4 * a0 * a4)).into());
    }
}
