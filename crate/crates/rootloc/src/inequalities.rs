//! Alexandrov–Fenchel chains and the closed-form low-dimension inequalities.

use bodies::CrossMeasures;
use exact_scalar::{binomial, sign, sign_and_float, PiHalfValue, RBig};
use serde::Serialize;

use crate::determinants::{hurwitz_matrix, leading_minors};
use crate::RootError;

#[derive(Clone, Debug, Serialize)]
pub struct ChainCheck {
    pub k: usize,
    pub holds: bool,
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct AfReport {
    /// `v_k² ≥ v_{k−1} v_{k+1}`, `1 ≤ k ≤ n−1`.
    pub step1: Vec<ChainCheck>,
    /// `v_k² ≥ v_{k−2} v_{k+2}`, `2 ≤ k ≤ n−2`.
    pub step2: Vec<ChainCheck>,
    /// `v_k v_{k+1} ≥ v_{k−1} v_{k+2}`, `1 ≤ k ≤ n−2`.
    pub product: Vec<ChainCheck>,
    pub all_hold: bool,
    pub all_strict: bool,
}

fn compare(k: usize, lhs: PiHalfValue, rhs: PiHalfValue) -> ChainCheck {
    let s = sign(&(lhs - rhs));
    ChainCheck { k, holds: s >= 0, strict: s > 0 }
}

pub fn af_inequalities(v: &CrossMeasures) -> AfReport {
    let v = v.values();
    let n = v.len() - 1;
    let step1: Vec<_> = (1..n).map(|k| compare(k, &v[k] * &v[k], &v[k - 1] * &v[k + 1])).collect();
    let step2: Vec<_> = (2..n.saturating_sub(1)).map(|k| compare(k, &v[k] * &v[k], &v[k - 2] * &v[k + 2])).collect();
    let product: Vec<_> =
        (1..n.saturating_sub(1)).map(|k| compare(k, &v[k] * &v[k + 1], &v[k - 1] * &v[k + 2])).collect();
    let all = || step1.iter().chain(&step2).chain(&product);
    AfReport {
        all_hold: all().all(|c| c.holds),
        all_strict: all().all(|c| c.strict),
        step1,
        step2,
        product,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDimCheck {
    pub name: String,
    pub holds: bool,
    /// `lhs − rhs`.
    pub margin_approx: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct LowDimReport {
    pub n: u32,
    pub checks: Vec<LowDimCheck>,
    pub all_hold: bool,
    /// For `n = 5`: whether the two printed expansions of Δ₄ agree with the
    /// determinant, tested at a generic point.
    pub delta4_proof_display_matches: Option<bool>,
    pub delta4_inequality_display_matches: Option<bool>,
}

fn strict(name: &str, margin: PiHalfValue) -> LowDimCheck {
    let (s, approx) = sign_and_float(&margin, 64);
    LowDimCheck { name: name.into(), holds: s > 0, margin_approx: approx }
}

fn c(x: i64) -> PiHalfValue {
    PiHalfValue::from_int(x)
}

/// Δ_k from the Hurwitz matrix with `a_j = C(n, j) v_j`.
fn hurwitz_minor(v: &[PiHalfValue], k: usize) -> PiHalfValue {
    let n = v.len() - 1;
    let a: Vec<PiHalfValue> = (0..=n)
        .map(|j| v[j].scale(&RBig::from(binomial(n as u32, j as u32))))
        .collect();
    leading_minors(&hurwitz_matrix(&a))[k - 1].clone()
}

/// The n = 5 Δ₄ expansion as printed in the proof.
fn delta4_proof_display(v: &[PiHalfValue]) -> PiHalfValue {
    let p = |idx: &[usize]| idx.iter().fold(PiHalfValue::one(), |acc, &i| &acc * &v[i]);
    c(2500) * p(&[1, 2, 3, 4]) + c(100) * p(&[0, 2, 3, 5]) + c(50) * p(&[0, 1, 4, 5])
        - c(625) * p(&[1, 1, 4, 4])
        - p(&[0, 0, 5, 5])
        - c(500) * p(&[0, 3, 3, 4])
        - c(500) * p(&[0, 1, 1, 5])
}

/// The n = 5 Δ₄ expansion as printed in the inequality block (lhs − rhs).
fn delta4_inequality_display(v: &[PiHalfValue]) -> PiHalfValue {
    let p = |idx: &[usize]| idx.iter().fold(PiHalfValue::one(), |acc, &i| &acc * &v[i]);
    c(2500) * p(&[1, 2, 3, 4]) + c(100) * p(&[0, 2, 3, 5]) + c(50) * p(&[0, 2, 4, 5])
        - c(625) * p(&[1, 1, 4, 4])
        - c(500) * p(&[0, 3, 3, 4])
        - c(500) * p(&[1, 2, 2, 5])
        - p(&[0, 0, 5, 5])
}

/// Closed-form inequalities for small dimension.
///
/// For `n ∈ {3, 4, 5}` these are the Routh–Hurwitz conditions of the
/// Minkowski polynomial written out in the measures. For `n ∈ {5, 6}` (the
/// measures of a solid body bounding a surface of dimension `n − 1`) the
/// conservativity conditions of `W^∞` are added: `3v₂² > v₀v₄` and
/// `5v₃² > 3v₁v₅`.
pub fn low_dim_inequalities(v: &CrossMeasures, n: u32) -> Result<LowDimReport, RootError> {
    if !(3..=6).contains(&n) {
        return Err(RootError::Domain(format!("low-dimension inequalities cover n = 3..6, got {n}")));
    }
    if v.n() != n {
        return Err(RootError::Domain(format!("expected {} measures, got {}", n + 1, v.values().len())));
    }
    let w = v.values();
    let p = |idx: &[usize]| idx.iter().fold(PiHalfValue::one(), |acc, &i| &acc * &w[i]);
    let mut checks = Vec::new();
    let (mut proof_ok, mut ineq_ok) = (None, None);
    match n {
        3 => checks.push(strict("9v1v2 > v0v3", c(9) * p(&[1, 2]) - p(&[0, 3]))),
        4 => {
            checks.push(strict("6v1v2 > v0v3", c(6) * p(&[1, 2]) - p(&[0, 3])));
            checks.push(strict(
                "6v1v2v3 > v0v3^2 + v1^2v4",
                c(6) * p(&[1, 2, 3]) - p(&[0, 3, 3]) - p(&[1, 1, 4]),
            ));
        }
        5 => {
            checks.push(strict("5v1v2 > v0v3", c(5) * p(&[1, 2]) - p(&[0, 3])));
            checks.push(strict(
                "100v1v2v3 + v0v1v5 > 20v0v3^2 + 25v1^2v4",
                c(100) * p(&[1, 2, 3]) + p(&[0, 1, 5]) - c(20) * p(&[0, 3, 3]) - c(25) * p(&[1, 1, 4]),
            ));
            checks.push(strict("Delta_4 > 0", hurwitz_minor(w, 4)));
            let generic: Vec<PiHalfValue> = [2, 3, 5, 7, 11, 13].iter().map(|&x| c(x)).collect();
            let truth = hurwitz_minor(&generic, 4);
            proof_ok = Some(delta4_proof_display(&generic) == truth);
            ineq_ok = Some(delta4_inequality_display(&generic) == truth);
        }
        _ => {}
    }
    match n {
        5 => checks.push(strict("3v2^2 > v0v4", c(3) * p(&[2, 2]) - p(&[0, 4]))),
        6 => checks.push(strict("5v3^2 > 3v1v5", c(5) * p(&[3, 3]) - c(3) * p(&[1, 5]))),
        _ => {}
    }
    Ok(LowDimReport {
        n,
        all_hold: checks.iter().all(|c| c.holds),
        checks,
        delta4_proof_display_matches: proof_ok,
        delta4_inequality_display_matches: ineq_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use exact_scalar::rat;

    fn measures(v: &[i64]) -> CrossMeasures {
        CrossMeasures::new(v.iter().map(|&x| c(x)).collect()).unwrap()
    }

    #[test]
    fn constant_sequence_is_boundary() {
        let r = af_inequalities(&measures(&[1; 6]));
        assert!(r.all_hold && !r.all_strict);
        let r = low_dim_inequalities(&measures(&[1; 6]), 5).unwrap();
        assert!(r.all_hold);
        assert_eq!(r.checks[1].margin_approx, 56.0);
    }

    #[test]
    fn square_measures() {
        let v = CrossMeasures::new(vec![PiHalfValue::pi(), c(4), c(4)]).unwrap();
        let r = af_inequalities(&v);
        assert!(r.all_strict);
        assert_eq!(r.step1.len(), 1);
    }

    #[test]
    fn gaussian_sequence_is_strict() {
        let v: Vec<RBig> = (0..6).map(|k| rat(1, 1 << (k * k))).collect();
        let r = af_inequalities(&CrossMeasures::from_rationals(&v).unwrap());
        assert!(r.all_strict);
    }

    #[test]
    fn delta4_displays_disagree_with_determinant() {
        let r = low_dim_inequalities(&measures(&[1; 6]), 5).unwrap();
        assert_eq!(r.delta4_proof_display_matches, Some(false));
        assert_eq!(r.delta4_inequality_display_matches, Some(false));
        // 2500 + 100 + 50 − 625 − 1 − 500 − 500
        assert_eq!(r.checks[2].margin_approx, 1024.0);
    }

    #[test]
    fn weyl_side_entries() {
        let r = low_dim_inequalities(&measures(&[1, 1, 1, 1, 1, 1, 1]), 6).unwrap();
        assert_eq!(r.checks.len(), 1);
        assert_eq!(r.checks[0].margin_approx, 2.0);
        assert!(low_dim_inequalities(&measures(&[1, 1, 1]), 3).is_err());
    }
}
