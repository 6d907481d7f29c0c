//! Search for log-concave sequences whose Minkowski-type polynomial
//! `Σ C(n,k) v_k t^{n−k}` fails the Routh–Hurwitz test.

use bodies::CrossMeasures;
use exact_scalar::{binomial, fmt_rational, sign, sign_and_float, BigFloat, FloatEval, PiHalfValue, RBig};
use serde::Serialize;

use crate::determinants::{hurwitz_matrix, leading_minors};
use crate::inequalities::af_inequalities;

/// A parameterized generator of log-concave positive sequences.
#[derive(Clone, Debug)]
pub enum Family {
    /// `v_k = r^{k²}`.
    Gaussian { r: RBig },
    /// `v_k = r^{k²}` up to `k = K`, then damped by an extra `s^{k−K}`.
    Kink { r: RBig, s: RBig, knee: u32 },
}

impl Family {
    pub fn sequence(&self, n: u32) -> Vec<RBig> {
        let pow = |b: &RBig, e: u32| (0..e).fold(RBig::ONE, |acc, _| acc * b);
        (0..=n)
            .map(|k| match self {
                Family::Gaussian { r } => pow(r, k * k),
                Family::Kink { r, s, knee } => pow(r, k * k) * pow(s, k.saturating_sub(*knee)),
            })
            .collect()
    }

    pub fn describe(&self) -> String {
        match self {
            Family::Gaussian { r } => format!("r^(k^2), r = {}", fmt_rational(r)),
            Family::Kink { r, s, knee } => format!(
                "r^(k^2) * s^max(k-K,0), r = {}, s = {}, K = {knee}",
                fmt_rational(r),
                fmt_rational(s)
            ),
        }
    }
}

/// The default grid: Gaussian sequences, then kinked ones.
pub fn default_families(n: u32) -> Vec<Family> {
    let q = |a: i64, b: i64| exact_scalar::rat(a, b);
    let mut out: Vec<Family> = [(1, 2), (2, 3), (3, 4), (4, 5), (9, 10), (19, 20), (99, 100)]
        .iter()
        .map(|&(a, b)| Family::Gaussian { r: q(a, b) })
        .collect();
    for r in [q(99, 100), q(999, 1000)] {
        for knee in 1..=n / 2 {
            for s in [q(1, 2), q(1, 3), q(1, 5), q(1, 10)] {
                out.push(Family::Kink { r: r.clone(), s, knee });
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub family: String,
    /// `v_0, …, v_n` as exact fractions.
    pub v: Vec<String>,
    /// First `k` with `Δ_k ≤ 0`.
    pub failing_k: usize,
    pub delta_sign: i8,
    pub delta_approx: f64,
}

fn descending_coefficients(v: &[RBig]) -> Vec<PiHalfValue> {
    let n = v.len() as u32 - 1;
    v.iter()
        .enumerate()
        .map(|(j, x)| PiHalfValue::from_rational(x * RBig::from(binomial(n, j as u32))))
        .collect()
}

/// Leading minors in floating point by elimination without pivoting;
/// `None` when a pivot vanishes.
fn float_minor_signs(m: &[Vec<PiHalfValue>], prec: usize) -> Option<Vec<i8>> {
    let mut ev = FloatEval::new(prec);
    let mut a: Vec<Vec<BigFloat>> = m.iter().map(|r| r.iter().map(|x| ev.eval(x)).collect()).collect();
    let n = a.len();
    let mut signs = Vec::with_capacity(n);
    let mut s = 1i8;
    for k in 0..n {
        let piv = a[k][k].clone();
        if piv.repr().is_zero() {
            return None;
        }
        if piv.sign() == dashu_base::Sign::Negative {
            s = -s;
        }
        signs.push(s);
        for i in k + 1..n {
            if a[i][k].repr().is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for j in k + 1..n {
                let t = &f * &a[k][j];
                a[i][j] -= t;
            }
        }
    }
    Some(signs)
}

fn exact_minor(m: &[Vec<PiHalfValue>], k: usize) -> PiHalfValue {
    let block: Vec<Vec<PiHalfValue>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
    leading_minors(&block)[k - 1].clone()
}

/// Tests one sequence; returns the first failing `k` with the exact minor.
fn test_sequence(v: &[RBig]) -> Option<(usize, PiHalfValue)> {
    let m = hurwitz_matrix(&descending_coefficients(v));
    match float_minor_signs(&m, 512) {
        Some(signs) => {
            // The float pass only nominates; every candidate index is
            // confirmed exactly, in order.
            for (i, s) in signs.iter().enumerate() {
                if *s <= 0 {
                    let d = exact_minor(&m, i + 1);
                    if sign(&d) <= 0 {
                        return Some((i + 1, d));
                    }
                }
            }
            None
        }
        None => {
            let minors = leading_minors(&m);
            minors.into_iter().enumerate().find(|(_, d)| sign(d) <= 0).map(|(i, d)| (i + 1, d))
        }
    }
}

/// Searches `families` (at most `budget` of them) for a sequence satisfying
/// every Alexandrov–Fenchel inequality whose Hurwitz determinants are not
/// all positive. Among the hits, the one failing at the smallest `k` wins;
/// ties go to the earliest family.
pub fn counterexample_search(n: u32, families: &[Family], budget: usize) -> Option<Witness> {
    let mut best: Option<Witness> = None;
    for fam in families.iter().take(budget) {
        let v = fam.sequence(n);
        let Ok(measures) = CrossMeasures::from_rationals(&v) else { continue };
        if !af_inequalities(&measures).all_hold {
            continue;
        }
        let Some((k, d)) = test_sequence(&v) else { continue };
        if best.as_ref().is_some_and(|b| b.failing_k <= k) {
            continue;
        }
        let (s, approx) = sign_and_float(&d, 64);
        best = Some(Witness {
            family: fam.describe(),
            v: v.iter().map(fmt_rational).collect(),
            failing_k: k,
            delta_sign: s,
            delta_approx: approx,
        });
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_dimensions_have_no_witness() {
        for n in [3, 4, 5] {
            assert!(counterexample_search(n, &default_families(n), usize::MAX).is_none());
        }
    }

    #[test]
    fn kink_sequences_are_log_concave() {
        for fam in default_families(12) {
            let v = CrossMeasures::from_rationals(&fam.sequence(12)).unwrap();
            assert!(af_inequalities(&v).all_hold, "{}", fam.describe());
        }
    }
}
