//! Simultaneous root iteration (Aberth–Ehrlich) in multiprecision.
//!
//! Coefficients of the polynomials studied here span hundreds of decimal
//! orders of magnitude (Jensen truncations of entire functions), so the
//! iteration runs in [`BigFloat`]. When the coefficients fit in `f64` a
//! double-precision pass supplies the starting points.

use dashu_base::{Abs, EstimatedLog2, SquareRoot};
use dashu_int::IBig;
use exact_scalar::BigFloat;
use num_complex::Complex64;

#[derive(Clone, Debug)]
pub(crate) struct BigComplex {
    pub re: BigFloat,
    pub im: BigFloat,
}

pub(crate) fn fl(x: f64, prec: usize) -> BigFloat {
    BigFloat::try_from(x)
        .expect("finite")
        .with_precision(prec)
        .value()
}

fn zero(prec: usize) -> BigFloat {
    BigFloat::ZERO.with_precision(prec).value()
}

/// `2^e` at precision `prec`.
fn pow2(e: isize, prec: usize) -> BigFloat {
    BigFloat::from_parts(IBig::ONE, e).with_precision(prec).value()
}

fn log2_abs(x: &BigFloat) -> f64 {
    if x.repr().is_zero() {
        f64::NEG_INFINITY
    } else {
        x.log2_est() as f64
    }
}

impl BigComplex {
    pub fn new(re: BigFloat, im: BigFloat) -> Self {
        Self { re, im }
    }

    pub fn real(re: BigFloat, prec: usize) -> Self {
        Self { re, im: zero(prec) }
    }

    pub fn zero(prec: usize) -> Self {
        Self { re: zero(prec), im: zero(prec) }
    }

    pub fn add(&self, o: &Self) -> Self {
        Self::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self::new(&self.re - &o.re, &self.im - &o.im)
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn mul_real(&self, r: &BigFloat) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn norm_sqr(&self) -> BigFloat {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.repr().is_zero() && self.im.repr().is_zero()
    }

    pub fn div(&self, o: &Self) -> Self {
        let d = o.norm_sqr();
        Self::new(
            (&self.re * &o.re + &self.im * &o.im) / &d,
            (&self.im * &o.re - &self.re * &o.im) / &d,
        )
    }

    pub fn recip(&self) -> Self {
        let d = self.norm_sqr();
        Self::new(&self.re / &d, -(&self.im / &d))
    }

    /// log₂|z| estimate, `-inf` for zero.
    pub fn log2_abs(&self) -> f64 {
        let a = log2_abs(&self.re);
        let b = log2_abs(&self.im);
        let (hi, lo) = if a > b { (a, b) } else { (b, a) };
        if hi == f64::NEG_INFINITY {
            return hi;
        }
        hi + 0.5 * (1.0 + (2.0 * (lo - hi)).exp2()).log2()
    }

    /// Principal square root.
    pub fn sqrt(&self) -> Self {
        let prec = self.re.precision().max(self.im.precision());
        if self.is_zero() {
            return Self::zero(prec);
        }
        let r = self.norm_sqr().sqrt();
        let two = fl(2.0, prec);
        // Take the root of the larger component first; the other follows
        // from `2ab = im` without cancellation.
        if self.re.sign() == dashu_base::Sign::Positive {
            let a = ((&r + &self.re) / &two).sqrt();
            let b = &self.im / (&a * &two);
            Self::new(a, b)
        } else {
            let b = ((&r - &self.re) / &two).sqrt();
            let b = if self.im.sign() == dashu_base::Sign::Negative { -b } else { b };
            let a = &self.im / (&b * &two);
            Self::new(a, b)
        }
    }

    pub fn to_c64(&self) -> Complex64 {
        Complex64::new(self.re.to_f64().value(), self.im.to_f64().value())
    }
}

/// `P(z)` and `P′(z)` by Horner; `c` ascending.
pub(crate) fn horner2(c: &[BigFloat], z: &BigComplex, prec: usize) -> (BigComplex, BigComplex) {
    let mut p = BigComplex::zero(prec);
    let mut dp = BigComplex::zero(prec);
    for a in c.iter().rev() {
        dp = dp.mul(z).add(&p);
        p = p.mul(z);
        p.re += a;
    }
    (p, dp)
}

/// `|P(z)| / Σ|a_k||z|^k`, the backward error of `z` as a root.
pub(crate) fn relative_residual(c: &[BigFloat], z: &BigComplex, prec: usize) -> f64 {
    let (p, _) = horner2(c, z, prec);
    let r = z.norm_sqr().sqrt();
    let mut s = zero(prec);
    for a in c.iter().rev() {
        s = &s * &r + a.clone().abs();
    }
    let num = p.log2_abs();
    if num == f64::NEG_INFINITY {
        return 0.0;
    }
    (num - log2_abs(&s)).exp2()
}

/// Starting points on circles whose radii come from the upper convex hull of
/// `(k, log|a_k|)` (Bini's Newton-polygon rule).
fn initial_guesses(c: &[BigFloat], prec: usize) -> Vec<BigComplex> {
    let n = c.len() - 1;
    let logs: Vec<f64> = c.iter().map(log2_abs).collect();
    let pts: Vec<usize> = (0..=n).filter(|&k| logs[k].is_finite()).collect();
    let mut hull: Vec<usize> = Vec::new();
    for &k in &pts {
        while hull.len() >= 2 {
            let (i, j) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (j as f64 - i as f64) * (logs[k] - logs[i]) - (k as f64 - i as f64) * (logs[j] - logs[i]);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(k);
    }
    let mut out = Vec::with_capacity(n);
    let sigma = 0.7;
    for w in hull.windows(2) {
        let (i, j) = (w[0], w[1]);
        let m = j - i;
        let log_r = (logs[i] - logs[j]) / m as f64;
        let e = log_r.floor();
        let scale = pow2(e as isize, prec);
        let frac = (log_r - e).exp2();
        for s in 0..m {
            let theta = 2.0 * std::f64::consts::PI * s as f64 / m as f64
                + 2.0 * std::f64::consts::PI * i as f64 / n as f64
                + sigma;
            let re = fl(frac * theta.cos(), prec) * &scale;
            let im = fl(frac * theta.sin(), prec) * &scale;
            out.push(BigComplex::new(re, im));
        }
    }
    out
}

/// Double-precision Aberth from the same Newton-polygon circles. `None`
/// when the coefficients leave the `f64` range or the iterates collide.
fn warm_start(c: &[BigFloat]) -> Option<Vec<Complex64>> {
    let logs: Vec<f64> = c.iter().map(log2_abs).collect();
    let finite = logs.iter().filter(|l| l.is_finite());
    if finite.clone().any(|l| l.abs() > 900.0) {
        return None;
    }
    let a: Vec<Complex64> = c.iter().map(|x| Complex64::new(x.to_f64().value(), 0.0)).collect();
    let n = a.len() - 1;
    let mut z: Vec<Complex64> = initial_guesses(c, 64).iter().map(BigComplex::to_c64).collect();
    let mut done = vec![false; n];
    for _ in 0..(100 + 10 * n) {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (mut p, mut dp) = (Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0));
            for ak in a.iter().rev() {
                dp = dp * z[i] + p;
                p = p * z[i] + ak;
            }
            if p == Complex64::new(0.0, 0.0) {
                done[i] = true;
                continue;
            }
            let ratio = p / dp;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| (z[i] - z[j]).inv()).sum();
            let w = ratio / (1.0 - ratio * s);
            if !w.is_finite() {
                return None;
            }
            z[i] -= w;
            if w.norm() <= 1e-15 * z[i].norm() {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            break;
        }
    }
    let distinct = (0..n).all(|i| z[i].is_finite() && (i + 1..n).all(|j| z[i] != z[j]));
    distinct.then_some(z)
}

pub(crate) struct AberthResult {
    pub roots: Vec<BigComplex>,
    pub converged: bool,
}

/// All roots of `Σ c_k z^k` (`c` ascending, `c_0 ≠ 0`, `c_n ≠ 0`).
pub(crate) fn aberth(c: &[BigFloat], prec: usize, max_iter: usize) -> AberthResult {
    let n = c.len() - 1;
    if n == 1 {
        let r = -(&c[0] / &c[1]);
        return AberthResult { roots: vec![BigComplex::real(r, prec)], converged: true };
    }
    let mut z = match warm_start(c) {
        Some(w) => w.iter().map(|z| BigComplex::new(fl(z.re, prec), fl(z.im, prec))).collect(),
        None => initial_guesses(c, prec),
    };
    let one = BigComplex::real(fl(1.0, prec), prec);
    let mut done = vec![false; n];
    let tol_log2 = -(prec as f64) + 8.0;
    let mut converged = false;
    for _ in 0..max_iter {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (p, dp) = horner2(c, &z[i], prec);
            if p.is_zero() {
                done[i] = true;
                continue;
            }
            let ratio = p.div(&dp);
            let mut s = BigComplex::zero(prec);
            for j in 0..n {
                if j != i {
                    s = s.add(&z[i].sub(&z[j]).recip());
                }
            }
            let w = ratio.div(&one.sub(&ratio.mul(&s)));
            let small = w.log2_abs() <= tol_log2 + z[i].log2_abs().max(-(prec as f64));
            z[i] = z[i].sub(&w);
            // Ill-conditioned roots stall above the correction threshold;
            // a backward error at working precision is as good as it gets.
            if small || relative_residual(c, &z[i], prec).log2() <= tol_log2 {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            converged = true;
            break;
        }
    }
    AberthResult { roots: z, converged }
}
