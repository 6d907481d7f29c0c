use num_complex::Complex64;
use serde::Serialize;

use crate::EntireError;

#[derive(Clone, Debug, Serialize)]
pub struct KakeyaReport {
    pub points: usize,
    pub min_abs: f64,
    /// Smallest `|I(z)| / ∫ φ(ξ) e^{ξ Re z} dξ`; zero would mean a root.
    pub min_ratio: f64,
    pub argmin: Complex64,
    pub all_nonzero: bool,
}

/// `∫_a^b (φ_a + s(ξ − a)) e^{ξz} dξ`.
fn linear_piece(a: f64, b: f64, fa: f64, s: f64, z: Complex64) -> Complex64 {
    let h = b - a;
    if (z * h).norm() < 1e-2 {
        // short, nearly flat piece: 4-point Gauss-Legendre is exact to O((zh)^8)
        const X: [f64; 4] = [-0.861_136_311_594_052_6, -0.339_981_043_584_856_3, 0.339_981_043_584_856_3, 0.861_136_311_594_052_6];
        const W: [f64; 4] = [0.347_854_845_137_453_9, 0.652_145_154_862_546_1, 0.652_145_154_862_546_1, 0.347_854_845_137_453_9];
        return X
            .iter()
            .zip(W)
            .map(|(&x, w)| {
                let xi = a + h * (x + 1.0) / 2.0;
                w * (fa + s * (xi - a)) * (xi * z).exp()
            })
            .sum::<Complex64>()
            * (h / 2.0);
    }
    let f = |xi: f64, phi: f64| (xi * z).exp() * (phi / z - s / (z * z));
    f(b, fa + s * h) - f(a, fa)
}

fn integral(w: &[f64], z: Complex64) -> Complex64 {
    let h = 1.0 / (w.len() - 1) as f64;
    w.windows(2)
        .enumerate()
        .map(|(i, p)| {
            let a = i as f64 * h;
            linear_piece(a, a + h, p[0], (p[1] - p[0]) / h, z)
        })
        .sum()
}

/// Checks that `I(z) = ∫₀¹ φ(ξ) e^{ξz} dξ` stays away from zero on a grid in
/// the closed right half-plane, for `φ` given by samples on a uniform grid
/// of `[0, 1]` and interpolated linearly (exact integration per piece).
pub fn kakeya_polya_check(weight_samples: &[f64], t_grid: &[Complex64]) -> Result<KakeyaReport, EntireError> {
    if weight_samples.len() < 2 {
        return Err(EntireError::Precondition("need at least two weight samples".into()));
    }
    if weight_samples.iter().any(|&x| !(x >= 0.0)) {
        return Err(EntireError::Precondition("weight must be non-negative".into()));
    }
    if weight_samples.windows(2).any(|p| p[1] < p[0]) {
        return Err(EntireError::Precondition("weight must be non-decreasing".into()));
    }
    if weight_samples.iter().all(|&x| x == 0.0) {
        return Err(EntireError::Precondition("weight vanishes identically".into()));
    }
    if let Some(z) = t_grid.iter().find(|z| z.re < 0.0) {
        return Err(EntireError::Precondition(format!("grid point {z} lies in the left half-plane")));
    }
    let mut rep = KakeyaReport {
        points: t_grid.len(),
        min_abs: f64::INFINITY,
        min_ratio: f64::INFINITY,
        argmin: Complex64::new(f64::NAN, f64::NAN),
        all_nonzero: true,
    };
    for &z in t_grid {
        let v = integral(weight_samples, z).norm();
        let scale = integral(weight_samples, Complex64::new(z.re, 0.0)).re;
        let ratio = v / scale;
        rep.min_abs = rep.min_abs.min(v);
        if ratio < rep.min_ratio {
            rep.min_ratio = ratio;
            rep.argmin = z;
        }
    }
    rep.all_nonzero = rep.min_ratio > 1e-12;
    Ok(rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_weight() {
        let r = kakeya_polya_check(&[1.0, 1.0], &[Complex64::new(1.0, 0.0)]).unwrap();
        assert!((r.min_abs - (std::f64::consts::E - 1.0)).abs() < 1e-14);
    }

    #[test]
    fn linear_weight_has_no_zero() {
        let w: Vec<f64> = (0..=100).map(|i| i as f64 / 100.0).collect();
        let grid: Vec<Complex64> = (0..=20)
            .flat_map(|x| (-50..=50).map(move |y| Complex64::new(x as f64, y as f64)))
            .collect();
        let r = kakeya_polya_check(&w, &grid).unwrap();
        assert!(r.all_nonzero);
        // exact: ∫ ξ e^{ξz} = ((z−1)e^z + 1)/z²
        let z = Complex64::new(3.0, 7.0);
        let exact = ((z - 1.0) * z.exp() + 1.0) / (z * z);
        assert!((integral(&w, z) - exact).norm() < 1e-12);
    }

    #[test]
    fn decreasing_weight_rejected() {
        assert!(kakeya_polya_check(&[1.0, 0.5], &[Complex64::new(1.0, 0.0)]).is_err());
    }
}
