use exact_scalar::FloatEval;
use num_complex::Complex64;
use poly_core::{derivative, ExactPoly};

use crate::aberth::{aberth, horner2, relative_residual, BigComplex};
use crate::squarefree::distinct_root_count;
use crate::RootError;

/// Distinct roots with multiplicities.
#[derive(Clone, Debug)]
pub struct RootSet {
    pub distinct: Vec<(Complex64, usize)>,
    /// Largest backward error `|P(z)| / Σ|a_k||z|^k` over the distinct roots.
    pub residual: f64,
}

impl RootSet {
    /// Every root repeated by its multiplicity.
    pub fn expanded(&self) -> Vec<Complex64> {
        self.distinct
            .iter()
            .flat_map(|&(z, m)| std::iter::repeat(z).take(m))
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.distinct.iter().all(|&(_, m)| m == 1)
    }
}

fn iteration_cap(n: usize) -> usize {
    80 + 8 * n
}

/// Single-linkage clustering of `z` into `k` groups.
fn cluster(z: &[BigComplex], k: usize) -> Vec<Vec<usize>> {
    let n = z.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut i = i;
        while p[i] != r {
            let next = p[i];
            p[i] = r;
            i = next;
        }
        r
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in i + 1..n {
            edges.push((z[i].sub(&z[j]).log2_abs(), i, j));
        }
    }
    edges.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut groups = n;
    for (_, i, j) in edges {
        if groups <= k {
            break;
        }
        let (a, b) = (find(&mut parent, i), find(&mut parent, j));
        if a != b {
            parent[a] = b;
            groups -= 1;
        }
    }
    let mut out: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for i in 0..n {
        let r = find(&mut parent, i);
        out.entry(r).or_default().push(i);
    }
    out.into_values().collect()
}

/// Roots of a polynomial with nonzero constant term, in multiprecision.
fn solve_big(p: &ExactPoly, prec: usize) -> Result<Vec<(BigComplex, usize)>, RootError> {
    let n = p.degree().expect("nonzero");
    let mut ev = FloatEval::new(prec);
    let c = p.to_big_coeffs(&mut ev);
    let d = distinct_root_count(p);
    let res = aberth(&c, prec, iteration_cap(n));
    if d == n {
        if !res.converged {
            return Err(RootError::NoConvergence {
                partial: res.roots.iter().map(|z| z.to_c64()).collect(),
            });
        }
        return Ok(res.roots.into_iter().map(|z| (z, 1)).collect());
    }
    let groups = cluster(&res.roots, d);
    Ok(groups
        .into_iter()
        .map(|g| {
            let m = g.len();
            let mut s = BigComplex::zero(prec);
            for &i in &g {
                s = s.add(&res.roots[i]);
            }
            let centroid = s.mul_real(&crate::aberth::fl(1.0 / m as f64, prec));
            if m == 1 {
                return (centroid, 1);
            }
            // A root of multiplicity m is a simple root of P^{(m−1)}.
            let mut dp = p.clone();
            for _ in 1..m {
                dp = derivative(&dp);
            }
            (newton(&dp.to_big_coeffs(&mut ev), centroid, prec), m)
        })
        .collect())
}

fn newton(c: &[exact_scalar::BigFloat], mut z: BigComplex, prec: usize) -> BigComplex {
    let tol = -(prec as f64) + 8.0;
    for _ in 0..100 {
        let (v, dv) = horner2(c, &z, prec);
        if v.is_zero() || dv.is_zero() {
            break;
        }
        let w = v.div(&dv);
        z = z.sub(&w);
        if w.log2_abs() <= tol + z.log2_abs().max(-(prec as f64)) {
            break;
        }
    }
    z
}

/// All roots of `P`, with multiplicities.
///
/// Zero roots are split off exactly. An even remainder `Q(t²)` is solved in
/// `u = t²`, which halves the degree and keeps the `±` pairing exact. The
/// number of distinct roots comes from a modular `gcd(P, P′)`; when it is
/// below the degree, the Aberth approximations are clustered, and each
/// centroid is polished by Newton's method on `P^{(m−1)}`.
pub fn numeric_roots_detailed(p: &ExactPoly, precision_bits: usize) -> Result<RootSet, RootError> {
    let n = p.degree().ok_or_else(|| RootError::Domain("zero polynomial".into()))?;
    if n == 0 {
        return Err(RootError::Domain("constant polynomial has no roots".into()));
    }
    let prec = precision_bits.max(64);
    let low = p.coeffs().iter().position(|c| !c.is_zero()).expect("nonzero");
    let rest = p.shift_down(low).expect("exact shift");
    let mut distinct: Vec<(BigComplex, usize)> = Vec::new();
    if rest.degree().unwrap_or(0) > 0 {
        match rest.even_to_square_variable() {
            Some(q) if rest.degree().unwrap_or(0) >= 2 => {
                for (u, m) in solve_big(&q, prec)? {
                    let r = u.sqrt();
                    let neg = BigComplex::zero(prec).sub(&r);
                    distinct.push((r, m));
                    distinct.push((neg, m));
                }
            }
            _ => distinct = solve_big(&rest, prec)?,
        }
    }
    let mut ev = FloatEval::new(prec);
    let c = rest.to_big_coeffs(&mut ev);
    let residual = distinct
        .iter()
        .map(|(z, _)| relative_residual(&c, z, prec))
        .fold(0.0, f64::max);
    let mut out: Vec<(Complex64, usize)> = Vec::with_capacity(distinct.len() + 1);
    if low > 0 {
        out.push((Complex64::new(0.0, 0.0), low));
    }
    out.extend(distinct.iter().map(|(z, m)| (z.to_c64(), *m)));
    out.sort_by(|a, b| a.0.im.total_cmp(&b.0.im).then(a.0.re.total_cmp(&b.0.re)));
    Ok(RootSet { distinct: out, residual })
}

/// All `deg P` roots, repeated by multiplicity.
pub fn numeric_roots(p: &ExactPoly, precision_bits: usize) -> Result<Vec<Complex64>, RootError> {
    Ok(numeric_roots_detailed(p, precision_bits)?.expanded())
}
