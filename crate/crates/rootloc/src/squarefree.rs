//! Number of distinct roots via `gcd(P, P′)` over prime fields.
//!
//! `√π` is transcendental, so a polynomial over `ℚ[√π]` is a polynomial over
//! `ℚ(x)`. Specialising `x` to a random residue modulo a large prime can only
//! raise the degree of `gcd(P, P′)`, and does so with negligible probability;
//! the minimum over several trials is the generic degree. A trial with gcd
//! degree 0 is a proof that `P` is square-free.

use dashu_int::{IBig, UBig};
use exact_scalar::PiHalfValue;
use poly_core::ExactPoly;

const PRIMES: [u64; 3] = [(1 << 61) - 1, u64::MAX - 58, (1 << 63) - 25];

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn submod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + p as u128 - b as u128) % p as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mulmod(r, a, p);
        }
        a = mulmod(a, a, p);
        e >>= 1;
    }
    r
}

fn inv(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn reduce_int(x: &IBig, p: u64) -> u64 {
    let r = x % IBig::from(p);
    let r = if r < IBig::ZERO { r + IBig::from(p) } else { r };
    u64::try_from(&r).expect("residue below p")
}

fn reduce_uint(x: &UBig, p: u64) -> u64 {
    u64::try_from(&(x % UBig::from(p))).expect("residue below p")
}

/// `c` at `√π = x0` modulo `p`; `None` if a denominator vanishes.
fn specialise(c: &PiHalfValue, x0: u64, p: u64) -> Option<u64> {
    let mut acc = 0u64;
    for (m, q) in c.terms() {
        let den = reduce_uint(q.denominator(), p);
        if den == 0 {
            return None;
        }
        let num = reduce_int(q.numerator(), p);
        let term = mulmod(mulmod(num, inv(den, p), p), powmod(x0, m as u64, p), p);
        acc = addmod(acc, term, p);
    }
    Some(acc)
}

fn trim(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn poly_rem(mut a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let db = b.len() - 1;
    let lead_inv = inv(b[db], p);
    while a.len() > db {
        let f = mulmod(*a.last().expect("nonempty"), lead_inv, p);
        let shift = a.len() - 1 - db;
        for (i, &bi) in b.iter().enumerate() {
            let t = mulmod(f, bi, p);
            a[shift + i] = submod(a[shift + i], t, p);
        }
        trim(&mut a);
    }
    a
}

fn gcd_degree(mut a: Vec<u64>, mut b: Vec<u64>, p: u64) -> usize {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let r = poly_rem(a, &b, p);
        a = b;
        b = r;
    }
    a.len().saturating_sub(1)
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Degree of `gcd(P, P′)` over `ℚ(√π)` (with overwhelming probability) and
/// whether the value is certified.
pub fn gcd_with_derivative_degree(poly: &ExactPoly) -> (usize, bool) {
    let n = poly.degree().unwrap_or(0);
    if n <= 1 {
        return (0, true);
    }
    let mut best = n - 1;
    let mut seed = 0x5EED_u64;
    for &p in &PRIMES {
        for _ in 0..2 {
            let x0 = splitmix(&mut seed) % p;
            let spec: Option<Vec<u64>> = poly.coeffs().iter().map(|c| specialise(c, x0, p)).collect();
            let Some(c) = spec else { continue };
            if c[n] == 0 {
                continue;
            }
            let d: Vec<u64> = (1..=n).map(|k| mulmod(c[k], k as u64 % p, p)).collect();
            let g = gcd_degree(c, d, p);
            if g == 0 {
                return (0, true);
            }
            best = best.min(g);
        }
    }
    (best, false)
}

/// Number of distinct complex roots.
pub fn distinct_root_count(poly: &ExactPoly) -> usize {
    let n = poly.degree().unwrap_or(0);
    n - gcd_with_derivative_degree(poly).0
}
