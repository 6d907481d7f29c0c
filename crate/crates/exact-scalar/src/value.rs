use std::collections::BTreeMap;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use dashu_base::Sign;
use dashu_int::{IBig, UBig};
use dashu_ratio::RBig;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::ScalarError;

/// Rational number in lowest terms with a positive denominator.
pub type Rational = RBig;

/// A finite sum `Σ q_m π^{m/2}` with rational `q_m` and `m ≥ 0`.
///
/// Zero coefficients are never stored, so a value is zero exactly when the
/// map is empty. Since π is transcendental the representation is unique.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct PiHalfValue {
    terms: BTreeMap<u32, RBig>,
}

impl PiHalfValue {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(RBig::ONE, 0)
    }

    /// `q · π^{m/2}`.
    pub fn monomial(q: RBig, m: u32) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(m, q);
        }
        Self { terms }
    }

    pub fn from_rational(q: RBig) -> Self {
        Self::monomial(q, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(RBig::from(n))
    }

    /// `num/den` as a value; panics on a zero denominator.
    pub fn ratio(num: i64, den: i64) -> Self {
        Self::from_rational(RBig::from_parts_signed(IBig::from(num), IBig::from(den)))
    }

    pub fn sqrt_pi() -> Self {
        Self::monomial(RBig::ONE, 1)
    }

    pub fn pi() -> Self {
        Self::monomial(RBig::ONE, 2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|q| q.is_one())
    }

    /// Terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &RBig)> + '_ {
        self.terms.iter().map(|(m, q)| (*m, q))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: u32) -> Option<&RBig> {
        self.terms.get(&m)
    }

    pub fn min_exponent(&self) -> Option<u32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// The rational value when no power of π is involved.
    pub fn as_rational(&self) -> Option<RBig> {
        match self.terms.len() {
            0 => Some(RBig::ZERO),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// `(q, m)` when the value is a single term.
    pub fn as_monomial(&self) -> Option<(&RBig, u32)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, q)| (q, *m))
        } else {
            None
        }
    }

    /// Sign of a single-term value; `None` when several terms compete.
    pub fn trivial_sign(&self) -> Option<Sign> {
        let mut it = self.terms.values();
        let first = it.next()?.sign();
        if it.all(|q| q.sign() == first) {
            Some(first)
        } else {
            None
        }
    }

    pub fn scale(&self, q: &RBig) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(m, c)| (*m, c * q)).collect(),
        }
    }

    /// Multiply by `π^{k/2}`.
    pub fn shift(&self, k: u32) -> Self {
        Self {
            terms: self.terms.iter().map(|(m, c)| (m + k, c.clone())).collect(),
        }
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient in the polynomial ring Q[√π], or `None` when `other`
    /// does not divide `self` (or `other` is zero).
    pub fn div_exact(&self, other: &Self) -> Option<Self> {
        let (&e, lead) = other.terms.iter().next_back()?;
        if let Some((q, m)) = other.as_monomial() {
            let inv = RBig::ONE / q;
            let mut terms = BTreeMap::new();
            for (k, c) in &self.terms {
                if *k < m {
                    return None;
                }
                terms.insert(k - m, c * &inv);
            }
            return Some(Self { terms });
        }
        let mut rem = self.clone();
        let mut quot = BTreeMap::new();
        while let Some((&d, rd)) = rem.terms.iter().next_back() {
            if d < e {
                return None;
            }
            let q = rd / lead;
            let shift = d - e;
            let mut sub = BTreeMap::new();
            for (k, c) in &other.terms {
                sub.insert(k + shift, c * &q);
            }
            rem -= &Self { terms: sub };
            quot.insert(shift, q);
        }
        Some(Self { terms: quot })
    }

    fn add_term(&mut self, m: u32, q: RBig) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !q.is_zero() {
                    v.insert(q);
                }
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + q;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }
}

impl From<i64> for PiHalfValue {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<RBig> for PiHalfValue {
    fn from(q: RBig) -> Self {
        Self::from_rational(q)
    }
}

impl AddAssign<&PiHalfValue> for PiHalfValue {
    fn add_assign(&mut self, rhs: &PiHalfValue) {
        for (m, q) in &rhs.terms {
            self.add_term(*m, q.clone());
        }
    }
}

impl SubAssign<&PiHalfValue> for PiHalfValue {
    fn sub_assign(&mut self, rhs: &PiHalfValue) {
        for (m, q) in &rhs.terms {
            self.add_term(*m, -q.clone());
        }
    }
}

impl MulAssign<&PiHalfValue> for PiHalfValue {
    fn mul_assign(&mut self, rhs: &PiHalfValue) {
        *self = &*self * rhs;
    }
}

impl Add<&PiHalfValue> for &PiHalfValue {
    type Output = PiHalfValue;
    fn add(self, rhs: &PiHalfValue) -> PiHalfValue {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub<&PiHalfValue> for &PiHalfValue {
    type Output = PiHalfValue;
    fn sub(self, rhs: &PiHalfValue) -> PiHalfValue {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul<&PiHalfValue> for &PiHalfValue {
    type Output = PiHalfValue;
    fn mul(self, rhs: &PiHalfValue) -> PiHalfValue {
        let mut out = PiHalfValue::zero();
        for (a, p) in &self.terms {
            for (b, q) in &rhs.terms {
                out.add_term(a + b, p * q);
            }
        }
        out
    }
}

impl Neg for &PiHalfValue {
    type Output = PiHalfValue;
    fn neg(self) -> PiHalfValue {
        PiHalfValue {
            terms: self.terms.iter().map(|(m, q)| (*m, -q.clone())).collect(),
        }
    }
}

impl Neg for PiHalfValue {
    type Output = PiHalfValue;
    fn neg(mut self) -> PiHalfValue {
        for q in self.terms.values_mut() {
            *q = -std::mem::take(q);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<PiHalfValue> for PiHalfValue {
            type Output = PiHalfValue;
            fn $f(self, rhs: PiHalfValue) -> PiHalfValue {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&PiHalfValue> for PiHalfValue {
            type Output = PiHalfValue;
            fn $f(self, rhs: &PiHalfValue) -> PiHalfValue {
                (&self).$f(rhs)
            }
        }
        impl $tr<PiHalfValue> for &PiHalfValue {
            type Output = PiHalfValue;
            fn $f(self, rhs: PiHalfValue) -> PiHalfValue {
                self.$f(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl AddAssign<PiHalfValue> for PiHalfValue {
    fn add_assign(&mut self, rhs: PiHalfValue) {
        *self += &rhs;
    }
}

impl SubAssign<PiHalfValue> for PiHalfValue {
    fn sub_assign(&mut self, rhs: PiHalfValue) {
        *self -= &rhs;
    }
}

impl Sum for PiHalfValue {
    fn sum<I: Iterator<Item = PiHalfValue>>(iter: I) -> Self {
        let mut acc = PiHalfValue::zero();
        for x in iter {
            acc += &x;
        }
        acc
    }
}

impl<'a> Sum<&'a PiHalfValue> for PiHalfValue {
    fn sum<I: Iterator<Item = &'a PiHalfValue>>(iter: I) -> Self {
        let mut acc = PiHalfValue::zero();
        for x in iter {
            acc += x;
        }
        acc
    }
}

/// Formats a rational as `num/den`, always with an explicit denominator.
pub fn fmt_rational(q: &RBig) -> String {
    format!("{}/{}", q.numerator(), q.denominator())
}

/// Parses `num/den` or a bare integer.
pub fn parse_rational(s: &str) -> Result<RBig, ScalarError> {
    let bad = || ScalarError::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: IBig = n.trim().parse().map_err(|_| bad())?;
            let d: UBig = d.trim().parse().map_err(|_| bad())?;
            if d == UBig::ZERO {
                return Err(ScalarError::Domain("zero denominator".into()));
            }
            Ok(RBig::from_parts(n, d))
        }
        None => {
            let n: IBig = s.parse().map_err(|_| bad())?;
            Ok(RBig::from(n))
        }
    }
}

impl fmt::Display for PiHalfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, q)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match m {
                0 => write!(f, "{q}")?,
                1 => write!(f, "({q})*pi^(1/2)")?,
                m if m % 2 == 0 => write!(f, "({q})*pi^{}", m / 2)?,
                m => write!(f, "({q})*pi^({m}/2)")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PiHalfValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PiHalfValue({self})")
    }
}

impl Serialize for PiHalfValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let pairs: Vec<(u32, String)> = self
            .terms
            .iter()
            .map(|(m, q)| (*m, fmt_rational(q)))
            .collect();
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PiHalfValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let pairs: Vec<(u32, String)> = Vec::deserialize(d)?;
        let mut out = PiHalfValue::zero();
        for (m, q) in pairs {
            let q = parse_rational(&q).map_err(D::Error::custom)?;
            out.add_term(m, q);
        }
        Ok(out)
    }
}
