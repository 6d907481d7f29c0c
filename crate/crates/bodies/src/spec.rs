use std::fmt;
use std::str::FromStr;

use exact_scalar::{fmt_rational, parse_rational, PiHalfValue, RBig};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{BodyError, CrossMeasures};

/// Symbolic convex body.
///
/// `Ellipsoid { n, q, eps }` is the body with semi-axes 1 (n times) and
/// `eps` (q times) in `R^{n+q}`; it is only ever sampled, never expanded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BodySpec {
    Ball(u32),
    Cube(u32),
    Adjoint {
        base: Box<BodySpec>,
        q: u32,
    },
    Product(Box<BodySpec>, Box<BodySpec>),
    Measures(CrossMeasures),
    Ellipsoid {
        n: u32,
        q: u32,
        #[serde(serialize_with = "ser_rat", deserialize_with = "de_rat")]
        eps: RBig,
    },
}

fn ser_rat<S: Serializer>(x: &RBig, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&fmt_rational(x))
}

fn de_rat<'de, D: Deserializer<'de>>(d: D) -> Result<RBig, D::Error> {
    let s = String::deserialize(d)?;
    parse_rational(&s).map_err(serde::de::Error::custom)
}

impl BodySpec {
    pub fn adjoint(base: BodySpec, q: u32) -> Self {
        BodySpec::Adjoint { base: Box::new(base), q }
    }

    pub fn product(a: BodySpec, b: BodySpec) -> Self {
        BodySpec::Product(Box::new(a), Box::new(b))
    }

    pub fn ambient_dim(&self) -> u32 {
        match self {
            BodySpec::Ball(n) | BodySpec::Cube(n) => *n,
            BodySpec::Adjoint { base, q } => base.ambient_dim() + q,
            BodySpec::Product(a, b) => a.ambient_dim() + b.ambient_dim(),
            BodySpec::Measures(m) => m.n(),
            BodySpec::Ellipsoid { n, q, .. } => n + q,
        }
    }

    /// Non-empty interior in the ambient space.
    pub fn is_solid(&self) -> bool {
        match self {
            BodySpec::Adjoint { .. } => false,
            BodySpec::Product(a, b) => a.is_solid() && b.is_solid(),
            _ => true,
        }
    }

    pub fn is_exact(&self) -> bool {
        match self {
            BodySpec::Ellipsoid { .. } => false,
            BodySpec::Adjoint { base, .. } => base.is_exact(),
            BodySpec::Product(a, b) => a.is_exact() && b.is_exact(),
            _ => true,
        }
    }

    pub fn validate(&self) -> Result<(), BodyError> {
        match self {
            BodySpec::Ball(0) | BodySpec::Cube(0) => {
                Err(BodyError::InvalidSpec("dimension must be positive".into()))
            }
            BodySpec::Adjoint { q: 0, .. } => Err(BodyError::InvalidSpec("q must be positive".into())),
            BodySpec::Adjoint { base, .. } => base.validate(),
            BodySpec::Product(a, b) => {
                a.validate()?;
                b.validate()
            }
            BodySpec::Ellipsoid { n, q, eps } => {
                if *n == 0 || *q == 0 {
                    Err(BodyError::InvalidSpec("ellipsoid dimensions must be positive".into()))
                } else if eps <= &RBig::ZERO {
                    Err(BodyError::InvalidSpec("ellipsoid eps must be positive".into()))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }
}

/// Parses either JSON or the inline shorthand:
///
/// ```text
/// ball:3            cube:2            adjoint:ball:2,q=1
/// product:ball:1*cube:1               measures:1,1,1
/// ellipsoid:2,1,1/100
/// ```
///
/// In `product:` the first `*` splits the factors, so nesting goes to the right.
impl FromStr for BodySpec {
    type Err = BodyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.starts_with('{') {
            let spec: BodySpec =
                serde_json::from_str(s).map_err(|e| BodyError::InvalidSpec(e.to_string()))?;
            spec.validate()?;
            return Ok(spec);
        }
        let bad = || BodyError::InvalidSpec(format!("cannot parse body `{s}`"));
        let (head, rest) = s.split_once(':').ok_or_else(bad)?;
        let int = |x: &str| x.trim().parse::<u32>().map_err(|_| bad());
        let spec = match head.trim() {
            "ball" => BodySpec::Ball(int(rest)?),
            "cube" => BodySpec::Cube(int(rest)?),
            "adjoint" => {
                let (base, q) = rest.rsplit_once(",q=").ok_or_else(bad)?;
                BodySpec::adjoint(base.parse()?, int(q)?)
            }
            "product" => {
                let (a, b) = rest.split_once('*').ok_or_else(bad)?;
                BodySpec::product(a.parse()?, b.parse()?)
            }
            "measures" => {
                let v = rest
                    .split(',')
                    .map(|x| parse_rational(x.trim()).map(PiHalfValue::from_rational))
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| bad())?;
                BodySpec::Measures(CrossMeasures::new(v)?)
            }
            "ellipsoid" => {
                let parts: Vec<&str> = rest.split(',').collect();
                if parts.len() != 3 {
                    return Err(bad());
                }
                BodySpec::Ellipsoid {
                    n: int(parts[0])?,
                    q: int(parts[1])?,
                    eps: parse_rational(parts[2].trim()).map_err(|_| bad())?,
                }
            }
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for BodySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BodySpec::Ball(n) => write!(f, "ball:{n}"),
            BodySpec::Cube(n) => write!(f, "cube:{n}"),
            BodySpec::Adjoint { base, q } => write!(f, "adjoint:{base},q={q}"),
            BodySpec::Product(a, b) => write!(f, "product:{a}*{b}"),
            BodySpec::Measures(m) => write!(f, "measures(n={})", m.n()),
            BodySpec::Ellipsoid { n, q, eps } => write!(f, "ellipsoid:{n},{q},{}", fmt_rational(eps)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shorthand() {
        assert_eq!("ball:3".parse::<BodySpec>().unwrap(), BodySpec::Ball(3));
        let a: BodySpec = "adjoint:ball:2,q=1".parse().unwrap();
        assert_eq!(a, BodySpec::adjoint(BodySpec::Ball(2), 1));
        assert_eq!(a.ambient_dim(), 3);
        assert!(!a.is_solid());
        let p: BodySpec = "product:adjoint:ball:1,q=1*cube:2".parse().unwrap();
        assert_eq!(p.ambient_dim(), 4);
        let e: BodySpec = "ellipsoid:2,1,1/100".parse().unwrap();
        assert!(!e.is_exact());
        assert!("ball:0".parse::<BodySpec>().is_err());
        assert!("sphere:2".parse::<BodySpec>().is_err());
        assert!("ellipsoid:2,1,-1".parse::<BodySpec>().is_err());
    }

    #[test]
    fn json_forms() {
        let p = BodySpec::product(BodySpec::Ball(1), BodySpec::adjoint(BodySpec::Cube(2), 3));
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"product":[{"ball":1},{"adjoint":{"base":{"cube":2},"q":3}}]}"#);
        assert_eq!(s.parse::<BodySpec>().unwrap(), p);
        let e: BodySpec = r#"{"ellipsoid":{"n":2,"q":1,"eps":"1/100"}}"#.parse().unwrap();
        assert_eq!(serde_json::to_string(&e).unwrap(), r#"{"ellipsoid":{"n":2,"q":1,"eps":"1/100"}}"#);
        let m: BodySpec = r#"{"measures":{"n":2,"v":[[[0,"1/1"]],[[0,"1/1"]],[[0,"1/1"]]]}}"#
            .parse()
            .unwrap();
        assert_eq!(m.ambient_dim(), 2);
        assert!(r#"{"measures":{"n":3,"v":[[[0,"1/1"]]]}}"#.parse::<BodySpec>().is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["ball:3", "adjoint:cube:2,q=2", "product:ball:1*cube:1", "ellipsoid:2,1,1/100"] {
            let b: BodySpec = s.parse().unwrap();
            assert_eq!(b.to_string(), s);
        }
    }
}
