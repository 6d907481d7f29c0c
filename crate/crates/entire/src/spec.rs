use std::fmt;
use std::str::FromStr;

use exact_scalar::{fmt_rational, parse_rational, RBig};
use weyl::WeylIndex;

use crate::EntireError;

/// `Σ_k Π Γ(a_j k + b_j) / Π Γ(c_j k + d_j) · t^k / k!`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoxWrightParams {
    pub upper: Vec<(RBig, RBig)>,
    pub lower: Vec<(RBig, RBig)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesSpec {
    /// `𝓜_{B^∞×0^q}`; `q = 0` gives `e^t`.
    MBallAdjoint(u32),
    /// `𝓦_{∂B^∞}`.
    WBall(WeylIndex),
    /// `𝓦_{∂(B^∞×0)}`.
    WBallCyl(WeylIndex),
    /// `𝓦_{∂Q^∞}`.
    WCube(WeylIndex),
    /// `𝓦_{∂(Q^∞×0)}`.
    WCubeCyl(WeylIndex),
    /// Odd companion of the cylinder series, `(𝓜_p(it) − 𝓜_p(−it)) / 2i`.
    WBallCylSine(u32),
    /// `√π · ℰ_{1,1/2}(t)`. The `√π` keeps every coefficient rational.
    MittagLeffler,
    FoxWright(FoxWrightParams),
}

impl SeriesSpec {
    pub fn family(&self) -> &'static str {
        match self {
            SeriesSpec::MBallAdjoint(_) => "m-ball-adjoint",
            SeriesSpec::WBall(_) => "w-ball",
            SeriesSpec::WBallCyl(_) => "w-ball-cyl",
            SeriesSpec::WCube(_) => "w-cube",
            SeriesSpec::WCubeCyl(_) => "w-cube-cyl",
            SeriesSpec::WBallCylSine(_) => "w-ball-cyl-sine",
            SeriesSpec::MittagLeffler => "mittag-leffler",
            SeriesSpec::FoxWright(_) => "fox-wright",
        }
    }

    /// The `p` or `q` parameter as printed in scan tables.
    pub fn index_label(&self) -> String {
        match self {
            SeriesSpec::MBallAdjoint(q) | SeriesSpec::WBallCylSine(q) => q.to_string(),
            SeriesSpec::WBall(p) | SeriesSpec::WBallCyl(p) | SeriesSpec::WCube(p) | SeriesSpec::WCubeCyl(p) => {
                p.to_string()
            }
            SeriesSpec::MittagLeffler => "-".into(),
            SeriesSpec::FoxWright(f) => fox_wright_params(f),
        }
    }

    /// Whether the series lives in `t²` (the 𝓦 families).
    pub fn is_even(&self) -> bool {
        matches!(
            self,
            SeriesSpec::WBall(_) | SeriesSpec::WBallCyl(_) | SeriesSpec::WCube(_) | SeriesSpec::WCubeCyl(_)
        )
    }
}

fn short(x: &RBig) -> String {
    if x.denominator() == &exact_scalar::UBig::ONE {
        x.numerator().to_string()
    } else {
        fmt_rational(x)
    }
}

fn fox_wright_params(f: &FoxWrightParams) -> String {
    let side = |v: &[(RBig, RBig)]| {
        v.iter()
            .map(|(a, b)| format!("{},{}", short(a), short(b)))
            .collect::<Vec<_>>()
            .join(";")
    };
    format!("{}|{}", side(&f.upper), side(&f.lower))
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesSpec::MittagLeffler => write!(f, "mittag-leffler"),
            s => write!(f, "{}:{}", s.family(), s.index_label()),
        }
    }
}

fn parse_pairs(s: &str) -> Result<Vec<(RBig, RBig)>, EntireError> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(';')
        .map(|pair| {
            let (a, b) = pair
                .split_once(',')
                .ok_or_else(|| EntireError::Domain(format!("expected `a,b`, got `{pair}`")))?;
            let p = |x: &str| parse_rational(x.trim()).map_err(|e| EntireError::Domain(e.to_string()));
            Ok((p(a)?, p(b)?))
        })
        .collect()
}

/// Accepts `m-ball-adjoint:q`, `w-ball:p`, `w-ball-cyl:p`, `w-cube:p`,
/// `w-cube-cyl:p` (with `p` an integer or `inf`), `w-ball-cyl-sine:p`,
/// `mittag-leffler`, and `fox-wright:a,b;…|c,d;…`.
impl FromStr for SeriesSpec {
    type Err = EntireError;
    fn from_str(s: &str) -> Result<Self, EntireError> {
        let s = s.trim();
        let (name, arg) = s.split_once(':').unwrap_or((s, ""));
        let index = || arg.parse::<WeylIndex>().map_err(|e| EntireError::Domain(e.to_string()));
        let int = || {
            arg.parse::<u32>()
                .map_err(|_| EntireError::Domain(format!("expected a non-negative integer, got `{arg}`")))
        };
        Ok(match name {
            "m-ball-adjoint" => SeriesSpec::MBallAdjoint(int()?),
            "w-ball" => SeriesSpec::WBall(index()?),
            "w-ball-cyl" => SeriesSpec::WBallCyl(index()?),
            "w-cube" => SeriesSpec::WCube(index()?),
            "w-cube-cyl" => SeriesSpec::WCubeCyl(index()?),
            "w-ball-cyl-sine" => match int()? {
                0 => return Err(EntireError::Domain("the sine series needs p >= 1".into())),
                p => SeriesSpec::WBallCylSine(p),
            },
            "mittag-leffler" => SeriesSpec::MittagLeffler,
            "fox-wright" => {
                let (up, lo) = arg
                    .split_once('|')
                    .ok_or_else(|| EntireError::Domain("fox-wright needs `upper|lower` parameter lists".into()))?;
                SeriesSpec::FoxWright(FoxWrightParams { upper: parse_pairs(up)?, lower: parse_pairs(lo)? })
            }
            other => return Err(EntireError::Domain(format!("unknown series family `{other}`"))),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        for s in [
            "m-ball-adjoint:4",
            "w-ball:inf",
            "w-ball-cyl:5",
            "w-cube:2",
            "w-cube-cyl:inf",
            "w-ball-cyl-sine:3",
            "mittag-leffler",
            "fox-wright:1/2,1|1/2,3",
        ] {
            let spec: SeriesSpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
        }
        assert!("w-ball:0".parse::<SeriesSpec>().is_err());
        assert!("bessel:1".parse::<SeriesSpec>().is_err());
    }
}
