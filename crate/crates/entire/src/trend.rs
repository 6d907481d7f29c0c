use std::str::FromStr;

use poly_core::jensen_polynomial;
use rayon::prelude::*;
use rootloc::numeric_roots_detailed;
use serde::Serialize;

use crate::series::taylor_coefficients;
use crate::spec::SeriesSpec;
use crate::EntireError;

pub const MAX_DEGREE: u32 = 400;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrendMode {
    /// Roots with `Re z ≥ 0` (Hurwitz-type families).
    RightHalfPlane,
    /// Non-real roots (Laguerre-Pólya-type families).
    OffAxis,
}

impl FromStr for TrendMode {
    type Err = EntireError;
    fn from_str(s: &str) -> Result<Self, EntireError> {
        match s {
            "right-half-plane" | "rhp" => Ok(TrendMode::RightHalfPlane),
            "off-axis" | "axis" => Ok(TrendMode::OffAxis),
            _ => Err(EntireError::Domain(format!("unknown trend mode `{s}`"))),
        }
    }
}

#[derive(Clone, Debug)]
pub struct TrendOptions {
    /// Roots count as violating when past the boundary by `tol·(|z|+1)`.
    pub tol: f64,
    /// Floor for the working precision; degree `n` uses at least `128 + 2n`.
    pub precision_bits: usize,
}

impl Default for TrendOptions {
    fn default() -> Self {
        Self { tol: 1e-9, precision_bits: 256 }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TrendRow {
    pub degree: u32,
    pub family: String,
    pub index: String,
    /// Roots violating the mode (named for the CSV column).
    pub count_off_axis: usize,
    /// Largest `Re z` (half-plane mode) or `|Im z|` (axis mode).
    pub max_violation: f64,
    pub residual: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrendReport {
    pub spec: String,
    pub mode: TrendMode,
    pub rows: Vec<TrendRow>,
    /// Whether the counts never drop as the degree grows.
    pub nondecreasing: bool,
}

impl TrendReport {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["degree", "family", "p/q", "count_off_axis", "max_violation"])
            .expect("in-memory write");
        for r in &self.rows {
            w.write_record([
                r.degree.to_string(),
                r.family.clone(),
                r.index.clone(),
                r.count_off_axis.to_string(),
                format!("{:e}", r.max_violation),
            ])
            .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

fn row(spec: &SeriesSpec, n: u32, mode: TrendMode, opts: &TrendOptions) -> Result<TrendRow, EntireError> {
    let coeffs = taylor_coefficients(spec, n as usize + 1)?;
    let j = jensen_polynomial(&coeffs, n).map_err(|e| EntireError::Domain(e.to_string()))?;
    let prec = opts.precision_bits.max(128 + 2 * n as usize);
    let roots = numeric_roots_detailed(&j, prec)?;
    let mut count = 0;
    let mut worst = f64::NEG_INFINITY;
    for z in roots.expanded() {
        let slack = opts.tol * (z.norm() + 1.0);
        let (bad, measure) = match mode {
            TrendMode::RightHalfPlane => (z.re >= -slack, z.re),
            TrendMode::OffAxis => (z.im.abs() > slack, z.im.abs()),
        };
        count += bad as usize;
        worst = worst.max(measure);
    }
    Ok(TrendRow {
        degree: n,
        family: spec.family().into(),
        index: spec.index_label(),
        count_off_axis: count,
        max_violation: worst,
        residual: roots.residual,
    })
}

/// Root counts of the Jensen polynomials `𝒥_n` (degree `n` in `t`) of a
/// series, one row per requested degree.
pub fn truncation_root_trend(
    spec: &SeriesSpec,
    degrees: &[u32],
    mode: TrendMode,
    opts: &TrendOptions,
) -> Result<TrendReport, EntireError> {
    if let Some(&n) = degrees.iter().find(|&&n| n == 0 || n > MAX_DEGREE) {
        return Err(EntireError::Precondition(format!("degrees must lie in 1..={MAX_DEGREE}, got {n}")));
    }
    let mut rows: Vec<TrendRow> = degrees.par_iter().map(|&n| row(spec, n, mode, opts)).collect::<Result<_, _>>()?;
    rows.sort_by_key(|r| r.degree);
    let nondecreasing = rows.windows(2).all(|w| w[0].count_off_axis <= w[1].count_off_axis);
    Ok(TrendReport { spec: spec.to_string(), mode, rows, nondecreasing })
}
