use bodies::{minkowski_polynomial, BodySpec};
use serde::Serialize;

use crate::{tube_volume_curve, McError, SampleableBody};

#[derive(Clone, Debug, Serialize)]
pub struct CompareRow {
    pub t: f64,
    pub estimate: f64,
    pub stderr: f64,
    pub predicted: f64,
    pub z: f64,
    /// `(estimate − predicted) / predicted`.
    pub relative_gap: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareTable {
    pub spec: String,
    /// The body whose polynomial gives `predicted`; differs from `spec` when
    /// ellipsoids were replaced by their squeezed-cylinder limits.
    pub reference: String,
    pub exact: bool,
    pub samples: u64,
    pub seed: u64,
    pub rows: Vec<CompareRow>,
}

impl CompareTable {
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["t", "estimate", "stderr", "predicted", "z"]).expect("in-memory write");
        for r in &self.rows {
            w.write_record([r.t, r.estimate, r.stderr, r.predicted, r.z].map(|v| v.to_string()))
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
    }
}

/// Replaces every ellipsoid with semi-axes `1^n, ε^q` by the `ε → 0` limit
/// `B^n × 0^q`.
pub fn limit_spec(spec: &BodySpec) -> BodySpec {
    match spec {
        BodySpec::Ellipsoid { n, q, .. } => BodySpec::adjoint(BodySpec::Ball(*n), *q),
        BodySpec::Adjoint { base, q } => BodySpec::adjoint(limit_spec(base), *q),
        BodySpec::Product(a, b) => BodySpec::product(limit_spec(a), limit_spec(b)),
        other => other.clone(),
    }
}

/// Monte Carlo estimates against the Minkowski polynomial, one row per `t`.
/// All rows share the same sample points.
pub fn compare_oracle(spec: &BodySpec, t_grid: &[f64], samples: u64, seed: u64) -> Result<CompareTable, McError> {
    let body = SampleableBody::from_spec(spec)?;
    let reference = limit_spec(spec);
    let m = minkowski_polynomial(&reference)?;
    let est = tube_volume_curve(&body, t_grid, samples, seed)?;
    let rows = est
        .into_iter()
        .map(|e| {
            let predicted = m.eval_f64(e.t);
            let diff = e.estimate - predicted;
            let z = if e.stderr > 0.0 {
                diff / e.stderr
            } else if diff == 0.0 {
                0.0
            } else {
                diff.signum() * f64::INFINITY
            };
            CompareRow { t: e.t, estimate: e.estimate, stderr: e.stderr, predicted, z, relative_gap: diff / predicted }
        })
        .collect();
    Ok(CompareTable {
        spec: spec.to_string(),
        reference: reference.to_string(),
        exact: spec.is_exact(),
        samples,
        seed,
        rows,
    })
}
