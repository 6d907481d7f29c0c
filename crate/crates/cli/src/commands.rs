use bodies::{minkowski_polynomial, polynomial_to_measures, BodySpec, CrossMeasures};
use entire::{taylor_coefficients, truncation_root_trend, TrendOptions};
use exact_scalar::{sign_and_float, PiHalfValue};
use mc_oracle::compare_oracle;
use num_complex::Complex64;
use poly_core::{jensen_polynomial, ExactPoly};
use rootloc::{
    af_inequalities, classify, counterexample_search, default_families, low_dim_inequalities, numeric_roots,
    ClassifyOptions, Mode,
};
use serde_json::json;
use weyl::{adjoint_weyl_reduction, surface_weyl_coefficients, surface_weyl_polynomial};

use crate::output::{f, Output};
use crate::{Cli, CliError, Command, Common};

fn approx(x: &PiHalfValue) -> f64 {
    sign_and_float(x, 64).1
}

fn coefficient_rows(p: &ExactPoly) -> Vec<Vec<String>> {
    p.coeffs().iter().enumerate().map(|(k, c)| vec![k.to_string(), c.to_string(), f(approx(c))]).collect()
}

fn poly_json(p: &ExactPoly) -> serde_json::Value {
    json!({
        "exact": p,
        "display": p.to_string(),
        "approx": p.coeffs().iter().map(approx).collect::<Vec<_>>(),
    })
}

fn root_rows(z: &[Complex64]) -> Vec<Vec<String>> {
    z.iter().enumerate().map(|(i, z)| vec![i.to_string(), f(z.re), f(z.im)]).collect()
}

fn roots_json(z: &[Complex64]) -> serde_json::Value {
    json!(z.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>())
}

fn options(c: &Common) -> Result<ClassifyOptions, CliError> {
    if !(c.tol > 0.0 && c.tol < 1.0) {
        return Err(CliError::Usage(format!("--tol must lie in (0, 1), got {}", c.tol)));
    }
    if c.precision < 64 {
        return Err(CliError::Usage(format!("--precision must be at least 64, got {}", c.precision)));
    }
    Ok(ClassifyOptions { tol: c.tol, gap: c.tol, precision_bits: c.precision, ..ClassifyOptions::default() })
}

/// Measures given directly, or those of the body in its ambient dimension.
fn measures_of(spec: &BodySpec) -> Result<CrossMeasures, CliError> {
    if let BodySpec::Measures(v) = spec {
        return Ok(v.clone());
    }
    let m = minkowski_polynomial(spec)?;
    Ok(polynomial_to_measures(&m, spec.ambient_dim())?)
}

/// Exact fractions with long terms are shown in floating point.
fn short_fraction(v: &str) -> String {
    if v.len() <= 24 {
        return v.to_string();
    }
    match exact_scalar::parse_rational(v) {
        Ok(q) => f(approx(&PiHalfValue::from_rational(q))),
        Err(_) => v.to_string(),
    }
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let opts = options(&cli.common)?;
    match &cli.command {
        Command::Minkowski(b) => {
            let m = minkowski_polynomial(&b.body)?;
            let v = measures_of(&b.body)?;
            Ok(Output::new("minkowski")
                .field("body", b.body.to_string())
                .field("polynomial", poly_json(&m))
                .field("measures", v.values())
                .note(format!("M(t) = {m}"))
                .table(&["k", "m_k", "approx"], coefficient_rows(&m)))
        }
        Command::Weyl { body, index, roots } => {
            let w = surface_weyl_polynomial(&body.body, *index)?;
            let kc = surface_weyl_coefficients(&body.body)?;
            let mut out = Output::new("weyl")
                .field("body", body.body.to_string())
                .field("index", index.to_string())
                .field("weyl_coefficients", &kc)
                .field("polynomial", poly_json(&w))
                .note(format!("W(t) = {w}"));
            if *roots {
                let z = if w.degree().unwrap_or(0) > 0 { numeric_roots(&w, opts.precision_bits)? } else { Vec::new() };
                out = out.field("roots", roots_json(&z)).table(&["i", "re", "im"], root_rows(&z));
            } else {
                out = out.table(&["k", "w_k", "approx"], coefficient_rows(&w));
            }
            Ok(out)
        }
        Command::Classify { body, index, mode } => {
            let (p, default_mode) = match index {
                Some(i) => (surface_weyl_polynomial(&body.body, *i)?, Mode::Conservative),
                None => (minkowski_polynomial(&body.body)?, Mode::Dissipative),
            };
            let mode = mode.unwrap_or(default_mode);
            let r = classify(&p, mode, &opts)?;
            Ok(Output::new("classify")
                .field("body", body.body.to_string())
                .field("index", index.map(|i| i.to_string()))
                .field("polynomial", poly_json(&p))
                .field("classification", &r)
                .note(format!("label: {}", json!(r.label).as_str().unwrap_or_default()))
                .note(format!("certificate: {:?} on minors {:?}, holds = {}", r.certificate.kind, r.certificate.checked, r.certificate.holds))
                .table(&["i", "re", "im"], root_rows(&r.roots)))
        }
        Command::Jensen { series, n, roots } => {
            if *n == 0 {
                return Err(CliError::Usage("--n must be positive".into()));
            }
            let c = taylor_coefficients(series, *n as usize + 1)?;
            let j = jensen_polynomial(&c, *n).map_err(|e| CliError::Usage(e.to_string()))?;
            let mut out = Output::new("jensen")
                .field("series", series.to_string())
                .field("n", n)
                .field("polynomial", poly_json(&j));
            if *roots {
                let z = numeric_roots(&j, opts.precision_bits.max(128 + 2 * *n as usize))?;
                out = out.field("roots", roots_json(&z)).table(&["i", "re", "im"], root_rows(&z));
            } else {
                out = out.table(&["k", "coefficient", "approx"], coefficient_rows(&j));
            }
            Ok(out)
        }
        Command::SeriesScan { series, degrees, mode } => {
            let r = truncation_root_trend(
                series,
                degrees,
                *mode,
                &TrendOptions { tol: opts.tol, precision_bits: opts.precision_bits },
            )?;
            let rows = r
                .rows
                .iter()
                .map(|w| {
                    vec![w.degree.to_string(), w.family.clone(), w.index.clone(), w.count_off_axis.to_string(), f(w.max_violation)]
                })
                .collect();
            Ok(Output::new("series-scan")
                .field("report", &r)
                .note(format!("counts nondecreasing: {}", r.nondecreasing))
                .table(&["degree", "family", "p/q", "count_off_axis", "max_violation"], rows))
        }
        Command::AfCheck(b) => {
            let v = measures_of(&b.body)?;
            let r = af_inequalities(&v);
            let mut rows = Vec::new();
            for (name, chain) in [("v_k^2 >= v_(k-1) v_(k+1)", &r.step1), ("v_k^2 >= v_(k-2) v_(k+2)", &r.step2), ("v_k v_(k+1) >= v_(k-1) v_(k+2)", &r.product)] {
                for c in chain {
                    rows.push(vec![name.to_string(), c.k.to_string(), c.holds.to_string(), c.strict.to_string()]);
                }
            }
            Ok(Output::new("af-check")
                .field("body", b.body.to_string())
                .field("measures", v.values())
                .field("report", &r)
                .note(format!("all hold: {}, all strict: {}", r.all_hold, r.all_strict))
                .table(&["inequality", "k", "holds", "strict"], rows))
        }
        Command::Lowdim { body, n } => {
            let v = measures_of(&body.body)?;
            let r = low_dim_inequalities(&v, n.unwrap_or(v.n()))?;
            let rows = r.checks.iter().map(|c| vec![c.name.clone(), c.holds.to_string(), f(c.margin_approx)]).collect();
            Ok(Output::new("lowdim")
                .field("body", body.body.to_string())
                .field("report", &r)
                .note(format!("all hold: {}", r.all_hold))
                .table(&["inequality", "holds", "margin"], rows))
        }
        Command::Counterexample { n, budget } => {
            if *n < 2 {
                return Err(CliError::Usage("--n must be at least 2".into()));
            }
            let w = counterexample_search(*n, &default_families(*n), budget.unwrap_or(usize::MAX));
            let mut out = Output::new("counterexample").field("n", n).field("witness", &w);
            match &w {
                Some(w) => {
                    out = out
                        .note(format!("family: {}", w.family))
                        .note(format!("first nonpositive minor: Delta_{} (sign {}, approx {:e})", w.failing_k, w.delta_sign, w.delta_approx))
                        .table(&["k", "v_k"], w.v.iter().enumerate().map(|(k, v)| vec![k.to_string(), short_fraction(v)]).collect());
                }
                None => out = out.note("no witness found"),
            }
            Ok(out)
        }
        Command::McVolume { body, t, samples, seed } => {
            let table = compare_oracle(&body.body, t, *samples, *seed)?;
            let rows = table
                .rows
                .iter()
                .map(|r| vec![r.t.to_string(), r.estimate.to_string(), r.stderr.to_string(), r.predicted.to_string(), r.z.to_string()])
                .collect();
            let mut out = Output::new("mc-volume").field("table", &table);
            if !table.exact {
                out = out.note(format!("predicted values are for the limit body {}", table.reference));
            }
            Ok(out.table(&["t", "estimate", "stderr", "predicted", "z"], rows))
        }
        Command::Reduce { body, index, q } => {
            let r = adjoint_weyl_reduction(&body.body, *index, *q)?;
            if !r.holds {
                return Err(CliError::Consistency(format!(
                    "index shift p = {index}, q = {q} does not reproduce the reduced polynomial"
                )));
            }
            let rows = (0..r.lhs.coeffs().len().max(r.rhs.coeffs().len()))
                .map(|k| vec![k.to_string(), r.lhs.coeff(k).to_string(), r.rhs.coeff(k).to_string()])
                .collect();
            Ok(Output::new("reduce")
                .field("body", body.body.to_string())
                .field("report", &r)
                .note(format!("p = {}, q = {} reduces to p' = {}, q' = {}: {}", r.p, r.q, r.reduced_p, r.reduced_q, r.holds))
                .table(&["k", "lhs", "rhs"], rows))
        }
    }
}

