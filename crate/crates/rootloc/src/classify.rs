use exact_scalar::{sign, sign_and_float, PiHalfValue};
use num_complex::Complex64;
use poly_core::{even_odd_parts, ExactPoly};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::determinants::{conservativity_determinants, hurwitz_determinants};
use crate::roots::{numeric_roots_detailed, RootSet};
use crate::RootError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Label {
    Dissipative,
    Conservative,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Dissipative,
    Conservative,
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dissipative" => Ok(Mode::Dissipative),
            "conservative" => Ok(Mode::Conservative),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

/// Which leading minors the Liénard–Chipart shortcut inspects.
///
/// Once every coefficient is positive, positivity of either all
/// even-indexed or all odd-indexed minors is equivalent to positivity of
/// all of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn keeps(self, k: usize) -> bool {
        match self {
            Parity::Even => k % 2 == 0,
            Parity::Odd => k % 2 == 1,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    /// Half-plane/axis tolerance, relative to `|z| + 1`.
    pub tol: f64,
    /// Minimum pairwise root distance for simplicity, relative to `max|z| + 1`.
    pub gap: f64,
    pub precision_bits: usize,
    pub shortcut: Option<Parity>,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        Self { tol: 1e-9, gap: 1e-9, precision_bits: 256, shortcut: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CertificateKind {
    /// Routh–Hurwitz leading minors.
    Hurwitz,
    /// Hurwitz minors of `W + W′/2`.
    Conservativity,
    /// Decided from coefficient signs or parity alone.
    CoefficientSigns,
}

#[derive(Clone, Debug, Serialize)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// Indices (1-based) of the minors that were required to be positive.
    pub checked: Vec<usize>,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct DeterminantSign {
    pub index: usize,
    pub sign: i8,
    pub value_approx: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootClassification {
    pub label: Label,
    pub mode: Mode,
    #[serde(serialize_with = "pairs")]
    pub roots: Vec<Complex64>,
    pub determinants: Vec<DeterminantSign>,
    pub certificate: Certificate,
    pub interlacing: Option<bool>,
    pub residual: f64,
}

fn pairs<S: Serializer>(z: &[Complex64], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(z.iter().map(|z| [z.re, z.im]))
}

fn scale(z: Complex64) -> f64 {
    z.norm() + 1.0
}

fn all_left(roots: &[Complex64], tol: f64) -> bool {
    roots.iter().all(|&z| z.re < -tol * scale(z))
}

fn min_gap(roots: &[Complex64]) -> f64 {
    let mut best = f64::INFINITY;
    for i in 0..roots.len() {
        for j in i + 1..roots.len() {
            best = best.min((roots[i] - roots[j]).norm());
        }
    }
    best
}

fn on_axis_and_simple(set: &RootSet, tol: f64, gap: f64) -> bool {
    let roots = set.expanded();
    let rmax = roots.iter().map(|z| z.norm()).fold(0.0, f64::max);
    set.is_simple()
        && roots.iter().all(|&z| z.re.abs() <= tol * scale(z))
        && min_gap(&roots) > gap * (rmax + 1.0)
}

fn normalized(p: &ExactPoly) -> Result<ExactPoly, RootError> {
    let lead = p.leading().ok_or_else(|| RootError::Domain("zero polynomial".into()))?;
    if p.degree() == Some(0) {
        return Err(RootError::Domain("constant polynomial has no roots".into()));
    }
    Ok(if sign(lead) < 0 { -p } else { p.clone() })
}

fn describe(dets: &[PiHalfValue]) -> Vec<DeterminantSign> {
    dets.iter()
        .enumerate()
        .map(|(i, d)| {
            let (s, v) = sign_and_float(d, 64);
            DeterminantSign { index: i + 1, sign: s, value_approx: v }
        })
        .collect()
}

fn certify(kind: CertificateKind, dets: &[PiHalfValue], shortcut: Option<Parity>) -> Certificate {
    let checked: Vec<usize> = (1..=dets.len()).filter(|&k| shortcut.is_none_or(|p| p.keeps(k))).collect();
    let holds = checked.iter().all(|&k| sign(&dets[k - 1]) > 0);
    Certificate { kind, checked, holds }
}

fn signs_only(holds: bool) -> Certificate {
    Certificate { kind: CertificateKind::CoefficientSigns, checked: Vec::new(), holds }
}

fn all_positive(p: &ExactPoly) -> bool {
    p.coeffs().iter().all(|c| sign(c) > 0)
}

/// Dissipativity verdict from the Routh–Hurwitz determinants.
fn dissipative_certificate(p: &ExactPoly, opts: &ClassifyOptions) -> (Certificate, Vec<PiHalfValue>) {
    if !all_positive(p) {
        return (signs_only(false), Vec::new());
    }
    let dets = hurwitz_determinants(p).expect("coefficients checked positive");
    (certify(CertificateKind::Hurwitz, &dets, opts.shortcut), dets)
}

/// A polynomial whose roots are all purely imaginary and simple is `c·Π(t² + b²)`
/// or `c·t·Π(t² + b²)`: even or odd, with every coefficient of its parity
/// positive. Returns the even factor when `p` has that shape.
fn conservative_shape(p: &ExactPoly) -> Option<ExactPoly> {
    let q = if p.coeff(0).is_zero() {
        let q = p.shift_down(1)?;
        if q.coeff(0).is_zero() {
            return None;
        }
        q
    } else {
        p.clone()
    };
    if !q.is_even() {
        return None;
    }
    q.coeffs().iter().step_by(2).all(|c| sign(c) > 0).then_some(q)
}

fn consistency(what: &str, cert: bool, numeric: bool, set: &RootSet) -> RootError {
    RootError::Consistency(format!(
        "{what}: certificate says {cert}, numeric roots say {numeric} (roots {:?})",
        set.expanded()
    ))
}

/// Classifies `P` as dissipative (all roots in the open left half plane) or
/// conservative (all roots purely imaginary and simple).
///
/// The exact certificate and the numeric roots are computed independently;
/// if they disagree the result is a [`RootError::Consistency`].
pub fn classify(p: &ExactPoly, mode: Mode, opts: &ClassifyOptions) -> Result<RootClassification, RootError> {
    let p = normalized(p)?;
    let set = numeric_roots_detailed(&p, opts.precision_bits)?;
    let roots = set.expanded();
    let (label, certificate, dets, interlacing) = match mode {
        Mode::Dissipative => {
            let (cert, dets) = dissipative_certificate(&p, opts);
            let numeric = all_left(&roots, opts.tol);
            if cert.holds != numeric {
                return Err(consistency("dissipativity", cert.holds, numeric, &set));
            }
            let interlacing = if sign(&p.coeff(0)) > 0 && sign(&p.coeff(1)) > 0 {
                Some(hermite_biehler_inner(&p, cert.holds, opts)?.interlacing)
            } else {
                None
            };
            let label = if cert.holds { Label::Dissipative } else { Label::Neither };
            (label, cert, dets, interlacing)
        }
        Mode::Conservative => {
            let numeric = on_axis_and_simple(&set, opts.tol, opts.gap);
            let (cert, dets) = match conservative_shape(&p) {
                None => (signs_only(false), Vec::new()),
                Some(q) if q.degree() == Some(0) => (signs_only(true), Vec::new()),
                Some(q) => {
                    let dets = conservativity_determinants(&q)?;
                    (certify(CertificateKind::Conservativity, &dets, opts.shortcut), dets)
                }
            };
            if cert.holds != numeric {
                return Err(consistency("conservativity", cert.holds, numeric, &set));
            }
            let label = if cert.holds { Label::Conservative } else { Label::Neither };
            (label, cert, dets, None)
        }
    };
    Ok(RootClassification {
        label,
        mode,
        roots,
        determinants: describe(&dets),
        certificate,
        interlacing,
        residual: set.residual,
    })
}

/// [`classify`] over a batch, in parallel.
pub fn classify_batch(
    polys: &[ExactPoly],
    mode: Mode,
    opts: &ClassifyOptions,
) -> Vec<Result<RootClassification, RootError>> {
    polys.par_iter().map(|p| classify(p, mode, opts)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct InterlacingReport {
    /// Nonnegative imaginary parts `y` of the roots `iy` of the even part.
    pub even_axis: Vec<f64>,
    /// Same for the odd part, starting with its root at 0.
    pub odd_axis: Vec<f64>,
    pub even_conservative: bool,
    pub odd_conservative: bool,
    pub interlacing: bool,
    /// Verdict of the Routh–Hurwitz determinants.
    pub dissipative: bool,
}

/// `s = −u` for the roots `u` of `q`, when they are all real, negative and
/// simple; sorted ascending.
fn negative_real_roots(q: &ExactPoly, opts: &ClassifyOptions) -> Result<Option<Vec<f64>>, RootError> {
    if q.degree().unwrap_or(0) == 0 {
        return Ok(Some(Vec::new()));
    }
    let set = numeric_roots_detailed(q, opts.precision_bits)?;
    if !set.is_simple() {
        return Ok(None);
    }
    let mut s = Vec::new();
    for &(u, _) in &set.distinct {
        let band = opts.tol * scale(u);
        if u.im.abs() > band || u.re >= -band {
            return Ok(None);
        }
        s.push(-u.re);
    }
    s.sort_by(f64::total_cmp);
    Ok(Some(s))
}

fn hermite_biehler_inner(
    m: &ExactPoly,
    dissipative: bool,
    opts: &ClassifyOptions,
) -> Result<InterlacingReport, RootError> {
    let n = m.degree().expect("nonconstant");
    let (e, o) = even_odd_parts(m);
    let qe = e.even_to_square_variable().expect("even part");
    let qo = o.shift_down(1).and_then(|x| x.even_to_square_variable()).expect("odd part");
    let se = negative_real_roots(&qe, opts)?;
    let so = negative_real_roots(&qo, opts)?;
    let to_axis = |s: &[f64]| s.iter().map(|x| x.sqrt()).collect::<Vec<_>>();
    let even_axis = se.as_deref().map(to_axis).unwrap_or_default();
    let mut odd_axis = vec![0.0];
    odd_axis.extend(so.as_deref().map(to_axis).unwrap_or_default());
    let interlacing = match (&se, &so) {
        (Some(se), Some(so)) if se.len() == n / 2 && so.len() == (n - 1) / 2 => {
            // 0 < e₁ < o₁ < e₂ < o₂ < …
            let mut merged = vec![0.0];
            for i in 0..se.len().max(so.len()) {
                merged.extend(se.get(i));
                merged.extend(so.get(i));
            }
            let top = merged.last().copied().unwrap_or(0.0);
            merged.windows(2).all(|w| w[1] - w[0] > opts.gap * (top + 1.0))
        }
        _ => false,
    };
    let report = InterlacingReport {
        even_axis,
        odd_axis,
        even_conservative: se.is_some(),
        odd_conservative: so.is_some(),
        interlacing,
        dissipative,
    };
    let hb = report.even_conservative && report.odd_conservative && report.interlacing;
    if hb != dissipative {
        return Err(RootError::Consistency(format!(
            "Hermite-Biehler split says {hb}, Routh-Hurwitz says {dissipative}"
        )));
    }
    Ok(report)
}

/// Splits `M` into even and odd parts and checks that both are conservative
/// and that their roots interlace on the imaginary axis. The verdict is
/// cross-checked against the determinant criterion.
pub fn hermite_biehler_check(m: &ExactPoly, opts: &ClassifyOptions) -> Result<InterlacingReport, RootError> {
    let m = normalized(m)?;
    if sign(&m.coeff(0)) <= 0 || sign(&m.coeff(1)) <= 0 {
        return Err(RootError::Precondition("m_0 and m_1 must be positive".into()));
    }
    let (cert, _) = dissipative_certificate(&m, opts);
    hermite_biehler_inner(&m, cert.holds, opts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn opts() -> ClassifyOptions {
        ClassifyOptions::default()
    }

    #[test]
    fn labels_for_simple_cases() {
        let r = classify(&ExactPoly::from_ints(&[1, 3, 3, 1]), Mode::Dissipative, &opts()).unwrap();
        assert_eq!(r.label, Label::Dissipative);
        assert_eq!(r.interlacing, Some(true));
        let r = classify(&ExactPoly::from_ints(&[-1, 0, 1]), Mode::Dissipative, &opts()).unwrap();
        assert_eq!(r.label, Label::Neither);
        assert_eq!(r.certificate.kind, CertificateKind::CoefficientSigns);
        let r = classify(&ExactPoly::from_ints(&[3, 0, 1]), Mode::Conservative, &opts()).unwrap();
        assert_eq!(r.label, Label::Conservative);
        let r = classify(&ExactPoly::from_ints(&[0, 3, 0, 1]), Mode::Conservative, &opts()).unwrap();
        assert_eq!(r.label, Label::Conservative);
        let r = classify(&ExactPoly::from_ints(&[1, 0, 2, 0, 1]), Mode::Conservative, &opts()).unwrap();
        assert_eq!(r.label, Label::Neither);
    }

    #[test]
    fn hermite_biehler_examples() {
        let r = hermite_biehler_check(&ExactPoly::from_ints(&[1, 3, 3, 1]), &opts()).unwrap();
        assert!(r.interlacing && r.dissipative);
        assert!((r.even_axis[0] - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!((r.odd_axis[1] - 3f64.sqrt()).abs() < 1e-15);
        let r = hermite_biehler_check(&ExactPoly::from_ints(&[1, 1, 1, 1]), &opts()).unwrap();
        assert!(!r.interlacing && !r.dissipative);
        assert!(matches!(
            hermite_biehler_check(&ExactPoly::from_ints(&[1, 0, 1, 1]), &opts()),
            Err(RootError::Precondition(_))
        ));
    }

    #[test]
    fn report_json_shape() {
        let r = classify(&ExactPoly::from_ints(&[1, 1, 1]), Mode::Dissipative, &opts()).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["label"], "dissipative");
        assert_eq!(v["roots"].as_array().unwrap().len(), 2);
        assert_eq!(v["determinants"][1]["sign"], 1);
        assert_eq!(v["interlacing"], true);
    }
}
