use bodies::BodySpec;

use crate::McError;

/// Monte Carlo is only run up to this ambient dimension.
pub const MAX_DIM: usize = 8;

const PROJECTION_TOL: f64 = 1e-12;
const PROJECTION_ITERS: usize = 200;

/// One factor of a product body.
#[derive(Clone, Debug, PartialEq)]
pub enum Part {
    /// Unit ball in `R^d`.
    Ball(usize),
    /// `[-1, 1]^d`.
    Cube(usize),
    /// The origin of `R^d`.
    Point(usize),
    /// Semi-axes `a_i > 0`.
    Ellipsoid(Vec<f64>),
}

impl Part {
    pub fn dim(&self) -> usize {
        match self {
            Part::Ball(d) | Part::Cube(d) | Part::Point(d) => *d,
            Part::Ellipsoid(a) => a.len(),
        }
    }

    fn half_widths(&self, t: f64, out: &mut Vec<f64>) {
        match self {
            Part::Ball(d) | Part::Cube(d) => out.extend(std::iter::repeat_n(1.0 + t, *d)),
            Part::Point(d) => out.extend(std::iter::repeat_n(t, *d)),
            Part::Ellipsoid(a) => out.extend(a.iter().map(|a| a + t)),
        }
    }

    fn distance_sq(&self, x: &[f64]) -> Result<f64, McError> {
        Ok(match self {
            Part::Ball(_) => {
                let r = x.iter().map(|v| v * v).sum::<f64>().sqrt();
                let d = (r - 1.0).max(0.0);
                d * d
            }
            Part::Cube(_) => x.iter().map(|v| (v.abs() - 1.0).max(0.0).powi(2)).sum(),
            Part::Point(_) => x.iter().map(|v| v * v).sum(),
            Part::Ellipsoid(a) => ellipsoid_distance(a, x)?.powi(2),
        })
    }
}

/// Distance from `x` to `{y : Σ (y_i/a_i)² ≤ 1}`.
///
/// Outside, the nearest point is `y_i = a_i² x_i / (a_i² + λ)` where `λ > 0`
/// is the root of `g(λ) = Σ (a_i x_i / (a_i² + λ))² − 1`. `g` is convex and
/// decreasing, so Newton steps from a point left of the root increase
/// monotonically; a bisection fallback keeps them inside the bracket.
fn ellipsoid_distance(a: &[f64], x: &[f64]) -> Result<f64, McError> {
    if a.iter().zip(x).map(|(a, x)| (x / a).powi(2)).sum::<f64>() <= 1.0 {
        return Ok(0.0);
    }
    let g = |l: f64| {
        let mut v = -1.0;
        let mut dv = 0.0;
        for (a, x) in a.iter().zip(x) {
            let s = a * a + l;
            let r = a * x / s;
            v += r * r;
            dv -= 2.0 * r * r / s;
        }
        (v, dv)
    };
    let mut lo = a.iter().zip(x).map(|(a, x)| a * x.abs() - a * a).fold(0.0, f64::max);
    let mut hi = a.iter().zip(x).map(|(a, x)| (a * x).powi(2)).sum::<f64>().sqrt();
    let mut l = lo;
    for _ in 0..PROJECTION_ITERS {
        let (v, dv) = g(l);
        if v > 0.0 {
            lo = l;
        } else {
            hi = l;
        }
        let mut next = if dv < 0.0 { l - v / dv } else { f64::NAN };
        if !(next > lo && next < hi) {
            next = 0.5 * (lo + hi);
        }
        let step = (next - l).abs();
        l = next;
        if step <= PROJECTION_TOL * (1.0 + l) || hi - lo <= PROJECTION_TOL * (1.0 + l) {
            let d2: f64 = a.iter().zip(x).map(|(a, x)| (l * x / (a * a + l)).powi(2)).sum();
            return Ok(d2.sqrt());
        }
    }
    Err(McError::NoConvergence { iterations: PROJECTION_ITERS })
}

/// A product of simple factors, with coordinates laid out factor by factor.
#[derive(Clone, Debug, PartialEq)]
pub struct SampleableBody {
    parts: Vec<Part>,
}

impl SampleableBody {
    pub fn new(parts: Vec<Part>) -> Result<Self, McError> {
        let body = SampleableBody { parts };
        let d = body.dim();
        if d == 0 {
            return Err(McError::Precondition("empty body".into()));
        }
        if d > MAX_DIM {
            return Err(McError::Precondition(format!("dimension {d} exceeds the Monte Carlo cap {MAX_DIM}")));
        }
        Ok(body)
    }

    pub fn from_spec(spec: &BodySpec) -> Result<Self, McError> {
        spec.validate()?;
        let mut parts = Vec::new();
        collect(spec, &mut parts)?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn dim(&self) -> usize {
        self.parts.iter().map(Part::dim).sum()
    }

    /// Half-widths of a centered box containing `V + tB`.
    pub fn bounding_box(&self, t: f64) -> Vec<f64> {
        let mut h = Vec::with_capacity(self.dim());
        for p in &self.parts {
            p.half_widths(t, &mut h);
        }
        h
    }

    /// Euclidean distance from `x` to the body. Distances of the factors
    /// combine as a root sum of squares.
    pub fn distance(&self, x: &[f64]) -> Result<f64, McError> {
        if x.len() != self.dim() {
            return Err(McError::Precondition(format!("point has {} coordinates, body has {}", x.len(), self.dim())));
        }
        if !x.iter().all(|v| v.is_finite()) {
            return Err(McError::Precondition("point is not finite".into()));
        }
        let mut off = 0;
        let mut s = 0.0;
        for p in &self.parts {
            let d = p.dim();
            s += p.distance_sq(&x[off..off + d])?;
            off += d;
        }
        Ok(s.sqrt())
    }
}

fn collect(spec: &BodySpec, out: &mut Vec<Part>) -> Result<(), McError> {
    match spec {
        BodySpec::Ball(n) => out.push(Part::Ball(*n as usize)),
        BodySpec::Cube(n) => out.push(Part::Cube(*n as usize)),
        BodySpec::Adjoint { base, q } => {
            collect(base, out)?;
            out.push(Part::Point(*q as usize));
        }
        BodySpec::Product(a, b) => {
            collect(a, out)?;
            collect(b, out)?;
        }
        BodySpec::Ellipsoid { n, q, eps } => {
            let e = eps.to_f64().value();
            let mut axes = vec![1.0; *n as usize];
            axes.extend(std::iter::repeat_n(e, *q as usize));
            out.push(Part::Ellipsoid(axes));
        }
        BodySpec::Measures(_) => {
            return Err(McError::Unsupported("a measure sequence has no sampleable shape".into()))
        }
    }
    Ok(())
}
