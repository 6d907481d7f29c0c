use rand::rngs::ChaCha8Rng;
use rand::{RngExt, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::{McError, SampleableBody};

pub const MIN_SAMPLES: u64 = 10_000;

/// Points per RNG substream. Chunk `c` draws from stream `c` of the seeded
/// generator, so the result does not depend on the thread count.
const CHUNK: u64 = 1 << 14;

#[derive(Clone, Debug, Serialize)]
pub struct Estimate {
    pub t: f64,
    pub estimate: f64,
    pub stderr: f64,
    pub hits: u64,
    pub samples: u64,
    pub box_volume: f64,
}

fn check(t: f64, samples: u64) -> Result<(), McError> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(McError::Precondition(format!("t must be positive, got {t}")));
    }
    if samples < MIN_SAMPLES {
        return Err(McError::Precondition(format!("need at least {MIN_SAMPLES} samples, got {samples}")));
    }
    Ok(())
}

/// Hit-or-miss estimate of `Vol(V + tB)` over the bounding box.
pub fn tube_volume_estimate(body: &SampleableBody, t: f64, samples: u64, seed: u64) -> Result<Estimate, McError> {
    Ok(tube_volume_curve(body, &[t], samples, seed)?.remove(0))
}

/// Estimates at several radii from one set of points (common random
/// numbers): the box is sized for the largest `t`, and a point counts for
/// every `t` at least its distance. The estimates are therefore
/// non-decreasing in `t`.
pub fn tube_volume_curve(body: &SampleableBody, ts: &[f64], samples: u64, seed: u64) -> Result<Vec<Estimate>, McError> {
    if ts.is_empty() {
        return Err(McError::Precondition("empty t grid".into()));
    }
    for &t in ts {
        check(t, samples)?;
    }
    let t_max = ts.iter().copied().fold(0.0, f64::max);
    let half = body.bounding_box(t_max);
    let box_volume: f64 = half.iter().map(|h| 2.0 * h).product();
    let chunks = samples.div_ceil(CHUNK);
    let hits = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(c);
            let n = CHUNK.min(samples - c * CHUNK);
            let mut x = vec![0.0; half.len()];
            let mut h = vec![0u64; ts.len()];
            for _ in 0..n {
                for (xi, hi) in x.iter_mut().zip(&half) {
                    *xi = hi * (2.0 * rng.random::<f64>() - 1.0);
                }
                let d = body.distance(&x)?;
                for (k, &t) in ts.iter().enumerate() {
                    if d <= t {
                        h[k] += 1;
                    }
                }
            }
            Ok::<_, McError>(h)
        })
        .try_reduce(
            || vec![0u64; ts.len()],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                Ok(a)
            },
        )?;
    let n = samples as f64;
    Ok(ts
        .iter()
        .zip(hits)
        .map(|(&t, h)| {
            let p = h as f64 / n;
            Estimate {
                t,
                estimate: box_volume * p,
                stderr: box_volume * (p * (1.0 - p) / n).sqrt(),
                hits: h,
                samples,
                box_volume,
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use bodies::BodySpec;

    #[test]
    fn deterministic_and_monotone() {
        let b = SampleableBody::from_spec(&BodySpec::Cube(2)).unwrap();
        let ts = [0.1, 0.2, 0.4];
        let a = tube_volume_curve(&b, &ts, 50_000, 7).unwrap();
        let c = tube_volume_curve(&b, &ts, 50_000, 7).unwrap();
        assert_eq!(a.iter().map(|e| e.hits).collect::<Vec<_>>(), c.iter().map(|e| e.hits).collect::<Vec<_>>());
        assert!(a.windows(2).all(|w| w[0].hits <= w[1].hits));
    }

    #[test]
    fn preconditions() {
        let b = SampleableBody::from_spec(&BodySpec::Ball(2)).unwrap();
        assert!(tube_volume_estimate(&b, 0.0, 20_000, 1).is_err());
        assert!(tube_volume_estimate(&b, 1.0, 9_999, 1).is_err());
    }
}
