use std::fmt;

use super::{dist, min_pair_distance, Configuration, SampledPath, STEP_FRACTION};

pub const ENDPOINT_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub frames: usize,
    /// Smallest pairwise distance over all frames.
    pub min_distance: f64,
    pub max_step: f64,
    pub step_bound: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub enum VerifyFailure {
    Malformed(String),
    Endpoint { frame: usize, point: usize, error: f64 },
    Collision { frame: usize, first: usize, second: usize, distance: f64 },
    Step { frame: usize, point: usize, displacement: f64, bound: f64 },
}

impl fmt::Display for VerifyFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VerifyFailure::Malformed(why) => write!(f, "malformed path: {why}"),
            VerifyFailure::Endpoint { frame, point, error } => {
                write!(f, "frame {frame}: point {point} is {error:e} away from the requested endpoint")
            }
            VerifyFailure::Collision { frame, first, second, distance } => {
                write!(f, "frame {frame}: points {first} and {second} are {distance:e} apart, below the margin")
            }
            VerifyFailure::Step { frame, point, displacement, bound } => {
                write!(f, "frame {frame}: point {point} moved {displacement:e} since the previous frame (bound {bound:e})")
            }
        }
    }
}

impl std::error::Error for VerifyFailure {}

/// Checks a sampled path: well-formedness, endpoints (when given) to within
/// [`ENDPOINT_TOLERANCE`], pairwise distance at least `margin` in every frame,
/// and per-frame displacement at most `step_bound`. The default step bound is
/// the sampling guarantee, a hundredth of the larger endpoint diameter.
pub fn verify_path(
    path: &SampledPath,
    margin: f64,
    endpoints: Option<(&Configuration, &Configuration)>,
    step_bound: Option<f64>,
) -> Result<VerifyReport, VerifyFailure> {
    let malformed = |why: String| Err(VerifyFailure::Malformed(why));
    if path.frames.is_empty() || path.frames.len() != path.times.len() {
        return malformed(format!("{} frames for {} times", path.frames.len(), path.times.len()));
    }
    if path.times[0] != 0.0 || *path.times.last().unwrap() != 1.0 {
        return malformed("times must run from 0 to 1".into());
    }
    if let Some(k) = path.times.windows(2).position(|w| w[0] >= w[1]) {
        return malformed(format!("times not increasing at frame {}", k + 1));
    }
    if let Some(k) = path.frames.iter().position(|f| f.len() != path.n) {
        return malformed(format!("frame {k} has {} points, expected {}", path.frames[k].len(), path.n));
    }
    if let Some(k) = path.frames.iter().position(|f| f.iter().flatten().any(|x| !x.is_finite())) {
        return malformed(format!("frame {k} has a non-finite coordinate"));
    }

    if let Some((start, goal)) = endpoints {
        let last = path.frames.len() - 1;
        for (frame, target) in [(0, start), (last, goal)] {
            if target.len() != path.n {
                return malformed(format!("endpoint has {} points, path has {}", target.len(), path.n));
            }
            for (point, (p, q)) in path.frames[frame].iter().zip(target.points()).enumerate() {
                let error = dist(*p, *q);
                if error > ENDPOINT_TOLERANCE {
                    return Err(VerifyFailure::Endpoint { frame, point, error });
                }
            }
        }
    }

    let mut min_distance = f64::INFINITY;
    for (frame, points) in path.frames.iter().enumerate() {
        if let Some((d, first, second)) = min_pair_distance(points) {
            if d < margin {
                return Err(VerifyFailure::Collision { frame, first, second, distance: d });
            }
            min_distance = min_distance.min(d);
        }
    }

    let bound = step_bound.unwrap_or_else(|| {
        let diam = |f: &[[f64; 2]]| {
            let mut d: f64 = 0.0;
            for (i, p) in f.iter().enumerate() {
                for q in &f[i + 1..] {
                    d = d.max(dist(*p, *q));
                }
            }
            d
        };
        STEP_FRACTION * diam(path.first()).max(diam(path.last()))
    });
    let mut max_step: f64 = 0.0;
    for (k, w) in path.frames.windows(2).enumerate() {
        for (point, (p, q)) in w[0].iter().zip(&w[1]).enumerate() {
            let displacement = dist(*p, *q);
            if displacement > bound {
                return Err(VerifyFailure::Step { frame: k + 1, point, displacement, bound });
            }
            max_step = max_step.max(displacement);
        }
    }
    Ok(VerifyReport { frames: path.frames.len(), min_distance, max_step, step_bound: bound })
}
