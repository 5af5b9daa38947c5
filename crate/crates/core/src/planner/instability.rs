use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{ConfigPlanner, Configuration};

/// Random perturbation moving every point by at most `eps`.
///
/// Domain boundaries are thin sets (points becoming collinear, a quotient
/// becoming real), so uniform noise in all coordinates almost surely misses
/// them. Trials therefore alternate between two families: noise on a random
/// subset of the coordinates, leaving the rest exact, and a small rotation of
/// one or both configurations about its centroid, which preserves every
/// shape invariant.
fn perturb(c: &Configuration, eps: f64, rng: &mut ChaCha8Rng, rotate: bool) -> Configuration {
    let points = c.points();
    let out: Vec<[f64; 2]> = if rotate {
        let n = points.len() as f64;
        let center = points.iter().fold([0.0, 0.0], |a, p| [a[0] + p[0] / n, a[1] + p[1] / n]);
        let reach = points.iter().map(|p| (p[0] - center[0]).hypot(p[1] - center[1])).fold(0.0, f64::max);
        let angle = rng.gen_range(-1.0..=1.0) * eps / reach.max(1.0);
        let (s, co) = angle.sin_cos();
        points
            .iter()
            .map(|p| {
                let (x, y) = (p[0] - center[0], p[1] - center[1]);
                [center[0] + co * x - s * y, center[1] + s * x + co * y]
            })
            .collect()
    } else {
        let bound = eps / std::f64::consts::SQRT_2;
        points
            .iter()
            .map(|p| {
                let mut q = *p;
                for x in q.iter_mut() {
                    if rng.gen_bool(0.5) {
                        *x += rng.gen_range(-bound..=bound);
                    }
                }
                q
            })
            .collect()
    };
    Configuration::new(out).unwrap_or_else(|_| c.clone())
}

/// Lower estimate of the order of instability: for each probe pair, the
/// number of distinct domains seen over `trials` perturbations of size at
/// most `eps` (the probe itself included); the maximum over probes.
pub fn instability_estimate(
    planner: &dyn ConfigPlanner,
    probes: &[(Configuration, Configuration)],
    eps: f64,
    trials: usize,
    seed: u64,
) -> crate::Result<usize> {
    let mut best = 0;
    for (k, (start, goal)) in probes.iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(k as u64));
        let mut seen = BTreeSet::from([planner.classify(start, goal)?]);
        for trial in 0..trials {
            let rotate = trial % 2 == 1;
            let (a, b) = match rng.gen_range(0..3) {
                0 => (perturb(start, eps, &mut rng, rotate), goal.clone()),
                1 => (start.clone(), perturb(goal, eps, &mut rng, rotate)),
                _ => (perturb(start, eps, &mut rng, rotate), perturb(goal, eps, &mut rng, rotate)),
            };
            seen.insert(planner.classify(&a, &b)?);
            if seen.len() == planner.domain_count() {
                break;
            }
        }
        best = best.max(seen.len());
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::planner::{ThreePointPlanner, TwoPointPlanner};

    fn cfg(text: &str) -> Configuration {
        Configuration::parse_json(text).unwrap()
    }

    #[test]
    fn three_point_witness_reaches_four() {
        let probe = (cfg("[[0,0],[-1,0],[1,0]]"), cfg("[[0,0],[-2,0],[-1,0]]"));
        assert_eq!(instability_estimate(&ThreePointPlanner::new(), &[probe], 1e-3, 2000, 0).unwrap(), 4);
    }

    #[test]
    fn two_point_antipodal_reaches_two() {
        let probe = (cfg("[[0,0],[1,0]]"), cfg("[[0,0],[-1,0]]"));
        assert_eq!(instability_estimate(&TwoPointPlanner::new(), &[probe], 1e-3, 500, 0).unwrap(), 2);
    }

    #[test]
    fn interior_probe_sees_one() {
        let probe = (cfg("[[0,0],[1,0.3],[0.2,1]]"), cfg("[[0.1,0],[1,0.5],[0.3,1.2]]"));
        assert_eq!(instability_estimate(&ThreePointPlanner::new(), &[probe], 1e-3, 500, 0).unwrap(), 1);
    }
}
