use std::f64::consts::PI;

use super::{sample_adaptive, step_bound_for, Configuration, PlannerKind, SampledPath};
use crate::error::{Error, Result};

const ANGLE_GRID: usize = 360;

fn lerp(a: [f64; 2], b: [f64; 2], s: f64) -> [f64; 2] {
    [(1.0 - s) * a[0] + s * b[0], (1.0 - s) * a[1] + s * b[1]]
}

fn project(p: [f64; 2], e: [f64; 2]) -> f64 {
    p[0] * e[0] + p[1] * e[1]
}

fn min_gap(c: &Configuration, e: [f64; 2]) -> f64 {
    let mut xs: Vec<f64> = c.points().iter().map(|p| project(*p, e)).collect();
    xs.sort_by(f64::total_cmp);
    xs.windows(2).map(|w| w[1] - w[0]).fold(f64::INFINITY, f64::min)
}

/// Rank of each point in the order of its projection.
fn ranks(c: &Configuration, e: [f64; 2]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..c.len()).collect();
    order.sort_by(|&i, &j| project(c.points()[i], e).total_cmp(&project(c.points()[j], e)));
    let mut rank = vec![0; c.len()];
    for (r, &i) in order.iter().enumerate() {
        rank[i] = r;
    }
    rank
}

fn centroid(c: &Configuration) -> [f64; 2] {
    let n = c.len() as f64;
    let s = c.points().iter().fold([0.0, 0.0], |a, p| [a[0] + p[0], a[1] + p[1]]);
    [s[0] / n, s[1] / n]
}

/// Non-optimal planner for any number of points.
///
/// Picks the grid direction that best separates the projections of both
/// configurations, slides each configuration onto evenly spaced slots on a
/// line in projection order, and permutes the slots by lifting point `k` to
/// height proportional to `k + 1`, sliding, and lowering. Each third of the
/// time interval is one stage.
pub fn plan_baseline(start: &Configuration, goal: &Configuration, frames: usize) -> Result<SampledPath> {
    let n = start.len();
    if n < 2 || goal.len() != n {
        return Err(Error::InvalidConfiguration(format!(
            "baseline needs two configurations of the same size at least 2, got {} and {}",
            n,
            goal.len()
        )));
    }
    let (theta, gap) = (0..ANGLE_GRID)
        .map(|k| {
            let t = k as f64 * PI / ANGLE_GRID as f64;
            let e = [t.cos(), t.sin()];
            (t, min_gap(start, e).min(min_gap(goal, e)))
        })
        .fold((0.0, f64::NEG_INFINITY), |best, cur| if cur.1 > best.1 { cur } else { best });
    if gap.is_nan() || gap <= 0.0 {
        return Err(Error::AngleSearchFailed);
    }
    let e = [theta.cos(), theta.sin()];
    let f = [-e[1], e[0]];
    let spacing = start.diameter().max(goal.diameter()) / (n - 1) as f64;
    let (cs, cg) = (centroid(start), centroid(goal));
    let center = [(cs[0] + cg[0]) / 2.0, (cs[1] + cg[1]) / 2.0];
    let slot = |k: usize| {
        let offset = (k as f64 - (n - 1) as f64 / 2.0) * spacing;
        [center[0] + offset * e[0], center[1] + offset * e[1]]
    };
    let raise = |p: [f64; 2], i: usize| {
        let h = (i + 1) as f64 * spacing;
        [p[0] + h * f[0], p[1] + h * f[1]]
    };
    let (rs, rg) = (ranks(start, e), ranks(goal, e));

    let at = |t: f64| -> Vec<[f64; 2]> {
        (0..n)
            .map(|i| {
                let (a, b) = (slot(rs[i]), slot(rg[i]));
                if t < 1.0 / 3.0 {
                    lerp(start.points()[i], a, 3.0 * t)
                } else if t >= 2.0 / 3.0 {
                    lerp(b, goal.points()[i], 3.0 * t - 2.0)
                } else {
                    let s = 9.0 * t - 3.0;
                    if s < 1.0 {
                        lerp(a, raise(a, i), s)
                    } else if s < 2.0 {
                        lerp(raise(a, i), raise(b, i), s - 1.0)
                    } else {
                        lerp(raise(b, i), b, s - 2.0)
                    }
                }
            })
            .collect()
    };
    let (times, frames) = sample_adaptive(at, frames, step_bound_for(start, goal))?;
    Ok(SampledPath { n, times, frames, domain: 0, planner: PlannerKind::Baseline, domain_name: None, non_optimal: true })
}
