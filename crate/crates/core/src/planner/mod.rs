//! Collision-free motion planning for ordered points in the plane.
//!
//! Two and three points are planned with the minimal number of local domains
//! (2 and 4). Three points `(z₁, z₂, z₃)` are moved through the coordinates
//! `(z₁, u, v)` with `v = z₃ − z₁` and `u = (z₂ − z₁)/v`, which identify the
//! configuration space with `C × (C − {0, 1}) × (C − {0})`; each factor has its
//! own planner and the product combiner assembles them.
//!
//! Any number of points can be planned with [`plan_baseline`], which is
//! correct but makes no attempt to minimize the number of domains.

mod baseline;
mod instability;
pub mod primitives;
mod svg;
mod verify;

use num_complex::Complex64 as Complex;
use serde::{Deserialize, Serialize};

pub use baseline::plan_baseline;
pub use instability::instability_estimate;
pub use primitives::{Euclidean, LocalPlanner, PlanarPath, Product, PuncturedPlane, Trajectory};
pub use svg::render_svg;
pub use verify::{verify_path, VerifyFailure, VerifyReport, ENDPOINT_TOLERANCE};

use crate::error::{Error, Result};

pub const DEFAULT_FRAMES: usize = 256;
/// Consecutive frames move less than this fraction of the configuration
/// diameter.
pub const STEP_FRACTION: f64 = 0.01;
pub const MAX_FRAMES: usize = 1 << 20;

/// Ordered collision-free points in the plane.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<[f64; 2]>", into = "Vec<[f64; 2]>")]
pub struct Configuration(Vec<[f64; 2]>);

impl TryFrom<Vec<[f64; 2]>> for Configuration {
    type Error = Error;

    fn try_from(points: Vec<[f64; 2]>) -> Result<Self> {
        Configuration::new(points)
    }
}

impl From<Configuration> for Vec<[f64; 2]> {
    fn from(c: Configuration) -> Self {
        c.0
    }
}

impl Configuration {
    pub fn new(points: Vec<[f64; 2]>) -> Result<Self> {
        if points.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::InvalidConfiguration("non-finite coordinate".into()));
        }
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                if points[i] == points[j] {
                    return Err(Error::Collision { first: i, second: j });
                }
            }
        }
        Ok(Configuration(points))
    }

    /// Parses `[[x, y], ...]`.
    pub fn parse_json(text: &str) -> Result<Self> {
        let points: Vec<[f64; 2]> = serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))?;
        Configuration::new(points)
    }

    pub fn from_complex(points: &[Complex]) -> Result<Self> {
        Configuration::new(points.iter().map(|z| [z.re, z.im]).collect())
    }

    pub fn points(&self) -> &[[f64; 2]] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn complex(&self, i: usize) -> Complex {
        Complex::new(self.0[i][0], self.0[i][1])
    }

    pub fn min_distance(&self) -> f64 {
        min_pair_distance(&self.0).map_or(f64::INFINITY, |(d, _, _)| d)
    }

    pub fn diameter(&self) -> f64 {
        let mut d: f64 = 0.0;
        for (i, p) in self.0.iter().enumerate() {
            for q in &self.0[i + 1..] {
                d = d.max(dist(*p, *q));
            }
        }
        d
    }
}

pub(crate) fn dist(p: [f64; 2], q: [f64; 2]) -> f64 {
    (p[0] - q[0]).hypot(p[1] - q[1])
}

/// Smallest pairwise distance with the pair attaining it.
pub(crate) fn min_pair_distance(points: &[[f64; 2]]) -> Option<(f64, usize, usize)> {
    let mut best: Option<(f64, usize, usize)> = None;
    for i in 0..points.len() {
        for j in i + 1..points.len() {
            let d = dist(points[i], points[j]);
            if best.is_none_or(|b| d < b.0) {
                best = Some((d, i, j));
            }
        }
    }
    best
}

/// Which planner produced a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PlannerKind {
    Plan2,
    Plan3,
    Baseline,
}

/// Frames of a planned motion. `domain` is the 1-based index of the local
/// domain used (`0` for the baseline planner, which has no domain structure).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampledPath {
    pub n: usize,
    pub times: Vec<f64>,
    pub frames: Vec<Vec<[f64; 2]>>,
    pub domain: usize,
    pub planner: PlannerKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain_name: Option<String>,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub non_optimal: bool,
}

impl SampledPath {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("path serializes")
    }

    pub fn parse_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::MalformedDocument(e.to_string()))
    }

    pub fn first(&self) -> &[[f64; 2]] {
        &self.frames[0]
    }

    pub fn last(&self) -> &[[f64; 2]] {
        self.frames.last().expect("nonempty path")
    }
}

type Frame = Vec<[f64; 2]>;

/// Samples `f` at `frames` uniform times and bisects every interval whose
/// largest point displacement is not below `step_bound`.
pub(crate) fn sample_adaptive(
    f: impl Fn(f64) -> Vec<[f64; 2]>,
    frames: usize,
    step_bound: f64,
) -> Result<(Vec<f64>, Vec<Frame>)> {
    let frames = frames.max(2);
    let mut times = Vec::new();
    let mut out = Vec::new();
    let displacement = |a: &[[f64; 2]], b: &[[f64; 2]]| a.iter().zip(b).map(|(p, q)| dist(*p, *q)).fold(0.0, f64::max);
    let mut prev_t = 0.0;
    let mut prev = f(0.0);
    times.push(prev_t);
    out.push(prev.clone());
    for k in 1..frames {
        let t = if k == frames - 1 { 1.0 } else { k as f64 / (frames - 1) as f64 };
        let next = f(t);
        // depth-first bisection of [prev_t, t]
        let mut stack = vec![(t, next)];
        while let Some((t1, p1)) = stack.pop() {
            if displacement(&prev, &p1) >= step_bound && t1 - prev_t > 1e-12 {
                let mid = 0.5 * (prev_t + t1);
                let pm = f(mid);
                stack.push((t1, p1));
                stack.push((mid, pm));
                continue;
            }
            times.push(t1);
            out.push(p1.clone());
            if out.len() > MAX_FRAMES {
                return Err(Error::TooLarge { what: "sampled frames", limit: MAX_FRAMES, found: out.len() });
            }
            prev_t = t1;
            prev = p1;
        }
    }
    Ok((times, out))
}

pub(crate) fn step_bound_for(start: &Configuration, goal: &Configuration) -> f64 {
    STEP_FRACTION * start.diameter().max(goal.diameter())
}

/// Planners for a fixed number of points with an explicit domain structure.
/// Domain indices are 1-based.
pub trait ConfigPlanner: Sync {
    fn kind(&self) -> PlannerKind;
    fn points(&self) -> usize;
    fn domain_count(&self) -> usize;
    fn domain_name(&self, index: usize) -> String;
    fn classify(&self, start: &Configuration, goal: &Configuration) -> Result<usize>;
    fn plan(&self, start: &Configuration, goal: &Configuration, frames: usize) -> Result<SampledPath>;
}

fn check_len(c: &Configuration, n: usize) -> Result<()> {
    if c.len() != n {
        return Err(Error::InvalidConfiguration(format!("expected {n} points, got {}", c.len())));
    }
    Ok(())
}

/// `C_2(R²) ≅ C × C*` via `(z₁, z₂) ↦ (z₁, z₂ − z₁)`.
#[derive(Debug, Clone)]
pub struct TwoPointPlanner {
    table: Product<Euclidean, PuncturedPlane>,
}

impl Default for TwoPointPlanner {
    fn default() -> Self {
        TwoPointPlanner { table: Product::new(Euclidean, PuncturedPlane::cstar()) }
    }
}

impl TwoPointPlanner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn table(&self) -> &Product<Euclidean, PuncturedPlane> {
        &self.table
    }

    pub fn coordinates(c: &Configuration) -> (Complex, Complex) {
        (c.complex(0), c.complex(1) - c.complex(0))
    }

    pub fn from_coordinates(z: Complex, v: Complex) -> [[f64; 2]; 2] {
        let w = z + v;
        [[z.re, z.im], [w.re, w.im]]
    }
}

impl ConfigPlanner for TwoPointPlanner {
    fn kind(&self) -> PlannerKind {
        PlannerKind::Plan2
    }

    fn points(&self) -> usize {
        2
    }

    fn domain_count(&self) -> usize {
        self.table.domain_count()
    }

    fn domain_name(&self, index: usize) -> String {
        self.table.domain_name(index - 1)
    }

    fn classify(&self, start: &Configuration, goal: &Configuration) -> Result<usize> {
        check_len(start, 2)?;
        check_len(goal, 2)?;
        Ok(self.table.classify(&Self::coordinates(start), &Self::coordinates(goal))? + 1)
    }

    fn plan(&self, start: &Configuration, goal: &Configuration, frames: usize) -> Result<SampledPath> {
        check_len(start, 2)?;
        check_len(goal, 2)?;
        let (d, path) = self.table.rule(&Self::coordinates(start), &Self::coordinates(goal))?;
        let (times, frames) = sample_adaptive(
            |t| {
                let (z, v) = path.at(t);
                Self::from_coordinates(z, v).to_vec()
            },
            frames,
            step_bound_for(start, goal),
        )?;
        Ok(SampledPath {
            n: 2,
            times,
            frames,
            domain: d + 1,
            planner: PlannerKind::Plan2,
            domain_name: Some(self.table.domain_name(d)),
            non_optimal: false,
        })
    }
}

/// Coordinates `(z₁, u, v)` of three distinct points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThreePointCoords {
    pub translation: Complex,
    pub u: Complex,
    pub v: Complex,
}

impl ThreePointCoords {
    pub fn of(c: &Configuration) -> Self {
        let (z1, z2, z3) = (c.complex(0), c.complex(1), c.complex(2));
        let v = z3 - z1;
        ThreePointCoords { translation: z1, u: (z2 - z1) / v, v }
    }

    pub fn points(&self) -> [Complex; 3] {
        let z1 = self.translation;
        [z1, z1 + self.u * self.v, z1 + self.v]
    }

    fn frame(&self) -> Vec<[f64; 2]> {
        self.points().iter().map(|z| [z.re, z.im]).collect()
    }
}

type ThreePointTable = Product<Euclidean, Product<PuncturedPlane, PuncturedPlane>>;

/// Four-domain planner for three points.
#[derive(Debug, Clone)]
pub struct ThreePointPlanner {
    table: ThreePointTable,
}

impl Default for ThreePointPlanner {
    fn default() -> Self {
        ThreePointPlanner {
            table: Product::new(Euclidean, Product::new(PuncturedPlane::mstar(), PuncturedPlane::cstar())),
        }
    }
}

impl ThreePointPlanner {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn table(&self) -> &ThreePointTable {
        &self.table
    }

    fn state(c: &Configuration) -> (Complex, (Complex, Complex)) {
        let k = ThreePointCoords::of(c);
        (k.translation, (k.u, k.v))
    }
}

impl ConfigPlanner for ThreePointPlanner {
    fn kind(&self) -> PlannerKind {
        PlannerKind::Plan3
    }

    fn points(&self) -> usize {
        3
    }

    fn domain_count(&self) -> usize {
        self.table.domain_count()
    }

    fn domain_name(&self, index: usize) -> String {
        self.table.domain_name(index - 1)
    }

    fn classify(&self, start: &Configuration, goal: &Configuration) -> Result<usize> {
        check_len(start, 3)?;
        check_len(goal, 3)?;
        Ok(self.table.classify(&Self::state(start), &Self::state(goal))? + 1)
    }

    fn plan(&self, start: &Configuration, goal: &Configuration, frames: usize) -> Result<SampledPath> {
        check_len(start, 3)?;
        check_len(goal, 3)?;
        let (d, path) = self.table.rule(&Self::state(start), &Self::state(goal))?;
        let (times, frames) = sample_adaptive(
            |t| {
                let (translation, (u, v)) = path.at(t);
                ThreePointCoords { translation, u, v }.frame()
            },
            frames,
            step_bound_for(start, goal),
        )?;
        Ok(SampledPath {
            n: 3,
            times,
            frames,
            domain: d + 1,
            planner: PlannerKind::Plan3,
            domain_name: Some(self.table.domain_name(d)),
            non_optimal: false,
        })
    }
}

pub fn plan2(start: &Configuration, goal: &Configuration, frames: usize) -> Result<SampledPath> {
    TwoPointPlanner::new().plan(start, goal, frames)
}

pub fn plan3(start: &Configuration, goal: &Configuration, frames: usize) -> Result<SampledPath> {
    ThreePointPlanner::new().plan(start, goal, frames)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(points: &[[f64; 2]]) -> Configuration {
        Configuration::new(points.to_vec()).unwrap()
    }

    #[test]
    fn configuration_validation() {
        assert!(matches!(Configuration::parse_json("[[0,0],[1,0],[0,0]]"), Err(Error::Collision { first: 0, second: 2 })));
        assert!(Configuration::parse_json("[[0,0],[1]]").is_err());
        let c = Configuration::parse_json("[[0,0],[3,4]]").unwrap();
        assert_eq!((c.min_distance(), c.diameter()), (5.0, 5.0));
    }

    #[test]
    fn round_trip_coordinates() {
        let c = cfg(&[[0.3, -1.2], [2.5, 0.25], [-1.0, 4.0]]);
        let back = ThreePointCoords::of(&c).points();
        for (i, z) in back.iter().enumerate() {
            assert!((z - c.complex(i)).norm() <= 1e-12 * c.diameter());
        }
    }

    #[test]
    fn witness_pair_lands_in_last_domain() {
        let p = ThreePointPlanner::new();
        let start = cfg(&[[0.0, 0.0], [-1.0, 0.0], [1.0, 0.0]]);
        let goal = cfg(&[[0.0, 0.0], [-2.0, 0.0], [-1.0, 0.0]]);
        let k = (ThreePointCoords::of(&start), ThreePointCoords::of(&goal));
        assert_eq!((k.0.u, k.0.v, k.1.u, k.1.v), (Complex::new(-1.0, 0.0), Complex::new(1.0, 0.0), Complex::new(2.0, 0.0), Complex::new(-1.0, 0.0)));
        let d = p.classify(&start, &goal).unwrap();
        assert_eq!((d, p.domain_name(d)), (4, "W5".to_string()));
    }

    #[test]
    fn constant_plan() {
        let c = cfg(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]);
        let path = plan3(&c, &c, 16).unwrap();
        assert_eq!((path.domain, path.domain_name.as_deref()), (1, Some("W2")));
        assert!(path.frames.iter().all(|f| f == c.points()));
    }

    #[test]
    fn swap_is_collision_free() {
        let start = cfg(&[[0.0, 0.0], [1.0, 0.0], [2.0, 0.0]]);
        let goal = cfg(&[[0.0, 0.0], [2.0, 0.0], [1.0, 0.0]]);
        let path = plan3(&start, &goal, DEFAULT_FRAMES).unwrap();
        let report = verify_path(&path, 1e-6, Some((&start, &goal)), None).unwrap();
        assert!(report.min_distance > 0.0);
    }

    #[test]
    fn plan2_examples() {
        let p = TwoPointPlanner::new();
        let a = cfg(&[[0.0, 0.0], [1.0, 0.0]]);
        assert_eq!(p.classify(&a, &cfg(&[[0.0, 0.0], [2.0, 0.0]])).unwrap(), 1);
        let flip = cfg(&[[0.0, 0.0], [-1.0, 0.0]]);
        assert_eq!(p.classify(&a, &flip).unwrap(), 2);
        let path = plan2(&a, &flip, 64).unwrap();
        assert!(verify_path(&path, 0.49, Some((&a, &flip)), None).is_ok());
    }

    #[test]
    fn sampling_respects_step_bound() {
        let (times, frames) = sample_adaptive(|t| vec![[100.0 * t, 0.0]], 4, 0.5).unwrap();
        assert_eq!(times.first(), Some(&0.0));
        assert_eq!(times.last(), Some(&1.0));
        assert!(frames.windows(2).all(|w| dist(w[0][0], w[1][0]) < 0.5));
        assert!(times.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn path_json_round_trip() {
        let start = cfg(&[[0.0, 0.0], [1.0, 0.0]]);
        let path = plan2(&start, &start, 3).unwrap();
        let json = path.to_json();
        assert!(json.starts_with("{\"n\":2,\"times\":[0.0,0.5,1.0],\"frames\":"));
        assert_eq!(SampledPath::parse_json(&json).unwrap(), path);
    }
}
