//! Local planners on the plane, the punctured planes and their products.

use std::f64::consts::PI;

use num_complex::Complex64 as Complex;

use crate::error::{Error, Result};

/// Relative tolerance for "puncture lies on the segment". Inside the band the
/// detour domain wins, so classification is deterministic.
pub const ON_SEGMENT_TOLERANCE: f64 = 1e-12;

/// A continuous path parameterized by `t ∈ [0, 1]`.
pub trait Trajectory {
    type State;
    fn at(&self, t: f64) -> Self::State;
}

/// A motion planner given by local domains and one continuous rule on each.
/// Domain indices are 0-based here.
pub trait LocalPlanner {
    type State: Clone;
    type Path: Trajectory<State = Self::State>;

    fn domain_count(&self) -> usize;
    fn domain_name(&self, index: usize) -> String;
    /// Index of the unique domain containing `(from, to)`.
    fn classify(&self, from: &Self::State, to: &Self::State) -> Result<usize>;
    /// Path from `from` to `to` together with the domain it was built in.
    fn rule(&self, from: &Self::State, to: &Self::State) -> Result<(usize, Self::Path)>;

    fn in_domain(&self, index: usize, from: &Self::State, to: &Self::State) -> Result<bool> {
        Ok(self.classify(from, to)? == index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Piece {
    Segment { from: Complex, to: Complex },
    Arc { center: Complex, radius: f64, start_angle: f64, sweep: f64 },
}

impl Piece {
    pub fn length(&self) -> f64 {
        match *self {
            Piece::Segment { from, to } => (to - from).norm(),
            Piece::Arc { radius, sweep, .. } => radius * sweep.abs(),
        }
    }

    /// Constant-speed point at fraction `s ∈ [0, 1]` of the piece.
    pub fn at(&self, s: f64) -> Complex {
        match *self {
            Piece::Segment { from, to } => {
                if s >= 1.0 {
                    to
                } else {
                    from + (to - from) * s
                }
            }
            Piece::Arc { center, radius, start_angle, sweep } => center + Complex::from_polar(radius, start_angle + sweep * s),
        }
    }
}

/// Concatenation of pieces traversed at constant speed over `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlanarPath {
    start: Complex,
    end: Complex,
    pieces: Vec<Piece>,
    // cumulative length at the end of each piece
    cumulative: Vec<f64>,
}

impl PlanarPath {
    pub fn constant(at: Complex) -> Self {
        PlanarPath { start: at, end: at, pieces: Vec::new(), cumulative: Vec::new() }
    }

    pub fn new(start: Complex, end: Complex, pieces: Vec<Piece>) -> Self {
        let mut total = 0.0;
        let cumulative = pieces
            .iter()
            .map(|p| {
                total += p.length();
                total
            })
            .collect();
        PlanarPath { start, end, pieces, cumulative }
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }

    pub fn length(&self) -> f64 {
        self.cumulative.last().copied().unwrap_or(0.0)
    }
}

impl Trajectory for PlanarPath {
    type State = Complex;

    fn at(&self, t: f64) -> Complex {
        let total = self.length();
        if t <= 0.0 || total == 0.0 {
            return if t >= 1.0 { self.end } else { self.start };
        }
        if t >= 1.0 {
            return self.end;
        }
        let target = t * total;
        let k = self.cumulative.partition_point(|&c| c < target).min(self.pieces.len() - 1);
        let begin = if k == 0 { 0.0 } else { self.cumulative[k - 1] };
        let len = self.pieces[k].length();
        let s = if len > 0.0 { ((target - begin) / len).clamp(0.0, 1.0) } else { 1.0 };
        self.pieces[k].at(s)
    }
}

/// Straight-line planner on `C`; one domain.
#[derive(Debug, Clone, Copy, Default)]
pub struct Euclidean;

impl LocalPlanner for Euclidean {
    type State = Complex;
    type Path = PlanarPath;

    fn domain_count(&self) -> usize {
        1
    }

    fn domain_name(&self, _index: usize) -> String {
        "E1".to_string()
    }

    fn classify(&self, from: &Complex, to: &Complex) -> Result<usize> {
        finite(*from)?;
        finite(*to)?;
        Ok(0)
    }

    fn rule(&self, from: &Complex, to: &Complex) -> Result<(usize, PlanarPath)> {
        self.classify(from, to)?;
        Ok((0, segment_path(*from, *to)))
    }
}

fn finite(z: Complex) -> Result<()> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidConfiguration(format!("non-finite point {z}")))
    }
}

fn segment_path(from: Complex, to: Complex) -> PlanarPath {
    if from == to {
        PlanarPath::constant(from)
    } else {
        PlanarPath::new(from, to, vec![Piece::Segment { from, to }])
    }
}

/// `C` minus finitely many punctures. A pair is classified by how many
/// punctures lie on the closed segment between its points; the rule follows
/// the segment and replaces each blocking stretch by a counterclockwise
/// semicircle around the puncture.
#[derive(Debug, Clone, PartialEq)]
pub struct PuncturedPlane {
    punctures: Vec<Complex>,
    radius_cap: Option<f64>,
    prefix: char,
}

impl PuncturedPlane {
    /// `C − {0}` with two domains `G1`, `G2`; detour radius
    /// `½·min(|v|, |w|)`.
    pub fn cstar() -> Self {
        PuncturedPlane { punctures: vec![Complex::new(0.0, 0.0)], radius_cap: None, prefix: 'G' }
    }

    /// `C − {0, 1}` with three domains `F1`, `F2`, `F3`; detour radius
    /// `½·min(|u − p|, |w − p|, ¼)`.
    pub fn mstar() -> Self {
        PuncturedPlane {
            punctures: vec![Complex::new(0.0, 0.0), Complex::new(1.0, 0.0)],
            radius_cap: Some(0.25),
            prefix: 'F',
        }
    }

    pub fn punctures(&self) -> &[Complex] {
        &self.punctures
    }

    fn check(&self, z: Complex) -> Result<()> {
        finite(z)?;
        if self.punctures.contains(&z) {
            return Err(Error::OnPuncture);
        }
        Ok(())
    }

    /// Punctures on the closed segment `[a, b]`, ordered from `a` to `b`.
    pub fn blocking(&self, a: Complex, b: Complex) -> Vec<Complex> {
        let mut hits: Vec<(f64, Complex)> = self
            .punctures
            .iter()
            .filter(|&&p| on_segment(p, a, b))
            .map(|&p| {
                let d = b - a;
                ((p - a).re * d.re + (p - a).im * d.im, p)
            })
            .collect();
        hits.sort_by(|x, y| x.0.total_cmp(&y.0));
        hits.into_iter().map(|(_, p)| p).collect()
    }

    fn radius(&self, a: Complex, b: Complex, p: Complex) -> f64 {
        let r = (a - p).norm().min((b - p).norm());
        0.5 * self.radius_cap.map_or(r, |cap| r.min(cap))
    }
}

/// Whether `p` lies on the closed segment `[a, b]`, up to the relative
/// tolerance. `p` is assumed distinct from both ends.
pub fn on_segment(p: Complex, a: Complex, b: Complex) -> bool {
    let (x, y) = (a - p, b - p);
    let cross = x.re * y.im - x.im * y.re;
    let dot = x.re * y.re + x.im * y.im;
    cross.abs() <= ON_SEGMENT_TOLERANCE * x.norm() * y.norm() && dot <= 0.0
}

impl LocalPlanner for PuncturedPlane {
    type State = Complex;
    type Path = PlanarPath;

    fn domain_count(&self) -> usize {
        self.punctures.len() + 1
    }

    fn domain_name(&self, index: usize) -> String {
        format!("{}{}", self.prefix, index + 1)
    }

    fn classify(&self, from: &Complex, to: &Complex) -> Result<usize> {
        self.check(*from)?;
        self.check(*to)?;
        Ok(self.blocking(*from, *to).len())
    }

    fn rule(&self, from: &Complex, to: &Complex) -> Result<(usize, PlanarPath)> {
        let (a, b) = (*from, *to);
        self.check(a)?;
        self.check(b)?;
        let blocking = self.blocking(a, b);
        if blocking.is_empty() {
            return Ok((0, segment_path(a, b)));
        }
        let dir = (b - a) / (b - a).norm();
        let mut pieces = Vec::new();
        let mut cursor = a;
        for &p in &blocking {
            let rho = self.radius(a, b, p);
            let entry = p - dir * rho;
            let exit = p + dir * rho;
            pieces.push(Piece::Segment { from: cursor, to: entry });
            pieces.push(Piece::Arc { center: p, radius: rho, start_angle: (entry - p).arg(), sweep: PI });
            cursor = exit;
        }
        pieces.push(Piece::Segment { from: cursor, to: b });
        Ok((blocking.len(), PlanarPath::new(a, b, pieces)))
    }
}

/// Pair of paths run simultaneously.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductPath<A, B>(pub A, pub B);

impl<A: Trajectory, B: Trajectory> Trajectory for ProductPath<A, B> {
    type State = (A::State, B::State);

    fn at(&self, t: f64) -> Self::State {
        (self.0.at(t), self.1.at(t))
    }
}

/// Planner on `X × Y` with `k₁ + k₂ − 1` domains: the pair lands in
/// `W_l = ∪_{i+j=l} F_i × G_j`, and the rule is the coordinatewise pair.
#[derive(Debug, Clone, PartialEq)]
pub struct Product<P, Q> {
    pub left: P,
    pub right: Q,
}

impl<P, Q> Product<P, Q> {
    pub fn new(left: P, right: Q) -> Self {
        Product { left, right }
    }
}

impl<P: LocalPlanner, Q: LocalPlanner> LocalPlanner for Product<P, Q> {
    type State = (P::State, Q::State);
    type Path = ProductPath<P::Path, Q::Path>;

    fn domain_count(&self) -> usize {
        self.left.domain_count() + self.right.domain_count() - 1
    }

    /// `W2, W3, …` after the 1-based index sum.
    fn domain_name(&self, index: usize) -> String {
        format!("W{}", index + 2)
    }

    fn classify(&self, from: &Self::State, to: &Self::State) -> Result<usize> {
        Ok(self.left.classify(&from.0, &to.0)? + self.right.classify(&from.1, &to.1)?)
    }

    fn rule(&self, from: &Self::State, to: &Self::State) -> Result<(usize, Self::Path)> {
        let (i, p) = self.left.rule(&from.0, &to.0)?;
        let (j, q) = self.right.rule(&from.1, &to.1)?;
        Ok((i + j, ProductPath(p, q)))
    }
}
