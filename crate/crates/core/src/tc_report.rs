//! Assembling lower and upper bounds into a TC report.

use std::fmt;

use serde::Serialize;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::os_algebra::{format_coefficient, OsAlgebra, Parity};
use crate::tensor_square::{bigint_json, CupLength, TensorSquare};

pub const RANK_BOUND: &str = "rank: TC <= 2r";
pub const PRODUCT_BOUND: &str = "product decomposition: TC <= 2r - k + 1";
pub const DIMENSION_CONNECTIVITY_BOUND: &str = "dimension/connectivity: TC < (2 dim + 1)/(c + 1) + 1";
pub const CUP_LENGTH_BOUND: &str = "zero-divisor cup-length: TC >= zcl + 1";

/// What the report is about.
#[derive(Debug, Clone)]
pub enum Mode {
    /// The complement of a complex arrangement (anticommutative algebra).
    Arrangement(Arrangement),
    /// `C_n(R²)`, the complement of the braid arrangement.
    ConfigPlane(usize),
    /// `C_n(R^m)`.
    ConfigSpace { n: usize, m: usize },
}

impl Mode {
    /// `plane:<n>` or `space:<n>:<m>`.
    pub fn parse_config(text: &str) -> Result<Mode> {
        let parts: Vec<&str> = text.split(':').collect();
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::Unsupported(format!("bad configuration mode {text:?}")));
        match parts.as_slice() {
            ["plane", n] => Ok(Mode::ConfigPlane(num(n)?)),
            ["space", n, m] => Ok(Mode::ConfigSpace { n: num(n)?, m: num(m)? }),
            _ => Err(Error::Unsupported(format!("configuration mode {text:?}; expected plane:<n> or space:<n>:<m>"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Mode::Arrangement(_) => write!(f, "arrangement"),
            Mode::ConfigPlane(n) => write!(f, "config-plane:{n}"),
            Mode::ConfigSpace { n, m } => write!(f, "config-space:{n}:{m}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bound {
    pub value: usize,
    pub provenance: String,
}

impl Bound {
    fn new(value: usize, provenance: &str) -> Self {
        Bound { value, provenance: provenance.to_string() }
    }
}

/// Candidate upper bounds for an arrangement complement, rank bound first.
pub fn upper_bound_candidates(arr: &Arrangement) -> Vec<Bound> {
    let r = arr.rank();
    let k = arr.connected_components().len();
    vec![Bound::new(2 * r, RANK_BOUND), Bound::new(2 * r + 1 - k, PRODUCT_BOUND)]
}

/// `min(2r, 2r − k + 1)`; the rank bound wins ties.
pub fn upper_bounds(arr: &Arrangement) -> Bound {
    upper_bound_candidates(arr).into_iter().min_by_key(|b| b.value).expect("two candidates")
}

/// Largest integer strictly below `(2·dim + 1)/(conn + 1) + 1`.
pub fn dimension_connectivity_bound(dim: usize, conn: usize) -> usize {
    let num = 2 * dim + 1 + conn + 1;
    (num - 1) / (conn + 1)
}

#[derive(Debug, Clone)]
pub struct LowerBound {
    pub bound: Bound,
    pub cup: CupLength,
}

/// Zero-divisor cup-length plus one.
pub fn lower_bound(arr: &Arrangement, parity: Parity, budget: u64) -> Result<LowerBound> {
    let sq = TensorSquare::new(OsAlgebra::new(arr, parity)?);
    let cup = sq.zd_cup_length(budget)?;
    if cup.length == 0 {
        return Err(Error::BudgetExhausted(budget));
    }
    Ok(LowerBound { bound: Bound::new(cup.length + 1, CUP_LENGTH_BOUND), cup })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TcReport {
    pub arrangement_id: String,
    pub mode: String,
    pub parity: Parity,
    pub rank: usize,
    pub components: usize,
    pub ground_order: Vec<String>,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub exact: Option<usize>,
    pub projective_tc: Option<usize>,
    pub lower_provenance: String,
    pub upper_provenance: String,
    /// Every upper bound considered, including the ones that lost.
    pub upper_candidates: Vec<Bound>,
    pub certificates: Vec<serde_json::Value>,
    pub notes: Vec<String>,
}

const GAP_NOTE: &str = "conjectural gap";

/// Builds the report. Budget bounds the number of subset evaluations in the
/// zero-divisor search.
pub fn report(mode: &Mode, budget: u64) -> Result<TcReport> {
    match mode {
        Mode::Arrangement(arr) => arrangement_report(arr, mode, budget),
        Mode::ConfigPlane(n) => {
            check_points(*n)?;
            arrangement_report(&Arrangement::braid(*n)?, mode, budget)
        }
        Mode::ConfigSpace { n, m } => {
            check_points(*n)?;
            match *m {
                0 | 1 => Err(Error::Unsupported(format!("C_{n}(R^{m}) is not connected"))),
                // R² is C: same as the plane mode
                2 => arrangement_report(&Arrangement::braid(*n)?, mode, budget),
                m => space_report(*n, m, mode, budget),
            }
        }
    }
}

fn check_points(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::Unsupported(format!("configuration spaces need at least 2 points, got {n}")));
    }
    Ok(())
}

fn arrangement_report(arr: &Arrangement, mode: &Mode, budget: u64) -> Result<TcReport> {
    let upper_candidates = upper_bound_candidates(arr);
    let upper = upper_bounds(arr);
    let lower = lower_bound(arr, Parity::Odd, budget)?;
    let alg = OsAlgebra::new(arr, Parity::Odd)?;
    let r = arr.rank();
    let mut certificates = Vec::new();
    let mut projective_tc = None;
    if let Some(cert) = &lower.cup.certificate {
        certificates.push(tagged("nonvanishing", cert.to_json(&alg)));
        if cert.subset.len() == 2 * r - 1 {
            projective_tc = Some(2 * r - 1);
        }
    }
    certificates.push(tagged("zero-divisor-product", product_json(&alg, &lower.cup)));
    let mut notes = Vec::new();
    if !lower.cup.complete {
        notes.push("search budget exhausted; the lower bound may not be optimal".to_string());
    }
    finish(arr, mode, Parity::Odd, lower, upper, upper_candidates, certificates, projective_tc, notes)
}

fn space_report(n: usize, m: usize, mode: &Mode, budget: u64) -> Result<TcReport> {
    let arr = Arrangement::braid(n)?;
    // generators sit in degree m − 1
    let parity = if m % 2 == 1 { Parity::Even } else { Parity::Odd };
    let dim = (m - 1) * (n - 1);
    let conn = m - 2;
    let upper = Bound::new(dimension_connectivity_bound(dim, conn), DIMENSION_CONNECTIVITY_BOUND);
    let lower = lower_bound(&arr, parity, budget)?;
    let alg = OsAlgebra::new(&arr, parity)?;
    let mut certificates = Vec::new();
    if let Some(cert) = &lower.cup.certificate {
        certificates.push(tagged("nonvanishing", cert.to_json(&alg)));
    }
    certificates.push(tagged("zero-divisor-product", product_json(&alg, &lower.cup)));
    let mut notes = vec![format!("homotopy dimension {dim}, {conn}-connected")];
    if lower.bound.value < upper.value {
        notes.push(GAP_NOTE.to_string());
    }
    finish(&arr, mode, parity, lower, upper.clone(), vec![upper], certificates, None, notes)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    arr: &Arrangement,
    mode: &Mode,
    parity: Parity,
    lower: LowerBound,
    upper: Bound,
    upper_candidates: Vec<Bound>,
    certificates: Vec<serde_json::Value>,
    projective_tc: Option<usize>,
    notes: Vec<String>,
) -> Result<TcReport> {
    if lower.bound.value > upper.value {
        return Err(Error::Unsupported(format!(
            "inconsistent bounds: lower {} exceeds upper {}",
            lower.bound.value, upper.value
        )));
    }
    let exact = (lower.bound.value == upper.value).then_some(upper.value);
    Ok(TcReport {
        arrangement_id: arr.id().to_string(),
        mode: mode.to_string(),
        parity,
        rank: arr.rank(),
        components: arr.connected_components().len(),
        ground_order: arr.labels().to_vec(),
        lower_bound: lower.bound.value,
        upper_bound: upper.value,
        exact,
        projective_tc: if exact.is_some() { projective_tc } else { None },
        lower_provenance: lower.bound.provenance,
        upper_provenance: upper.provenance,
        upper_candidates,
        certificates,
        notes,
    })
}

fn tagged(kind: &str, body: serde_json::Value) -> serde_json::Value {
    let mut out = serde_json::Map::new();
    out.insert("kind".into(), kind.into());
    if let serde_json::Value::Object(fields) = body {
        out.extend(fields);
    }
    serde_json::Value::Object(out)
}

fn product_json(alg: &OsAlgebra, cup: &CupLength) -> serde_json::Value {
    let mut out = serde_json::json!({
        "factors": cup.factors.iter().map(|&i| alg.labels()[i].clone()).collect::<Vec<_>>(),
        "length": cup.length,
        "ceiling": cup.ceiling,
        "complete": cup.complete,
    });
    if let Some(w) = &cup.witness {
        out["witness"] = serde_json::json!({
            "left": alg.format_monomial(w.left),
            "right": alg.format_monomial(w.right),
            "coeff": bigint_json(&w.coeff),
        });
    }
    out
}

impl TcReport {
    pub fn headline(&self) -> String {
        match self.exact {
            Some(v) => format!("TC = {v} (exact)"),
            None if self.notes.iter().any(|n| n == GAP_NOTE) => {
                format!("TC ∈ [{}, {}] ({GAP_NOTE})", self.lower_bound, self.upper_bound)
            }
            None => format!("TC ∈ [{}, {}]", self.lower_bound, self.upper_bound),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Multi-line human-readable form; the first line is [`TcReport::headline`].
    pub fn render_text(&self) -> String {
        let mut lines = vec![self.headline()];
        lines.push(format!(
            "{} ({}), {} parity, rank {}, {} component{}",
            self.arrangement_id,
            self.mode,
            self.parity,
            self.rank,
            self.components,
            if self.components == 1 { "" } else { "s" }
        ));
        lines.push(format!("lower bound {}: {}", self.lower_bound, self.lower_provenance));
        lines.push(format!("upper bound {}: {}", self.upper_bound, self.upper_provenance));
        for cert in &self.certificates {
            lines.push(render_certificate(cert));
        }
        if let Some(p) = self.projective_tc {
            lines.push(format!("projective complement: TC = {p}"));
        }
        for note in &self.notes {
            lines.push(format!("note: {note}"));
        }
        lines.join("\n") + "\n"
    }
}

fn render_certificate(cert: &serde_json::Value) -> String {
    let list = |v: &serde_json::Value| {
        v.as_array().map(|a| a.iter().filter_map(|s| s.as_str()).collect::<Vec<_>>().join(",")).unwrap_or_default()
    };
    let witness = |w: &serde_json::Value| {
        let coeff = match &w["coeff"] {
            serde_json::Value::Number(n) => format_coefficient(&n.as_i64().unwrap_or(0).into()),
            other => other.as_str().unwrap_or("?").to_string(),
        };
        format!("{coeff}·({})⊗({})", w["left"].as_str().unwrap_or(""), w["right"].as_str().unwrap_or(""))
    };
    match cert["kind"].as_str() {
        Some("nonvanishing") => format!(
            "certificate: S = {{{}}}, T1 = {{{}}}, T2 = {{{}}}, witness {}",
            list(&cert["subset"]),
            list(&cert["T1"]),
            list(&cert["T2"]),
            witness(&cert["witness"])
        ),
        _ => format!(
            "zero-divisor product over [{}] nonzero, witness {}",
            list(&cert["factors"]),
            cert.get("witness").map(witness).unwrap_or_else(|| "none".into())
        ),
    }
}
