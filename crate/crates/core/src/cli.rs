//! The `tcarrange` command line.
//!
//! ```text
//! tcarrange tc --config plane:4
//! tcarrange tc --named braid:4 --json report.json
//! tcarrange algebra reduce --named braid:3 --monomial H13,H23
//! tcarrange algebra pi --named braid:3 --parity even --subset H12,H12,H13,H13
//! tcarrange plan --n 3 --from "[[0,0],[1,0],[2,0]]" --to "[[0,0],[2,0],[1,0]]" --svg swap.svg
//! tcarrange verify --path swap.json --margin 1e-6
//! tcarrange instability --n 3 --probe "[[[0,0],[-1,0],[1,0]],[[0,0],[-2,0],[-1,0]]]"
//! ```
//!
//! Exit codes: 0 success, 1 verification failure, 2 invalid input, 3 a size
//! guard or search budget was exhausted.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::os_algebra::{OsAlgebra, Parity};
use crate::planner::{
    instability_estimate, plan_baseline, render_svg, verify_path, ConfigPlanner, Configuration, SampledPath,
    ThreePointPlanner, TwoPointPlanner, DEFAULT_FRAMES,
};
use crate::tc_report::{report, Mode};
use crate::tensor_square::{TensorSquare, DEFAULT_BUDGET};

/// Environment variable capping the worker threads.
pub const THREADS_ENV: &str = "TCARRANGE_THREADS";

#[derive(Debug, Parser)]
#[command(name = "tcarrange", version, about = "Topological complexity bounds and motion planners for arrangement complements")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Lower and upper bounds on TC, with certificates.
    Tc(TcArgs),
    /// Orlik–Solomon algebra queries.
    Algebra(AlgebraArgs),
    /// Plan a collision-free motion between two configurations.
    Plan(PlanArgs),
    /// Check a sampled path for endpoints, collisions and step size.
    Verify(VerifyArgs),
    /// Estimate the order of instability of a planner at probe pairs.
    Instability(InstabilityArgs),
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Arrangement JSON file.
    #[arg(long, value_name = "FILE")]
    arrangement: Option<PathBuf>,
    /// Built-in arrangement: braid:<n> or generic:<r>:<n>:<seed>.
    #[arg(long, value_name = "SPEC")]
    named: Option<String>,
}

impl Source {
    fn load(&self) -> Result<Arrangement> {
        match (&self.arrangement, &self.named) {
            (Some(path), _) => {
                let arr = Arrangement::parse_json(&std::fs::read_to_string(path)?)?;
                let id = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "file".into());
                Ok(arr.with_id(id))
            }
            (None, Some(name)) => Arrangement::named(name),
            (None, None) => unreachable!("clap enforces the group"),
        }
    }
}

#[derive(Debug, Args)]
#[group(id = "target", required = true, multiple = false)]
struct TcTarget {
    /// Arrangement JSON file.
    #[arg(long, value_name = "FILE")]
    arrangement: Option<PathBuf>,
    /// Built-in arrangement: braid:<n> or generic:<r>:<n>:<seed>.
    #[arg(long, value_name = "SPEC")]
    named: Option<String>,
    /// Configuration space: plane:<n> for C_n(R²) or space:<n>:<m> for C_n(R^m).
    #[arg(long, value_name = "MODE")]
    config: Option<String>,
}

#[derive(Debug, Args)]
struct TcArgs {
    #[command(flatten)]
    target: TcTarget,
    /// Also write the report as JSON.
    #[arg(long, value_name = "FILE")]
    json: Option<PathBuf>,
    /// Maximum subset evaluations in the zero-divisor search.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum AlgebraAction {
    /// nbc expansion of a monomial (--monomial).
    Reduce,
    /// Product of zero-divisors over a list of labels (--subset), in order.
    Pi,
    /// Dimension of every degree.
    Dims,
}

#[derive(Debug, Args)]
struct AlgebraArgs {
    action: AlgebraAction,
    #[command(flatten)]
    source: Source,
    /// odd: anticommuting generators; even: commuting generators with e² = 0.
    #[arg(long, default_value = "odd", value_parser = parse_parity)]
    parity: Parity,
    /// Comma-separated labels, e.g. H13,H23.
    #[arg(long, value_name = "LABELS")]
    monomial: Option<String>,
    /// Comma-separated labels; repeats allowed.
    #[arg(long, value_name = "LABELS")]
    subset: Option<String>,
    /// Evaluate `pi` through the shuffle expansion instead of multiplying
    /// factor by factor (odd parity only).
    #[arg(long)]
    shuffle: bool,
}

fn parse_parity(s: &str) -> std::result::Result<Parity, String> {
    Parity::parse(s).map_err(|e| e.to_string())
}

#[derive(Debug, Args)]
struct PlanArgs {
    /// 2, 3, or baseline:<n>.
    #[arg(long, value_name = "PLANNER")]
    n: String,
    /// Start configuration: inline JSON [[x,y],...] or a file containing it.
    #[arg(long, value_name = "JSON")]
    from: String,
    /// Goal configuration, same format.
    #[arg(long, value_name = "JSON")]
    to: String,
    /// Initial uniform sample count before adaptive refinement.
    #[arg(long, default_value_t = DEFAULT_FRAMES)]
    frames: usize,
    /// Write an SVG drawing of the motion.
    #[arg(long, value_name = "FILE")]
    svg: Option<PathBuf>,
    /// Write the path JSON here instead of standard output.
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Path JSON produced by `plan`.
    #[arg(long, value_name = "FILE")]
    path: PathBuf,
    /// Minimum allowed pairwise distance in every frame.
    #[arg(long, default_value_t = 0.0)]
    margin: f64,
    /// Expected start configuration.
    #[arg(long, value_name = "JSON", requires = "to")]
    from: Option<String>,
    /// Expected goal configuration.
    #[arg(long, value_name = "JSON", requires = "from")]
    to: Option<String>,
    /// Largest allowed displacement of a point between frames; defaults to a
    /// hundredth of the larger endpoint diameter.
    #[arg(long)]
    step_bound: Option<f64>,
}

#[derive(Debug, Args)]
struct InstabilityArgs {
    /// 2 or 3.
    #[arg(long)]
    n: usize,
    /// Probe pair [start, goal] as inline JSON or a file; repeatable.
    #[arg(long, value_name = "JSON", required = true)]
    probe: Vec<String>,
    /// Perturbation size.
    #[arg(long, default_value_t = 1e-3)]
    eps: f64,
    #[arg(long, default_value_t = 10_000)]
    trials: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

enum Failure {
    Error(Error),
    Verify(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Error(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Error(e.into())
    }
}

/// Runs the command line with `args` (including the program name) and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    configure_threads();
    let result = match cli.command {
        Command::Tc(a) => cmd_tc(a, out),
        Command::Algebra(a) => cmd_algebra(a, out),
        Command::Plan(a) => cmd_plan(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Instability(a) => cmd_instability(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(Failure::Verify(msg)) => {
            let _ = writeln!(err, "verification failed: {msg}");
            1
        }
        Err(Failure::Error(e)) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn configure_threads() {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()).filter(|&n| n > 0) {
        // a second call in the same process keeps the first pool
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

/// Writes through a temporary file in the target directory, then renames.
fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents.as_bytes())?;
    tmp.persist(path).map_err(|e| Error::Io(e.to_string()))?;
    Ok(())
}

/// Inline JSON if it looks like JSON, otherwise a file name.
fn inline_or_file(text: &str) -> Result<String> {
    if text.trim_start().starts_with('[') || text.trim_start().starts_with('{') {
        Ok(text.to_string())
    } else {
        Ok(std::fs::read_to_string(text)?)
    }
}

fn configuration(text: &str) -> Result<Configuration> {
    Configuration::parse_json(&inline_or_file(text)?)
}

fn cmd_tc(a: TcArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let mode = match (&a.target.arrangement, &a.target.named, &a.target.config) {
        (_, _, Some(c)) => Mode::parse_config(c)?,
        (arrangement, named, None) => {
            Mode::Arrangement(Source { arrangement: arrangement.clone(), named: named.clone() }.load()?)
        }
    };
    let rep = report(&mode, a.budget)?;
    write!(out, "{}", rep.render_text())?;
    if let Some(path) = &a.json {
        write_atomic(path, &(rep.to_json() + "\n"))?;
    }
    Ok(())
}

fn cmd_algebra(a: AlgebraArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let arr = a.source.load()?;
    let alg = OsAlgebra::new(&arr, a.parity)?;
    match a.action {
        AlgebraAction::Dims => {
            let dims: Vec<String> = alg.dimensions().iter().map(|d| d.to_string()).collect();
            writeln!(out, "{}", dims.join(" "))?;
        }
        AlgebraAction::Reduce => {
            let text = a.monomial.ok_or_else(|| Error::Unsupported("reduce needs --monomial".into()))?;
            let t = alg.parse_monomial(&text)?;
            writeln!(out, "{}", alg.format_element(&alg.straighten(&t)?))?;
        }
        AlgebraAction::Pi => {
            let text = a.subset.ok_or_else(|| Error::Unsupported("pi needs --subset".into()))?;
            let factors = arr.parse_labels(&text)?;
            let sq = TensorSquare::new(alg);
            let pi = if a.shuffle { sq.bar_product_shuffle(&factors)? } else { sq.bar_product_direct(&factors)? };
            writeln!(out, "{}", sq.format(&pi))?;
        }
    }
    Ok(())
}

fn cmd_plan(a: PlanArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let start = configuration(&a.from)?;
    let goal = configuration(&a.to)?;
    let path = match a.n.as_str() {
        "2" => TwoPointPlanner::new().plan(&start, &goal, a.frames)?,
        "3" => ThreePointPlanner::new().plan(&start, &goal, a.frames)?,
        other => match other.strip_prefix("baseline:").map(str::parse::<usize>) {
            Some(Ok(n)) if n == start.len() => plan_baseline(&start, &goal, a.frames)?,
            Some(Ok(n)) => {
                return Err(Error::InvalidConfiguration(format!("expected {n} points, got {}", start.len())).into())
            }
            _ => return Err(Error::Unsupported(format!("planner {other:?}; expected 2, 3 or baseline:<n>")).into()),
        },
    };
    if let Some(svg) = &a.svg {
        write_atomic(svg, &render_svg(&path))?;
    }
    match &a.out {
        Some(p) => {
            write_atomic(p, &(path.to_json() + "\n"))?;
            let domain = path.domain_name.as_deref().map(|d| format!(" ({d})")).unwrap_or_default();
            writeln!(out, "planner {:?}, domain {}{domain}, {} frames", path.planner, path.domain, path.frames.len())?;
        }
        None => writeln!(out, "{}", path.to_json())?,
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs, out: &mut dyn Write) -> Result<(), Failure> {
    let path = SampledPath::parse_json(&std::fs::read_to_string(&a.path)?)?;
    let endpoints = match (&a.from, &a.to) {
        (Some(f), Some(t)) => Some((configuration(f)?, configuration(t)?)),
        _ => None,
    };
    let ends = endpoints.as_ref().map(|(s, g)| (s, g));
    match verify_path(&path, a.margin, ends, a.step_bound) {
        Ok(r) => {
            writeln!(
                out,
                "ok: {} frames, min distance {:.6e}, max step {:.6e} (bound {:.6e})",
                r.frames, r.min_distance, r.max_step, r.step_bound
            )?;
            Ok(())
        }
        Err(f) => Err(Failure::Verify(f.to_string())),
    }
}

fn cmd_instability(a: InstabilityArgs, out: &mut dyn Write) -> Result<(), Failure> {
    if a.eps.is_nan() || a.eps <= 0.0 {
        return Err(Error::Unsupported("--eps must be positive".into()).into());
    }
    let planner: Box<dyn ConfigPlanner> = match a.n {
        2 => Box::new(TwoPointPlanner::new()),
        3 => Box::new(ThreePointPlanner::new()),
        n => return Err(Error::Unsupported(format!("no minimal planner for {n} points")).into()),
    };
    let mut probes = Vec::new();
    for text in &a.probe {
        let pair: (Configuration, Configuration) = serde_json::from_str(&inline_or_file(text)?)
            .map_err(|e| Error::MalformedDocument(format!("probe: {e}")))?;
        probes.push(pair);
    }
    let estimate = instability_estimate(planner.as_ref(), &probes, a.eps, a.trials, a.seed)?;
    writeln!(out, "{estimate}")?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(std::iter::once("tcarrange").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn algebra_examples() {
        assert_eq!(call(&["algebra", "reduce", "--named", "braid:3", "--monomial", "H13,H23"]).1, "+1·H12,H23 −1·H12,H13\n");
        assert_eq!(call(&["algebra", "dims", "--named", "braid:4"]).1, "1 6 11 6\n");
        assert_eq!(
            call(&["algebra", "pi", "--named", "braid:3", "--parity", "even", "--subset", "H12,H12,H13,H13"]).1,
            "+4·(H12,H13)⊗(H12,H13)\n"
        );
    }

    #[test]
    fn tc_headlines() {
        assert!(call(&["tc", "--config", "plane:3"]).1.starts_with("TC = 4 (exact)\n"));
        assert!(call(&["tc", "--config", "space:3:3"]).1.starts_with("TC = 5 (exact)\n"));
        assert!(call(&["tc", "--config", "space:3:4"]).1.starts_with("TC ∈ [4, 5] (conjectural gap)\n"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["tc", "--bogus"]).0, 2);
        assert_eq!(call(&["algebra", "reduce", "--named", "braid:3", "--monomial", "H99"]).0, 2);
        assert_eq!(call(&["plan", "--n", "3", "--from", "[[0,0],[0,0],[1,1]]", "--to", "[[0,0],[1,0],[2,0]]"]).0, 2);
        assert_eq!(call(&["algebra", "reduce", "--named", "braid:6", "--monomial", "H12,H13,H14,H15,H16"]).0, 0);
        let (code, out, _) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("instability"));
    }
}
