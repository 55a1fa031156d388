//! Command-line interface.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::classify::{classify, mode_json};
use crate::curve::{implicitize_plane, PLANE_VARS};
use crate::error::{Error, Result};
use crate::exact::{parse_rat, rat_to_f64, Rat};
use crate::oracle::{emit_plot, sample, sample_input, PlotFormat};
use crate::param::{param_from_json, print_poly, Mode, SemialgInput};
use crate::witness::{
    laurent_from_real, real_from_laurent, verify_witness, witness_circle, witness_interval, witness_laurent,
    witness_sphere_k, LaurentPoly, MapCurve, RealPolyMap, Witness,
};

#[derive(Parser, Debug)]
#[command(name = "polyimage", version, about = "Polynomial images of intervals and spheres onto rational curves")]
struct Cli {
    /// Worker threads for sampling and distance computations.
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct SetArgs {
    /// Parameterization document.
    #[arg(long)]
    param: PathBuf,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    /// Left arc end (rational).
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    /// Right arc end (rational).
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    Full,
    Arc,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Target {
    Interval,
    Circle,
    Sphere2,
    Laurent,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Direction {
    ToReal,
    FromReal,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum FormatArg {
    Svg,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide the invariants of a set.
    Classify {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Construct a polynomial or Laurent witness.
    Witness {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, value_enum)]
        target: Target,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Convert between Laurent polynomials and circle maps.
    Laurent {
        #[arg(value_enum)]
        direction: Direction,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Implicit equation of a plane curve.
    Implicitize {
        #[arg(long)]
        param: PathBuf,
    },
    /// Sample a set (and optionally a witness) to SVG or CSV.
    Sample {
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, value_enum)]
        format: FormatArg,
        #[arg(long)]
        out: PathBuf,
        /// Also plot the image of this witness.
        #[arg(long)]
        witness: Option<PathBuf>,
    },
    /// Verify a witness against a set.
    Check {
        #[arg(long)]
        witness: PathBuf,
        #[command(flatten)]
        set: SetArgs,
        #[arg(long, default_value = "1e-3")]
        tol: String,
        #[arg(long, default_value_t = 10_000)]
        n: usize,
    },
}

/// An error with the data that explains it.
struct Failure {
    err: Error,
    evidence: Value,
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let evidence = match &err {
            Error::Improper { generic_fiber_degree } => json!({ "generic_fiber_degree": generic_fiber_degree }),
            Error::ArcTouchesInfinity { a, b } => json!({ "a": a, "b": b }),
            Error::UnsupportedExtension { degree, minpoly } => json!({ "degree": degree, "minpoly": minpoly }),
            Error::NotPlane { m } => json!({ "m": m }),
            Error::Syntax { pos, msg } => json!({ "pos": pos, "msg": msg }),
            Error::UndeclaredVariable { name, pos } => json!({ "name": name, "pos": pos }),
            Error::ClassifierNo(c) => json!({ "clause": c }),
            Error::WindingInconclusive(v) => json!({ "modulus": v }),
            Error::SvgDimension(m) => json!({ "m": m }),
            _ => json!({}),
        };
        Failure { err, evidence }
    }
}

type CliResult<T> = std::result::Result<T, Failure>;

fn read_json(path: &Path) -> Result<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Document(format!("{}: {e}", path.display())))
}

fn parse_q(s: &str) -> Result<Rat> {
    parse_rat(s).ok_or_else(|| Error::Document(format!("not a rational number: {s:?}")))
}

fn mode_from(set: &SetArgs, fallback: Option<&Value>) -> Result<Mode> {
    let arc = |a: &str, b: &str| -> Result<Mode> { Ok(Mode::Arc { a: parse_q(a)?, b: parse_q(b)? }) };
    match set.mode {
        Some(ModeArg::Full) => Ok(Mode::FullTrace),
        Some(ModeArg::Arc) => match (&set.a, &set.b) {
            (Some(a), Some(b)) => arc(a, b),
            _ => Err(Error::Document("--mode arc needs --a and --b".into())),
        },
        None => match fallback {
            Some(v) if v["mode"] == "arc" => {
                arc(v["a"].as_str().unwrap_or_default(), v["b"].as_str().unwrap_or_default())
            }
            _ => Ok(Mode::FullTrace),
        },
    }
}

fn load_input(set: &SetArgs, fallback: Option<&Value>) -> Result<SemialgInput> {
    let param = param_from_json(&read_json(&set.param)?)?;
    SemialgInput::new(param, mode_from(set, fallback)?)
}

fn emit(doc: &Value, out: Option<&Path>, stdout: &mut dyn Write) -> Result<()> {
    let text = serde_json::to_string_pretty(doc).expect("serializable") + "\n";
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => stdout.write_all(text.as_bytes()).map_err(Error::from),
    }
}

fn parse_tol(s: &str) -> Result<f64> {
    if let Ok(v) = s.parse::<f64>() {
        if v.is_finite() && v >= 0.0 {
            return Ok(v);
        }
    }
    Ok(rat_to_f64(&parse_q(s)?))
}

fn execute(cmd: Command, stdout: &mut dyn Write) -> CliResult<i32> {
    match cmd {
        Command::Classify { set, text, .. } => {
            let input = load_input(&set, None)?;
            let c = classify(&input)?;
            if text {
                stdout.write_all(c.table().as_bytes()).map_err(Error::from)?;
            } else {
                emit(&c.to_json(), None, stdout)?;
            }
            Ok(0)
        }
        Command::Witness { set, target, out } => {
            let input = load_input(&set, None)?;
            let c = classify(&input)?;
            let built = match target {
                Target::Interval => witness_interval(&input).map(|w| w.to_json()),
                Target::Circle => witness_circle(&input).map(|w| w.to_json()),
                Target::Sphere2 => witness_sphere_k(&input, 2).map(|w| w.to_json()),
                Target::Laurent => witness_laurent(&input).map(|w| w.to_json()),
            };
            let mut doc = built.map_err(|err| {
                let evidence = if matches!(err, Error::ClassifierNo(_)) { c.to_json() } else { Failure::from(err.clone()).evidence };
                Failure { err, evidence }
            })?;
            doc["input"] = mode_json(input.mode());
            emit(&doc, out.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Laurent { direction, input, out } => {
            let v = read_json(&input)?;
            let doc = match direction {
                Direction::ToReal => real_from_laurent(&LaurentPoly::from_json(&v)?)?.to_json(),
                Direction::FromReal => laurent_from_real(&RealPolyMap::from_json(&v)?)?.to_json(),
            };
            emit(&doc, out.as_deref(), stdout)?;
            Ok(0)
        }
        Command::Implicitize { param } => {
            let p = param_from_json(&read_json(&param)?)?;
            let f = implicitize_plane(&p)?;
            let doc = json!({ "schema": 1, "vars": PLANE_VARS, "implicit": print_poly(&f, &PLANE_VARS) });
            emit(&doc, None, stdout)?;
            Ok(0)
        }
        Command::Sample { set, n, format, out, witness } => {
            let input = load_input(&set, None)?;
            let mut clouds = vec![sample_input(&input, n)?];
            if let Some(w) = witness {
                let g = Witness::from_json(&read_json(&w)?)?.real_map()?;
                clouds.push(sample(&MapCurve::new(&g), n)?);
            }
            let refs: Vec<_> = clouds.iter().collect();
            let fmt = match format {
                FormatArg::Svg => PlotFormat::Svg,
                FormatArg::Csv => PlotFormat::Csv,
            };
            emit_plot(&refs, &out, fmt)?;
            let skipped: Vec<usize> = clouds.iter().map(|c| c.skipped()).collect();
            emit(&json!({ "schema": 1, "out": out.display().to_string(), "points": clouds.iter().map(|c| c.len()).collect::<Vec<_>>(), "skipped": skipped }), None, stdout)?;
            Ok(0)
        }
        Command::Check { witness, set, tol, n } => {
            let wdoc = read_json(&witness)?;
            let w = Witness::from_json(&wdoc)?;
            let input = load_input(&set, wdoc.get("input"))?;
            let report = verify_witness(&w, &input, parse_tol(&tol)?, n)?;
            let mut doc = report.to_json();
            doc["input"] = mode_json(input.mode());
            if !report.pass() {
                doc["reason"] = json!("check_failed");
            }
            emit(&doc, None, stdout)?;
            Ok(if report.pass() { 0 } else { 2 })
        }
    }
}

/// Runs the command line `argv` (program name first) and returns the exit
/// code: 0 on success, 2 on a mathematical rejection, 1 on usage or I/O
/// errors.
pub fn run<I, T>(argv: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { stdout.write_all(text.as_bytes()) } else { stderr.write_all(text.as_bytes()) };
            return code;
        }
    };
    if let Some(t) = cli.threads {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(t).build_global();
    }
    match execute(cli.command, stdout) {
        Ok(code) => code,
        Err(Failure { err, evidence }) => {
            let doc = json!({ "schema": 1, "error": err.to_string(), "reason": err.reason(), "evidence": evidence });
            let text = serde_json::to_string_pretty(&doc).expect("serializable") + "\n";
            if err.is_math_rejection() {
                let _ = stdout.write_all(text.as_bytes());
                2
            } else {
                let _ = stderr.write_all(text.as_bytes());
                1
            }
        }
    }
}
