//! The `qsphere` command line: argument handling, output formatting, exit codes.

pub mod config;
pub mod expr;

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::complex::Complex64;
use num::BigRational;
use serde_json::json;

use crate::coordalg::Coord;
use crate::fodc::{tau, volume_check, wedge_kernel};
use crate::haar::haar;
use crate::podles::Podles;
use crate::qscalar::RationalQ;
use crate::report::CheckReport;
use crate::spectral::{self, TruncatedSpace};
use crate::uq::{act_left, act_right, pair, r_action, UqElement};
use crate::verify::{self, SpectralParams, SUITES};
use config::{parse_q0, ConfigFile};
use expr::{parse, parse_as, Context, ExprError};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "qsphere", version, about = "Exact and spectral computations on the standard Podleś sphere")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Default)]
pub struct Common {
    /// Flat `key = value` file; flags override its values.
    #[arg(long, global = true)]
    pub config: Option<String>,
    /// Deformation parameter, e.g. `1/2` or `0.3`.
    #[arg(long = "q", global = true)]
    pub q: Option<String>,
    /// Truncation level.
    #[arg(long = "L", global = true)]
    pub l: Option<u32>,
    #[arg(long, global = true, allow_negative_numbers = true)]
    pub z: Option<f64>,
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Sample count for randomized checks.
    #[arg(long, global = true)]
    pub samples: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Overrides the default tolerance of numeric checks.
    #[arg(long, global = true)]
    pub tol: Option<f64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ContextArg {
    Coord,
    Podles,
    Uq,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Side {
    /// `f ⊳ x`
    Left,
    /// `x ⊲ f`
    Right,
    /// `R_f(x) = x ⊲ S^{-1}(f)`
    R,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites.
    Verify {
        /// Suites to run (comma separated); all by default.
        #[arg(long, value_delimiter = ',')]
        suite: Vec<String>,
    },
    /// Print the normal form of an expression.
    Normalize {
        expr: String,
        #[arg(long, value_enum)]
        context: Option<ContextArg>,
    },
    /// Hopf pairing `<f, x>`.
    Pair { f: String, x: String },
    /// Action of `f` in U_q(su_2) on `x` in O(SU_q(2)).
    Act {
        f: String,
        x: String,
        #[arg(long, value_enum, default_value = "left")]
        side: Side,
    },
    /// Haar state.
    Haar { x: String },
    /// The twisted cyclic 2-cocycle.
    Tau { x0: String, x1: String, x2: String },
    /// `π(x0 dx1 ∧ dx2)` with respect to the volume form.
    Wedge { x0: String, x1: String, x2: String },
    /// Normalization of the volume form.
    VolumeCheck,
    /// Eigenvalues of the truncated Dirac operator.
    Spectrum,
    /// Trace formulas for the Haar state, or for the cocycle with `--tau`.
    TraceCheck {
        #[arg(long, default_value = "1")]
        x: String,
        #[arg(long, num_args = 3, value_names = ["X0", "X1", "X2"])]
        tau: Option<Vec<String>>,
    },
    /// Spectral zeta function: series against the meromorphic continuation.
    Zeta {
        #[arg(long)]
        kmax: Option<u32>,
    },
    /// Residue of the zeta function at `z = 2`.
    Residue {
        #[arg(long)]
        eps: Option<f64>,
    },
}

/// Fully resolved settings.
#[derive(Clone, Debug)]
pub struct Settings {
    pub q0: BigRational,
    pub q_explicit: bool,
    pub l: Option<u32>,
    pub z: Option<f64>,
    pub seed: u64,
    pub samples: usize,
    pub format: Format,
    pub suites: Vec<String>,
    pub tol: Option<f64>,
    pub kmax: Option<u32>,
    pub eps: Option<f64>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] config::ConfigError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Algebra(#[from] crate::AlgebraError),
    #[error("{0}")]
    Usage(String),
}

impl From<crate::qscalar::ScalarError> for CliError {
    fn from(e: crate::qscalar::ScalarError) -> Self {
        CliError::Algebra(e.into())
    }
}

pub fn resolve(common: &Common, suites: &[String]) -> Result<Settings, CliError> {
    let file = match &common.config {
        Some(p) => ConfigFile::load(p)?,
        None => ConfigFile::default(),
    };
    let q_text = common.q.clone().or(file.get::<String>("q0")?);
    let q_explicit = q_text.is_some();
    let q0 = parse_q0(q_text.as_deref().unwrap_or("1/2"))?;
    let format = match (common.format, file.get::<String>("format")?) {
        (Some(f), _) => f,
        (None, Some(s)) => Format::from_str(&s, true).map_err(|_| CliError::Usage(format!("bad format '{s}'")))?,
        (None, None) => Format::Text,
    };
    let mut suites = suites.to_vec();
    if suites.is_empty() {
        if let Some(s) = file.get::<String>("suite")? {
            suites = s.split(',').map(|x| x.trim().to_string()).collect();
        }
    }
    for s in &suites {
        if !SUITES.contains(&s.as_str()) {
            return Err(CliError::Usage(format!("unknown suite '{s}' (known: {})", SUITES.join(", "))));
        }
    }
    let settings = Settings {
        q0,
        q_explicit,
        l: common.l.or(file.get("L")?),
        z: common.z.or(file.get("z")?),
        seed: common.seed.or(file.get("seed")?).unwrap_or(7),
        samples: common.samples.or(file.get("samples")?).unwrap_or(200),
        format,
        suites,
        tol: common.tol.or(file.get("tol")?),
        kmax: file.get("kmax")?,
        eps: file.get("eps")?,
    };
    if settings.l == Some(0) {
        return Err(CliError::Usage("L must be at least 1".into()));
    }
    Ok(settings)
}

/// Collected output of one invocation.
#[derive(Default, Debug)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub failed: usize,
}

impl Output {
    fn line(&mut self, s: &str) {
        self.stdout.push_str(s);
        self.stdout.push('\n');
    }

    fn report(&mut self, r: &CheckReport, format: Format) {
        self.failed += usize::from(!r.pass);
        match format {
            Format::Text => self.line(&r.to_text()),
            Format::Json => self.line(&r.to_json_line()),
        }
    }

    fn value(&mut self, format: Format, command: &str, inputs: &[&str], value: String, numeric: Option<(f64, f64)>) {
        match format {
            Format::Text => {
                let mut s = value.clone();
                if let Some((q0, v)) = numeric {
                    s.push_str(&format!("  ≈ {v:.15e} at q0 = {q0}"));
                }
                self.line(&s);
            }
            Format::Json => {
                let mut obj = json!({ "command": command, "inputs": inputs, "value": value });
                if let Some((q0, v)) = numeric {
                    obj["q0"] = json!(q0);
                    obj["numeric"] = json!(v);
                }
                self.line(&obj.to_string());
            }
        }
    }
}

fn numeric(settings: &Settings, x: &RationalQ) -> Result<Option<(f64, f64)>, CliError> {
    if !settings.q_explicit {
        return Ok(None);
    }
    let q0 = num::ToPrimitive::to_f64(&settings.q0).expect("finite");
    Ok(Some((q0, x.eval(q0)?)))
}

fn q0_f64(s: &Settings) -> f64 {
    num::ToPrimitive::to_f64(&s.q0).expect("finite")
}

fn coord_arg(text: &str) -> Result<Coord, CliError> {
    let e = parse(text)?;
    if e.infer_context()? == Context::Uq {
        return Err(ExprError::TokenContext { token: e.tokens()[0].name().into(), context: Context::Coord }.into());
    }
    Ok(expr::eval(&e)?)
}

fn execute(command: &Command, s: &Settings, out: &mut Output) -> Result<(), CliError> {
    let f = s.format;
    match command {
        Command::Verify { .. } => {
            let names: Vec<&str> = if s.suites.is_empty() { SUITES.to_vec() } else { s.suites.iter().map(String::as_str).collect() };
            let mut params = SpectralParams::default();
            if let Some(l) = s.l {
                params.l_trace = l;
            }
            for name in names {
                let reports = verify::run_suite(name, s.seed, s.samples, &s.q0, &params).expect("validated suite name");
                for r in reports {
                    out.report(&r.with_seed(s.seed), f);
                }
            }
            if f == Format::Text {
                out.line(&format!("# {} failed", out.failed));
            }
        }
        Command::Normalize { expr: text, context } => {
            let e = parse(text)?;
            let ctx = match context {
                Some(ContextArg::Coord) => Context::Coord,
                Some(ContextArg::Podles) => Context::Podles,
                Some(ContextArg::Uq) => Context::Uq,
                None => e.infer_context()?,
            };
            let value = match ctx {
                Context::Coord => {
                    let x = expr::eval::<Coord>(&e)?;
                    match Podles::recognize(&x) {
                        Ok(p) if !x.is_localized() => format!("{x} = {p}"),
                        _ => x.to_string(),
                    }
                }
                Context::Podles => expr::eval::<Podles>(&e)?.to_string(),
                Context::Uq => expr::eval::<UqElement>(&e)?.to_string(),
            };
            out.value(f, "normalize", &[text], value, None);
        }
        Command::Pair { f: ftext, x } => {
            let v = pair(&parse_as::<UqElement>(ftext)?, &coord_arg(x)?)?;
            let n = numeric(s, &v)?;
            out.value(f, "pair", &[ftext, x], v.to_string(), n);
        }
        Command::Act { f: ftext, x, side } => {
            let (g, y) = (parse_as::<UqElement>(ftext)?, coord_arg(x)?);
            let v = match side {
                Side::Left => act_left(&g, &y)?,
                Side::Right => act_right(&y, &g)?,
                Side::R => r_action(&g, &y)?,
            };
            out.value(f, "act", &[ftext, x], v.to_string(), None);
        }
        Command::Haar { x } => {
            let v = haar(&coord_arg(x)?)?;
            let n = numeric(s, &v)?;
            out.value(f, "haar", &[x], v.to_string(), n);
        }
        Command::Tau { x0, x1, x2 } => {
            let v = tau(&parse_as(x0)?, &parse_as(x1)?, &parse_as(x2)?);
            let n = numeric(s, &v)?;
            out.value(f, "tau", &[x0, x1, x2], v.to_string(), n);
        }
        Command::Wedge { x0, x1, x2 } => {
            let v = wedge_kernel(&parse_as(x0)?, &parse_as(x1)?, &parse_as(x2)?)?;
            out.value(f, "wedge", &[x0, x1, x2], v.to_string(), None);
        }
        Command::VolumeCheck => {
            let v = volume_check()?;
            out.report(&CheckReport::exact("volume_check", "", &v, &Podles::one()), f);
        }
        Command::Spectrum => {
            let l = s.l.unwrap_or(6);
            let space = TruncatedSpace::new(s.q0.clone(), l)?;
            let tol = s.tol.unwrap_or(1e-12);
            let got = spectral::group_spectrum(&spectral::dirac_eigenvalues(&space, l), tol);
            let want = spectral::group_spectrum(&spectral::expected_spectrum(space.q0(), l), tol);
            for ((v, m), (w, mw)) in got.iter().zip(&want) {
                match f {
                    Format::Text => out.line(&format!("{v:+.15e}  x{m}  (expected {w:+.15e} x{mw})")),
                    Format::Json => out.line(&json!({ "eigenvalue": v, "multiplicity": m, "expected": w, "expected_multiplicity": mw }).to_string()),
                }
            }
            out.report(&spectral::spectrum_check(&space, l, tol), f);
        }
        Command::TraceCheck { x, tau: triple } => {
            let l = s.l.unwrap_or(20);
            let z = Complex64::new(s.z.unwrap_or(3.0), 0.0);
            let reports = match triple {
                Some(t) => {
                    let xs: Vec<Podles> = t.iter().map(|e| parse_as(e)).collect::<Result<_, _>>()?;
                    let budget: u32 = xs.iter().map(Podles::degree).sum();
                    let space = TruncatedSpace::new(s.q0.clone(), l + budget)?;
                    spectral::tau_trace_check(&space, [&xs[0], &xs[1], &xs[2]], z, l, s.tol.unwrap_or(1e-3))?
                }
                None => {
                    let xp: Podles = parse_as(x)?;
                    let space = TruncatedSpace::new(s.q0.clone(), l + xp.degree())?;
                    spectral::haar_trace_check(&space, &xp, z, l, s.tol.unwrap_or(1e-4))?
                }
            };
            for r in &reports {
                out.report(r, f);
            }
        }
        Command::Zeta { kmax } => {
            let z = s.z.unwrap_or(3.0);
            let levels = s.l.unwrap_or(120);
            let kmax = kmax.or(s.kmax).unwrap_or(60);
            out.report(&spectral::zeta_agreement(z, q0_f64(s), levels, kmax, s.tol.unwrap_or(1e-9)), f);
        }
        Command::Residue { eps } => {
            let eps = eps.or(s.eps).unwrap_or(1e-4);
            out.report(&spectral::residue_check(q0_f64(s), eps, s.tol.unwrap_or(1e-3)), f);
        }
    }
    Ok(())
}

/// Runs one invocation and returns the exit code; output is collected rather than printed.
pub fn run<I, T>(args: I) -> (i32, Output)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let mut out = Output::default();
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            if e.use_stderr() {
                out.stderr = e.render().to_string();
            } else {
                out.stdout = e.render().to_string();
            }
            return (code, out);
        }
    };
    let suites = match &cli.command {
        Command::Verify { suite } => suite.clone(),
        _ => Vec::new(),
    };
    let result = resolve(&cli.common, &suites).and_then(|s| execute(&cli.command, &s, &mut out));
    match result {
        Err(e) => {
            out.stderr = format!("error: {e}\n");
            (EXIT_USAGE, out)
        }
        Ok(()) if out.failed > 0 => (EXIT_FAIL, out),
        Ok(()) => (EXIT_PASS, out),
    }
}

/// Caps the global thread pool from `QSPHERE_THREADS`.
pub fn init_threads() {
    if let Some(n) = std::env::var("QSPHERE_THREADS").ok().and_then(|v| v.parse::<usize>().ok()) {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global();
    }
}
