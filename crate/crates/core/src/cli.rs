//! Command-line front end.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 parse or validation
//! failure, 3 invalid order α, 4 non-faithful weight where one is required,
//! 5 campaign found a violation.

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::campaign::{run_campaign, CampaignConfig};
use crate::divergences::{check_alpha, d_renyi, d_renyi_norm_route};
use crate::error::Error;
use crate::io::{format_real, parse_real, MatrixFile};
use crate::standard_form::HSVector;
use crate::variational::am_norm_variational;
use crate::weighted_lp::{am_norm, am_polar, bst_norm, kosaki_norm, sigma_eps_witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NUMERICAL: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_ALPHA: i32 = 3;
pub const EXIT_NOT_FAITHFUL: i32 = 4;
pub const EXIT_VIOLATION: i32 = 5;

/// Environment variable that overrides the campaign seed.
pub const SEED_ENV: &str = "MODLP_SEED";

#[derive(Debug, Parser)]
#[command(name = "modlp", version, about = "Weighted noncommutative Lp norms and sandwiched Rényi divergences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum RouteArg {
    Trace,
    Norm,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NormKind {
    Am,
    Bst,
    Kosaki,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Sandwiched Rényi divergence D_α(ψ‖φ) for a list of orders.
    Divergence {
        psi: PathBuf,
        phi: PathBuf,
        /// Orders, comma separated; fractions and `inf` are accepted.
        #[arg(long, value_delimiter = ',', required = true, allow_hyphen_values = true)]
        alpha: Vec<String>,
        /// Report in bits instead of nats.
        #[arg(long)]
        bits: bool,
        #[arg(long, value_enum, default_value = "trace")]
        route: RouteArg,
    },
    /// Weighted Lp norm of a matrix (a vector of L_2 for am/bst, an element of L_1 for kosaki).
    Norm {
        k: PathBuf,
        phi: PathBuf,
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        #[arg(long, value_enum, default_value = "am")]
        kind: NormKind,
        /// Evaluation budget for the variational bound; 0 skips it.
        #[arg(long, default_value_t = 0)]
        variational_budget: usize,
        /// Seed for the variational starts (falls back to MODLP_SEED, then 0).
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Randomized DPI and equality campaign; writes one CSV row per (trial, α).
    Campaign { config: PathBuf, out_csv: PathBuf },
    /// AM polar decomposition as JSON.
    Polar {
        k: PathBuf,
        phi: PathBuf,
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
    },
    /// Sweep of the explicit feasible state σ_ε for the BST infimum, 1 < p ≤ 2.
    Witness {
        k: PathBuf,
        phi: PathBuf,
        #[arg(long = "p", allow_hyphen_values = true)]
        p: String,
        /// Mixing weights; defaults to 0.05, 0.10, ..., 0.95.
        #[arg(long, value_delimiter = ',')]
        eps: Vec<String>,
    },
}

/// Failure carrying its exit code and message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidAlpha(_) => EXIT_ALPHA,
            Error::NotFaithful { .. } => EXIT_NOT_FAITHFUL,
            Error::EigenFailure | Error::IndeterminateGap => EXIT_NUMERICAL,
            _ => EXIT_INVALID,
        };
        let message = match e {
            Error::InvalidAlpha(1.0) => {
                "alpha = 1 is not allowed: 1/(alpha - 1) has a pole there (use a nearby order)".to_string()
            }
            other => other.to_string(),
        };
        Failure { code, message }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: EXIT_NUMERICAL, message: format!("output error: {e}") }
    }
}

type CmdResult = std::result::Result<i32, Failure>;

/// Parse an order, rejecting values outside `[1/2, 1) ∪ (1, ∞]` with exit code 3.
fn parse_alpha(s: &str) -> Result<f64, Failure> {
    let a = parse_real(s)?;
    check_alpha(a)?;
    Ok(a)
}

fn hs_vector(path: &PathBuf) -> Result<HSVector, Failure> {
    Ok(HSVector::new(MatrixFile::read(path)?.to_matrix()?)?)
}

fn functional(path: &PathBuf) -> Result<crate::matrix::PositiveFunctional, Failure> {
    Ok(MatrixFile::read(path)?.to_functional()?)
}

fn env_seed() -> Result<Option<u64>, Failure> {
    match std::env::var(SEED_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| Failure { code: EXIT_INVALID, message: format!("{SEED_ENV} is not a 64-bit integer: '{s}'") }),
        Err(_) => Ok(None),
    }
}

fn divergence(
    out: &mut dyn Write,
    psi: &PathBuf,
    phi: &PathBuf,
    alphas: &[String],
    bits: bool,
    route: RouteArg,
) -> CmdResult {
    let alphas = alphas.iter().map(|s| parse_alpha(s)).collect::<Result<Vec<_>, _>>()?;
    let psi = functional(psi)?;
    let phi = functional(phi)?;
    let unit = if bits { std::f64::consts::LN_2 } else { 1.0 };
    let show = |x: f64| format_real(x / unit);
    match route {
        RouteArg::Both => writeln!(out, "alpha\ttrace_formula\tnorm_route\tabs_diff")?,
        RouteArg::Trace => writeln!(out, "alpha\tvalue\troute")?,
        RouteArg::Norm => writeln!(out, "alpha\tvalue\troute")?,
    }
    for a in alphas {
        match route {
            RouteArg::Trace => {
                let v = d_renyi(&psi, &phi, a)?;
                writeln!(out, "{}\t{}\t{}", format_real(a), show(v.value), v.route.as_str())?;
            }
            RouteArg::Norm => {
                let v = d_renyi_norm_route(&psi, &phi, a)?;
                writeln!(out, "{}\t{}\t{}", format_real(a), show(v.value), v.route.as_str())?;
            }
            RouteArg::Both => {
                let t = d_renyi(&psi, &phi, a)?.value;
                let n = d_renyi_norm_route(&psi, &phi, a)?.value;
                let diff = if t.is_infinite() && n.is_infinite() { 0.0 } else { (t - n).abs() };
                writeln!(out, "{}\t{}\t{}\t{}", format_real(a), show(t), show(n), show(diff))?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn norm(
    out: &mut dyn Write,
    k: &PathBuf,
    phi: &PathBuf,
    p: &str,
    kind: NormKind,
    budget: usize,
    seed: Option<u64>,
) -> CmdResult {
    let p = parse_real(p)?;
    let phi = functional(phi)?;
    let k = hs_vector(k)?;
    let value = match kind {
        NormKind::Am => am_norm(&k, &phi, p)?,
        NormKind::Bst => bst_norm(&k, &phi, p)?,
        NormKind::Kosaki => kosaki_norm(k.matrix(), &phi, p)?,
    };
    writeln!(out, "value\t{}", format_real(value))?;
    if budget > 0 {
        // BST(k) = AM(k*) for faithful weights
        let target = match kind {
            NormKind::Am => k,
            NormKind::Bst => k.conj(),
            NormKind::Kosaki => {
                return Err(Error::InvalidInput("variational bounds are available for am and bst".into()).into())
            }
        };
        let seed = match seed {
            Some(s) => s,
            None => env_seed()?.unwrap_or(0),
        };
        let r = am_norm_variational(&target, &phi, p, budget, seed)?;
        writeln!(out, "variational\t{}\t{}", format_real(r.value), r.bound_kind.as_str())?;
        writeln!(out, "iterations\t{}", r.iterations)?;
    }
    Ok(EXIT_OK)
}

fn campaign(out: &mut dyn Write, config: &PathBuf, out_csv: &PathBuf) -> CmdResult {
    let text = std::fs::read_to_string(config)
        .map_err(|e| Failure { code: EXIT_INVALID, message: format!("{}: {e}", config.display()) })?;
    let mut cfg = CampaignConfig::from_json(&text)?;
    if let Some(seed) = env_seed()? {
        cfg.seed = seed;
    }
    let report = run_campaign(&cfg)?;
    std::fs::write(out_csv, report.to_csv())?;
    writeln!(out, "{}", report.summary())?;
    Ok(if report.violations() > 0 { EXIT_VIOLATION } else { EXIT_OK })
}

fn file_value(f: &MatrixFile) -> Result<Value, Failure> {
    serde_json::from_str(&f.to_json()?).map_err(|e| Failure { code: EXIT_NUMERICAL, message: e.to_string() })
}

fn polar(out: &mut dyn Write, k: &PathBuf, phi: &PathBuf, p: &str) -> CmdResult {
    let p = parse_real(p)?;
    let phi = functional(phi)?;
    let k = hs_vector(k)?;
    let dec = am_polar(&k, &phi, p)?;
    let reconstruction = crate::matrix::frobenius(&(dec.reconstruct(&phi) - k.matrix()));
    let doc = json!({
        "p": p,
        "norm": dec.norm(),
        "rho_mass": dec.rho.trace(),
        "reconstruction_error": reconstruction,
        "u": file_value(&MatrixFile::matrix(dec.u.matrix.clone()))?,
        "rho": file_value(&MatrixFile::functional(&dec.rho))?,
    });
    writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("finite JSON"))?;
    Ok(EXIT_OK)
}

fn witness(out: &mut dyn Write, k: &PathBuf, phi: &PathBuf, p: &str, eps: &[String]) -> CmdResult {
    let p = parse_real(p)?;
    let grid: Vec<f64> = if eps.is_empty() {
        (1..=19).map(|i| i as f64 / 20.0).collect()
    } else {
        eps.iter().map(|s| parse_real(s)).collect::<Result<_, _>>()?
    };
    let phi = functional(phi)?;
    let k = hs_vector(k)?;
    writeln!(out, "eps\tvalue\tpredicted\trel_err")?;
    for e in grid {
        let w = sigma_eps_witness(&k, &phi, p, e)?;
        let rel = (w.value - w.predicted).abs() / w.predicted;
        writeln!(out, "{}\t{}\t{}\t{}", format_real(w.eps), format_real(w.value), format_real(w.predicted), format_real(rel))?;
    }
    Ok(EXIT_OK)
}

/// Run the parsed command, writing results to `out`.
fn dispatch(cli: Cli, out: &mut dyn Write) -> CmdResult {
    match cli.command {
        Command::Divergence { psi, phi, alpha, bits, route } => divergence(out, &psi, &phi, &alpha, bits, route),
        Command::Norm { k, phi, p, kind, variational_budget, seed } => {
            norm(out, &k, &phi, &p, kind, variational_budget, seed)
        }
        Command::Campaign { config, out_csv } => campaign(out, &config, &out_csv),
        Command::Polar { k, phi, p } => polar(out, &k, &phi, &p),
        Command::Witness { k, phi, p, eps } => witness(out, &k, &phi, &p, &eps),
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

/// Entry point used by the binary.
pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
