//! Randomized data-processing campaigns.
//!
//! Each trial draws a channel and a pair of faithful states from its own
//! seed, evaluates the DPI gap on every grid order and runs the Petz
//! sufficiency test once. Trials run in parallel; rows are collected in
//! trial order, so the CSV bytes depend only on the configuration.

use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize};

use crate::channels::{dpi_terms, is_sufficient, is_violation, KrausChannel, Tolerances};
use crate::divergences::check_alpha;
use crate::error::{Error, Result};
use crate::io::{format_real, parse_real};
use crate::matrix::{diag, kron, PositiveFunctional};
use crate::random::{isometry_with, rng_from_seed, state_with, unitary_with};

pub const CSV_HEADER: &str =
    "trial,seed,d_in,d_out,family,alpha,d_in_div,d_out_div,gap,petz_err_psi,petz_err_phi,sufficient,violation";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChannelFamily {
    RandomStinespring,
    Depolarizing,
    Dephasing,
    PartialTrace,
    Unitary,
    AncillaAttach,
}

impl ChannelFamily {
    pub fn as_str(self) -> &'static str {
        match self {
            ChannelFamily::RandomStinespring => "random_stinespring",
            ChannelFamily::Depolarizing => "depolarizing",
            ChannelFamily::Dephasing => "dephasing",
            ChannelFamily::PartialTrace => "partial_trace",
            ChannelFamily::Unitary => "unitary",
            ChannelFamily::AncillaAttach => "ancilla_attach",
        }
    }

    pub const ALL: [ChannelFamily; 6] = [
        ChannelFamily::RandomStinespring,
        ChannelFamily::Depolarizing,
        ChannelFamily::Dephasing,
        ChannelFamily::PartialTrace,
        ChannelFamily::Unitary,
        ChannelFamily::AncillaAttach,
    ];
}

/// Campaign configuration as read from JSON. Grid entries may be numbers or
/// strings such as `"inf"` or `"3/2"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CampaignConfig {
    pub seed: u64,
    pub trials: usize,
    pub dims: Vec<usize>,
    #[serde(deserialize_with = "de_alpha_grid", serialize_with = "ser_alpha_grid")]
    pub alpha_grid: Vec<f64>,
    pub channel_family: ChannelFamily,
    #[serde(default)]
    pub tolerances: Tolerances,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum AlphaEntry {
    Number(f64),
    Text(String),
}

fn de_alpha_grid<'de, D: Deserializer<'de>>(de: D) -> std::result::Result<Vec<f64>, D::Error> {
    Vec::<AlphaEntry>::deserialize(de)?
        .into_iter()
        .map(|e| match e {
            AlphaEntry::Number(x) => Ok(x),
            AlphaEntry::Text(s) => parse_real(&s).map_err(serde::de::Error::custom),
        })
        .collect()
}

fn ser_alpha_grid<S: serde::Serializer>(grid: &[f64], ser: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = ser.serialize_seq(Some(grid.len()))?;
    for &a in grid {
        if a.is_infinite() {
            seq.serialize_element("inf")?;
        } else {
            seq.serialize_element(&a)?;
        }
    }
    seq.end()
}

/// Largest dimension a campaign accepts.
pub const MAX_DIM: usize = 8;

impl CampaignConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("campaign config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials < 1 {
            return Err(Error::InvalidInput("trials must be at least 1".into()));
        }
        if self.dims.is_empty() || self.dims.iter().any(|d| !(1..=MAX_DIM).contains(d)) {
            return Err(Error::InvalidInput(format!("dims must be a non-empty list of integers in 1..={MAX_DIM}")));
        }
        if self.alpha_grid.is_empty() {
            return Err(Error::InvalidInput("alpha_grid is empty".into()));
        }
        for &a in &self.alpha_grid {
            check_alpha(a)?;
        }
        let t = &self.tolerances;
        if [t.gap, t.recovery, t.dpi].iter().any(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(Error::InvalidInput("tolerances must be finite and non-negative".into()));
        }
        Ok(())
    }
}

/// SplitMix64 finalizer; spreads consecutive trial indices over the seed space.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Seed of trial `trial`; `rng_from_seed(trial_seed(..))` reproduces the trial.
pub fn trial_seed(seed: u64, trial: usize) -> u64 {
    mix(seed ^ mix(trial as u64))
}

/// One randomly drawn channel with an input pair.
#[derive(Debug, Clone)]
pub struct Instance {
    pub channel: KrausChannel,
    pub psi: PositiveFunctional,
    pub phi: PositiveFunctional,
}

fn pick(dims: &[usize], rng: &mut ChaCha8Rng) -> usize {
    dims[rng.random_range(0..dims.len())]
}

fn diagonal_state(d: usize, rng: &mut ChaCha8Rng) -> PositiveFunctional {
    let s = state_with(d, rng);
    let p: Vec<f64> = (0..d).map(|i| s.density()[(i, i)].re).collect();
    PositiveFunctional::new(diag(&p)).expect("probability vector")
}

fn product(a: &PositiveFunctional, b: &PositiveFunctional) -> PositiveFunctional {
    PositiveFunctional::new(kron(a.density(), b.density())).expect("product of states")
}

/// Draw an instance of `family`. When `sufficient_pair` is set, families
/// that admit it (dephasing, partial trace) get a pair for which the channel
/// is sufficient; the other families ignore the flag.
pub fn draw_instance(
    family: ChannelFamily,
    dims: &[usize],
    sufficient_pair: bool,
    rng: &mut ChaCha8Rng,
) -> Result<Instance> {
    let d = pick(dims, rng);
    let generic = |rng: &mut ChaCha8Rng, n: usize| (state_with(n, rng), state_with(n, rng));
    let (channel, (psi, phi)) = match family {
        ChannelFamily::RandomStinespring => {
            let d_out = pick(dims, rng);
            let min_env = d.div_ceil(d_out);
            let env = rng.random_range(min_env..=min_env + 2);
            let v = isometry_with(d_out * env, d, rng);
            (KrausChannel::from_isometry(&v, env)?, generic(rng, d))
        }
        ChannelFamily::Depolarizing => {
            let lambda = 0.25 + 0.75 * rng.random::<f64>();
            (KrausChannel::depolarizing(d, lambda)?, generic(rng, d))
        }
        ChannelFamily::Dephasing => {
            let lambda = 0.25 + 0.75 * rng.random::<f64>();
            let pair =
                if sufficient_pair { (diagonal_state(d, rng), diagonal_state(d, rng)) } else { generic(rng, d) };
            (KrausChannel::dephasing(d, lambda)?, pair)
        }
        ChannelFamily::PartialTrace => {
            let pair = if sufficient_pair {
                let tau = state_with(2, rng);
                let (a, b) = generic(rng, d);
                (product(&a, &tau), product(&b, &tau))
            } else {
                generic(rng, 2 * d)
            };
            (KrausChannel::partial_trace(d, 2)?, pair)
        }
        ChannelFamily::Unitary => (KrausChannel::isometric(unitary_with(d, rng))?, generic(rng, d)),
        ChannelFamily::AncillaAttach => {
            let tau = state_with(2, rng);
            (KrausChannel::ancilla_attach(d, &tau)?, generic(rng, d))
        }
    };
    Ok(Instance { channel, psi, phi })
}

#[derive(Debug, Clone, PartialEq)]
pub struct CampaignRow {
    pub trial: usize,
    pub seed: u64,
    pub d_in: usize,
    pub d_out: usize,
    pub family: ChannelFamily,
    pub alpha: f64,
    pub d_in_div: f64,
    pub d_out_div: f64,
    pub gap: f64,
    pub petz_err_psi: f64,
    pub petz_err_phi: f64,
    pub sufficient: bool,
    pub violation: bool,
}

impl CampaignRow {
    pub fn to_csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.trial,
            self.seed,
            self.d_in,
            self.d_out,
            self.family.as_str(),
            format_real(self.alpha),
            format_real(self.d_in_div),
            format_real(self.d_out_div),
            format_real(self.gap),
            format_real(self.petz_err_psi),
            format_real(self.petz_err_phi),
            self.sufficient,
            self.violation,
        )
    }
}

#[derive(Debug, Clone)]
pub struct CampaignReport {
    pub rows: Vec<CampaignRow>,
    pub runtime: Duration,
}

impl CampaignReport {
    /// Smallest gap over all rows (`+∞` if there are none).
    pub fn min_gap(&self) -> f64 {
        self.rows.iter().map(|r| r.gap).fold(f64::INFINITY, f64::min)
    }

    pub fn violations(&self) -> usize {
        self.rows.iter().filter(|r| r.violation).count()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::with_capacity(64 * (self.rows.len() + 1));
        out.push_str(CSV_HEADER);
        out.push('\n');
        for r in &self.rows {
            out.push_str(&r.to_csv_line());
            out.push('\n');
        }
        out
    }

    pub fn summary(&self) -> String {
        format!(
            "rows: {}\nmin gap: {}\nviolations: {}\nruntime: {:.3} s",
            self.rows.len(),
            format_real(self.min_gap()),
            self.violations(),
            self.runtime.as_secs_f64()
        )
    }
}

fn run_trial(cfg: &CampaignConfig, trial: usize) -> Result<Vec<CampaignRow>> {
    let seed = trial_seed(cfg.seed, trial);
    let mut rng = rng_from_seed(seed);
    let inst = draw_instance(cfg.channel_family, &cfg.dims, trial.is_multiple_of(2), &mut rng)?;
    let suff = is_sufficient(&inst.channel, &inst.psi, &inst.phi, cfg.tolerances.recovery)?;
    cfg.alpha_grid
        .iter()
        .map(|&alpha| {
            let t = dpi_terms(&inst.channel, &inst.psi, &inst.phi, alpha)?;
            Ok(CampaignRow {
                trial,
                seed,
                d_in: inst.channel.d_in(),
                d_out: inst.channel.d_out(),
                family: cfg.channel_family,
                alpha,
                d_in_div: t.input,
                d_out_div: t.output,
                gap: t.gap,
                petz_err_psi: suff.recovered_psi_error,
                petz_err_phi: suff.recovered_phi_error,
                sufficient: suff.sufficient,
                violation: is_violation(alpha, t.gap, suff.sufficient, &cfg.tolerances),
            })
        })
        .collect()
}

pub fn run_campaign(cfg: &CampaignConfig) -> Result<CampaignReport> {
    cfg.validate()?;
    let start = Instant::now();
    let per_trial: Vec<Vec<CampaignRow>> =
        (0..cfg.trials).into_par_iter().map(|t| run_trial(cfg, t)).collect::<Result<_>>()?;
    Ok(CampaignReport { rows: per_trial.into_iter().flatten().collect(), runtime: start.elapsed() })
}
