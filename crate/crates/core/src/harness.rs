//! Seeded experiments: closed-form cross-checks and randomized
//! weakly-revlex campaigns with JSON-lines trial logs.

use std::collections::BTreeSet;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closedform::{cross_validate, ClosedFormSpec, CrossValidation};
use crate::coeff::Domain;
use crate::error::{Error, Result};
use crate::genericgen::{reduce_second_generator, GenericSpec};
use crate::groebner::{buchberger, GroebnerBasis, Ideal};
use crate::monideal::{MonomialIdeal, RevlexCheck, Witness};
use crate::poly::Polynomial;

pub const DEFAULT_MAX_RESAMPLES: u32 = 5;

/// Campaign bounds; larger requests are refused.
pub const MAX_CAMPAIGN_NVARS: usize = 3;
pub const MAX_CAMPAIGN_DEGREE: u32 = 8;
pub const MAX_CAMPAIGN_TRIALS: u64 = 1000;

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Stable per-trial seed; independent of scheduling order.
pub fn derive_seed(base: u64, index: u64) -> u64 {
    splitmix64(splitmix64(base) ^ index.wrapping_mul(0xD1B5_4A32_D192_ED03))
}

/// Seed used for the `attempt`-th draw of a trial (attempt 0 is the trial
/// seed itself).
fn attempt_seed(seed: u64, attempt: u32) -> u64 {
    if attempt == 0 {
        seed
    } else {
        derive_seed(seed, attempt as u64)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecSummary {
    pub n: u32,
    pub m: u32,
    pub mu: u32,
}

impl From<ClosedFormSpec> for SpecSummary {
    fn from(s: ClosedFormSpec) -> Self {
        SpecSummary {
            n: s.n,
            m: s.m,
            mu: s.mu(),
        }
    }
}

/// Closed-form run report as emitted by `closed-form --format json`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClosedFormReport {
    pub spec: SpecSummary,
    pub initial_ideal: MonomialIdeal,
    pub agreement: bool,
    pub resamples: u32,
    pub elapsed_ms: u64,
    pub seed: u64,
    pub domain: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub mismatch: Option<String>,
}

pub struct ClosedFormRun {
    pub report: ClosedFormReport,
    /// Present when the pipelines agreed.
    pub validation: Option<CrossValidation>,
}

/// Samples a generic pair of degrees `(n, m)` and cross-validates the closed
/// form against Buchberger, resampling up to `max_resamples` times on
/// degenerate draws. Exhausting the budget returns [`Error::Degenerate`].
pub fn run_closed_form(
    spec: ClosedFormSpec,
    domain: Domain,
    seed: u64,
    max_resamples: u32,
) -> Result<ClosedFormRun> {
    let start = Instant::now();
    let mut last = String::new();
    for attempt in 0..=max_resamples {
        let s = attempt_seed(seed, attempt);
        let gens = GenericSpec::new(2, vec![spec.n, spec.m], domain, s)?.sample()?;
        let report =
            |ideal: MonomialIdeal, agreement: bool, mismatch: Option<String>| ClosedFormReport {
                spec: spec.into(),
                initial_ideal: ideal,
                agreement,
                resamples: attempt,
                elapsed_ms: start.elapsed().as_millis() as u64,
                seed,
                domain: domain.to_string(),
                mismatch,
            };
        match cross_validate(spec, &gens[0], &gens[1]) {
            Ok(cv) => {
                return Ok(ClosedFormRun {
                    report: report(cv.initial_ideal.clone(), true, None),
                    validation: Some(cv),
                })
            }
            Err(Error::Degenerate(msg)) => last = msg,
            Err(Error::Mismatch(msg)) => {
                let gb = buchberger(&Ideal::from_generators(gens)?)?;
                return Ok(ClosedFormRun {
                    report: report(gb.initial_ideal(), false, Some(msg)),
                    validation: None,
                });
            }
            Err(e) => return Err(e),
        }
    }
    Err(Error::Degenerate(format!(
        "still degenerate after {max_resamples} resamples: {last}"
    )))
}

/// Parameters of a conjecture campaign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialConfig {
    pub nvars: usize,
    /// As given; sorted before use.
    pub degrees: Vec<u32>,
    pub domain: Domain,
    pub trials: u64,
    pub base_seed: u64,
    pub max_resamples: u32,
}

impl TrialConfig {
    pub fn new(
        nvars: usize,
        degrees: Vec<u32>,
        domain: Domain,
        trials: u64,
        base_seed: u64,
    ) -> Self {
        TrialConfig {
            nvars,
            degrees,
            domain,
            trials,
            base_seed,
            max_resamples: DEFAULT_MAX_RESAMPLES,
        }
    }

    pub fn sorted_degrees(&self) -> Vec<u32> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::InvalidSpec("trials must be at least 1".into()));
        }
        if self.nvars == 0 || self.degrees.is_empty() || self.degrees.contains(&0) {
            return Err(Error::InvalidSpec(
                "need nvars >= 1 and positive degrees".into(),
            ));
        }
        if self.degrees.len() != self.nvars {
            return Err(Error::InvalidSpec(format!(
                "need one degree per variable: {} variables, {} degrees",
                self.nvars,
                self.degrees.len()
            )));
        }
        if self.nvars > MAX_CAMPAIGN_NVARS
            || self.degrees.iter().any(|&d| d > MAX_CAMPAIGN_DEGREE)
            || self.trials > MAX_CAMPAIGN_TRIALS
        {
            return Err(Error::InvalidSpec(format!(
                "campaign bounds: nvars <= {MAX_CAMPAIGN_NVARS}, degrees <= {MAX_CAMPAIGN_DEGREE}, trials <= {MAX_CAMPAIGN_TRIALS}"
            )));
        }
        Ok(())
    }

    /// True when the two-variable theorem covers this campaign, so a
    /// failure is an implementation bug rather than a finding.
    pub fn theorem_applies(&self) -> bool {
        self.nvars <= 2
    }
}

/// One line of the campaign log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub trial: u64,
    pub seed: u64,
    pub base_seed: u64,
    pub nvars: usize,
    pub degrees: Vec<u32>,
    pub domain: Domain,
    pub initial_ideal: MonomialIdeal,
    pub wrl: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub wrl_witness: Option<Witness>,
    pub rl: RevlexCheck,
    pub resamples: u32,
    pub elapsed_ms: u64,
}

/// The generators fed to Buchberger for one draw: in two variables the
/// second form is first reduced modulo the first.
fn trial_generators(
    nvars: usize,
    degrees: &[u32],
    domain: Domain,
    seed: u64,
) -> Result<Vec<Polynomial>> {
    let gens = GenericSpec::new(nvars, degrees.to_vec(), domain, seed)?.sample()?;
    if nvars == 2 && gens.len() == 2 {
        let r = reduce_second_generator(&gens[0], &gens[1])?;
        return Ok(vec![gens[0].clone(), r]);
    }
    Ok(gens)
}

/// A draw is accepted when the quotient has the dimension of a complete
/// intersection of the given degrees.
fn check_complete_intersection(ideal: &MonomialIdeal, degrees: &[u32]) -> Result<()> {
    let expected: u64 = degrees.iter().map(|&d| d as u64).product();
    match ideal.standard_monomial_count() {
        Ok(count) if count == expected => Ok(()),
        Ok(count) => Err(Error::Degenerate(format!(
            "quotient dimension {count}, expected {expected}"
        ))),
        Err(Error::NotArtinian(_)) => {
            Err(Error::Degenerate("initial ideal is not Artinian".into()))
        }
        Err(e) => Err(e),
    }
}

/// Runs trial `index` of `config` from its derived seed.
pub fn run_trial(config: &TrialConfig, index: u64) -> Result<TrialRecord> {
    run_seeded_trial(config, index, derive_seed(config.base_seed, index))
}

fn run_seeded_trial(config: &TrialConfig, index: u64, seed: u64) -> Result<TrialRecord> {
    let start = Instant::now();
    let degrees = config.sorted_degrees();
    let mut last = String::new();
    for attempt in 0..=config.max_resamples {
        let s = attempt_seed(seed, attempt);
        let gens = match trial_generators(config.nvars, &degrees, config.domain, s) {
            Ok(g) => g,
            Err(Error::Degenerate(msg)) => {
                last = msg;
                continue;
            }
            Err(e) => return Err(e),
        };
        let gb: GroebnerBasis = buchberger(&Ideal::from_generators(gens)?)?;
        let ideal = gb.initial_ideal();
        if config.nvars == degrees.len() {
            if let Err(e) = check_complete_intersection(&ideal, &degrees) {
                match e {
                    Error::Degenerate(msg) => {
                        last = msg;
                        continue;
                    }
                    other => return Err(other),
                }
            }
        }
        let wrl = ideal.is_weakly_revlex();
        let bound = degrees.iter().sum();
        let rl = ideal.is_revlex(bound);
        return Ok(TrialRecord {
            trial: index,
            seed,
            base_seed: config.base_seed,
            nvars: config.nvars,
            degrees,
            domain: config.domain,
            initial_ideal: ideal,
            wrl: wrl.holds,
            wrl_witness: wrl.witness,
            rl,
            resamples: attempt,
            elapsed_ms: start.elapsed().as_millis() as u64,
        });
    }
    Err(Error::Degenerate(format!(
        "trial {index} (seed {seed}) still degenerate after {} resamples: {last}",
        config.max_resamples
    )))
}

/// Recomputes a logged trial from its seed and configuration.
pub fn replay(record: &TrialRecord, max_resamples: u32) -> Result<TrialRecord> {
    let config = TrialConfig {
        nvars: record.nvars,
        degrees: record.degrees.clone(),
        domain: record.domain,
        trials: record.trial + 1,
        base_seed: record.base_seed,
        max_resamples,
    };
    run_seeded_trial(&config, record.trial, record.seed)
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct CampaignSummary {
    pub trials: u64,
    pub wrl_pass: u64,
    pub rl_pass: u64,
    /// Records already present in the log before this run.
    pub resumed: u64,
    pub resamples: u64,
    pub elapsed_ms: u64,
    pub failures: Vec<TrialRecord>,
}

impl CampaignSummary {
    pub fn all_wrl(&self) -> bool {
        self.wrl_pass == self.trials
    }
}

/// Reads a JSON-lines trial log.
pub fn read_log(path: &Path) -> Result<Vec<TrialRecord>> {
    let file = File::open(path)?;
    let mut out = Vec::new();
    for (k, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: TrialRecord = serde_json::from_str(&line)
            .map_err(|e| Error::parse(k + 1, e.column(), e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}

/// Cuts an unterminated final line left by an interrupted write.
fn drop_torn_tail(path: &Path) -> Result<()> {
    let bytes = std::fs::read(path)?;
    if bytes.is_empty() || bytes.ends_with(b"\n") {
        return Ok(());
    }
    let keep = bytes.iter().rposition(|&b| b == b'\n').map_or(0, |i| i + 1);
    OpenOptions::new()
        .write(true)
        .open(path)?
        .set_len(keep as u64)?;
    Ok(())
}

/// Runs every trial of `config` not already present in `log` (when given),
/// appending new records in index order. Records are computed in parallel
/// batches and each batch is flushed before the next starts, so an
/// interrupted campaign can be resumed without duplicating indices.
pub fn run_campaign(config: &TrialConfig, log: Option<&Path>) -> Result<CampaignSummary> {
    config.validate()?;
    let start = Instant::now();
    let degrees = config.sorted_degrees();
    let mut records: Vec<TrialRecord> = Vec::new();
    let mut done = BTreeSet::new();
    if let Some(path) = log.filter(|p| p.exists()) {
        drop_torn_tail(path)?;
        for rec in read_log(path)? {
            if rec.nvars != config.nvars
                || rec.degrees != degrees
                || rec.domain != config.domain
                || rec.base_seed != config.base_seed
            {
                return Err(Error::InvalidSpec(format!(
                    "log {} holds trials of a different campaign (trial {})",
                    path.display(),
                    rec.trial
                )));
            }
            if rec.trial < config.trials && done.insert(rec.trial) {
                records.push(rec);
            }
        }
    }
    let resumed = records.len() as u64;
    let todo: Vec<u64> = (0..config.trials).filter(|i| !done.contains(i)).collect();
    let mut writer = match log {
        Some(path) => Some(OpenOptions::new().create(true).append(true).open(path)?),
        None => None,
    };
    let batch = (rayon::current_num_threads() * 4).max(1);
    for chunk in todo.chunks(batch) {
        let fresh: Vec<TrialRecord> = chunk
            .par_iter()
            .map(|&i| run_trial(config, i))
            .collect::<Result<_>>()?;
        if let Some(w) = writer.as_mut() {
            for rec in &fresh {
                serde_json::to_writer(&mut *w, rec)?;
                w.write_all(b"\n")?;
            }
            w.flush()?;
        }
        records.extend(fresh);
    }
    records.sort_by_key(|r| r.trial);

    let mut summary = CampaignSummary {
        trials: records.len() as u64,
        resumed,
        ..Default::default()
    };
    for rec in records {
        summary.resamples += rec.resamples as u64;
        if rec.rl.holds {
            summary.rl_pass += 1;
        }
        if rec.wrl {
            summary.wrl_pass += 1;
        } else {
            summary.failures.push(rec);
        }
    }
    summary.elapsed_ms = start.elapsed().as_millis() as u64;
    Ok(summary)
}
