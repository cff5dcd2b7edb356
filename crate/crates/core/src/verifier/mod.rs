//! Theorem-level checks and the sweep that runs them.

mod checks;
mod enumerate;
mod prop_gen;

use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::coset_enum::{CosetError, DEFAULT_MAX_COSETS};
use crate::mod2::{HomologyError, DEFAULT_CLOSURE_CAP};
use crate::subgroup_pres::SubgroupError;
use crate::words::WordError;

pub use checks::{
    h1_dimension_arithmetic, verify_h1_genus3, verify_level2_membership, verify_mccarthy_pinkall,
    verify_minimality_genus3, verify_mod2_transport, verify_prop_gen, verify_prop_gen_negative_control,
    verify_prop_rm, sl2z_presentation, sl2z_images,
};
pub use enumerate::{enumerate_mainthm, enumerate_mainthm2, mainthm2_formula, mainthm_formula, Mainthm2Enumeration};
pub use prop_gen::{gen1, gen2, gen2_identity, pi1_presentation, PropVariant, WordIdentity};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("genus {genus} is below the minimum {min} for this check")]
    GenusTooSmall { genus: usize, min: usize },
    #[error("genus {genus} is above the maximum {max} for this check")]
    GenusTooLarge { genus: usize, max: usize },
    #[error("base crosscap {k} is out of range for genus {genus}")]
    InvalidBase { k: usize, genus: usize },
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Homology(#[from] HomologyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    DiscrepancyReported,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub check_id: String,
    pub genus: Option<usize>,
    pub status: Status,
    pub details: serde_json::Value,
    pub elapsed_ms: u64,
}

impl CheckResult {
    pub fn new(check_id: &str, genus: Option<usize>, status: Status, details: serde_json::Value) -> Self {
        Self { check_id: check_id.to_string(), genus, status, details, elapsed_ms: 0 }
    }

    pub fn pass_if(check_id: &str, genus: Option<usize>, ok: bool, details: serde_json::Value) -> Self {
        Self::new(check_id, genus, if ok { Status::Pass } else { Status::Fail }, details)
    }

    fn from_error(check_id: &str, genus: Option<usize>, e: &VerifyError) -> Self {
        Self::new(check_id, genus, Status::Fail, serde_json::json!({ "error": e.to_string(), "witness": e.to_string() }))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyConfig {
    pub max_genus: usize,
    pub max_cosets: usize,
    pub closure_cap: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { max_genus: 6, max_cosets: DEFAULT_MAX_COSETS, closure_cap: DEFAULT_CLOSURE_CAP }
    }
}

pub const CHECK_IDS: &[&str] = &[
    "h1-dimension",
    "h1-genus3",
    "level2-membership",
    "mainthm-count",
    "mainthm2-count",
    "mccarthy-pinkall",
    "minimality-genus3",
    "mod2-transport",
    "prop-gen-negative-control",
    "prop-gen1",
    "prop-gen2",
    "prop-rm",
];

/// Genera at which `id` runs for a sweep up to `max_genus`; `None` for
/// genus-free checks.
fn genus_range(id: &str, max_genus: usize) -> Vec<Option<usize>> {
    let range = |lo: usize, hi: usize| (lo..=hi).map(Some).collect::<Vec<_>>();
    match id {
        "mainthm-count" | "mainthm2-count" | "prop-gen1" | "prop-gen2" | "prop-rm" => range(3, max_genus),
        "prop-gen-negative-control" => range(4, max_genus.min(4)),
        "level2-membership" => range(3, max_genus.min(8)),
        "mccarthy-pinkall" => range(2, max_genus.min(6)),
        "mod2-transport" => range(3, max_genus.min(6)),
        "h1-genus3" | "minimality-genus3" => range(3, 3),
        "h1-dimension" => range(5, max_genus),
        _ => Vec::new(),
    }
}

fn run_one(id: &str, genus: Option<usize>, config: &VerifyConfig) -> CheckResult {
    let g = genus.unwrap_or(0);
    let start = Instant::now();
    let outcome = match id {
        "mainthm-count" => checks::mainthm_count(g),
        "mainthm2-count" => checks::mainthm2_count(g),
        "prop-gen1" => verify_prop_gen(g, PropVariant::Gen1, config.max_cosets),
        "prop-gen2" => verify_prop_gen(g, PropVariant::Gen2, config.max_cosets),
        "prop-gen-negative-control" => verify_prop_gen_negative_control(g, config.max_cosets),
        "prop-rm" => verify_prop_rm(g),
        "level2-membership" => verify_level2_membership(g),
        "mccarthy-pinkall" => verify_mccarthy_pinkall(g, config.closure_cap),
        "mod2-transport" => verify_mod2_transport(g),
        "h1-genus3" => verify_h1_genus3(config.max_cosets),
        "minimality-genus3" => verify_minimality_genus3(config.max_cosets),
        "h1-dimension" => h1_dimension_arithmetic(g),
        other => Err(VerifyError::UnknownCheck(other.to_string())),
    };
    let mut result = outcome.unwrap_or_else(|e| CheckResult::from_error(id, genus, &e));
    result.elapsed_ms = start.elapsed().as_millis() as u64;
    result
}

fn sort_results(results: &mut [CheckResult]) {
    results.sort_by(|a, b| (a.check_id.as_str(), a.genus).cmp(&(b.check_id.as_str(), b.genus)));
}

fn require_sweep_genus(config: &VerifyConfig) -> Result<(), VerifyError> {
    if config.max_genus < 3 {
        return Err(VerifyError::GenusTooSmall { genus: config.max_genus, min: 3 });
    }
    Ok(())
}

/// Runs one check over its genus range.
pub fn run_check(id: &str, config: &VerifyConfig) -> Result<Vec<CheckResult>, VerifyError> {
    if !CHECK_IDS.contains(&id) {
        return Err(VerifyError::UnknownCheck(id.to_string()));
    }
    require_sweep_genus(config)?;
    let mut out: Vec<CheckResult> =
        genus_range(id, config.max_genus).into_iter().map(|g| run_one(id, g, config)).collect();
    sort_results(&mut out);
    Ok(out)
}

/// Runs every check over its genus range, ordered by check id then genus.
/// Failures inside a check are recorded in its result.
pub fn run_all(config: &VerifyConfig) -> Result<Vec<CheckResult>, VerifyError> {
    require_sweep_genus(config)?;
    let mut out = Vec::new();
    for id in CHECK_IDS {
        out.extend(run_check(id, config)?);
    }
    sort_results(&mut out);
    Ok(out)
}
