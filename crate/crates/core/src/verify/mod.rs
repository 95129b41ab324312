//! Check registry, parameter scans, randomized identity testing and
//! machine-readable reports.

mod checks;
mod grid;
mod parse;
mod pi;

pub use checks::{check_ids, find_check, run_all, run_check, scan, CheckSpec, CHECKS};
pub use grid::{default_grid, expand_alpha3, parse_grid, GridPoint};
pub use parse::parse_presentation;
pub use pi::{error_bound, hall, pi_test, pi_trials, Identity, PiOutcome};

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::gbasis::{DEFAULT_DEGREE_BOUND, DEFAULT_MAX_RULES};

pub const SCHEMA_VERSION: u32 = 1;
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_TRIALS: usize = 50;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckConfig {
    pub field: FieldSpec,
    pub seed: u64,
    pub degree_bound: usize,
    pub max_rules: usize,
    pub grid: Vec<GridPoint>,
    pub trials: usize,
}

impl CheckConfig {
    /// Default bounds and trials with the default grid for `(field, seed)`.
    pub fn new(field: FieldSpec, seed: u64) -> Self {
        CheckConfig {
            seed,
            grid: default_grid(field, seed),
            ..CheckConfig::new_bare(field)
        }
    }

    pub(crate) fn new_bare(field: FieldSpec) -> Self {
        CheckConfig {
            field,
            seed: DEFAULT_SEED,
            degree_bound: DEFAULT_DEGREE_BOUND,
            max_rules: DEFAULT_MAX_RULES,
            grid: Vec::new(),
            trials: DEFAULT_TRIALS,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::ParameterDomain("trials must be at least 1".into()));
        }
        if self.grid.iter().any(|p| !p.belongs_to(self.field)) {
            return Err(Error::FieldMismatch("grid".into(), self.field.name()));
        }
        Ok(())
    }

    /// A generator determined by the seed, a tag and an index, so that
    /// results do not depend on evaluation order.
    pub fn rng(&self, tag: &str, index: u64) -> ChaCha8Rng {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for byte in tag.bytes().chain(index.to_le_bytes()) {
            h ^= byte as u64;
            h = h.wrapping_mul(0x0100_0000_01b3);
        }
        ChaCha8Rng::seed_from_u64(self.seed ^ h)
    }
}

impl Default for CheckConfig {
    fn default() -> Self {
        CheckConfig::new(FieldSpec::default(), DEFAULT_SEED)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
    Error,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
            Status::Error => "error",
        }
    }

    pub fn is_ok(&self) -> bool {
        matches!(self, Status::Pass | Status::Skipped)
    }

    /// Combined status: error dominates fail, fail dominates pass, and
    /// skipped only when nothing ran.
    pub fn combine(statuses: impl IntoIterator<Item = Status>) -> Status {
        let mut out = Status::Skipped;
        for s in statuses {
            out = match (out, s) {
                (Status::Error, _) | (_, Status::Error) => Status::Error,
                (Status::Fail, _) | (_, Status::Fail) => Status::Fail,
                (Status::Pass, _) | (_, Status::Pass) => Status::Pass,
                _ => Status::Skipped,
            };
        }
        out
    }
}

pub type Details = BTreeMap<String, Value>;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PointReport {
    pub params: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub details: Details,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub check_id: String,
    pub status: Status,
    pub field: String,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub details: Details,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error_bound: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<PointReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub skipped: Vec<String>,
}

impl Report {
    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn point(&self, params: &str) -> Option<&PointReport> {
        self.points.iter().find(|p| p.params == params)
    }

    /// Per-point sub-reports whose status is `status`.
    pub fn points_with(&self, status: Status) -> impl Iterator<Item = &PointReport> {
        self.points.iter().filter(move |p| p.status == status)
    }

    /// One summary line.
    pub fn summary(&self) -> String {
        let mut s = format!("{:<8} {}", self.status.as_str().to_uppercase(), self.check_id);
        if !self.points.is_empty() {
            let count = |st| self.points_with(st).count();
            s.push_str(&format!(
                " ({} points: {} pass, {} fail, {} skipped, {} error)",
                self.points.len(),
                count(Status::Pass),
                count(Status::Fail),
                count(Status::Skipped),
                count(Status::Error)
            ));
        }
        if let Some(r) = &self.reason {
            s.push_str(&format!(": {r}"));
        }
        s
    }
}

/// All reports of one invocation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportSet {
    pub schema_version: u32,
    pub status: Status,
    pub reports: Vec<Report>,
}

impl ReportSet {
    pub fn new(reports: Vec<Report>) -> Self {
        ReportSet {
            schema_version: SCHEMA_VERSION,
            status: Status::combine(reports.iter().map(|r| r.status)),
            reports,
        }
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}
