//! Machine-readable verification reports.

use std::fmt::Write as _;
use std::time::Duration;

use kostant_core::check::{SuiteSummary, Witness};
use serde::Serialize;

use crate::params::NamedParams;
use crate::run::RunConfig;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    pub relation: String,
    pub alpha: Option<String>,
    pub monomial: Option<String>,
    pub expected: String,
    pub actual: String,
}

impl From<&Witness> for WitnessReport {
    fn from(w: &Witness) -> WitnessReport {
        WitnessReport {
            relation: w.relation.clone(),
            alpha: w.alpha.as_ref().map(|a| a.to_string()),
            monomial: w.monomial.clone(),
            expected: w.expected.clone(),
            actual: w.actual.clone(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationCount {
    pub relation: String,
    pub failed_tasks: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    /// `None` for suites that do not depend on the weights.
    pub params: Option<String>,
    pub c: Option<Vec<String>>,
    pub status: &'static str,
    pub tasks: u64,
    pub checked: u64,
    pub failed_tasks: u64,
    pub failing_relations: Vec<RelationCount>,
    pub first_failure: Option<WitnessReport>,
    #[serde(skip)]
    pub wall: Duration,
}

impl SuiteReport {
    pub fn new(s: SuiteSummary, params: Option<&NamedParams>, wall: Duration) -> SuiteReport {
        SuiteReport {
            suite: s.suite.as_str().into(),
            params: params.map(|p| p.label.clone()),
            c: params.map(|p| p.params.values().iter().map(|c| c.to_string()).collect()),
            status: if s.passed() { "pass" } else { "fail" },
            tasks: s.tasks,
            checked: s.checked,
            failed_tasks: s.failed_tasks,
            failing_relations: s
                .failing_relations
                .iter()
                .map(|(r, k)| RelationCount {
                    relation: r.clone(),
                    failed_tasks: *k,
                })
                .collect(),
            first_failure: s.first_failure.as_ref().map(WitnessReport::from),
            wall,
        }
    }

    pub fn passed(&self) -> bool {
        self.failed_tasks == 0
    }
}

/// The part of the configuration that determines the results. The worker
/// count is deliberately absent.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ConfigEcho {
    pub n: u32,
    pub params: Vec<String>,
    pub max_degree: i64,
    pub pmax: i64,
    pub suites: Vec<String>,
    pub lifts: Vec<u32>,
    pub cycles: i64,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub status: &'static str,
    pub suites: Vec<SuiteReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<Vec<u128>>,
}

impl Report {
    pub fn new(config: &RunConfig, suites: Vec<SuiteReport>) -> Report {
        let pass = suites.iter().all(SuiteReport::passed);
        Report {
            config: ConfigEcho {
                n: config.n,
                params: config.params.iter().map(|p| p.to_string()).collect(),
                max_degree: config.max_degree,
                pmax: config.pmax,
                suites: config.suites.iter().map(|s| s.as_str().to_string()).collect(),
                lifts: config.lifts.clone(),
                cycles: config.cycles,
                trials: config.trials,
                seed: config.seed,
            },
            status: if pass { "pass" } else { "fail" },
            suites,
            wall_ms: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == "pass"
    }

    /// Adds per-suite wall times; they vary between runs, so reports that
    /// must compare equal should not include them.
    pub fn with_timing(mut self) -> Report {
        self.wall_ms = Some(self.suites.iter().map(|s| s.wall.as_millis()).collect());
        self
    }

    pub fn render(&self, format: Format) -> Result<String, CliError> {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                Ok(s)
            }
            Format::Csv => self.render_csv(),
            Format::Text => Ok(self.render_text()),
        }
    }

    fn render_csv(&self) -> Result<String, CliError> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec![
            "suite",
            "params",
            "status",
            "tasks",
            "checked",
            "failed_tasks",
            "relation",
            "alpha",
            "monomial",
            "expected",
            "actual",
        ];
        if self.wall_ms.is_some() {
            header.push("wall_ms");
        }
        w.write_record(&header).map_err(csv_error)?;
        for (k, s) in self.suites.iter().enumerate() {
            let f = s.first_failure.as_ref();
            let mut row = vec![
                s.suite.clone(),
                s.params.clone().unwrap_or_default(),
                s.status.to_string(),
                s.tasks.to_string(),
                s.checked.to_string(),
                s.failed_tasks.to_string(),
                f.map(|f| f.relation.clone()).unwrap_or_default(),
                f.and_then(|f| f.alpha.clone()).unwrap_or_default(),
                f.and_then(|f| f.monomial.clone()).unwrap_or_default(),
                f.map(|f| f.expected.clone()).unwrap_or_default(),
                f.map(|f| f.actual.clone()).unwrap_or_default(),
            ];
            if let Some(ms) = &self.wall_ms {
                row.push(ms[k].to_string());
            }
            w.write_record(&row).map_err(csv_error)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, s) in self.suites.iter().enumerate() {
            let label = s.params.as_deref().unwrap_or("-");
            write!(
                out,
                "{:<5} {:<11} {:<28} tasks={} checked={} failed={}",
                s.status.to_uppercase(),
                s.suite,
                label,
                s.tasks,
                s.checked,
                s.failed_tasks
            )
            .unwrap();
            if let Some(ms) = &self.wall_ms {
                write!(out, " {}ms", ms[k]).unwrap();
            }
            out.push('\n');
            for r in &s.failing_relations {
                writeln!(out, "      {} ({} tasks)", r.relation, r.failed_tasks).unwrap();
            }
            if let Some(f) = &s.first_failure {
                writeln!(
                    out,
                    "      first: {} at {} on {}: expected {} got {}",
                    f.relation,
                    f.alpha.as_deref().unwrap_or("-"),
                    f.monomial.as_deref().unwrap_or("-"),
                    f.expected,
                    f.actual
                )
                .unwrap();
            }
        }
        writeln!(out, "{}", self.status.to_uppercase()).unwrap();
        out
    }
}

pub fn csv_error(e: csv::Error) -> CliError {
    CliError::Usage(format!("csv: {e}"))
}
