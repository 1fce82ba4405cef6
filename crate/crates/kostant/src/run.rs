//! Suite selection and parallel execution.

use std::time::Instant;

use kostant_core::check::{
    check_recovery, commlemmas_suite, crosscheck_suite, dims_suite, heisenberg_suite, intertwine_suite, pn_suite,
    semismall_suite, serre_suite, summarize, Outcome, Suite, SuiteSummary, Task,
};
use rayon::prelude::*;

use crate::params::NamedParams;
use crate::random::recovery_inputs;
use crate::report::{Report, SuiteReport};
use crate::CliError;

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n: u32,
    pub params: Vec<NamedParams>,
    pub max_degree: i64,
    pub pmax: i64,
    pub suites: Vec<Suite>,
    /// Lift factors `k` for the intertwining suite.
    pub lifts: Vec<u32>,
    /// Intertwining degree bound, in full cycles of the larger quiver.
    pub cycles: i64,
    pub trials: usize,
    pub seed: u64,
    /// `0` means one worker per available core.
    pub workers: usize,
}

impl RunConfig {
    pub fn new(n: u32, params: Vec<NamedParams>, max_degree: i64) -> RunConfig {
        RunConfig {
            n,
            params,
            max_degree,
            pmax: 2,
            suites: Suite::ALL.to_vec(),
            lifts: vec![2],
            cycles: 1,
            trials: 200,
            seed: 0,
            workers: 0,
        }
    }

    pub fn validate(&self) -> Result<(), CliError> {
        let usage = |m: String| Err(CliError::Usage(m));
        if self.n < 2 {
            return usage(format!("n must be at least 2, got {}", self.n));
        }
        if self.max_degree < 0 {
            return usage(format!("max degree must be nonnegative, got {}", self.max_degree));
        }
        if self.suites.is_empty() {
            return usage("no suites selected".into());
        }
        if self.params.is_empty() {
            return usage("no parameters".into());
        }
        if let Some(p) = self.params.iter().find(|p| p.params.rank() != self.n) {
            return usage(format!("parameters {p} do not have rank {}", self.n));
        }
        if self.lifts.iter().any(|&k| k < 2) {
            return usage("lift factors must be at least 2".into());
        }
        if self.pmax < 0 || self.cycles < 0 {
            return usage("pmax and cycles must be nonnegative".into());
        }
        Ok(())
    }
}

fn param_free(suite: Suite) -> bool {
    matches!(suite, Suite::Pn | Suite::Semismall | Suite::Dims | Suite::Recovery)
}

fn tasks_for(config: &RunConfig, suite: Suite, params: Option<&NamedParams>) -> Vec<Task> {
    let (n, d) = (config.n, config.max_degree);
    match (suite, params) {
        (Suite::Serre, Some(p)) => serre_suite(&p.params, d),
        (Suite::CommLemmas, Some(p)) => commlemmas_suite(&p.params, d),
        (Suite::Crosscheck, Some(p)) => crosscheck_suite(&p.params, d),
        (Suite::Heisenberg, Some(p)) => heisenberg_suite(&p.params, d, config.pmax),
        (Suite::Intertwine, Some(p)) => config
            .lifts
            .iter()
            .flat_map(|&k| intertwine_suite(&p.params, k, config.cycles))
            .collect(),
        (Suite::Pn, _) => pn_suite(n),
        (Suite::Semismall, _) => semismall_suite(n, d),
        (Suite::Dims, _) => dims_suite(n, d),
        (Suite::Recovery, _) => recovery_inputs(config.seed, n, d.max(1), config.trials)
            .into_iter()
            .enumerate()
            .map(|(t, (a, g))| Task::new(Suite::Recovery, format!("trial {t}: {a}"), move || check_recovery(&a, &g)))
            .collect(),
        (_, None) => unreachable!("suite needs parameters"),
    }
}

/// Runs `tasks` on `pool`, keeping task order.
fn execute(pool: &rayon::ThreadPool, tasks: &[Task]) -> Vec<Outcome> {
    pool.install(|| tasks.par_iter().map(Task::run).collect())
}

pub fn build_pool(workers: usize) -> Result<rayon::ThreadPool, CliError> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| CliError::Usage(format!("cannot start {workers} workers: {e}")))
}

/// Runs every selected suite for every parameter set (once for suites that
/// do not depend on parameters) and folds the results in canonical order.
pub fn run_suites(config: &RunConfig) -> Result<Report, CliError> {
    config.validate()?;
    let pool = build_pool(config.workers)?;
    let mut suites = Vec::new();
    for &suite in &config.suites {
        let runs: Vec<Option<&NamedParams>> = if param_free(suite) {
            vec![None]
        } else {
            config.params.iter().map(Some).collect()
        };
        for params in runs {
            let start = Instant::now();
            let tasks = tasks_for(config, suite, params);
            let summary: SuiteSummary = summarize(suite, &execute(&pool, &tasks));
            suites.push(SuiteReport::new(summary, params, start.elapsed()));
        }
    }
    Ok(Report::new(config, suites))
}
