use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kostant::params::{default_grid, load, NamedParams};
use kostant::report::Format;
use kostant::run::{run_suites, RunConfig};
use kostant::tables::{components_table, dims_table, matrix_report, operator, strata_table, OpKind};
use kostant::CliError;
use kostant_core::check::Suite;
use kostant_core::{DimVec, Residue};

#[derive(Parser, Debug)]
#[command(name = "kostant", version, about = "Exact checks and tables for the Kostant-partition model of affine sl_n")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Number of vertices of the cyclic quiver.
    #[arg(long, global = true, default_value_t = 2)]
    n: u32,
    /// JSON parameter file: {"c": [...]} or {"genus": g, "d": d, "degL": [...]}.
    /// Without it the default grid for `n` is used.
    #[arg(long, global = true)]
    params: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 4, allow_negative_numbers = true)]
    max_degree: i64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    workers: usize,
    /// Seed for the randomized recovery suite.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run verification suites.
    Verify {
        /// Comma-separated suites; defaults to all.
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
        #[arg(long, default_value_t = 2)]
        pmax: i64,
        /// Lift factors for the intertwining suite.
        #[arg(long, value_delimiter = ',', default_value = "2")]
        lifts: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        cycles: i64,
        #[arg(long, default_value_t = 200)]
        trials: usize,
        /// Include per-suite wall times.
        #[arg(long)]
        timing: bool,
    },
    /// Weight-space dimensions, strata counts and h-eigenvalues.
    Dims,
    /// Matrix of an operator on one piece.
    Matrix {
        #[arg(long, value_enum)]
        op: OpKind,
        #[arg(long, default_value_t = 0)]
        i: i64,
        /// Index of the Heisenberg generator for `--op a`.
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        p: i64,
        /// Comma-separated dimension vector.
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<i64>,
    },
    /// Strata of K_alpha.
    Strata {
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<i64>,
    },
    /// Components of the Hecke correspondence with their matrix coefficients.
    Components {
        #[arg(long, value_delimiter = ',')]
        alpha: Vec<i64>,
        #[arg(long, default_value_t = 0)]
        i: i64,
    },
    /// Heisenberg, P_n and intertwining suites.
    Heis {
        #[arg(long, default_value_t = 2)]
        pmax: i64,
        #[arg(long, value_delimiter = ',', default_value = "2")]
        lifts: Vec<u32>,
        #[arg(long, default_value_t = 1)]
        cycles: i64,
    },
}

fn params(g: &Global) -> Result<Vec<NamedParams>, CliError> {
    if g.n < 2 {
        return Err(CliError::Usage(format!("n must be at least 2, got {}", g.n)));
    }
    match &g.params {
        Some(path) => Ok(vec![load(path, g.n)?]),
        None => Ok(default_grid(g.n)),
    }
}

fn alpha(g: &Global, entries: &[i64]) -> Result<DimVec, CliError> {
    let a = if entries.is_empty() {
        DimVec::zero(g.n)
    } else {
        DimVec::from_vec(entries.to_vec())?
    };
    if a.rank() != g.n || !a.is_nonnegative() {
        return Err(CliError::Usage(format!("alpha {a} is not a dimension vector of rank {}", g.n)));
    }
    Ok(a)
}

fn residue(g: &Global, i: i64) -> Result<Residue, CliError> {
    if !(0..g.n as i64).contains(&i) {
        return Err(CliError::Usage(format!("vertex {i} out of range 0..{}", g.n)));
    }
    Ok(Residue::new(g.n, i)?)
}

fn emit(g: &Global, text: &str) -> Result<String, CliError> {
    match &g.out {
        Some(path) => {
            std::fs::write(path, text)?;
            Ok(String::new())
        }
        None => Ok(text.to_string()),
    }
}

/// Returns the text for standard output and whether every check passed.
fn run(cli: &Cli) -> Result<(String, bool), CliError> {
    let g = &cli.global;
    let grid = params(g)?;
    if g.max_degree < 0 {
        return Err(CliError::Usage("max degree must be nonnegative".into()));
    }
    match &cli.command {
        Command::Verify {
            suites,
            pmax,
            lifts,
            cycles,
            trials,
            timing,
        } => {
            let mut config = RunConfig::new(g.n, grid, g.max_degree);
            if !suites.is_empty() {
                config.suites = suites
                    .iter()
                    .map(|s| s.parse::<Suite>())
                    .collect::<Result<_, _>>()?;
            }
            config.pmax = *pmax;
            config.lifts = lifts.clone();
            config.cycles = *cycles;
            config.trials = *trials;
            config.seed = g.seed;
            config.workers = g.workers;
            let mut report = run_suites(&config)?;
            if *timing {
                report = report.with_timing();
            }
            Ok((emit(g, &report.render(g.format)?)?, report.passed()))
        }
        Command::Heis { pmax, lifts, cycles } => {
            let mut config = RunConfig::new(g.n, grid, g.max_degree);
            config.suites = vec![Suite::Heisenberg, Suite::Pn, Suite::Intertwine];
            config.pmax = *pmax;
            config.lifts = lifts.clone();
            config.cycles = *cycles;
            config.workers = g.workers;
            let report = run_suites(&config)?;
            Ok((emit(g, &report.render(g.format)?)?, report.passed()))
        }
        Command::Dims => {
            let mut out = String::new();
            for p in &grid {
                if g.format == Format::Text && grid.len() > 1 {
                    out.push_str(&format!("# {p}\n"));
                }
                out.push_str(&dims_table(&p.params, g.max_degree).render(g.format)?);
            }
            Ok((emit(g, &out)?, true))
        }
        Command::Matrix { op, i, p, alpha: a } => {
            let (a, i) = (alpha(g, a)?, residue(g, *i)?);
            let params = &grid[0].params;
            let name = match op {
                OpKind::A => format!("a{p}"),
                OpKind::E => format!("e{i}"),
                OpKind::F => format!("f{i}"),
                OpKind::H => format!("h{i}"),
            };
            let m = matrix_report(name, &operator(*op, i, *p, params), &a)?;
            Ok((emit(g, &m.render(g.format)?)?, true))
        }
        Command::Strata { alpha: a } => {
            Ok((emit(g, &strata_table(&alpha(g, a)?).render(g.format)?)?, true))
        }
        Command::Components { alpha: a, i } => {
            let t = components_table(&alpha(g, a)?, residue(g, *i)?, &grid[0].params)?;
            Ok((emit(g, &t.render(g.format)?)?, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, pass)) => {
            if std::io::stdout().lock().write_all(text.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(if pass { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("kostant: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exit code and standard output of `kostant args...`.
    fn kostant(args: &[&str]) -> (i32, String) {
        let cli = match Cli::try_parse_from(std::iter::once("kostant").chain(args.iter().copied())) {
            Ok(cli) => cli,
            Err(e) => return (e.exit_code(), String::new()),
        };
        match run(&cli) {
            Ok((text, pass)) => (if pass { 0 } else { 1 }, text),
            Err(e) => (e.exit_code(), String::new()),
        }
    }

    #[test]
    fn passing_verify_exits_zero() {
        let (code, out) = kostant(&["verify", "--n", "2", "--max-degree", "2", "--suites", "serre,dims,recovery", "--trials", "10"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.ends_with("PASS\n"));
    }

    #[test]
    fn failing_verify_exits_one_with_witness() {
        let (code, out) = kostant(&["verify", "--n", "2", "--max-degree", "1", "--suites", "commlemmas", "--format", "json"]);
        assert_eq!(code, 1);
        let report: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(report["status"], "fail");
        let w = &report["suites"][0]["first_failure"];
        assert!(w["relation"].as_str().unwrap().starts_with("comm"));
        assert!(w["alpha"].is_string());
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(kostant(&["verify", "--n", "1"]).0, 2);
        assert_eq!(kostant(&["verify", "--suites", "nope"]).0, 2);
        assert_eq!(kostant(&["dims", "--max-degree", "-1"]).0, 2);
        assert_eq!(kostant(&["matrix", "--op", "e", "--alpha", "1,1,1"]).0, 2);
        assert_eq!(kostant(&["components", "--i", "5"]).0, 2);
        assert_eq!(kostant(&["bogus"]).0, 2);
    }

    #[test]
    fn raw_weights_from_file() {
        let dir = std::env::temp_dir().join(format!("kostant-cli-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let good = dir.join("c.json");
        std::fs::write(&good, r#"{"c": ["5/2", "-1", "0"]}"#).unwrap();
        let (code, out) = kostant(&["verify", "--n", "3", "--params", good.to_str().unwrap(), "--max-degree", "3", "--suites", "serre"]);
        assert_eq!(code, 0, "{out}");
        let both = dir.join("both.json");
        std::fs::write(&both, r#"{"c": ["1", "1", "1"], "genus": 0, "d": 1}"#).unwrap();
        assert_eq!(kostant(&["verify", "--n", "3", "--params", both.to_str().unwrap(), "--suites", "serre"]).0, 2);
        let report = dir.join("report.json");
        let (code, out) = kostant(&["verify", "--n", "3", "--max-degree", "1", "--suites", "pn", "--format", "json", "--out", report.to_str().unwrap()]);
        assert_eq!((code, out.as_str()), (0, ""));
        assert!(std::fs::read_to_string(&report).unwrap().contains("\"status\": \"pass\""));
        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn json_reports_do_not_depend_on_workers() {
        let run = |w: &str| {
            kostant(&[
                "verify", "--n", "3", "--max-degree", "2", "--suites", "serre,crosscheck,recovery", "--trials", "20",
                "--seed", "5", "--format", "json", "--workers", w,
            ])
        };
        assert_eq!(run("1"), run("3"));
        let timed = kostant(&["verify", "--n", "2", "--max-degree", "1", "--suites", "pn", "--format", "json", "--timing"]);
        assert!(timed.1.contains("wall_ms"));
    }

    #[test]
    fn tables() {
        let (_, dims) = kostant(&["dims", "--n", "2", "--max-degree", "2", "--format", "csv"]);
        assert!(dims.contains("\"(1,1)\",2,3,4,2,3,2;3\n"), "{dims}");
        let (_, comps) = kostant(&["components", "--n", "2", "--alpha", "0,0", "--i", "1", "--format", "csv"]);
        assert_eq!(comps.lines().filter(|l| l.starts_with("source")).count(), 1);
        let (_, strata) = kostant(&["strata", "--n", "2", "--alpha", "1,1", "--format", "json"]);
        let t: serde_json::Value = serde_json::from_str(&strata).unwrap();
        assert_eq!(t["rows"].as_array().unwrap().len(), 4);
        let (_, m) = kostant(&["matrix", "--n", "2", "--op", "a", "--p", "-1", "--alpha", "0,0", "--format", "json"]);
        let m: serde_json::Value = serde_json::from_str(&m).unwrap();
        assert_eq!(m["target"], "(1,1)");
        assert_eq!(m["layout"], "dense");
    }
}
