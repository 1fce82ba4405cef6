//! End-to-end acceptance checks. Each test prints one PASS/FAIL line.

use std::collections::BTreeMap;
use std::io::Write;

use kostant::params::{default_grid, NamedParams};
use kostant::random::recovery_inputs;
use kostant::report::Format;
use kostant::run::{run_suites, RunConfig};
use kostant_core::check::{
    check_recovery, commlemmas_suite, crosscheck_suite, dims_suite, heisenberg_suite, intertwine_suite, pn_suite,
    run_sequential, semismall_suite, serre_suite, summarize, Outcome, Suite, SuiteSummary, Task,
};
use kostant_core::{enumerate_kostant, DimVec, Q};

struct Verdict {
    id: u32,
    title: &'static str,
    lines: Vec<String>,
    pass: bool,
}

impl Verdict {
    fn new(id: u32, title: &'static str) -> Verdict {
        Verdict {
            id,
            title,
            lines: Vec::new(),
            pass: true,
        }
    }

    fn record(&mut self, label: &str, s: &SuiteSummary) {
        if s.passed() {
            self.lines.push(format!("{label}: {} checks", s.checked));
            return;
        }
        self.pass = false;
        let relations: Vec<String> = s.failing_relations.iter().map(|(r, k)| format!("{r} x{k}")).collect();
        self.lines
            .push(format!("{label}: {} failed tasks; {}", s.failed_tasks, relations.join(", ")));
        if let Some(w) = &s.first_failure {
            self.lines.push(format!(
                "  first: {} at {:?} on {:?}: expected {} got {}",
                w.relation, w.alpha, w.monomial, w.expected, w.actual
            ));
        }
    }

    fn expect(&mut self, ok: bool, line: String) {
        self.pass &= ok;
        self.lines.push(line);
    }

    /// Written to the stdout handle directly so the lines survive output capture.
    fn finish(self) {
        let status = if self.pass { "PASS" } else { "FAIL" };
        let mut text = format!("\nacceptance {:02} {status} {}\n", self.id, self.title);
        for l in &self.lines {
            text.push_str(&format!("    {l}\n"));
        }
        std::io::stdout().lock().write_all(text.as_bytes()).unwrap();
        assert!(self.pass, "acceptance {:02} failed: {}", self.id, self.title);
    }
}

fn run(tasks: Vec<Task>) -> SuiteSummary {
    let suite = tasks.first().map(|t| t.suite).unwrap_or(Suite::Serre);
    summarize(suite, &run_sequential(&tasks))
}

fn grid() -> Vec<NamedParams> {
    [2, 3, 4].into_iter().flat_map(default_grid).collect()
}

fn first_geometric(n: u32) -> NamedParams {
    default_grid(n).remove(0)
}

#[test]
fn serre_relations() {
    let mut v = Verdict::new(1, "Chevalley and Serre relations on the parameter grid");
    for p in grid() {
        let d = if p.params.rank() == 4 { 4 } else { 5 };
        let s = run(serre_suite(&p.params, d));
        v.record(&format!("n={} {p} |a|<={d}", p.params.rank()), &s);
    }
    v.finish();
}

fn is_cartan_check(label: &str) -> bool {
    (label.starts_with("[e") && label.contains(",f")) || label.starts_with('h') || label.starts_with("sum(h)")
}

#[test]
fn cartan_action_and_central_charge() {
    let mut v = Verdict::new(2, "[e,f]=h, h eigenvalues and the central charge");
    for (n, g, d) in kostant::params::DEFAULT_GRID {
        let p = kostant::params::geometric(n, g, d, &vec![0; n as usize]).unwrap();
        let c0 = Q::from_int((2 - 2 * g) * n as i64 + d);
        v.expect(p.params.c0() == c0, format!("c0 of {p} = {} (expected {c0})", p.params.c0()));
        let tasks: Vec<Task> = serre_suite(&p.params, 5)
            .into_iter()
            .filter(|t| is_cartan_check(&t.label))
            .collect();
        let s = run(tasks);
        v.record(&format!("n={n} {p} |a|<=5"), &s);
    }
    v.finish();
}

#[test]
fn commutator_lemmas() {
    let mut v = Verdict::new(3, "commutator lemmas as operator identities");
    for n in [2, 3] {
        let p = first_geometric(n);
        let s = run(commlemmas_suite(&p.params, 4));
        v.record(&format!("n={n} {p} |a|<=4"), &s);
    }
    v.finish();
}

#[test]
fn geometric_matrices_match_operators() {
    let mut v = Verdict::new(4, "geometric eps/phi matrices equal transposed operator matrices");
    for p in grid().into_iter().filter(|p| p.params.rank() <= 3) {
        let s = run(crosscheck_suite(&p.params, 4));
        v.record(&format!("n={} {p} |a|<=4", p.params.rank()), &s);
    }
    v.finish();
}

#[test]
fn heisenberg_relations() {
    let mut v = Verdict::new(5, "Heisenberg relations and commutation with e, f");
    for p in grid().into_iter().filter(|p| p.params.rank() <= 3) {
        let n = p.params.rank() as i64;
        let s = run(heisenberg_suite(&p.params, 4 * n, 2));
        v.record(&format!("n={n} {p} |a|<={}", 4 * n), &s);
    }
    v.finish();
}

#[test]
fn pn_lemmas() {
    let mut v = Verdict::new(6, "E-tilde and f' on the cycle polynomial P_n, n <= 6");
    v.record("n<=6", &run(pn_suite(6)));
    v.finish();
}

#[test]
fn rank_change_intertwines() {
    let mut v = Verdict::new(7, "the rank-kn lift intertwines e, h, f and E-tilde");
    for (n, k) in [(2, 2), (2, 3), (3, 2)] {
        let p = first_geometric(n);
        let s = run(intertwine_suite(&p.params, k, 3));
        v.record(&format!("(n,k)=({n},{k}) {p}, three cycles"), &s);
    }
    v.finish();
}

#[test]
fn representation_recovery() {
    let mut v = Verdict::new(8, "Kostant partition recovered from ranks of conjugated reps");
    for n in [2, 3] {
        let outcomes: Vec<Outcome> = recovery_inputs(2024, n, 6, 200)
            .iter()
            .map(|(a, g)| check_recovery(a, g))
            .collect();
        v.record(&format!("n={n}, 200 trials"), &summarize(Suite::Recovery, &outcomes));
    }
    v.finish();
}

#[test]
fn dimension_calculus() {
    let mut v = Verdict::new(9, "fiber dimension identities and top strata");
    for n in [2, 3] {
        v.record(&format!("n={n} |a|<=6"), &run(dims_suite(n, 6)));
    }
    v.finish();
}

#[test]
fn semismall_projection() {
    let mut v = Verdict::new(10, "Hecke projection is semismall");
    for n in [2, 3] {
        v.record(&format!("n={n} |a|<=4"), &run(semismall_suite(n, 4)));
    }
    v.finish();
}

/// Coefficients of `Π_θ 1/(1 - x^{dim θ})` over all intervals `θ`, truncated
/// at total degree `max`.
fn euler_product(n: usize, max: i64) -> BTreeMap<Vec<i64>, u64> {
    let mut series: BTreeMap<Vec<i64>, u64> = BTreeMap::new();
    series.insert(vec![0; n], 1);
    for begin in 0..n {
        for len in 1..=max as usize {
            let mut d = vec![0i64; n];
            for j in begin..begin + len {
                d[j % n] += 1;
            }
            // multiply by 1 + x^d + x^{2d} + ...
            let mut next = series.clone();
            for (key, &c) in &series {
                let mut k = key.clone();
                loop {
                    for (a, b) in k.iter_mut().zip(&d) {
                        *a += b;
                    }
                    if k.iter().sum::<i64>() > max {
                        break;
                    }
                    *next.entry(k.clone()).or_insert(0) += c;
                }
            }
            series = next;
        }
    }
    series
}

#[test]
fn weight_space_counts() {
    let mut v = Verdict::new(11, "|FK(a)| equals the Euler product coefficients");
    for n in [2u32, 3, 4] {
        let series = euler_product(n as usize, 8);
        let mut bad = Vec::new();
        for alpha in DimVec::all_up_to_norm(n, 8) {
            let count = enumerate_kostant(&alpha).len() as u64;
            let expected = series.get(alpha.entries()).copied().unwrap_or(0);
            if count != expected {
                bad.push(format!("{alpha}: {count} vs {expected}"));
            }
        }
        v.expect(bad.is_empty(), format!("n={n} |a|<=8: {} mismatches {}", bad.len(), bad.join(" ")));
    }
    v.finish();
}

#[test]
fn reports_are_deterministic() {
    let mut v = Verdict::new(12, "repeated and multi-worker runs give identical reports");
    for n in [2, 3] {
        let mut config = RunConfig::new(n, default_grid(n), 3);
        config.suites = vec![
            Suite::Serre,
            Suite::CommLemmas,
            Suite::Crosscheck,
            Suite::Semismall,
            Suite::Dims,
            Suite::Recovery,
        ];
        config.trials = 40;
        config.seed = 99;
        let mut outputs = Vec::new();
        for workers in [1, 1, 4, 4] {
            config.workers = workers;
            let report = run_suites(&config).unwrap();
            for f in [Format::Json, Format::Csv, Format::Text] {
                outputs.push((workers, f, report.render(f).unwrap()));
            }
        }
        let same = outputs.iter().all(|(_, f, s)| {
            let first = &outputs.iter().find(|(_, g, _)| g == f).unwrap().2;
            s == first
        });
        v.expect(same, format!("n={n}: {} reports compared", outputs.len()));
    }
    v.finish();
}
