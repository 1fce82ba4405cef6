//! Verification suites.
//!
//! A suite is a list of independent [`Task`]s in a canonical order. Tasks
//! can run in any order or in parallel; summaries are assembled by task
//! index, so the result does not depend on scheduling.

use alloc::boxed::Box;
use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::heis::{full_cycles, heis_a, heis_a0, poly_p, zeta, RankPair};
use crate::linalg::Matrix;
use crate::module::{
    chevalley, eps_from_operator, eps_matrix, phi_from_operator, phi_matrix, Generator, ModuleParams,
};
use crate::op::{first_difference_on, LinOp};
use crate::partition::{enumerate_kostant, enumerate_multipartitions, kostant_counts, KostantPartition};
use crate::poly::Polynomial;
use crate::raiz::{Raiz, Residue};
use crate::rational::Q;
use crate::rep::{partition_from_rep, NilpotentRep};
use crate::strata::{dim_pi_fiber, dim_simple_fiber, dim_step_fiber, dim_stratum, dim_x, verify_semismall};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Serre,
    CommLemmas,
    Crosscheck,
    Heisenberg,
    Pn,
    Intertwine,
    Semismall,
    Dims,
    Recovery,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Serre,
        Suite::CommLemmas,
        Suite::Crosscheck,
        Suite::Heisenberg,
        Suite::Pn,
        Suite::Intertwine,
        Suite::Semismall,
        Suite::Dims,
        Suite::Recovery,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Serre => "serre",
            Suite::CommLemmas => "commlemmas",
            Suite::Crosscheck => "crosscheck",
            Suite::Heisenberg => "heisenberg",
            Suite::Pn => "pn",
            Suite::Intertwine => "intertwine",
            Suite::Semismall => "semismall",
            Suite::Dims => "dims",
            Suite::Recovery => "recovery",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Suite> {
        Suite::ALL
            .into_iter()
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

/// Where and how a check failed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub relation: String,
    pub alpha: Option<DimVec>,
    pub monomial: Option<String>,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    /// Number of elementary comparisons made.
    pub checked: u64,
    /// At most one witness per relation covered by the task.
    pub failures: Vec<Witness>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

type Job = Box<dyn Fn() -> Outcome + Send + Sync>;

pub struct Task {
    pub suite: Suite,
    pub label: String,
    job: Job,
}

impl Task {
    pub fn new(suite: Suite, label: String, job: impl Fn() -> Outcome + Send + Sync + 'static) -> Task {
        Task {
            suite,
            label,
            job: Box::new(job),
        }
    }

    pub fn run(&self) -> Outcome {
        (self.job)()
    }
}

impl fmt::Debug for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Task({}: {})", self.suite, self.label)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub tasks: u64,
    pub checked: u64,
    pub failed_tasks: u64,
    /// Relations with at least one failure and the number of failing tasks,
    /// in order of first appearance.
    pub failing_relations: Vec<(String, u64)>,
    pub first_failure: Option<Witness>,
}

impl SuiteSummary {
    pub fn passed(&self) -> bool {
        self.failed_tasks == 0
    }
}

/// Folds outcomes, given in task order, into a summary.
pub fn summarize(suite: Suite, outcomes: &[Outcome]) -> SuiteSummary {
    let mut s = SuiteSummary {
        suite,
        tasks: outcomes.len() as u64,
        checked: 0,
        failed_tasks: 0,
        failing_relations: Vec::new(),
        first_failure: None,
    };
    let mut index: BTreeMap<String, usize> = BTreeMap::new();
    for o in outcomes {
        s.checked += o.checked;
        if o.passed() {
            continue;
        }
        s.failed_tasks += 1;
        if s.first_failure.is_none() {
            s.first_failure = Some(o.failures[0].clone());
        }
        for w in &o.failures {
            match index.get(&w.relation) {
                Some(&k) => s.failing_relations[k].1 += 1,
                None => {
                    index.insert(w.relation.clone(), s.failing_relations.len());
                    s.failing_relations.push((w.relation.clone(), 1));
                }
            }
        }
    }
    s
}

pub fn run_sequential(tasks: &[Task]) -> Vec<Outcome> {
    tasks.iter().map(Task::run).collect()
}

type Basis = Arc<Vec<KostantPartition>>;

fn bases(alphas: &[DimVec]) -> Vec<(DimVec, Basis)> {
    alphas.iter().map(|a| (a.clone(), Arc::new(enumerate_kostant(a)))).collect()
}

/// Compares `lhs` and `rhs` on every monomial of `basis`.
fn compare(relation: &str, lhs: &LinOp, rhs: &LinOp, alpha: &DimVec, basis: &[KostantPartition]) -> Outcome {
    let failures = match first_difference_on(lhs, rhs, basis) {
        None => Vec::new(),
        Some(d) => alloc::vec![Witness {
            relation: relation.to_string(),
            alpha: Some(alpha.clone()),
            monomial: Some(d.monomial.to_string()),
            expected: d.right.to_string(),
            actual: d.left.to_string(),
        }],
    };
    Outcome {
        checked: basis.len() as u64,
        failures,
    }
}

/// A named operator identity `lhs = rhs`.
#[derive(Clone)]
pub struct Identity {
    pub name: String,
    pub lhs: LinOp,
    pub rhs: LinOp,
}

fn identity(name: String, lhs: LinOp, rhs: LinOp) -> Identity {
    Identity { name, lhs, rhs }
}

fn zero_like(op: &LinOp) -> LinOp {
    LinOp::zero(op.rank(), op.shift().cloned().unwrap_or_else(|| DimVec::zero(op.rank())))
}

/// One task per (identity, piece), identity-major.
fn identity_tasks(suite: Suite, ids: Vec<Identity>, alphas: &[DimVec]) -> Vec<Task> {
    let pieces = bases(alphas);
    let mut tasks = Vec::with_capacity(ids.len() * pieces.len());
    for id in ids {
        let id = Arc::new(id);
        for (alpha, basis) in &pieces {
            let (id, alpha, basis) = (id.clone(), alpha.clone(), basis.clone());
            tasks.push(Task::new(suite, format!("{} on {}", id.name, alpha), move || {
                compare(&id.name, &id.lhs, &id.rhs, &alpha, &basis)
            }));
        }
    }
    tasks
}

/// `a_ij = ⟨i', α_j⟩`.
pub fn cartan(i: Residue, j: Residue) -> i64 {
    DimVec::simple(i.rank(), j.value()).cartan_pairing(i.value())
}

/// The defining relations of `ŝl_n` for the operators on `N`.
///
/// Transposition reverses products, so the dual operators satisfy the
/// relations with `[h_i, e_j] = -a_ij e_j` and `[h_i, f_j] = a_ij f_j`; the
/// Serre relations and `[e_i, f_j] = δ_ij h_i` keep their form.
pub fn serre_identities(params: &ModuleParams) -> Vec<Identity> {
    let n = params.rank();
    let g = |k, i| chevalley(k, i, params);
    let mut out = Vec::new();
    for i in Residue::all(n) {
        for j in Residue::all(n) {
            let a = cartan(i, j);
            let (ei, ej, fi, fj, hi, hj) = (
                g(Generator::E, i),
                g(Generator::E, j),
                g(Generator::F, i),
                g(Generator::F, j),
                g(Generator::H, i),
                g(Generator::H, j),
            );
            if i != j {
                if a == 0 {
                    let l = ei.commutator(&ej);
                    out.push(identity(format!("[e{i},e{j}]=0"), l.clone(), zero_like(&l)));
                    let l = fi.commutator(&fj);
                    out.push(identity(format!("[f{i},f{j}]=0"), l.clone(), zero_like(&l)));
                } else {
                    let k = (1 - a) as u32;
                    let l = ei.ad_pow(k, &ej);
                    out.push(identity(format!("ad(e{i})^{k}(e{j})=0"), l.clone(), zero_like(&l)));
                    let l = fi.ad_pow(k, &fj);
                    out.push(identity(format!("ad(f{i})^{k}(f{j})=0"), l.clone(), zero_like(&l)));
                }
            }
            let l = ei.commutator(&fj);
            if i == j {
                out.push(identity(format!("[e{i},f{j}]=h{i}"), l, hi.clone()));
            } else {
                out.push(identity(format!("[e{i},f{j}]=0"), l.clone(), zero_like(&l)));
            }
            out.push(identity(format!("[h{i},e{j}]={}e{j}", -a), hi.commutator(&ej), ej.scale(Q::from_int(-a))));
            out.push(identity(format!("[h{i},f{j}]={}f{j}", a), hi.commutator(&fj), fj.scale(Q::from_int(a))));
            if i < j {
                let l = hi.commutator(&hj);
                out.push(identity(format!("[h{i},h{j}]=0"), l.clone(), zero_like(&l)));
            }
        }
    }
    let sum = LinOp::linear_combination(n, Residue::all(n).map(|i| (Q::ONE, g(Generator::H, i))));
    out.push(identity("sum(h)=c0".into(), sum, LinOp::scalar(n, params.c0())));
    out
}

/// `h_i` acts on the piece of dimension `α` as `c_i + ⟨i', α⟩`.
fn h_eigen_tasks(params: &ModuleParams, alphas: &[DimVec]) -> Vec<Task> {
    let n = params.rank();
    let mut tasks = Vec::new();
    for (alpha, basis) in bases(alphas) {
        for i in Residue::all(n) {
            let h = chevalley(Generator::H, i, params);
            let scalar = LinOp::scalar(n, params.c(i) + Q::from_int(alpha.cartan_pairing(i.value())));
            let (alpha, basis) = (alpha.clone(), basis.clone());
            let name = format!("h{i}=c{i}+<{i}',a>");
            tasks.push(Task::new(Suite::Serre, format!("{name} on {alpha}"), move || {
                compare(&name, &h, &scalar, &alpha, &basis)
            }));
        }
    }
    tasks
}

pub fn serre_suite(params: &ModuleParams, max_degree: i64) -> Vec<Task> {
    let alphas = DimVec::all_up_to_norm(params.rank(), max_degree);
    let mut tasks = identity_tasks(Suite::Serre, serre_identities(params), &alphas);
    tasks.extend(h_eigen_tasks(params, &alphas));
    tasks
}

fn smile_or_unit(a: &Raiz, b: &Raiz) -> Option<Raiz> {
    a.smile(b).ok()
}

/// The commutator lemmas behind the relations, stated literally, plus the
/// corrected forms of the statements that fail under the unit convention.
/// Raiz range over all `θ` with `len θ <= max_len`.
pub fn comm_identities(params: &ModuleParams, max_len: u32) -> Vec<Identity> {
    let n = params.rank();
    let raiz: Vec<Raiz> = (0..n)
        .flat_map(|end| (1..=max_len).map(move |len| Raiz::from_end(n, end, len)))
        .collect::<alloc::collections::BTreeSet<_>>()
        .into_iter()
        .collect();
    let simple = |i: Residue| Raiz::simple(n, i.value());
    let opt = |t: Option<Raiz>, f: fn(Raiz) -> LinOp| t.map(f);
    let mut out = Vec::new();
    let zero = |op: &LinOp| zero_like(op);
    let diff = |a: Option<LinOp>, b: Option<LinOp>, like: &LinOp| match (a, b) {
        (Some(a), Some(b)) => &a - &b,
        (Some(a), None) => a,
        (None, Some(b)) => -&b,
        (None, None) => zero(like),
    };

    for t1 in &raiz {
        for t2 in &raiz {
            let s12 = smile_or_unit(t1, t2);
            let s21 = smile_or_unit(t2, t1);
            let l = LinOp::etilde(*t1).commutator(&LinOp::etilde(*t2));
            let r = diff(opt(s12, LinOp::etilde), opt(s21, LinOp::etilde), &l);
            out.push(identity(format!("comm1 [Et({t1}),Et({t2})]=Et({t1}^{t2})-Et({t2}^{t1})"), l, r));
            let l = LinOp::e(*t1).commutator(&LinOp::e(*t2));
            let r = diff(opt(s21, LinOp::e), opt(s12, LinOp::e), &l);
            out.push(identity(format!("comm1 [E({t1}),E({t2})]=E({t2}^{t1})-E({t1}^{t2})"), l, r));
            let l = LinOp::b(*t1).commutator(&LinOp::b(*t2));
            let r = diff(opt(s12, LinOp::b), opt(s21, LinOp::b), &l);
            out.push(identity(format!("comm1 [B({t1}),B({t2})]=B({t1}^{t2})-B({t2}^{t1})"), l, r));
            let l = LinOp::e(*t1).commutator(&LinOp::b(*t2));
            out.push(identity(format!("comm3 [E({t1}),B({t2})]=0"), l.clone(), zero(&l)));
            let l = LinOp::e(*t1).commutator(&LinOp::x(*t2));
            let r = opt(s21, LinOp::x).unwrap_or_else(|| zero(&l));
            out.push(identity(format!("comm3 [E({t1}),x({t2})]=x({t2}^{t1})"), l, r));
            let l = LinOp::b(*t1).commutator(&LinOp::x(*t2));
            let r = opt(s12, LinOp::x).unwrap_or_else(|| zero(&l));
            out.push(identity(format!("comm3 [B({t1}),x({t2})]=x({t1}^{t2})"), l, r));
        }
    }
    for i in Residue::all(n) {
        for j in Residue::all(n) {
            let l = LinOp::bsum(i).commutator(&LinOp::bsum(j));
            out.push(identity(format!("comm1 [BB{i},BB{j}]=0"), l.clone(), zero(&l)));
        }
        for t in &raiz {
            let l = LinOp::b(*t).commutator(&LinOp::bsum(i));
            let in_e = t.in_e(i);
            let in_b = t.in_b(i.shift(1));
            let r = match (in_e, in_b) {
                (true, false) => LinOp::b(*t),
                (false, true) => -&LinOp::b(*t),
                _ => zero(&l),
            };
            out.push(identity(format!("comm1 [B({t}),BB{i}]"), l, r));
        }
    }
    for i in Residue::all(n) {
        let et = LinOp::etilde(simple(i));
        for j in Residue::all(n) {
            let l = et.commutator(&LinOp::b(simple(j)));
            out.push(identity(format!("comm2 [Et({i}),B({j})]=0"), l.clone(), zero(&l)));
            let r = if j == i.shift(-1) {
                LinOp::xd(simple(j), simple(i))
            } else {
                zero(&l)
            };
            out.push(identity(format!("comm2 [Et({i}),B({j})]=d(j,i-1)x({j})d({i}) (corrected)"), l, r));

            let l = et.commutator(&LinOp::bsum(j));
            out.push(identity(format!("comm2 [Et({i}),BB{j}]=0"), l.clone(), zero(&l)));
            let r = if j == i.shift(-1) { LinOp::deriv(simple(i)) } else { zero(&l) };
            out.push(identity(format!("comm2 [Et({i}),BB{j}]=d(j,i-1)d({i}) (corrected)"), l, r));

            let l = et.commutator(&LinOp::e(simple(j)));
            let esums = &LinOp::esum(i) - &LinOp::esum(i.shift(1));
            let r = if i == j { esums.clone() } else { zero(&l) };
            out.push(identity(format!("comm2 [Et({i}),E({j})]=d(i,j)(EE{i}-EE{})", i.shift(1)), l.clone(), r));
            let r = if i == j {
                &esums + &LinOp::xd(simple(i), simple(i))
            } else {
                zero(&l)
            };
            out.push(identity(
                format!("comm2 [Et({i}),E({j})]=d(i,j)(EE{i}-EE{}+x({i})d({i})) (corrected)", i.shift(1)),
                l,
                r,
            ));

            let l = et.commutator(&LinOp::x(simple(j)));
            let r = if i == j { LinOp::identity(n) } else { zero(&l) };
            out.push(identity(format!("comm2 [Et({i}),x({j})]=d(i,j)"), l, r));
        }
    }
    for i in Residue::all(n) {
        let delta = LinOp::delta(i, params.c(i));
        for t in &raiz {
            let l = LinOp::bsum(i).commutator(&LinOp::x(*t));
            let r = if t.in_b(i.shift(1)) { LinOp::x(*t) } else { zero(&l) };
            out.push(identity(format!("comm3 [BB{i},x({t})]"), l, r));
            let l = LinOp::e(*t).commutator(&LinOp::bsum(i));
            out.push(identity(format!("comm3 [E({t}),BB{i}]=0"), l.clone(), zero(&l)));

            let l = delta.commutator(&LinOp::e(*t));
            out.push(identity(format!("comm4 [D{i},E({t})]=0"), l.clone(), zero(&l)));
            let l = delta.commutator(&LinOp::etilde(*t));
            out.push(identity(format!("comm4 [D{i},Et({t})]=0"), l.clone(), zero(&l)));
            let sign = t.in_b(i.shift(1)) as i64 - t.in_b(i) as i64;
            let r = LinOp::deriv(*t).scale(Q::from_int(sign));
            out.push(identity(format!("comm4 [D{i},Et({t})]=([{t} in B{}]-[{t} in B{i}])d({t}) (corrected)", i.shift(1)), l, r));
            let l = delta.commutator(&LinOp::b(*t));
            let r = LinOp::b(*t).scale(Q::from_int(t.dim().cartan_pairing(i.value())));
            out.push(identity(format!("comm4 [D{i},B({t})]=<{i}',dim>B({t})"), l, r));
            let l = delta.commutator(&LinOp::x(*t));
            let r = if t.in_b(i) {
                LinOp::x(*t)
            } else if t.in_b(i.shift(1)) {
                -&LinOp::x(*t)
            } else {
                zero(&l)
            };
            out.push(identity(format!("comm4 [D{i},x({t})]"), l, r));
        }
        for j in Residue::all(n) {
            let l = delta.commutator(&LinOp::delta(j, params.c(j)));
            out.push(identity(format!("comm4 [D{i},D{j}]=0"), l.clone(), zero(&l)));
        }
    }
    for p in 1..=(max_len / n).max(1) {
        let cycles: Vec<Raiz> = full_cycles(n, p).collect();
        for i in Residue::all(n) {
            let s = simple(i);
            let t1 = Raiz::from_end(n, i.shift(-1).value(), p * n - 1);
            let t2 = Raiz::from_end(n, i.value(), p * n);
            let t3 = Raiz::from_end(n, i.shift(-1).value(), p * n);
            let d1 = LinOp::deriv(t1);
            let xd2 = LinOp::x(s).compose(&LinOp::deriv(t2));
            let xd3 = LinOp::x(s).compose(&LinOp::deriv(t3));
            let sum = |with: &LinOp| {
                LinOp::linear_combination(n, cycles.iter().map(|t| (Q::ONE, LinOp::etilde(*t).commutator(with))))
            };
            out.push(identity(format!("commagain p={p} sum[Et,B({i})]=d({t1})+x({i})d({t2})"), sum(&LinOp::b(s)), &d1 + &xd2));
            out.push(identity(format!("commagain p={p} sum[Et,E({i})]=d({t1})+x({i})d({t3})"), sum(&LinOp::e(s)), &d1 + &xd3));
            let xdelta = LinOp::x(s).compose(&LinOp::delta(i, params.c(i)));
            out.push(identity(format!("commagain p={p} sum[Et,x({i})D{i}]=x({i})(d({t3})-d({t2}))"), sum(&xdelta), &xd3 - &xd2));
        }
    }
    out
}

pub fn commlemmas_suite(params: &ModuleParams, max_degree: i64) -> Vec<Task> {
    let alphas = DimVec::all_up_to_norm(params.rank(), max_degree);
    identity_tasks(Suite::CommLemmas, comm_identities(params, max_degree.max(1) as u32), &alphas)
}

fn first_matrix_difference(a: &Matrix, b: &Matrix) -> Option<(usize, usize)> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Some((a.rows().min(b.rows()), a.cols().min(b.cols())));
    }
    (0..a.rows())
        .flat_map(|r| (0..a.cols()).map(move |c| (r, c)))
        .find(|&(r, c)| a[(r, c)] != b[(r, c)])
}

/// The matrices of `e_i` and `f_i` on `M` from the geometric coefficients
/// against the transposed operator matrices, entry by entry.
pub fn crosscheck_suite(params: &ModuleParams, max_degree: i64) -> Vec<Task> {
    let n = params.rank();
    let mut tasks = Vec::new();
    for alpha in DimVec::all_up_to_norm(n, max_degree) {
        for i in Residue::all(n) {
            for which in ["eps", "phi"] {
                let (alpha, params) = (alpha.clone(), params.clone());
                tasks.push(Task::new(Suite::Crosscheck, format!("{which}_{i} on {alpha}"), move || {
                    let (geo, op) = if which == "eps" {
                        (eps_matrix(&alpha, i), eps_from_operator(&alpha, i, &params))
                    } else {
                        (phi_matrix(&alpha, i, &params), phi_from_operator(&alpha, i, &params))
                    };
                    let up = &alpha + &DimVec::simple(n, i.value());
                    let (rows, cols) = if which == "eps" {
                        (enumerate_kostant(&up), enumerate_kostant(&alpha))
                    } else {
                        (enumerate_kostant(&alpha), enumerate_kostant(&up))
                    };
                    let failures = match first_matrix_difference(&geo, &op) {
                        None => Vec::new(),
                        Some((r, c)) => {
                            let get = |m: &Matrix| {
                                if r < m.rows() && c < m.cols() {
                                    m[(r, c)].to_string()
                                } else {
                                    format!("shape {}x{}", m.rows(), m.cols())
                                }
                            };
                            alloc::vec![Witness {
                                relation: format!("{which}_{i} = transpose of operator"),
                                alpha: Some(alpha.clone()),
                                monomial: Some(format!(
                                    "row {}, col {}",
                                    rows.get(r).map(|a| a.to_string()).unwrap_or_default(),
                                    cols.get(c).map(|a| a.to_string()).unwrap_or_default()
                                )),
                                expected: get(&geo),
                                actual: get(&op),
                            }]
                        }
                    };
                    Outcome {
                        checked: (geo.rows() * geo.cols()) as u64,
                        failures,
                    }
                }));
            }
        }
    }
    tasks
}

fn heis(p: i64, params: &ModuleParams) -> LinOp {
    if p == 0 {
        heis_a0(params)
    } else {
        heis_a(p, params)
    }
}

pub fn heisenberg_identities(params: &ModuleParams, pmax: i64) -> Vec<Identity> {
    let n = params.rank();
    let nc0 = params.c0() * Q::from(n);
    let mut out = Vec::new();
    for p in -pmax..=pmax {
        for q in p + 1..=pmax {
            let l = heis(p, params).commutator(&heis(q, params));
            let r = if p == -q {
                LinOp::scalar(n, nc0 * Q::from_int(p))
            } else {
                zero_like(&l)
            };
            out.push(identity(format!("[a{p},a{q}]={}", if p == -q { format!("{p}*n*c0") } else { "0".into() }), l, r));
        }
    }
    for p in (-pmax..=pmax).filter(|&p| p != 0) {
        for i in Residue::all(n) {
            for kind in [Generator::E, Generator::F] {
                let l = heis(p, params).commutator(&chevalley(kind, i, params));
                out.push(identity(format!("[a{p},{}{i}]=0", kind.as_str()), l.clone(), zero_like(&l)));
            }
        }
    }
    out
}

pub fn heisenberg_suite(params: &ModuleParams, max_degree: i64, pmax: i64) -> Vec<Task> {
    let alphas = DimVec::all_up_to_norm(params.rank(), max_degree);
    identity_tasks(Suite::Heisenberg, heisenberg_identities(params, pmax), &alphas)
}

fn poly_outcome(relation: String, alpha: Option<DimVec>, actual: Polynomial, expected: Polynomial) -> Outcome {
    let failures = if actual == expected {
        Vec::new()
    } else {
        alloc::vec![Witness {
            relation,
            alpha,
            monomial: None,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }]
    };
    Outcome { checked: 1, failures }
}

/// `Ẽ(θ) P_n = [dim θ = α_n]` for all `dim θ <= α_n`, and `f'_i P_n = 0`.
pub fn pn_suite(n_max: u32) -> Vec<Task> {
    let mut tasks = Vec::new();
    for n in 2..=n_max {
        let pn = Arc::new(poly_p(n));
        let zero_params = ModuleParams::new(alloc::vec![Q::ZERO; n as usize]).unwrap();
        for end in 0..n {
            for len in 1..=n {
                let t = Raiz::from_end(n, end, len);
                let pn = pn.clone();
                tasks.push(Task::new(Suite::Pn, format!("Et({t}) P{n}"), move || {
                    let expected = if len == n { Polynomial::one(n) } else { Polynomial::zero(n) };
                    poly_outcome(format!("Et({t}) P{n}"), Some(DimVec::delta(n)), LinOp::etilde(t).apply(&pn), expected)
                }));
            }
        }
        for i in Residue::all(n) {
            let (pn, op) = (pn.clone(), chevalley(Generator::FPrime, i, &zero_params));
            tasks.push(Task::new(Suite::Pn, format!("f'{i} P{n}"), move || {
                poly_outcome(format!("f'{i} P{n}=0"), Some(DimVec::delta(n)), op.apply(&pn), Polynomial::zero(n))
            }));
        }
    }
    tasks
}

/// `ξ ζ(P) = ζ(μ(ξ) P)` for every rank-`kn` monomial with `dim <= cycles·α_{kn}`,
/// for `ξ ∈ {e_i, h_i, f_i}` and `ξ = Ẽ(θ)` with `len θ <= kn`.
pub fn intertwine_suite(params: &ModuleParams, k: u32, cycles: i64) -> Vec<Task> {
    let n = params.rank();
    let pair = RankPair::new(n, k).unwrap();
    let big = pair.big();
    let mut ops: Vec<(String, LinOp, LinOp)> = Vec::new();
    for i in Residue::all(n) {
        for kind in [Generator::E, Generator::H, Generator::F] {
            ops.push((
                format!("{}{i}", kind.as_str()),
                chevalley(kind, i, params),
                pair.mu_chevalley(kind, i, params),
            ));
        }
    }
    for end in 0..n {
        for len in 1..=big {
            let t = Raiz::from_end(n, end, len);
            ops.push((format!("Et({t})"), LinOp::etilde(t), pair.mu_etilde(&t)));
        }
    }
    let ops = Arc::new(ops);
    let bound = DimVec::delta(big).scale(cycles);
    bound
        .all_below()
        .into_iter()
        .map(|alpha| {
            let ops = ops.clone();
            Task::new(Suite::Intertwine, format!("(n,k)=({n},{k}) on {alpha}"), move || {
                let mut out = Outcome::default();
                let basis = enumerate_kostant(&alpha);
                for (name, small, lifted) in ops.iter() {
                    for a in &basis {
                        out.checked += 1;
                        let x = Polynomial::monomial(a.clone());
                        let lhs = small.apply(&zeta(&x, n));
                        let rhs = zeta(&lifted.apply(&x), n);
                        if lhs != rhs {
                            out.failures.push(Witness {
                                relation: format!("(n,k)=({n},{k}) {name}"),
                                alpha: Some(alpha.clone()),
                                monomial: Some(a.to_string()),
                                expected: rhs.to_string(),
                                actual: lhs.to_string(),
                            });
                            break;
                        }
                    }
                }
                out
            })
        })
        .collect()
}

pub fn semismall_suite(n: u32, max_degree: i64) -> Vec<Task> {
    let mut tasks = Vec::new();
    for alpha in DimVec::all_up_to_norm(n, max_degree) {
        for i in Residue::all(n) {
            let alpha = alpha.clone();
            tasks.push(Task::new(Suite::Semismall, format!("q_{i} over {alpha}"), move || {
                let report = verify_semismall(&alpha, i);
                let (checked, failure) = match report {
                    Ok(r) => (r.rows.len() as u64, r.failure),
                    Err(e) => (0, Some(e.to_string())),
                };
                Outcome {
                    checked,
                    failures: failure
                        .map(|f| Witness {
                            relation: format!("semismall q_{i}"),
                            alpha: Some(alpha.clone()),
                            monomial: None,
                            expected: "codim >= 2r and preimage dim |a|+1".into(),
                            actual: f,
                        })
                        .into_iter()
                        .collect(),
                }
            }));
        }
    }
    tasks
}

fn dims_piece(alpha: &DimVec, series_count: u64) -> Outcome {
    let n = alpha.rank();
    let mut out = Outcome::default();
    let mut fail = |relation: &str, monomial: Option<String>, expected: String, actual: String| {
        out.failures.push(Witness {
            relation: relation.into(),
            alpha: Some(alpha.clone()),
            monomial,
            expected,
            actual,
        })
    };
    let fk = enumerate_kostant(alpha);
    let mut checked = 1;
    if fk.len() as u64 != series_count {
        fail("|FK| = series coefficient", None, series_count.to_string(), fk.len().to_string());
    }
    let mut first_sum = true;
    let mut first_step = true;
    for k in fk.iter().filter(|k| !k.is_empty()) {
        let simple = dim_simple_fiber(k).unwrap();
        for s in 0..n as i64 {
            checked += 2;
            let x = dim_x(k, s);
            let pi = dim_pi_fiber(k, s);
            if x + pi != simple && first_sum {
                first_sum = false;
                fail("dimX+dimPi=dimF", Some(format!("{k}, s={s}")), simple.to_string(), (x + pi).to_string());
            }
            let low = s - alpha.norm() - 1;
            let steps: i64 = (low..=s).map(|t| dim_step_fiber(k, s, t).unwrap()).sum();
            if steps != x && first_step {
                first_step = false;
                fail("sum(step)=dimX", Some(format!("{k}, s={s}")), x.to_string(), steps.to_string());
            }
        }
    }
    let strata = enumerate_multipartitions(alpha);
    checked += strata.len() as u64;
    let top: Vec<_> = strata
        .iter()
        .filter(|m| dim_stratum(m).dim == alpha.norm())
        .collect();
    let max = strata.iter().map(|m| dim_stratum(m).dim).max().unwrap_or(0);
    if max != alpha.norm() {
        fail("max dim K_mu = |a|", None, alpha.norm().to_string(), max.to_string());
    }
    if !top.iter().all(|m| m.is_simple()) || top.len() != fk.len() {
        fail(
            "top strata = FK",
            None,
            format!("{} simple", fk.len()),
            format!("{} top, {} simple", top.len(), top.iter().filter(|m| m.is_simple()).count()),
        );
    }
    out.checked = checked;
    out
}

/// Dimension identities for every `κ ∈ FK(α)` and every `s` in one period,
/// top strata, and `|FK(α)|` against the Euler product.
pub fn dims_suite(n: u32, max_degree: i64) -> Vec<Task> {
    let counts = Arc::new(kostant_counts(n, max_degree));
    DimVec::all_up_to_norm(n, max_degree)
        .into_iter()
        .map(|alpha| {
            let counts = counts.clone();
            Task::new(Suite::Dims, format!("dims on {alpha}"), move || {
                dims_piece(&alpha, counts.get(&alpha).copied().unwrap_or(0))
            })
        })
        .collect()
}

/// Builds the direct sum for `a`, conjugates it by `g` and recovers the
/// partition from ranks alone.
pub fn check_recovery(a: &KostantPartition, g: &[Matrix]) -> Outcome {
    let rep = NilpotentRep::direct_sum(a);
    let result = rep.conjugate(g).and_then(|r| partition_from_rep(&r));
    let failures = match result {
        Ok(b) if &b == a => Vec::new(),
        other => alloc::vec![Witness {
            relation: "partition_from_rep".into(),
            alpha: Some(a.dim()),
            monomial: None,
            expected: a.to_string(),
            actual: match other {
                Ok(b) => b.to_string(),
                Err(e) => e.to_string(),
            },
        }],
    };
    Outcome { checked: 1, failures }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize) -> ModuleParams {
        ModuleParams::from_geometry(0, 1, &alloc::vec![0; n]).unwrap()
    }

    fn run(tasks: &[Task]) -> SuiteSummary {
        summarize(tasks[0].suite, &run_sequential(tasks))
    }

    #[test]
    fn serre_small() {
        let s = run(&serre_suite(&params(3), 2));
        assert!(s.passed(), "{:?}", s.first_failure);
        let s = run(&serre_suite(&params(2), 2));
        assert!(s.passed(), "{:?}", s.first_failure);
    }

    #[test]
    fn degree_zero_pairing() {
        let p = ModuleParams::new(alloc::vec![Q::new(5, 2), Q::from_int(-1), Q::ZERO]).unwrap();
        let i = Residue::new(3, 0).unwrap();
        let comm = chevalley(Generator::E, i, &p).commutator(&chevalley(Generator::F, i, &p));
        assert_eq!(comm.apply(&Polynomial::one(3)), Polynomial::constant(3, p.c(i)));
    }

    #[test]
    fn summary_keeps_first_failure_in_order() {
        let w = |r: &str| Witness {
            relation: r.into(),
            alpha: None,
            monomial: None,
            expected: "a".into(),
            actual: "b".into(),
        };
        let outcomes = alloc::vec![
            Outcome { checked: 2, failures: Vec::new() },
            Outcome { checked: 1, failures: alloc::vec![w("x"), w("y")] },
            Outcome { checked: 1, failures: alloc::vec![w("y")] },
        ];
        let s = summarize(Suite::Serre, &outcomes);
        assert_eq!(s.checked, 4);
        assert_eq!(s.failed_tasks, 2);
        assert_eq!(s.first_failure.unwrap().relation, "x");
        assert_eq!(s.failing_relations, alloc::vec![("x".into(), 1), ("y".into(), 2)]);
    }

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.as_str().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }
}
