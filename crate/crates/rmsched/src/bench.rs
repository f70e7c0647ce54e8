//! Experiment harness: deterministic random instance generation, suite
//! configuration, solver dispatch, per-run reports and CSV output.
//!
//! A suite is described by a JSON [`SuiteConfig`]: instance sources (files
//! or seeded generator specs), a list of algorithms with their parameters,
//! an oracle toggle and an output path. [`run_suite`] solves every
//! (instance, algorithm) pair, verifies feasibility of each emitted
//! schedule, compares against the exact oracle when enabled, checks each
//! algorithm's proven approximation bound, and renders one CSV row per pair.
//!
//! Everything is deterministic by default: generators are seeded, report
//! rows are sorted, and the `runtime_ms` column is zero unless wall-clock
//! timing is explicitly requested (timings are the one intentionally
//! non-reproducible quantity).

use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::exact::{
    optimal_assignment_dp_capped, optimal_ordering_bruteforce_capped, DEFAULT_DP_CAP,
    DEFAULT_ORDERING_CAP,
};
use crate::instance::{
    is_feasible, objective_assignment, simulate_ordering, validate, Assignment, Instance,
    Ordering,
};
use crate::io::load_instance;
use crate::rational::{decimal6, parse_fraction, rfrac, rint, Rat};
use crate::robust::{robust_schedule, RobustInput};
use crate::unit_req::spt_schedule;
use crate::zero_p::{
    constant_q_ptas_with_budget, general_ptas_with_budget, greedy_schedule, shift_and_cover,
    DEFAULT_CANDIDATE_BUDGET,
};

/// Environment variable overriding the enumeration budget (candidate count)
/// used by the enumerating solvers.
pub const BUDGET_ENV: &str = "RMSCHED_BUDGET";

/// Environment variable overriding the oracle size caps (both the dynamic
/// program and the ordering brute force).
pub const ORACLE_CAP_ENV: &str = "RMSCHED_ORACLE_CAP";

/// Size and work limits applied to oracles and enumerating solvers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Job cap for the assignment dynamic program oracle.
    pub dp_cap: usize,
    /// Job cap for the ordering brute-force oracle.
    pub ordering_cap: usize,
    /// Candidate budget for enumerating solvers.
    pub budget: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            dp_cap: DEFAULT_DP_CAP,
            ordering_cap: DEFAULT_ORDERING_CAP,
            budget: DEFAULT_CANDIDATE_BUDGET,
        }
    }
}

/// Builds [`Limits`] from the environment: [`BUDGET_ENV`] replaces the
/// candidate budget, [`ORACLE_CAP_ENV`] replaces both oracle caps.
pub fn limits_from_env() -> Result<Limits, Error> {
    let mut limits = Limits::default();
    if let Ok(text) = std::env::var(BUDGET_ENV) {
        limits.budget = text
            .parse()
            .map_err(|_| Error::Parse(format!("{BUDGET_ENV}: invalid budget {text:?}")))?;
    }
    if let Ok(text) = std::env::var(ORACLE_CAP_ENV) {
        let cap: usize = text
            .parse()
            .map_err(|_| Error::Parse(format!("{ORACLE_CAP_ENV}: invalid cap {text:?}")))?;
        limits.dp_cap = cap;
        limits.ordering_cap = cap;
    }
    Ok(limits)
}

/// Specification of one deterministic pseudo-random instance.
///
/// All ranges are inclusive `[lo, hi]` pairs. Arrival times are distinct
/// integers: the first is pinned to 0, the rest are drawn from the time
/// range (its lower bound raised to 1). Processing times share the time
/// range unless `zero_p` is set; amounts are drawn from the requirement
/// range and then rescaled so that total supply equals total requirement —
/// the excess is trimmed from the back, a deficit is added to the last
/// arrival.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RandomSpec {
    /// Identifier used in reports; defaults to `random-<seed>`.
    #[serde(default)]
    pub id: String,
    pub seed: u64,
    pub n: usize,
    pub q: usize,
    /// Weight range `[lo, hi]`; defaults to `[1, 9]`.
    #[serde(default = "default_small_range")]
    pub weights: (u64, u64),
    /// Requirement range `[lo, hi]`; also the range of raw arrival amounts.
    /// Defaults to `[1, 9]`.
    #[serde(default = "default_small_range")]
    pub reqs: (u64, u64),
    /// Arrival-time range `[lo, hi]`; also the processing-time range when
    /// `zero_p` is false. Defaults to `[0, 20]`.
    #[serde(default = "default_time_range")]
    pub times: (u64, u64),
    #[serde(default)]
    pub zero_p: bool,
}

fn default_small_range() -> (u64, u64) {
    (1, 9)
}

fn default_oracle() -> bool {
    true
}

fn default_time_range() -> (u64, u64) {
    (0, 20)
}

impl RandomSpec {
    /// The report identifier: the explicit `id` or `random-<seed>`.
    pub fn label(&self) -> String {
        if self.id.is_empty() {
            format!("random-{}", self.seed)
        } else {
            self.id.clone()
        }
    }
}

fn check_range(name: &str, (lo, hi): (u64, u64)) -> Result<(), Error> {
    if lo > hi {
        return Err(Error::InvalidParameter(format!("{name} range [{lo}, {hi}] is empty")));
    }
    Ok(())
}

/// Generates the instance described by `spec`; the same spec always yields
/// the same instance.
pub fn gen_random(spec: &RandomSpec) -> Result<Instance, Error> {
    if spec.n == 0 || spec.q == 0 {
        return Err(Error::InvalidParameter(format!(
            "need at least one job and one arrival, got n={}, q={}",
            spec.n, spec.q
        )));
    }
    check_range("weight", spec.weights)?;
    check_range("requirement", spec.reqs)?;
    check_range("time", spec.times)?;
    let positive_lo = spec.times.0.max(1);
    let room = (spec.times.1 + 1).saturating_sub(positive_lo);
    if (spec.q as u64).saturating_sub(1) > room {
        return Err(Error::InvalidParameter(format!(
            "time range [{}, {}] cannot hold {} distinct positive arrival times",
            spec.times.0,
            spec.times.1,
            spec.q - 1
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let jobs: Vec<(u64, u64, u64)> = (0..spec.n)
        .map(|_| {
            let p = if spec.zero_p { 0 } else { rng.gen_range(spec.times.0..=spec.times.1) };
            let w = rng.gen_range(spec.weights.0..=spec.weights.1);
            let a = rng.gen_range(spec.reqs.0..=spec.reqs.1);
            (p, w, a)
        })
        .collect();
    let total_requirement: u128 = jobs.iter().map(|&(_, _, a)| u128::from(a)).sum();
    let total_requirement: u64 = total_requirement
        .try_into()
        .map_err(|_| Error::NumericRange("total requirement exceeds the 64-bit range".into()))?;

    let mut times = vec![0u64];
    let mut later = BTreeSet::new();
    while later.len() + 1 < spec.q {
        later.insert(rng.gen_range(positive_lo..=spec.times.1));
    }
    times.extend(later);

    let mut amounts: Vec<u64> =
        (0..spec.q).map(|_| rng.gen_range(spec.reqs.0..=spec.reqs.1)).collect();
    rebalance(&mut amounts, total_requirement)?;

    let arrivals: Vec<(u64, u64)> = times.into_iter().zip(amounts).collect();
    let inst = Instance::new(&jobs, &arrivals);
    debug_assert!(validate(&inst).is_empty());
    Ok(inst)
}

/// Adjusts `amounts` so they sum to `target`: excess is removed from the
/// back (last arrival first), a deficit is added to the last arrival.
fn rebalance(amounts: &mut [u64], target: u64) -> Result<(), Error> {
    let sum: u128 = amounts.iter().map(|&b| u128::from(b)).sum();
    let target = u128::from(target);
    if sum > target {
        let mut excess = sum - target;
        for b in amounts.iter_mut().rev() {
            let take = u128::from(*b).min(excess);
            *b -= take as u64;
            excess -= take;
            if excess == 0 {
                break;
            }
        }
    } else if let Some(last) = amounts.last_mut() {
        let deficit = target - sum;
        *last = u64::try_from(u128::from(*last) + deficit)
            .map_err(|_| Error::NumericRange("rebalanced amount exceeds the 64-bit range".into()))?;
    }
    Ok(())
}

/// The algorithms reachable from suites and the command line.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize, clap::ValueEnum,
)]
#[serde(rename_all = "kebab-case")]
pub enum Algo {
    /// Shortest-processing-time-first simulation (unit requirements).
    Spt,
    /// Weight-threshold greedy for zero processing times.
    Greedy,
    /// Power-of-two arrival shift plus covering-knapsack rounding.
    ShiftCover,
    /// Guessed-subset scheme for a constant number of arrivals.
    PtasQ,
    /// Windowed scheme for arbitrarily many arrivals.
    Ptas,
    /// Arrival-time-oblivious schedule (quantities known, times not).
    Robust,
    /// Exact subset dynamic program (zero processing times).
    ExactDp,
    /// Exact ordering brute force (any processing times).
    ExactPerm,
}

impl Algo {
    /// Canonical kebab-case name, identical in configs, CLI and CSV.
    pub fn name(self) -> &'static str {
        match self {
            Algo::Spt => "spt",
            Algo::Greedy => "greedy",
            Algo::ShiftCover => "shift-cover",
            Algo::PtasQ => "ptas-q",
            Algo::Ptas => "ptas",
            Algo::Robust => "robust",
            Algo::ExactDp => "exact-dp",
            Algo::ExactPerm => "exact-perm",
        }
    }
}

impl std::fmt::Display for Algo {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One algorithm entry of a suite: the algorithm plus its parameters.
/// `eps` is an exact fraction rendered as `"p/q"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgoSpec {
    pub algo: Algo,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eps: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
}

impl AlgoSpec {
    /// A parameter-free algorithm entry.
    pub fn plain(algo: Algo) -> Self {
        AlgoSpec { algo, eps: None, k: None }
    }

    /// An entry carrying an accuracy parameter.
    pub fn with_eps(algo: Algo, eps: &str) -> Self {
        AlgoSpec { algo, eps: Some(eps.to_string()), k: None }
    }

    /// An entry carrying a guessed-set size.
    pub fn with_k(algo: Algo, k: usize) -> Self {
        AlgoSpec { algo, eps: None, k: Some(k) }
    }
}

/// Parameters of one run after validation: exactly the ones the algorithm
/// accepts, parsed.
#[derive(Debug, Clone)]
struct RunParams {
    eps: Option<Rat>,
    k: Option<usize>,
}

impl RunParams {
    fn canonical(&self) -> String {
        match (&self.eps, self.k) {
            (None, None) => "-".to_string(),
            (Some(eps), None) => format!("eps={eps}"),
            (None, Some(k)) => format!("k={k}"),
            (Some(eps), Some(k)) => format!("eps={eps};k={k}"),
        }
    }
}

fn check_params(spec: &AlgoSpec) -> Result<RunParams, Error> {
    let needs_eps = matches!(spec.algo, Algo::ShiftCover | Algo::Ptas | Algo::Robust);
    let needs_k = matches!(spec.algo, Algo::PtasQ);
    let eps = match (&spec.eps, needs_eps) {
        (Some(text), true) => {
            let eps = parse_fraction(text)?;
            if eps <= rint(0) {
                return Err(Error::InvalidParameter(format!(
                    "{}: eps must be positive, got {eps}",
                    spec.algo
                )));
            }
            Some(eps)
        }
        (None, true) => {
            return Err(Error::InvalidParameter(format!("{}: eps is required", spec.algo)))
        }
        (Some(_), false) => {
            return Err(Error::InvalidParameter(format!(
                "{}: eps is not a parameter of this algorithm",
                spec.algo
            )))
        }
        (None, false) => None,
    };
    let k = match (spec.k, needs_k) {
        (Some(0), true) => {
            return Err(Error::InvalidParameter(format!("{}: k must be at least 1", spec.algo)))
        }
        (Some(k), true) => Some(k),
        (None, true) => return Err(Error::InvalidParameter(format!("{}: k is required", spec.algo))),
        (Some(_), false) => {
            return Err(Error::InvalidParameter(format!(
                "{}: k is not a parameter of this algorithm",
                spec.algo
            )))
        }
        (None, false) => None,
    };
    Ok(RunParams { eps, k })
}

/// The schedule form an algorithm emits: an assignment of jobs to arrival
/// indices, or a processing order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScheduleDetail {
    Slots(Assignment),
    Order(Ordering),
}

/// Result of one solver call: the exact objective, the schedule, and
/// whether the schedule passed the independent feasibility check.
#[derive(Debug, Clone)]
pub struct SolveOutcome {
    pub objective: Rat,
    pub schedule: ScheduleDetail,
    pub feasible: bool,
    /// Canonical parameter string for reports (`-` when parameter-free).
    pub params: String,
}

/// Runs one algorithm on one instance and re-verifies the result: assignment
/// outputs are checked with the prefix-feasibility test and their objective
/// recomputed; ordering outputs are re-simulated.
pub fn solve_one(inst: &Instance, spec: &AlgoSpec, limits: &Limits) -> Result<SolveOutcome, Error> {
    let params = check_params(spec)?;
    let canonical = params.canonical();
    let (objective, schedule) = match spec.algo {
        Algo::Spt => {
            let (ord, eval) = spt_schedule(inst)?;
            (eval.objective, ScheduleDetail::Order(ord))
        }
        Algo::Greedy => {
            let (obj, asg) = greedy_schedule(inst)?;
            (obj, ScheduleDetail::Slots(asg))
        }
        Algo::ShiftCover => {
            let (obj, asg) = shift_and_cover(inst, params.eps.as_ref().unwrap())?;
            (obj, ScheduleDetail::Slots(asg))
        }
        Algo::PtasQ => {
            let (obj, asg) = constant_q_ptas_with_budget(inst, params.k.unwrap(), limits.budget)?;
            (obj, ScheduleDetail::Slots(asg))
        }
        Algo::Ptas => {
            let (obj, asg) =
                general_ptas_with_budget(inst, params.eps.as_ref().unwrap(), limits.budget)?;
            (obj, ScheduleDetail::Slots(asg))
        }
        Algo::Robust => {
            let input = robust_input_of(inst)?;
            let asg = robust_schedule(&input, params.eps.as_ref().unwrap())?;
            let obj = objective_assignment(inst, &asg)?;
            (obj, ScheduleDetail::Slots(asg))
        }
        Algo::ExactDp => {
            let (obj, asg) = optimal_assignment_dp_capped(inst, limits.dp_cap)?;
            (obj, ScheduleDetail::Slots(asg))
        }
        Algo::ExactPerm => {
            let (obj, ord) = optimal_ordering_bruteforce_capped(inst, limits.ordering_cap)?;
            (obj, ScheduleDetail::Order(ord))
        }
    };
    let feasible = match &schedule {
        ScheduleDetail::Slots(asg) => {
            let recomputed = objective_assignment(inst, asg)?;
            if recomputed != objective {
                return Err(Error::Internal(format!(
                    "{}: reported objective {objective} differs from the recomputed {recomputed}",
                    spec.algo
                )));
            }
            is_feasible(inst, asg)
        }
        ScheduleDetail::Order(ord) => {
            let eval = simulate_ordering(inst, ord)?;
            if eval.objective != objective {
                return Err(Error::Internal(format!(
                    "{}: reported objective {objective} differs from the re-simulated {}",
                    spec.algo, eval.objective
                )));
            }
            true
        }
    };
    Ok(SolveOutcome { objective, schedule, feasible, params: canonical })
}

/// Reinterprets a timed zero-processing instance as a quantity-only input
/// (the arrival times are dropped).
pub fn robust_input_of(inst: &Instance) -> Result<RobustInput, Error> {
    let jobs: Vec<(u64, u64)> = inst
        .jobs
        .iter()
        .map(|j| {
            if j.p != 0 {
                return Err(Error::NonzeroProcessingTime { job: j.id, p: j.p });
            }
            Ok((j.w, j.a))
        })
        .collect::<Result<_, _>>()?;
    let quantities: Vec<u64> = inst.arrivals.iter().map(|r| r.b).collect();
    let input = RobustInput::new(&jobs, &quantities);
    input.ensure_valid()?;
    Ok(input)
}

/// Exact optimum of an instance: the assignment dynamic program for
/// zero-processing instances, the ordering brute force otherwise.
pub fn oracle_objective(inst: &Instance, limits: &Limits) -> Result<Rat, Error> {
    if inst.zero_processing() {
        optimal_assignment_dp_capped(inst, limits.dp_cap).map(|(obj, _)| obj)
    } else {
        optimal_ordering_bruteforce_capped(inst, limits.ordering_cap).map(|(obj, _)| obj)
    }
}

/// The proven approximation bound of an algorithm on this instance, when
/// one is documented for the instance's regime: 3/2 for SPT on unit jobs,
/// 6 for the greedy, 4+4·eps for shift-and-cover, 1+q/k for the constant-q
/// scheme, 35/16 for the windowed scheme at eps = 1/4, 4(1+eps) for the
/// robust schedule on balanced instances, and 1 for the exact oracles.
pub fn proven_bound(spec: &AlgoSpec, inst: &Instance) -> Result<Option<Rat>, Error> {
    let params = check_params(spec)?;
    let bound = match spec.algo {
        Algo::Spt => {
            let unit = inst.jobs.iter().all(|j| j.a == 1 && j.w == 1);
            unit.then(|| rfrac(3, 2))
        }
        Algo::Greedy => Some(rint(6)),
        Algo::ShiftCover => Some(rint(4) + rint(4) * params.eps.as_ref().unwrap()),
        Algo::PtasQ => Some(
            rint(1)
                + Rat::new(BigInt::from(inst.q()), BigInt::from(params.k.unwrap())),
        ),
        Algo::Ptas => (params.eps.as_ref().unwrap() == &rfrac(1, 4)).then(|| rfrac(35, 16)),
        Algo::Robust => inst
            .balanced()
            .then(|| rint(4) * (rint(1) + params.eps.as_ref().unwrap())),
        Algo::ExactDp | Algo::ExactPerm => Some(rint(1)),
    };
    Ok(bound)
}

/// Whether the `runtime_ms` column carries wall-clock times or stays zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum TimingMode {
    /// Deterministic output: every `runtime_ms` is 0.
    #[default]
    None,
    /// Wall-clock milliseconds per solve call (excludes parsing); output is
    /// no longer byte-reproducible.
    Wall,
}

/// One instance of a suite: an instance file or a seeded generator spec.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum InstanceSource {
    File { id: String, path: PathBuf },
    Random(RandomSpec),
}

impl InstanceSource {
    fn label(&self) -> String {
        match self {
            InstanceSource::File { id, .. } => id.clone(),
            InstanceSource::Random(spec) => spec.label(),
        }
    }
}

/// A benchmark suite: instances, algorithms, oracle toggle, timing mode and
/// the CSV output path (resolved relative to the config file).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub instances: Vec<InstanceSource>,
    pub algorithms: Vec<AlgoSpec>,
    /// Compute exact optima and ratio/bound checks; on by default.
    #[serde(default = "default_oracle")]
    pub oracle: bool,
    #[serde(default)]
    pub timing: TimingMode,
    pub output: PathBuf,
}

/// Parses a [`SuiteConfig`] file; returns the config and the directory
/// against which its relative paths resolve.
pub fn load_suite_config(path: &Path) -> Result<(SuiteConfig, PathBuf), Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let cfg: SuiteConfig = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let base = path.parent().unwrap_or_else(|| Path::new(".")).to_path_buf();
    Ok((cfg, base))
}

fn resolve(base: &Path, path: &Path) -> PathBuf {
    if path.is_absolute() {
        path.to_path_buf()
    } else {
        base.join(path)
    }
}

/// One report row; the fields map one-to-one onto the CSV columns.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub instance_id: String,
    pub algo: Algo,
    pub params: String,
    pub objective: Rat,
    pub oracle_objective: Option<Rat>,
    /// `objective / oracle_objective`, present iff the oracle objective is
    /// present and nonzero.
    pub ratio: Option<Rat>,
    pub feasible: bool,
    pub runtime_ms: u64,
}

/// Header of every report CSV.
pub const CSV_HEADER: &str =
    "instance_id,algo,params,objective_num,objective_den,oracle_num,oracle_den,ratio,feasible,runtime_ms";

impl RunReport {
    /// Renders the row: exact numerator/denominator columns, the ratio as a
    /// 6-decimal string, empty strings for absent oracle columns.
    pub fn csv_row(&self) -> String {
        let (onum, oden) = match &self.oracle_objective {
            Some(o) => (o.numer().to_string(), o.denom().to_string()),
            None => (String::new(), String::new()),
        };
        let ratio = self.ratio.as_ref().map(decimal6).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{}",
            self.instance_id,
            self.algo,
            self.params,
            self.objective.numer(),
            self.objective.denom(),
            onum,
            oden,
            ratio,
            self.feasible,
            self.runtime_ms
        )
    }
}

/// Renders the full CSV: fixed header plus one row per report.
pub fn render_csv(reports: &[RunReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for report in reports {
        out.push_str(&report.csv_row());
        out.push('\n');
    }
    out
}

/// Everything a finished suite produced: the sorted rows, the rendered CSV
/// (also written to the configured path), and the list of violations — rows
/// whose schedule failed the feasibility check or beat-the-bound check.
/// An empty violation list is the suite's success condition.
#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub reports: Vec<RunReport>,
    pub csv: String,
    pub violations: Vec<String>,
}

/// Runs a suite: materializes every instance, solves every (instance,
/// algorithm) pair, and writes the CSV to the configured output path.
/// Relative paths resolve against `base`. Solver and oracle errors abort
/// the suite; feasibility and bound violations are collected in the
/// outcome instead.
pub fn run_suite(cfg: &SuiteConfig, base: &Path, limits: &Limits) -> Result<SuiteOutcome, Error> {
    let mut instances: Vec<(String, Instance)> = Vec::with_capacity(cfg.instances.len());
    let mut seen = BTreeSet::new();
    for source in &cfg.instances {
        let id = source.label();
        if id.contains(',') {
            return Err(Error::Parse(format!("instance id {id:?} must not contain a comma")));
        }
        if !seen.insert(id.clone()) {
            return Err(Error::Parse(format!("duplicate instance id {id:?}")));
        }
        let inst = match source {
            InstanceSource::File { path, .. } => load_instance(&resolve(base, path))?,
            InstanceSource::Random(spec) => gen_random(spec)?,
        };
        let violations = validate(&inst);
        if !violations.is_empty() {
            return Err(Error::InvalidInstance(violations));
        }
        instances.push((id, inst));
    }

    let mut reports = Vec::with_capacity(instances.len() * cfg.algorithms.len());
    let mut violations = Vec::new();
    for (id, inst) in &instances {
        for spec in &cfg.algorithms {
            let started = Instant::now();
            let outcome = solve_one(inst, spec, limits)?;
            let runtime_ms = match cfg.timing {
                TimingMode::None => 0,
                TimingMode::Wall => started.elapsed().as_millis().min(u128::from(u64::MAX)) as u64,
            };
            let oracle_objective =
                if cfg.oracle { Some(oracle_objective(inst, limits)?) } else { None };
            let ratio = oracle_objective
                .as_ref()
                .filter(|o| **o != rint(0))
                .map(|o| &outcome.objective / o);
            if !outcome.feasible {
                violations.push(format!("{id}/{}: schedule is infeasible", spec.algo));
            }
            if let Some(oracle) = &oracle_objective {
                if let Some(bound) = proven_bound(spec, inst)? {
                    if outcome.objective > &bound * oracle {
                        violations.push(format!(
                            "{id}/{}: objective {} exceeds the proven bound {bound} × optimum {oracle}",
                            spec.algo, outcome.objective
                        ));
                    }
                }
            }
            reports.push(RunReport {
                instance_id: id.clone(),
                algo: spec.algo,
                params: outcome.params,
                objective: outcome.objective,
                oracle_objective,
                ratio,
                feasible: outcome.feasible,
                runtime_ms,
            });
        }
    }
    reports.sort_by(|x, y| {
        (&x.instance_id, x.algo, &x.params).cmp(&(&y.instance_id, y.algo, &y.params))
    });
    let csv = render_csv(&reports);
    std::fs::write(resolve(base, &cfg.output), &csv)?;
    Ok(SuiteOutcome { reports, csv, violations })
}
