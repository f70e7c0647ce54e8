//! Core problem types: jobs, resource arrivals, instances, assignments,
//! orderings, and the feasibility / objective primitives built on them.
//!
//! An instance has a single machine, one non-renewable resource, and jobs
//! `(p_j, w_j, a_j)`: processing time, weight, resource requirement. The
//! resource arrives in batches `(t_i, b_i)`; a job can only start once its
//! requirement can be served from resource that has already arrived. The
//! objective throughout the crate is the weighted sum of completion times.
//!
//! For instances where every processing time is zero a schedule collapses to
//! an *assignment* of jobs to arrival indices; for general processing times a
//! schedule is described by an *ordering* of the jobs on the machine, and
//! [`simulate_ordering`] derives start and completion times from it.

use num_traits::Zero;

use crate::error::Error;
use crate::rational::{is_integer, rint, Rat};

/// A job: processing time `p`, weight `w`, resource requirement `a`.
///
/// Job ids are positional: job `j` is `instance.jobs[j]` and `id == j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Job {
    pub id: usize,
    pub p: u64,
    pub w: u64,
    pub a: u64,
}

/// A resource arrival: `b` units of resource become available at time `t`.
///
/// Times are exact rationals; unshifted instances use integer times only.
#[derive(Debug, Clone, PartialEq)]
pub struct Arrival {
    pub t: Rat,
    pub b: u64,
}

impl Arrival {
    /// Arrival at an integer time.
    pub fn at(t: u64, b: u64) -> Self {
        Arrival { t: rint(t), b }
    }
}

/// A problem instance: jobs plus a sorted list of resource arrivals.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    pub jobs: Vec<Job>,
    pub arrivals: Vec<Arrival>,
}

impl Instance {
    /// Builds an instance from `(p, w, a)` job triples and integer-time
    /// `(t, b)` arrival pairs.
    pub fn new(jobs: &[(u64, u64, u64)], arrivals: &[(u64, u64)]) -> Self {
        Instance {
            jobs: jobs
                .iter()
                .enumerate()
                .map(|(id, &(p, w, a))| Job { id, p, w, a })
                .collect(),
            arrivals: arrivals.iter().map(|&(t, b)| Arrival::at(t, b)).collect(),
        }
    }

    /// Number of jobs.
    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    /// Number of arrivals.
    pub fn q(&self) -> usize {
        self.arrivals.len()
    }

    /// Total resource requirement of all jobs.
    pub fn total_requirement(&self) -> u64 {
        self.jobs.iter().map(|j| j.a).sum()
    }

    /// Total resource supply over all arrivals.
    pub fn total_supply(&self) -> u64 {
        self.arrivals.iter().map(|r| r.b).sum()
    }

    /// Supply arriving at index `k` or later: `B_k = Σ_{i >= k} b_i`.
    pub fn suffix_supply(&self, k: usize) -> u64 {
        self.arrivals[k..].iter().map(|r| r.b).sum()
    }

    /// Supply arriving at index `k` or earlier.
    pub fn prefix_supply(&self, k: usize) -> u64 {
        self.arrivals[..=k].iter().map(|r| r.b).sum()
    }

    /// Whether every processing time is zero.
    pub fn zero_processing(&self) -> bool {
        self.jobs.iter().all(|j| j.p == 0)
    }

    /// Whether every arrival time is an integer.
    pub fn integer_times(&self) -> bool {
        self.arrivals.iter().all(|r| is_integer(&r.t))
    }

    /// Whether total supply equals total requirement.
    pub fn balanced(&self) -> bool {
        self.total_supply() == self.total_requirement()
    }
}

/// A structural problem found by [`validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// `arrivals[index].t <= arrivals[index - 1].t`.
    ArrivalsUnsorted { index: usize },
    /// The first arrival is not at time zero (or there is no arrival at all
    /// even though jobs are present).
    NoArrivalAtZero,
    /// Total supply is smaller than total requirement; nothing can be feasible.
    SupplyShort { supply: u64, requirement: u64 },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ArrivalsUnsorted { index } => {
                write!(f, "arrival {index} is not strictly later than its predecessor")
            }
            Violation::NoArrivalAtZero => write!(f, "the first arrival must be at time 0"),
            Violation::SupplyShort { supply, requirement } => write!(
                f,
                "total supply {supply} is smaller than total requirement {requirement}"
            ),
        }
    }
}

/// Checks the structural invariants of an instance and returns every
/// violation found (empty means the instance is well formed).
///
/// Required: arrivals strictly increasing in time, first arrival at time 0
/// (when any jobs or arrivals exist), and total supply at least total
/// requirement. An instance with no jobs and no arrivals is trivially valid.
pub fn validate(inst: &Instance) -> Vec<Violation> {
    let mut out = Vec::new();
    if inst.q() == 0 {
        if inst.n() > 0 {
            out.push(Violation::NoArrivalAtZero);
            if inst.total_requirement() > 0 {
                out.push(Violation::SupplyShort {
                    supply: 0,
                    requirement: inst.total_requirement(),
                });
            }
        }
        return out;
    }
    if !inst.arrivals[0].t.is_zero() {
        out.push(Violation::NoArrivalAtZero);
    }
    for i in 1..inst.q() {
        if inst.arrivals[i].t <= inst.arrivals[i - 1].t {
            out.push(Violation::ArrivalsUnsorted { index: i });
        }
    }
    let (supply, requirement) = (inst.total_supply(), inst.total_requirement());
    if supply < requirement {
        out.push(Violation::SupplyShort { supply, requirement });
    }
    out
}

/// Returns `Err(InvalidInstance)` unless [`validate`] passes.
pub fn ensure_valid(inst: &Instance) -> Result<(), Error> {
    let violations = validate(inst);
    if violations.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidInstance(violations))
    }
}

/// Errors unless every processing time is zero.
pub(crate) fn require_zero_processing(inst: &Instance) -> Result<(), Error> {
    if let Some(job) = inst.jobs.iter().find(|j| j.p != 0) {
        return Err(Error::NonzeroProcessingTime { job: job.id, p: job.p });
    }
    Ok(())
}

/// Demand that must still be served by arrivals `k` onwards:
/// `D_k = max(0, Σ_j a_j − Σ_{i < k} b_i)`.
///
/// For balanced instances (`Σb = Σa`) this equals the suffix supply `B_k`;
/// with surplus supply it is the tight replacement used by the covering
/// algorithms. Indices are zero-based.
pub fn remaining_demand(inst: &Instance, k: usize) -> Result<u64, Error> {
    if k >= inst.q() {
        return Err(Error::IndexOutOfRange { index: k, q: inst.q() });
    }
    let before: u64 = inst.arrivals[..k].iter().map(|r| r.b).sum();
    Ok(inst.total_requirement().saturating_sub(before))
}

/// An assignment of jobs to arrival indices (zero-processing-time schedules).
///
/// `slots[j]` is the zero-based arrival index at which job `j` starts.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Assignment {
    pub slots: Vec<usize>,
}

impl Assignment {
    pub fn new(slots: Vec<usize>) -> Self {
        Assignment { slots }
    }

    /// Checks shape against an instance.
    pub fn check(&self, inst: &Instance) -> Result<(), Error> {
        if self.slots.len() != inst.n() {
            return Err(Error::InvalidAssignment(format!(
                "{} slots for {} jobs",
                self.slots.len(),
                inst.n()
            )));
        }
        if let Some(&bad) = self.slots.iter().find(|&&s| s >= inst.q()) {
            return Err(Error::InvalidAssignment(format!(
                "slot {bad} out of range (q = {})",
                inst.q()
            )));
        }
        Ok(())
    }
}

/// Prefix form of the feasibility condition: for every arrival index `k`, the
/// jobs assigned to arrivals `<= k` must not require more resource than has
/// arrived by `k`. The assignment must be shape-checked for the instance.
pub fn is_feasible(inst: &Instance, asg: &Assignment) -> bool {
    asg.check(inst).expect("assignment shape mismatch");
    let q = inst.q();
    let mut load = vec![0u64; q];
    for (j, &s) in asg.slots.iter().enumerate() {
        load[s] += inst.jobs[j].a;
    }
    let mut cum_load = 0u64;
    let mut cum_supply = 0u64;
    for k in 0..q {
        cum_load += load[k];
        cum_supply += inst.arrivals[k].b;
        if cum_load > cum_supply {
            return false;
        }
    }
    true
}

/// Suffix form of the feasibility condition, valid only for balanced
/// instances (`Σb = Σa`): for every `k`, the jobs assigned to arrivals `>= k`
/// must require at least the suffix supply `B_k`. Equivalent to
/// [`is_feasible`] under the balance assumption.
pub fn feasibility_suffix(inst: &Instance, asg: &Assignment) -> Result<bool, Error> {
    asg.check(inst)?;
    if !inst.balanced() {
        return Err(Error::UnbalancedSupply {
            supply: inst.total_supply(),
            requirement: inst.total_requirement(),
        });
    }
    let q = inst.q();
    let mut suffix_req = vec![0u64; q];
    for (j, &s) in asg.slots.iter().enumerate() {
        suffix_req[s] += inst.jobs[j].a;
    }
    let mut req = 0u64;
    let mut supply = 0u64;
    for k in (0..q).rev() {
        req += suffix_req[k];
        supply += inst.arrivals[k].b;
        if req < supply {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Objective of an assignment on a zero-processing-time instance:
/// `Σ_j w_j · t_{slot(j)}`.
pub fn objective_assignment(inst: &Instance, asg: &Assignment) -> Result<Rat, Error> {
    asg.check(inst)?;
    if let Some(job) = inst.jobs.iter().find(|j| j.p != 0) {
        return Err(Error::NonzeroProcessingTime { job: job.id, p: job.p });
    }
    let mut obj = Rat::zero();
    for (j, &s) in asg.slots.iter().enumerate() {
        obj += &inst.arrivals[s].t * rint(inst.jobs[j].w);
    }
    Ok(obj)
}

/// A processing order of the jobs on the machine: `order[i]` is the id of the
/// `i`-th job to run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ordering {
    pub order: Vec<usize>,
}

impl Ordering {
    pub fn new(order: Vec<usize>) -> Self {
        Ordering { order }
    }

    /// Checks that the ordering is a permutation of `0..n`.
    pub fn check(&self, n: usize) -> Result<(), Error> {
        if self.order.len() != n {
            return Err(Error::InvalidOrdering);
        }
        let mut seen = vec![false; n];
        for &j in &self.order {
            if j >= n || seen[j] {
                return Err(Error::InvalidOrdering);
            }
            seen[j] = true;
        }
        Ok(())
    }
}

/// Start and completion times produced by [`simulate_ordering`], indexed by
/// job id, together with the objective `Σ_j w_j · C_j`.
#[derive(Debug, Clone, PartialEq)]
pub struct ScheduleEval {
    pub start: Vec<Rat>,
    pub completion: Vec<Rat>,
    pub objective: Rat,
}

/// Runs the earliest-start simulation for an ordering: each job starts at the
/// later of the previous job's completion and the earliest time at which the
/// cumulative resource supply covers the cumulative requirement of the jobs
/// processed so far. Jobs consume resource units in arrival order.
pub fn simulate_ordering(inst: &Instance, ord: &Ordering) -> Result<ScheduleEval, Error> {
    ord.check(inst.n())?;
    let q = inst.q();
    let mut cum_supply = Vec::with_capacity(q);
    let mut acc = 0u64;
    for r in &inst.arrivals {
        acc += r.b;
        cum_supply.push(acc);
    }
    let total_supply = acc;

    let mut start = vec![Rat::zero(); inst.n()];
    let mut completion = vec![Rat::zero(); inst.n()];
    let mut prev_completion = Rat::zero();
    let mut cum_req = 0u64;
    let mut objective = Rat::zero();
    for &j in &ord.order {
        let job = &inst.jobs[j];
        cum_req += job.a;
        let ready = if cum_req == 0 {
            Rat::zero()
        } else {
            if cum_req > total_supply {
                return Err(Error::InsufficientSupply {
                    supply: total_supply,
                    requirement: inst.total_requirement(),
                });
            }
            let idx = cum_supply.partition_point(|&s| s < cum_req);
            inst.arrivals[idx].t.clone()
        };
        let s = if ready > prev_completion { ready } else { prev_completion.clone() };
        let c = &s + rint(job.p);
        objective += &c * rint(job.w);
        start[j] = s;
        completion[j] = c.clone();
        prev_completion = c;
    }
    Ok(ScheduleEval { start, completion, objective })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rfrac;

    /// The five-job, two-arrival instance used throughout the greedy tests
    /// (weights scaled by 10, amounts by 100 to keep everything integral).
    pub(crate) fn five_job_instance() -> Instance {
        Instance::new(
            &[(0, 8, 2), (0, 8, 2), (0, 9, 95), (0, 10, 100), (0, 30, 400)],
            &[(0, 499), (1, 100)],
        )
    }

    #[test]
    fn validate_accepts_well_formed_instance() {
        let inst = five_job_instance();
        assert!(validate(&inst).is_empty());
        assert!(validate(&Instance::new(&[], &[])).is_empty());
    }

    #[test]
    fn validate_rejects_unsorted_arrivals() {
        let inst = Instance::new(&[(0, 1, 1)], &[(0, 1), (2, 1), (1, 1)]);
        assert_eq!(validate(&inst), vec![Violation::ArrivalsUnsorted { index: 2 }]);
    }

    #[test]
    fn validate_rejects_missing_zero_arrival_and_short_supply() {
        let inst = Instance::new(&[(0, 1, 5)], &[(1, 2)]);
        let vs = validate(&inst);
        assert!(vs.contains(&Violation::NoArrivalAtZero));
        assert!(vs.contains(&Violation::SupplyShort { supply: 2, requirement: 5 }));
    }

    #[test]
    fn remaining_demand_matches_hand_computation() {
        let inst = Instance::new(&[(0, 1, 4), (0, 1, 1), (0, 1, 1)], &[(0, 4), (1, 1), (2, 1)]);
        assert_eq!(remaining_demand(&inst, 0).unwrap(), 6);
        assert_eq!(remaining_demand(&inst, 1).unwrap(), 2);
        assert_eq!(remaining_demand(&inst, 2).unwrap(), 1);
        assert!(matches!(
            remaining_demand(&inst, 3),
            Err(Error::IndexOutOfRange { index: 3, q: 3 })
        ));
    }

    #[test]
    fn remaining_demand_equals_suffix_supply_when_balanced() {
        // Deterministic pseudo-random balanced instances.
        let mut state = 0x2545F4914F6CDD1Du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..50 {
            let n = (next() % 6 + 1) as usize;
            let q = (next() % 4 + 1) as usize;
            let jobs: Vec<(u64, u64, u64)> =
                (0..n).map(|_| (0, next() % 9 + 1, next() % 7 + 1)).collect();
            let total: u64 = jobs.iter().map(|j| j.2).sum();
            let mut remaining = total;
            let mut arrivals = Vec::new();
            for i in 0..q {
                let b = if i + 1 == q { remaining } else { next() % (remaining + 1) };
                remaining -= b;
                arrivals.push((i as u64, b));
            }
            let inst = Instance::new(&jobs, &arrivals);
            assert!(inst.balanced());
            for k in 0..q {
                assert_eq!(remaining_demand(&inst, k).unwrap(), inst.suffix_supply(k));
            }
        }
    }

    #[test]
    fn remaining_demand_with_surplus_supply() {
        // Front-loaded surplus: supply exceeds requirement by 5.
        let inst = Instance::new(&[(0, 1, 3), (0, 1, 3)], &[(0, 9), (1, 2)]);
        assert_eq!(remaining_demand(&inst, 1).unwrap(), 0); // max(0, 6 - 9)
        assert_eq!(inst.suffix_supply(1), 2); // differs from D_k under surplus
    }

    #[test]
    fn is_feasible_on_the_five_job_instance() {
        let inst = five_job_instance();
        // Job 3 (w = 10) alone at the second arrival: prefix load 499 <= 499.
        let good = Assignment::new(vec![0, 0, 0, 1, 0]);
        assert!(is_feasible(&inst, &good));
        // Jobs 2, 3, 4 at the first arrival need 595 > 499.
        let bad = Assignment::new(vec![1, 1, 0, 0, 0]);
        assert!(!is_feasible(&inst, &bad));
    }

    #[test]
    fn feasibility_suffix_requires_balance() {
        let inst = five_job_instance();
        let asg = Assignment::new(vec![0, 0, 0, 1, 0]);
        // 599 supply vs 599 requirement: balanced, so the suffix form applies.
        assert!(inst.balanced());
        assert!(feasibility_suffix(&inst, &asg).unwrap());

        let surplus = Instance::new(&[(0, 1, 1)], &[(0, 5)]);
        let one = Assignment::new(vec![0]);
        assert!(matches!(
            feasibility_suffix(&surplus, &one),
            Err(Error::UnbalancedSupply { supply: 5, requirement: 1 })
        ));
    }

    #[test]
    fn suffix_and_prefix_forms_agree_on_balanced_instances() {
        // Exhaustive over all assignments of small balanced instances.
        let instances = vec![
            Instance::new(&[(0, 1, 2), (0, 2, 1), (0, 3, 3)], &[(0, 3), (1, 2), (2, 1)]),
            Instance::new(&[(0, 1, 1), (0, 1, 1), (0, 1, 1), (0, 1, 1)], &[(0, 2), (3, 2)]),
            Instance::new(&[(0, 5, 4), (0, 1, 1), (0, 2, 1)], &[(0, 4), (2, 2)]),
        ];
        for inst in instances {
            let (n, q) = (inst.n(), inst.q());
            for code in 0..q.pow(n as u32) {
                let mut c = code;
                let mut slots = Vec::with_capacity(n);
                for _ in 0..n {
                    slots.push(c % q);
                    c /= q;
                }
                let asg = Assignment::new(slots);
                assert_eq!(
                    is_feasible(&inst, &asg),
                    feasibility_suffix(&inst, &asg).unwrap(),
                    "forms disagree on {asg:?}"
                );
            }
        }
    }

    #[test]
    fn objective_assignment_weights_times() {
        let inst = five_job_instance();
        let asg = Assignment::new(vec![0, 0, 0, 1, 0]);
        assert_eq!(objective_assignment(&inst, &asg).unwrap(), rint(10));
        let all_first = Assignment::new(vec![0; 5]);
        assert_eq!(objective_assignment(&inst, &all_first).unwrap(), rint(0));
    }

    #[test]
    fn objective_assignment_rejects_positive_processing_times() {
        let inst = Instance::new(&[(3, 1, 1)], &[(0, 1)]);
        assert!(matches!(
            objective_assignment(&inst, &Assignment::new(vec![0])),
            Err(Error::NonzeroProcessingTime { job: 0, p: 3 })
        ));
    }

    #[test]
    fn simulate_ordering_rejects_non_permutations() {
        let inst = Instance::new(&[(1, 1, 1), (1, 1, 1)], &[(0, 2)]);
        assert!(matches!(
            simulate_ordering(&inst, &Ordering::new(vec![0, 0])),
            Err(Error::InvalidOrdering)
        ));
        assert!(matches!(
            simulate_ordering(&inst, &Ordering::new(vec![0])),
            Err(Error::InvalidOrdering)
        ));
    }

    #[test]
    fn simulate_ordering_errors_on_insufficient_supply() {
        let inst = Instance::new(&[(1, 1, 3)], &[(0, 2)]);
        assert!(matches!(
            simulate_ordering(&inst, &Ordering::new(vec![0])),
            Err(Error::InsufficientSupply { supply: 2, requirement: 3 })
        ));
    }

    /// The tight unit family at k1 = k2 = 2: jobs 0..1 have p = 1, jobs 2..3
    /// have p = 0, jobs 4..5 have p = 1; arrivals (0,1),(1,1),(2,3),(3,1).
    fn tight_family_2_2() -> Instance {
        Instance::new(
            &[(1, 1, 1), (1, 1, 1), (0, 1, 1), (0, 1, 1), (1, 1, 1), (1, 1, 1)],
            &[(0, 1), (1, 1), (2, 3), (3, 1)],
        )
    }

    #[test]
    fn simulate_ordering_shortest_first_on_tight_family() {
        let inst = tight_family_2_2();
        // Shortest processing time first: the two zero-length jobs, then the rest.
        let spt = Ordering::new(vec![2, 3, 0, 1, 4, 5]);
        let eval = simulate_ordering(&inst, &spt).unwrap();
        let completions: Vec<Rat> =
            spt.order.iter().map(|&j| eval.completion[j].clone()).collect();
        assert_eq!(
            completions,
            vec![rint(0), rint(1), rint(3), rint(4), rint(5), rint(6)]
        );
        assert_eq!(eval.objective, rint(19));
    }

    #[test]
    fn simulate_ordering_better_ordering_on_tight_family() {
        let inst = tight_family_2_2();
        // Length-one jobs first, then the zero-length jobs, then the tail.
        let opt = Ordering::new(vec![0, 1, 2, 3, 4, 5]);
        let eval = simulate_ordering(&inst, &opt).unwrap();
        assert_eq!(eval.objective, rint(14));
    }

    #[test]
    fn simulate_ordering_jobs_do_not_overlap() {
        let inst = tight_family_2_2();
        let ord = Ordering::new(vec![5, 0, 3, 1, 4, 2]);
        let eval = simulate_ordering(&inst, &ord).unwrap();
        for w in ord.order.windows(2) {
            let (prev, next) = (w[0], w[1]);
            assert!(eval.start[next] >= eval.completion[prev]);
        }
    }

    #[test]
    fn simulate_ordering_handles_rational_times() {
        let inst = Instance {
            jobs: vec![Job { id: 0, p: 0, w: 2, a: 1 }],
            arrivals: vec![Arrival { t: rfrac(0, 1), b: 0 }, Arrival { t: rfrac(5, 4), b: 1 }],
        };
        let eval = simulate_ordering(&inst, &Ordering::new(vec![0])).unwrap();
        assert_eq!(eval.objective, rfrac(10, 4));
    }
}
