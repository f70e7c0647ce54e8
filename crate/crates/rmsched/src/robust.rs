//! Scheduling against unknown arrival times.
//!
//! Here the batch quantities `b_1, …, b_q` are known in advance but the
//! arrival times are not, so a schedule must commit each job to an arrival
//! *index* before any time is revealed. Whatever times materialize, the jobs
//! committed to indices `>= i` — the *suffix set* `S_i` — are the ones that
//! may still be waiting when batch `i` arrives, so the quality of a robust
//! schedule is measured per index: the weight of `S_i` against the cheapest
//! set of jobs whose amounts cover the suffix supply `B_i = Σ_{k >= i} b_k`.
//!
//! [`robust_schedule`] keeps every suffix weight within `4(1+ε)` of the
//! cheapest cover; [`adversarial_instance`] builds the family showing that
//! no schedule can do much better; [`best_possible_max_ratio`] finds, by
//! exact search, the best worst-case ratio any schedule can achieve on a
//! given input.

use num_traits::{Signed, Zero};

use crate::error::Error;
use crate::exact::{
    min_cover_bruteforce, CoverItem, CoverProblem, CoverSolution, ScaledTimes,
    DEFAULT_ENUMERATION_BUDGET,
};
use crate::instance::{Assignment, Job};
use crate::rational::{rint, Rat};
use crate::zero_p::min_cover_fptas;

/// Job cap for the exact best-ratio chain search.
pub const DEFAULT_CHAIN_CAP: usize = 16;

/// A robust scheduling input: zero-length jobs plus the arrival quantities,
/// in arrival order, with the times left open.
///
/// The total supply may fall short of the total requirement; it must never
/// exceed it, so that every suffix demand stays coverable.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustInput {
    pub jobs: Vec<Job>,
    pub quantities: Vec<u64>,
}

impl RobustInput {
    /// Builds an input from `(w, a)` pairs and the quantity vector.
    pub fn new(jobs: &[(u64, u64)], quantities: &[u64]) -> Self {
        RobustInput {
            jobs: jobs
                .iter()
                .enumerate()
                .map(|(id, &(w, a))| Job { id, p: 0, w, a })
                .collect(),
            quantities: quantities.to_vec(),
        }
    }

    /// Number of jobs.
    pub fn n(&self) -> usize {
        self.jobs.len()
    }

    /// Number of arrivals.
    pub fn q(&self) -> usize {
        self.quantities.len()
    }

    /// The suffix supply `B_i = Σ_{k >= i} b_k` for a zero-based index.
    pub fn suffix_requirement(&self, index: usize) -> Result<u64, Error> {
        if index >= self.q() {
            return Err(Error::IndexOutOfRange { index, q: self.q() });
        }
        let sum: u128 = self.quantities[index..].iter().map(|&b| u128::from(b)).sum();
        sum.try_into()
            .map_err(|_| Error::NumericRange("suffix supply exceeds 64-bit range".into()))
    }

    /// Checks the structural invariants: at least one arrival, zero
    /// processing times, consecutive job ids, and total supply at most the
    /// total requirement.
    pub fn ensure_valid(&self) -> Result<(), Error> {
        if self.quantities.is_empty() {
            return Err(Error::InvalidParameter("at least one arrival quantity required".into()));
        }
        for (idx, job) in self.jobs.iter().enumerate() {
            if job.p != 0 {
                return Err(Error::NonzeroProcessingTime { job: job.id, p: job.p });
            }
            if job.id != idx {
                return Err(Error::InvalidParameter("job ids must be consecutive from 0".into()));
            }
        }
        let supply: u128 = self.quantities.iter().map(|&b| u128::from(b)).sum();
        let requirement: u128 = self.jobs.iter().map(|j| u128::from(j.a)).sum();
        if supply > requirement {
            return Err(Error::UnbalancedSupply {
                supply: supply.try_into().unwrap_or(u64::MAX),
                requirement: requirement.try_into().unwrap_or(u64::MAX),
            });
        }
        if supply > u128::from(u64::MAX) {
            return Err(Error::NumericRange("total supply exceeds 64-bit range".into()));
        }
        Ok(())
    }

    fn cover_items(&self) -> Vec<CoverItem> {
        self.jobs.iter().map(|j| CoverItem { id: j.id, w: j.w, a: j.a }).collect()
    }
}

/// Commits every job to an arrival index so that each suffix set weighs at
/// most `4(1+ε)` times its cheapest cover.
///
/// One approximate cover `J_i` is computed per suffix demand. Walking the
/// indices from the last one, the scheduler looks back to the earliest index
/// whose cover is at most twice as heavy as the current one, commits that
/// cover's still-free jobs here, and jumps to just before the earliest
/// index; the doubling step keeps the committed weights geometric, which is
/// where the factor 4 comes from. Jobs never committed go to the first
/// index. Returns the per-job index vector.
pub fn robust_schedule(input: &RobustInput, eps: &Rat) -> Result<Assignment, Error> {
    input.ensure_valid()?;
    if !eps.is_positive() {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let n = input.n();
    let q = input.q();
    let items = input.cover_items();
    let mut covers: Vec<CoverSolution> = Vec::with_capacity(q);
    for i in 0..q {
        let demand = input.suffix_requirement(i)?;
        covers.push(min_cover_fptas(&CoverProblem { items: items.clone(), demand }, eps)?);
    }
    let lookback: Vec<usize> = (0..q)
        .map(|i| {
            (0..=i)
                .find(|&k| u128::from(covers[k].weight) <= 2 * u128::from(covers[i].weight))
                .expect("k = i always qualifies")
        })
        .collect();
    let mut slots = vec![0usize; n];
    let mut committed = vec![false; n];
    let mut i = q as i64 - 1;
    while i >= 0 {
        let here = i as usize;
        let source = lookback[here];
        for &id in &covers[source].ids {
            if !committed[id] {
                committed[id] = true;
                slots[id] = here;
            }
        }
        i = source as i64 - 1;
    }
    Ok(Assignment::new(slots))
}

/// The family on which every robust schedule is forced close to the factor
/// 4: job `i` (1-based) has weight `m·n − i` and amount `2^(q−i)` with
/// `q = (n−1)·m` jobs in total, and the quantities `2^(q−i−1)` (last: 1)
/// make each suffix supply `B_i` exactly the amount of job `i`, so covering
/// a suffix cheaply and covering it early pull in opposite directions.
///
/// Requires `n >= 2`, `m >= 1` and `q <= 63` so the amounts fit in 64 bits.
pub fn adversarial_instance(n: usize, m: usize) -> Result<RobustInput, Error> {
    if n < 2 || m < 1 {
        return Err(Error::InvalidParameter(
            "adversarial family needs n >= 2 and m >= 1".into(),
        ));
    }
    let q = (n - 1) * m;
    if q > 63 {
        return Err(Error::NumericRange(
            "adversarial family amounts exceed 64-bit range beyond q = 63".into(),
        ));
    }
    let jobs: Vec<(u64, u64)> = (1..=q)
        .map(|i| (((m * n - i) as u64), 1u64 << (q - i)))
        .collect();
    let quantities: Vec<u64> =
        (1..=q).map(|i| if i < q { 1 << (q - i - 1) } else { 1 }).collect();
    let input = RobustInput::new(&jobs, &quantities);
    debug_assert!(input.ensure_valid().is_ok());
    Ok(input)
}

/// Quality of one suffix of a robust schedule: the committed weight, the
/// cheapest covering weight, and their ratio (`None` when the cheapest
/// cover is free).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustIndexReport {
    pub index: usize,
    pub achieved_weight: u64,
    pub optimal_weight: u64,
    pub ratio: Option<Rat>,
}

/// Per-index quality of a robust schedule plus the worst ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessReport {
    pub per_index: Vec<RobustIndexReport>,
    pub max_ratio: Option<Rat>,
}

/// Scores an assignment of jobs to arrival indices: for every index the
/// weight of the suffix set is compared against the exact cheapest cover of
/// the suffix supply. Ratios are undefined (`None`) where the cheapest
/// cover weighs nothing.
///
/// `max_ratio` is the schedule's worst-case factor: the largest defined
/// ratio among the indices that can contribute to an objective. The first
/// arrival happens at time zero in every realization, so its suffix — always
/// the whole job set — is excluded from the maximum (it still appears in
/// `per_index` for inspection). With one arrival there is nothing to
/// maximize over and `max_ratio` is `None`.
pub fn robustness_report(
    input: &RobustInput,
    asg: &Assignment,
) -> Result<RobustnessReport, Error> {
    input.ensure_valid()?;
    let n = input.n();
    let q = input.q();
    if asg.slots.len() != n {
        return Err(Error::InvalidAssignment(format!(
            "assignment covers {} jobs, instance has {n}",
            asg.slots.len()
        )));
    }
    if let Some(&bad) = asg.slots.iter().find(|&&s| s >= q) {
        return Err(Error::IndexOutOfRange { index: bad, q });
    }
    let items = input.cover_items();
    let mut per_index = Vec::with_capacity(q);
    let mut max_ratio: Option<Rat> = None;
    for index in 0..q {
        let achieved: u128 = input
            .jobs
            .iter()
            .filter(|j| asg.slots[j.id] >= index)
            .map(|j| u128::from(j.w))
            .sum();
        let achieved_weight: u64 = achieved
            .try_into()
            .map_err(|_| Error::NumericRange("suffix weight exceeds 64-bit range".into()))?;
        let demand = input.suffix_requirement(index)?;
        let best = min_cover_bruteforce(&CoverProblem { items: items.clone(), demand })?;
        let ratio = if best.weight == 0 {
            None
        } else {
            Some(rint(achieved_weight) / rint(best.weight))
        };
        if index >= 1 {
            if let Some(r) = &ratio {
                if max_ratio.as_ref().is_none_or(|m| r > m) {
                    max_ratio = Some(r.clone());
                }
            }
        }
        per_index.push(RobustIndexReport {
            index,
            achieved_weight,
            optimal_weight: best.weight,
            ratio,
        });
    }
    Ok(RobustnessReport { per_index, max_ratio })
}

/// Combines a candidate suffix ratio with the best tail score; `None` stands
/// for an infeasible branch.
fn score_max(a: Option<Rat>, b: Option<Rat>) -> Option<Rat> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.max(y)),
        _ => None,
    }
}

fn score_min(a: Option<Rat>, b: Option<Rat>) -> Option<Rat> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (Some(x), None) | (None, Some(x)) => Some(x),
        (None, None) => None,
    }
}

/// The best worst-case suffix ratio any schedule can achieve on this input,
/// found by exact search.
///
/// A schedule is summarized by the chain of suffix sets
/// `S_1 ⊇ S_2 ⊇ … ⊇ S_q`; a dynamic program over subsets walks the chain
/// backwards, keeping for every subset the best achievable maximum ratio of
/// the remaining indices (infeasible subsets — amount below the suffix
/// supply — are discarded, indices whose cheapest cover is free contribute
/// no ratio). As in [`robustness_report`], the first arrival — pinned to
/// time zero in every realization — contributes no ratio, only the
/// feasibility constraint; with a single arrival the search is vacuous and
/// the result is `0`. Runs in `O(q · n · 2^n)`; errors with
/// [`Error::CapExceeded`] beyond [`DEFAULT_CHAIN_CAP`] jobs.
pub fn best_possible_max_ratio(input: &RobustInput) -> Result<Rat, Error> {
    input.ensure_valid()?;
    let n = input.n();
    let q = input.q();
    if n > DEFAULT_CHAIN_CAP {
        return Err(Error::CapExceeded { what: "robust chain search", n, cap: DEFAULT_CHAIN_CAP });
    }
    let masks = 1usize << n;
    let mut amount = vec![0u128; masks];
    let mut weight = vec![0u128; masks];
    for mask in 1..masks {
        let low = mask.trailing_zeros() as usize;
        amount[mask] = amount[mask & (mask - 1)] + u128::from(input.jobs[low].a);
        weight[mask] = weight[mask & (mask - 1)] + u128::from(input.jobs[low].w);
    }
    let items = input.cover_items();
    let mut demands = Vec::with_capacity(q);
    let mut optima = Vec::with_capacity(q);
    for index in 0..q {
        let demand = input.suffix_requirement(index)?;
        optima.push(min_cover_bruteforce(&CoverProblem { items: items.clone(), demand })?.weight);
        demands.push(u128::from(demand));
    }
    // The ratio contributed by suffix set `mask` at `index`, or None when
    // the set cannot cover the suffix supply.
    let ratio_at = |index: usize, mask: usize| -> Option<Rat> {
        if amount[mask] < demands[index] {
            return None;
        }
        if optima[index] == 0 {
            return Some(rint(0));
        }
        Some(Rat::new(weight[mask].into(), u128::from(optima[index]).into()))
    };
    if q == 1 {
        return Ok(rint(0));
    }
    let mut tail: Vec<Option<Rat>> = (0..masks).map(|m| ratio_at(q - 1, m)).collect();
    for index in (1..q - 1).rev() {
        // best[m] = min over subsets T of m of tail[T]
        let mut best = tail.clone();
        for bit in 0..n {
            for m in 0..masks {
                if m >> bit & 1 == 1 {
                    let without = best[m ^ (1 << bit)].clone();
                    best[m] = score_min(best[m].clone(), without);
                }
            }
        }
        tail = (0..masks).map(|m| score_max(ratio_at(index, m), best[m].clone())).collect();
    }
    // The suffix at the first arrival is the full set, feasible by
    // validation and pinned to time zero; the next suffix may be any subset.
    tail.into_iter()
        .fold(None, score_min)
        .ok_or_else(|| Error::Internal("a valid robust input always has a feasible chain".into()))
}

/// Exact minimizer of `Σ w_j · t_slot(j)` over all assignments whose suffix
/// sets cover every suffix supply, for one concrete realization of the
/// arrival times. Ties prefer the lexicographically smallest slot vector.
///
/// `times` must be strictly increasing and start at zero, one per quantity.
pub fn optimal_suffix_cover_assignment(
    input: &RobustInput,
    times: &[Rat],
) -> Result<(Rat, Assignment), Error> {
    input.ensure_valid()?;
    let n = input.n();
    let q = input.q();
    if times.len() != q {
        return Err(Error::InvalidParameter(format!(
            "expected {q} arrival times, got {}",
            times.len()
        )));
    }
    if times.first().map(|t| !t.is_zero()).unwrap_or(false) {
        return Err(Error::InvalidParameter("the first arrival time must be zero".into()));
    }
    if times.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("arrival times must be strictly increasing".into()));
    }
    if n == 0 {
        return Ok((rint(0), Assignment::new(Vec::new())));
    }
    let mut count: u64 = 1;
    for _ in 0..n {
        count = count
            .checked_mul(q as u64)
            .filter(|&c| c <= DEFAULT_ENUMERATION_BUDGET)
            .ok_or(Error::BudgetExceeded { budget: DEFAULT_ENUMERATION_BUDGET })?;
    }
    let st = ScaledTimes::new(times)?;
    let mut demands = Vec::with_capacity(q);
    for index in 0..q {
        demands.push(u128::from(input.suffix_requirement(index)?));
    }
    let mut slots = vec![0usize; n];
    let mut best: Option<(u128, Vec<usize>)> = None;
    let mut suffix_amount = vec![0u128; q + 1];
    loop {
        for v in suffix_amount.iter_mut() {
            *v = 0;
        }
        for (id, &s) in slots.iter().enumerate() {
            suffix_amount[s] += u128::from(input.jobs[id].a);
        }
        for index in (0..q.saturating_sub(1)).rev() {
            let later = suffix_amount[index + 1];
            suffix_amount[index] += later;
        }
        let feasible = (0..q).all(|index| suffix_amount[index] >= demands[index]);
        if feasible {
            let objective: u128 = slots
                .iter()
                .enumerate()
                .map(|(id, &s)| u128::from(input.jobs[id].w) * st.scaled[s])
                .sum();
            let better = match &best {
                None => true,
                Some((obj, _)) => objective < *obj,
            };
            if better {
                best = Some((objective, slots.clone()));
            }
        }
        // next assignment in ascending lexicographic order
        let mut pos = n;
        while pos > 0 {
            pos -= 1;
            if slots[pos] + 1 < q {
                slots[pos] += 1;
                for later in slots.iter_mut().skip(pos + 1) {
                    *later = 0;
                }
                break;
            }
            if pos == 0 {
                let (objective, slots) = best.ok_or_else(|| {
                    Error::Internal("every job at the last index is always feasible".into())
                })?;
                return Ok((st.to_rat(objective), Assignment::new(slots)));
            }
        }
    }
}
