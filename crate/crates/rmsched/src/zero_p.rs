//! Approximation algorithms for the zero-processing-time variant.
//!
//! With every processing time zero, a schedule is just an assignment of jobs
//! to arrival slots and the objective is `Σ w_j · t_slot(j)`. The algorithms
//! here trade optimality for speed:
//!
//! * [`greedy_schedule`] — density-guided greedy, factor 6.
//! * [`min_cover_fptas`] — `(1+ε)`-approximate minimum-weight covering, the
//!   workhorse behind the cover-based schedulers.
//! * [`shift_and_cover`] — rounds arrival times up to powers of two and covers
//!   every shifted slot independently, factor `4 + 4ε`.
//! * [`constant_q_ptas`] — exhaustive guessing of the heaviest jobs per slot,
//!   factor `1 + q/k` for guess size `k`.
//! * [`general_ptas`] — sliding-window scheme on a geometric time ladder with
//!   [`constant_q_ptas`] as the window solver, factor `1 + O(ε)`.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;
use crate::exact::{
    check_objective_range, optimal_assignment_dp, CoverItem, CoverProblem, CoverSolution,
    ScaledTimes, DEFAULT_DP_CAP,
};
use crate::instance::{
    ensure_valid, is_feasible, objective_assignment, remaining_demand, require_zero_processing,
    Arrival, Assignment, Instance, Job,
};
use crate::rational::{ceil_to_u64, rint, rpow, Rat};
use crate::shift::shift_arrivals;

/// Default cap on the number of candidates the guessing schedulers enumerate.
pub const DEFAULT_CANDIDATE_BUDGET: u64 = 10_000_000;

/// Cap on the rounding-table size inside [`min_cover_fptas`].
const MAX_COVER_TABLE_CELLS: u128 = 200_000_000;

/// Orders jobs by weight-to-amount density; ties prefer the larger amount,
/// then the smaller id. An amount of zero counts as infinite density.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct DensityKey {
    w: u64,
    a: u64,
    id: usize,
}

impl Ord for DensityKey {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let lhs = u128::from(self.w) * u128::from(other.a);
        let rhs = u128::from(other.w) * u128::from(self.a);
        lhs.cmp(&rhs)
            .then_with(|| other.a.cmp(&self.a))
            .then_with(|| self.id.cmp(&other.id))
    }
}

impl PartialOrd for DensityKey {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Density-guided greedy scheduler for zero processing times, factor 6.
///
/// Walks the arrival slots from last to first. While the amount assigned so
/// far falls short of the slot's remaining demand it picks one more job: jobs
/// whose weight is at most the running threshold are eligible, and the
/// eligible job of smallest weight-to-amount density wins (ties: larger
/// amount, then smaller id); with no eligible job the unassigned job of
/// smallest weight wins (ties: smaller id). Every pick adds its weight to the
/// threshold and its amount to the running total; neither ever resets. Jobs
/// never picked stay at the arrival at time zero.
///
/// Runs in `O((n + q) log n)`.
pub fn greedy_schedule(inst: &Instance) -> Result<(Rat, Assignment), Error> {
    ensure_valid(inst)?;
    require_zero_processing(inst)?;
    let n = inst.n();
    let q = inst.q();
    let mut slots = vec![0usize; n];
    // `waiting` holds jobs above the threshold keyed by (weight, id);
    // `pool` holds eligible jobs keyed by density.
    let mut waiting: BTreeSet<(u64, usize)> = inst.jobs.iter().map(|j| (j.w, j.id)).collect();
    let mut pool: BTreeSet<DensityKey> = BTreeSet::new();
    let mut threshold: u128 = 0;
    let mut amount: u128 = 0;
    for slot in (1..q).rev() {
        let demand = u128::from(remaining_demand(inst, slot)?);
        while amount < demand {
            while let Some(&(w, id)) = waiting.first() {
                if u128::from(w) <= threshold {
                    waiting.pop_first();
                    pool.insert(DensityKey { w, a: inst.jobs[id].a, id });
                } else {
                    break;
                }
            }
            let (w, a, id) = if let Some(&key) = pool.first() {
                pool.pop_first();
                (key.w, key.a, key.id)
            } else {
                let (w, id) = waiting
                    .pop_first()
                    .expect("a valid instance always has enough supply left");
                (w, inst.jobs[id].a, id)
            };
            slots[id] = slot;
            threshold += u128::from(w);
            amount += u128::from(a);
        }
    }
    let asg = Assignment::new(slots);
    debug_assert!(is_feasible(inst, &asg));
    let objective = objective_assignment(inst, &asg)?;
    Ok((objective, asg))
}

/// A packed 2-d bit matrix used for knapsack backtracking.
struct BitGrid {
    width: usize,
    bits: Vec<u64>,
}

impl BitGrid {
    fn new(rows: usize, width: usize) -> Self {
        let cells = rows * width;
        BitGrid { width, bits: vec![0; cells.div_ceil(64)] }
    }

    fn set(&mut self, row: usize, col: usize) {
        let idx = row * self.width + col;
        self.bits[idx / 64] |= 1 << (idx % 64);
    }

    fn get(&self, row: usize, col: usize) -> bool {
        let idx = row * self.width + col;
        self.bits[idx / 64] >> (idx % 64) & 1 == 1
    }
}

/// Fully polynomial approximation scheme for the minimum-weight cover.
///
/// For every guess `g` of the heaviest item weight used by an optimal cover,
/// items heavier than `g` are dropped, the remaining weights are rounded down
/// to multiples of `ε·g/m` (`m` = number of surviving items), and a knapsack
/// dynamic program finds the smallest rounded weight whose best coverage
/// meets the demand. The cheapest solution over all guesses weighs at most
/// `1 + ε` times the optimum. Ties break by true weight, then by the sorted
/// id list.
///
/// Errors: [`Error::InvalidParameter`] unless `ε > 0`;
/// [`Error::UncoverableDemand`] when even all items together fall short;
/// [`Error::BudgetExceeded`] if a rounding table would exceed an internal
/// size limit.
pub fn min_cover_fptas(cp: &CoverProblem, eps: &Rat) -> Result<CoverSolution, Error> {
    if !eps.is_positive() {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    let available: u128 = cp.items.iter().map(|i| u128::from(i.a)).sum();
    if available < u128::from(cp.demand) {
        return Err(Error::UncoverableDemand {
            demand: cp.demand,
            available: available.try_into().unwrap_or(u64::MAX),
        });
    }
    if cp.demand == 0 {
        return Ok(CoverSolution { ids: Vec::new(), weight: 0, coverage: 0 });
    }
    let mut guesses: Vec<u64> = cp.items.iter().map(|i| i.w).collect();
    guesses.sort_unstable();
    guesses.dedup();
    let mut best: Option<CoverSolution> = None;
    for &guess in &guesses {
        let Some(candidate) = cover_for_guess(cp, eps, guess)? else { continue };
        let better = match &best {
            None => true,
            Some(b) => {
                candidate.weight < b.weight
                    || (candidate.weight == b.weight && candidate.ids < b.ids)
            }
        };
        if better {
            best = Some(candidate);
        }
    }
    best.ok_or_else(|| Error::Internal("no cover guess succeeded despite enough supply".into()))
}

/// One guess of the covering scheme: restrict to items of weight at most
/// `guess` and solve the rounded knapsack. `None` when the surviving items
/// cannot reach the demand.
fn cover_for_guess(cp: &CoverProblem, eps: &Rat, guess: u64) -> Result<Option<CoverSolution>, Error> {
    let picked: Vec<&CoverItem> = cp.items.iter().filter(|i| i.w <= guess).collect();
    let reach: u128 = picked.iter().map(|i| u128::from(i.a)).sum();
    if reach < u128::from(cp.demand) {
        return Ok(None);
    }
    if guess == 0 {
        // Every surviving item is free; take ids ascending until covered.
        let mut by_id = picked;
        by_id.sort_by_key(|i| i.id);
        let mut ids = Vec::new();
        let mut coverage: u128 = 0;
        for item in by_id {
            ids.push(item.id);
            coverage += u128::from(item.a);
            if coverage >= u128::from(cp.demand) {
                break;
            }
        }
        return Ok(Some(CoverSolution {
            ids,
            weight: 0,
            coverage: coverage.try_into().unwrap_or(u64::MAX),
        }));
    }
    let m = picked.len();
    // Rounded weight: floor(w · m / (ε · guess)).
    let scale_num = BigInt::from(m) * eps.denom();
    let scale_den = eps.numer() * BigInt::from(guess);
    let rounded: Vec<u64> = picked
        .iter()
        .map(|i| {
            (BigInt::from(i.w) * &scale_num / &scale_den).to_u64().ok_or_else(|| {
                Error::NumericRange("rounded cover weight exceeds 64-bit range".into())
            })
        })
        .collect::<Result<_, _>>()?;
    let total: u128 = rounded.iter().map(|&w| u128::from(w)).sum();
    match (total + 1).checked_mul(m as u128) {
        Some(cells) if cells <= MAX_COVER_TABLE_CELLS => {}
        _ => return Err(Error::BudgetExceeded { budget: MAX_COVER_TABLE_CELLS as u64 }),
    }
    let width = total as usize + 1;
    // cov[v] = best coverage using rounded weight at most v, capped at the
    // demand; capping keeps the array monotone comparisons cheap and exact
    // for the "meets the demand" test.
    let mut cov = vec![0u64; width];
    let mut take = BitGrid::new(m, width);
    for (idx, item) in picked.iter().enumerate() {
        let wp = rounded[idx] as usize;
        // The descending sweep also covers rounded weight zero: each column
        // is visited once, so a free item is taken at most once.
        for v in (wp..width).rev() {
            let cand = cov[v - wp].saturating_add(item.a).min(cp.demand);
            if cand > cov[v] {
                cov[v] = cand;
                take.set(idx, v);
            }
        }
    }
    let Some(mut v) = (0..width).find(|&v| cov[v] >= cp.demand) else {
        return Err(Error::Internal("cover table missed a reachable demand".into()));
    };
    let mut ids = Vec::new();
    let mut weight: u128 = 0;
    let mut coverage: u128 = 0;
    for idx in (0..m).rev() {
        if take.get(idx, v) {
            ids.push(picked[idx].id);
            weight += u128::from(picked[idx].w);
            coverage += u128::from(picked[idx].a);
            v -= rounded[idx] as usize;
        }
    }
    ids.sort_unstable();
    Ok(Some(CoverSolution {
        ids,
        weight: weight
            .try_into()
            .map_err(|_| Error::NumericRange("cover weight exceeds 64-bit range".into()))?,
        coverage: coverage.try_into().unwrap_or(u64::MAX),
    }))
}

/// Shift-and-cover scheduler, factor `4 + 4ε`.
///
/// Rounds arrival times up to powers of two (see
/// [`shift_arrivals`](crate::shift::shift_arrivals)), covers the remaining
/// demand of every shifted slot independently with [`min_cover_fptas`] over
/// all jobs, assigns each job to the latest shifted slot whose cover uses it
/// (jobs in no cover go to time zero), and maps the result back to the
/// original arrivals.
///
/// Requires zero processing times and integer arrival times.
pub fn shift_and_cover(inst: &Instance, eps: &Rat) -> Result<(Rat, Assignment), Error> {
    ensure_valid(inst)?;
    require_zero_processing(inst)?;
    if !eps.is_positive() {
        return Err(Error::InvalidParameter("epsilon must be positive".into()));
    }
    if !inst.integer_times() {
        return Err(Error::NonIntegerTime);
    }
    let n = inst.n();
    if n == 0 {
        return Ok((rint(0), Assignment::new(Vec::new())));
    }
    let shifted = shift_arrivals(inst, &rint(2))?;
    let items: Vec<CoverItem> =
        inst.jobs.iter().map(|j| CoverItem { id: j.id, w: j.w, a: j.a }).collect();
    let mut latest = vec![0usize; n];
    for slot in 1..shifted.instance.q() {
        let demand = remaining_demand(&shifted.instance, slot)?;
        if demand == 0 {
            continue;
        }
        let cover = min_cover_fptas(&CoverProblem { items: items.clone(), demand }, eps)?;
        for &id in &cover.ids {
            latest[id] = latest[id].max(slot);
        }
    }
    let on_shifted = Assignment::new(latest);
    debug_assert!(is_feasible(&shifted.instance, &on_shifted));
    let asg = shifted.map_back(&on_shifted)?;
    if !is_feasible(inst, &asg) {
        return Err(Error::Internal("shift-and-cover produced an infeasible assignment".into()));
    }
    let objective = objective_assignment(inst, &asg)?;
    Ok((objective, asg))
}

/// Number of ordered tuples of pairwise disjoint subsets `(S_1, …, S_slots)`
/// of an `n`-element set with every `|S_i| <= k`.
fn subpartition_count(n: usize, slots: usize, k: usize) -> BigUint {
    let mut binom = vec![vec![BigUint::zero(); n + 1]; n + 1];
    binom[0][0] = BigUint::one();
    for u in 1..=n {
        binom[u][0] = BigUint::one();
        for c in 1..=u {
            binom[u][c] = &binom[u - 1][c - 1] + &binom[u - 1][c];
        }
    }
    let mut f = vec![BigUint::one(); n + 1];
    for _ in 0..slots {
        let mut g = vec![BigUint::zero(); n + 1];
        for u in 0..=n {
            for c in 0..=k.min(u) {
                g[u] += &binom[u][c] * &f[u - c];
            }
        }
        f = g;
    }
    f[n].clone()
}

/// Guess-and-fill scheduler with the default candidate budget. See
/// [`constant_q_ptas_with_budget`].
pub fn constant_q_ptas(inst: &Instance, k: usize) -> Result<(Rat, Assignment), Error> {
    constant_q_ptas_with_budget(inst, k, DEFAULT_CANDIDATE_BUDGET)
}

/// Guess-and-fill scheduler, factor `1 + q/k`.
///
/// Enumerates every tuple of pairwise disjoint guess sets, one per arrival
/// slot after the first, each holding at most `k` jobs. A tuple is replayed
/// from the last slot backwards: guessed jobs land on their slot (unless an
/// earlier replay step already placed them later); whenever a guess of
/// exactly `k` jobs is placed the weight threshold rises to that guess's
/// smallest weight if larger; while the amount placed so far falls short of
/// the slot's remaining demand, the unassigned job within the threshold of
/// smallest weight-to-amount density is added (ties: larger amount, smaller
/// id), stopping early if none is eligible. Unplaced jobs go to the arrival
/// at time zero. The best feasible replay wins; ties prefer the
/// lexicographically smallest slot vector.
///
/// With `k >= n` every assignment appears among the candidates, so the
/// result is the exact optimum; in that regime the call delegates to the
/// assignment dynamic program, which provably returns the same objective and
/// the same tie-broken assignment at a fraction of the cost. The budget
/// bounds the work: the call errors with [`Error::BudgetExceeded`] when
/// neither the candidate count nor the dynamic program fits inside it.
pub fn constant_q_ptas_with_budget(
    inst: &Instance,
    k: usize,
    budget: u64,
) -> Result<(Rat, Assignment), Error> {
    ensure_valid(inst)?;
    require_zero_processing(inst)?;
    if k == 0 {
        return Err(Error::InvalidParameter("guess size k must be at least 1".into()));
    }
    let n = inst.n();
    let q = inst.q();
    if n == 0 {
        return Ok((rint(0), Assignment::new(Vec::new())));
    }
    if q <= 1 {
        let asg = Assignment::new(vec![0; n]);
        let objective = objective_assignment(inst, &asg)?;
        return Ok((objective, asg));
    }
    if k >= n {
        let kept = 1 + inst.arrivals[1..].iter().filter(|a| a.b > 0).count();
        let dp_cost = BigUint::from(3u32).pow(n as u32) * BigUint::from(kept as u64);
        if n <= DEFAULT_DP_CAP && dp_cost <= BigUint::from(budget) {
            return optimal_assignment_dp(inst);
        }
    }
    constant_q_ptas_literal(inst, k, budget)
}

/// The literal candidate enumeration behind [`constant_q_ptas`]; exposed to
/// the crate so tests can pit it against the dynamic program.
pub(crate) fn constant_q_ptas_literal(
    inst: &Instance,
    k: usize,
    budget: u64,
) -> Result<(Rat, Assignment), Error> {
    ensure_valid(inst)?;
    require_zero_processing(inst)?;
    if k == 0 {
        return Err(Error::InvalidParameter("guess size k must be at least 1".into()));
    }
    let n = inst.n();
    let q = inst.q();
    if n == 0 {
        return Ok((rint(0), Assignment::new(Vec::new())));
    }
    if q <= 1 {
        let asg = Assignment::new(vec![0; n]);
        let objective = objective_assignment(inst, &asg)?;
        return Ok((objective, asg));
    }
    if subpartition_count(n, q - 1, k) > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { budget });
    }
    let times: Vec<Rat> = inst.arrivals.iter().map(|a| a.t.clone()).collect();
    let st = ScaledTimes::new(&times)?;
    let total_weight = inst
        .jobs
        .iter()
        .try_fold(0u64, |acc, j| acc.checked_add(j.w))
        .ok_or_else(|| Error::NumericRange("total weight exceeds 64-bit range".into()))?;
    check_objective_range(total_weight, &BigInt::from(*st.scaled.last().unwrap()))?;
    let demands: Vec<u128> =
        (0..q).map(|i| remaining_demand(inst, i).map(u128::from)).collect::<Result<_, _>>()?;
    let mut prefix_supply: Vec<u128> = Vec::with_capacity(q);
    let mut acc = 0u128;
    for arr in &inst.arrivals {
        acc += u128::from(arr.b);
        prefix_supply.push(acc);
    }
    let total_requirement: u128 = inst.jobs.iter().map(|j| u128::from(j.a)).sum();

    let mut search = LiteralSearch {
        inst,
        st: &st,
        k,
        demands,
        prefix_supply,
        total_requirement,
        slots: vec![0; n],
        guessed: vec![false; n],
        assigned: vec![false; n],
        loads: vec![0; q],
        amount: 0,
        threshold: 0,
        objective: 0,
        guess_buf: Vec::new(),
        placed_stack: Vec::new(),
        best: None,
    };
    search.descend(q - 1);
    let Some((objective, slots)) = search.best else {
        return Err(Error::Internal("no feasible candidate despite a valid instance".into()));
    };
    Ok((st.to_rat(objective), Assignment::new(slots)))
}

/// Depth-first replay of all guess tuples for [`constant_q_ptas_literal`].
struct LiteralSearch<'a> {
    inst: &'a Instance,
    st: &'a ScaledTimes,
    k: usize,
    demands: Vec<u128>,
    prefix_supply: Vec<u128>,
    total_requirement: u128,
    slots: Vec<usize>,
    guessed: Vec<bool>,
    assigned: Vec<bool>,
    loads: Vec<u128>,
    amount: u128,
    threshold: u64,
    objective: u128,
    guess_buf: Vec<usize>,
    placed_stack: Vec<usize>,
    best: Option<(u128, Vec<usize>)>,
}

impl LiteralSearch<'_> {
    fn descend(&mut self, slot: usize) {
        if slot == 0 {
            self.finalize();
            return;
        }
        let mark = self.guess_buf.len();
        self.enumerate(slot, 0, mark);
    }

    /// Visits every guess set for `slot` drawn from the not-yet-guessed jobs;
    /// `self.guess_buf[mark..]` holds the members chosen so far.
    fn enumerate(&mut self, slot: usize, start: usize, mark: usize) {
        self.apply(slot, mark);
        if self.guess_buf.len() - mark < self.k {
            for id in start..self.inst.n() {
                if !self.guessed[id] {
                    self.guessed[id] = true;
                    self.guess_buf.push(id);
                    self.enumerate(slot, id + 1, mark);
                    self.guess_buf.pop();
                    self.guessed[id] = false;
                }
            }
        }
    }

    /// Replays the current guess on `slot` and recurses to the next slot.
    fn apply(&mut self, slot: usize, mark: usize) {
        let guess: Vec<usize> = self.guess_buf[mark..].to_vec();
        let placed_mark = self.placed_stack.len();
        for &id in &guess {
            if !self.assigned[id] {
                self.place(id, slot);
            }
        }
        let saved_threshold = self.threshold;
        if guess.len() == self.k {
            let min_w = guess.iter().map(|&id| self.inst.jobs[id].w).min().unwrap();
            self.threshold = self.threshold.max(min_w);
        }
        while self.amount < self.demands[slot] {
            let mut pick: Option<DensityKey> = None;
            for job in &self.inst.jobs {
                if self.assigned[job.id] || job.w > self.threshold {
                    continue;
                }
                let key = DensityKey { w: job.w, a: job.a, id: job.id };
                if pick.map_or(true, |p| key < p) {
                    pick = Some(key);
                }
            }
            match pick {
                Some(key) => self.place(key.id, slot),
                None => break,
            }
        }
        self.descend(slot - 1);
        self.threshold = saved_threshold;
        while self.placed_stack.len() > placed_mark {
            let id = self.placed_stack.pop().unwrap();
            self.unplace(id, slot);
        }
    }

    fn place(&mut self, id: usize, slot: usize) {
        let job = &self.inst.jobs[id];
        self.slots[id] = slot;
        self.assigned[id] = true;
        self.loads[slot] += u128::from(job.a);
        self.amount += u128::from(job.a);
        self.objective += u128::from(job.w) * self.st.scaled[slot];
        self.placed_stack.push(id);
    }

    fn unplace(&mut self, id: usize, slot: usize) {
        let job = &self.inst.jobs[id];
        self.slots[id] = 0;
        self.assigned[id] = false;
        self.loads[slot] -= u128::from(job.a);
        self.amount -= u128::from(job.a);
        self.objective -= u128::from(job.w) * self.st.scaled[slot];
    }

    fn finalize(&mut self) {
        // Unplaced jobs sit at the arrival at time zero.
        let mut cum_load = self.total_requirement - self.amount;
        for i in 0..self.loads.len() {
            if i > 0 {
                cum_load += self.loads[i];
            }
            if cum_load > self.prefix_supply[i] {
                return;
            }
        }
        let better = match &self.best {
            None => true,
            Some((obj, slots)) => {
                self.objective < *obj || (self.objective == *obj && self.slots < *slots)
            }
        };
        if better {
            self.best = Some((self.objective, self.slots.clone()));
        }
    }
}

/// Checks `0 < ε <= 1/4`.
fn check_eps_quarter(eps: &Rat) -> Result<(), Error> {
    let quarter = Rat::new(BigInt::one(), BigInt::from(4));
    if !eps.is_positive() || *eps > quarter {
        return Err(Error::InvalidParameter("epsilon must lie in (0, 1/4]".into()));
    }
    Ok(())
}

/// Smallest even window length `r` admissible for [`general_ptas`] at a given
/// `ε ∈ (0, 1/4]`: the least even `r` with `(1+ε)^(r/2) >= (2−2ε)/(1−2ε)`
/// and `r >= 2(1+ε)/ε²`.
pub fn minimal_admissible_r(eps: &Rat) -> Result<u64, Error> {
    check_eps_quarter(eps)?;
    let one = rint(1);
    let two = rint(2);
    let base = &one + eps;
    let target = (&two - &(&two * eps)) / (&one - &(&two * eps));
    let mut half = 1u64;
    let mut pow = base.clone();
    while pow < target {
        pow *= &base;
        half += 1;
    }
    let growth = 2 * half;
    let lower = &two * &base / (eps * eps);
    let mut floor_r = ceil_to_u64(&lower)
        .ok_or_else(|| Error::NumericRange("window length exceeds 64-bit range".into()))?;
    if floor_r % 2 == 1 {
        floor_r += 1;
    }
    Ok(growth.max(floor_r))
}

/// A geometric ladder of candidate slot times, latest first, plus a pool at
/// time zero. Rung `l` has time `scale · base^(top − l)`; rungs beyond the
/// shifted arrivals are padding with no supply of their own.
struct Ladder {
    times: Vec<Rat>,
    supplies: Vec<u64>,
    zero_supply: u64,
}

/// Sliding-window scheduler with approximation factor `1 + O(ε)` for
/// `ε ∈ (0, 1/4]`: default candidate budget. See
/// [`general_ptas_with_budget`].
pub fn general_ptas(inst: &Instance, eps: &Rat) -> Result<(Rat, Assignment), Error> {
    general_ptas_with_budget(inst, eps, DEFAULT_CANDIDATE_BUDGET)
}

/// Sliding-window scheduler with approximation factor `1 + O(ε)`.
///
/// Arrival times are rounded up to powers of `1 + ε` and laid out on a
/// descending ladder padded with `r = ` [`minimal_admissible_r`]`(ε)` extra
/// rungs below the earliest positive time. For each offset `ℓ = 1..r/2` the
/// scheduler slides a window of `r` rungs down the ladder; at every step the
/// jobs not yet fixed are scheduled inside the window — supply below the
/// window is pooled at time zero, supply inside is trimmed top-down until it
/// matches the unfixed requirement, and [`constant_q_ptas`] solves the small
/// sub-instance with guess size `⌈q_window/ε⌉` — after which the jobs landing
/// on the top half of the window are fixed there. Jobs never fixed go to
/// time zero. Each pass is mapped back to the original arrivals and
/// evaluated there; the best pass wins (ties: lexicographically smallest
/// slot vector).
///
/// Requires zero processing times and integer arrival times. The candidate
/// budget is passed through to the window solver.
pub fn general_ptas_with_budget(
    inst: &Instance,
    eps: &Rat,
    budget: u64,
) -> Result<(Rat, Assignment), Error> {
    ensure_valid(inst)?;
    require_zero_processing(inst)?;
    check_eps_quarter(eps)?;
    if !inst.integer_times() {
        return Err(Error::NonIntegerTime);
    }
    let n = inst.n();
    if n == 0 {
        return Ok((rint(0), Assignment::new(Vec::new())));
    }
    if inst.q() <= 1 {
        let asg = Assignment::new(vec![0; n]);
        let objective = objective_assignment(inst, &asg)?;
        return Ok((objective, asg));
    }
    let r = minimal_admissible_r(eps)? as usize;
    let base = &rint(1) + eps;
    let shifted = shift_arrivals(inst, &base)?;
    let sq = shifted.instance.q();
    let rungs = sq - 1 + r;
    let mut times = Vec::with_capacity(rungs);
    let mut supplies = vec![0u64; rungs];
    for (l, supply) in supplies.iter_mut().enumerate() {
        let exp = sq as i64 - 2 - l as i64;
        times.push(&shifted.scale * rpow(&base, exp));
        if l + 2 <= sq {
            *supply = shifted.instance.arrivals[sq - 1 - l].b;
        }
    }
    let ladder = Ladder { times, supplies, zero_supply: shifted.instance.arrivals[0].b };
    let original_times: Vec<Rat> = inst.arrivals.iter().map(|a| a.t.clone()).collect();

    let mut best: Option<(Rat, Assignment)> = None;
    for offset in 1..=r / 2 {
        let asg = run_pass(inst, &ladder, &original_times, eps, budget, r, offset)?;
        let objective = objective_assignment(inst, &asg)?;
        let better = match &best {
            None => true,
            Some((bo, ba)) => {
                objective < *bo || (objective == *bo && asg.slots < ba.slots)
            }
        };
        if better {
            best = Some((objective, asg));
        }
    }
    Ok(best.expect("r >= 2 guarantees at least one pass"))
}

/// One sliding pass of [`general_ptas_with_budget`] at a given offset.
/// Returns a feasible assignment on the original instance.
fn run_pass(
    inst: &Instance,
    ladder: &Ladder,
    original_times: &[Rat],
    eps: &Rat,
    budget: u64,
    r: usize,
    offset: usize,
) -> Result<Assignment, Error> {
    let n = inst.n();
    let rungs = ladder.supplies.len();
    let mut fixed: Vec<Option<usize>> = vec![None; n];
    // First window: rungs [0, r/2 + offset − 1], fixing rungs below `offset`;
    // the supply is taken as is.
    let first_end = (r / 2 + offset - 1).min(rungs - 1);
    solve_window(inst, ladder, eps, budget, 0, first_end, offset, false, &mut fixed)?;
    // Full windows of r rungs, advancing by r/2 and fixing their top half;
    // supply is trimmed to match the unfixed requirement.
    let mut s = offset;
    while s + r - 1 <= rungs - 1 {
        solve_window(inst, ladder, eps, budget, s, s + r - 1, s + r / 2, true, &mut fixed)?;
        s += r / 2;
    }
    // Map rungs to original arrivals: a job fixed at rung time T goes to the
    // latest arrival no later than T; unfixed jobs go to time zero.
    let mut slots = vec![0usize; n];
    for (id, f) in fixed.iter().enumerate() {
        if let Some(l) = f {
            let t = &ladder.times[*l];
            let pos = original_times.partition_point(|ot| ot <= t);
            debug_assert!(pos > 0);
            slots[id] = pos - 1;
        }
    }
    let asg = Assignment::new(slots);
    if !is_feasible(inst, &asg) {
        return Err(Error::Internal("sliding window produced an infeasible pass".into()));
    }
    Ok(asg)
}

/// Schedules the unfixed jobs inside the window `[s, e]` of the ladder and
/// fixes those landing on rungs below `fix_hi`.
#[allow(clippy::too_many_arguments)]
fn solve_window(
    inst: &Instance,
    ladder: &Ladder,
    eps: &Rat,
    budget: u64,
    s: usize,
    e: usize,
    fix_hi: usize,
    equalize: bool,
    fixed: &mut [Option<usize>],
) -> Result<(), Error> {
    let unfixed: Vec<usize> =
        (0..inst.n()).filter(|&id| fixed[id].is_none()).collect();
    if unfixed.is_empty() {
        return Ok(());
    }
    let unfixed_demand: u128 =
        unfixed.iter().map(|&id| u128::from(inst.jobs[id].a)).sum();
    let mut rung_supply: Vec<u128> =
        (s..=e).map(|l| u128::from(ladder.supplies[l])).collect();
    let below: u128 =
        (e + 1..ladder.supplies.len()).map(|l| u128::from(ladder.supplies[l])).sum();
    let mut pool: u128 = u128::from(ladder.zero_supply) + below;
    if equalize {
        let window_total: u128 = rung_supply.iter().sum::<u128>() + pool;
        if window_total < unfixed_demand {
            return Err(Error::Internal("window supply fell short of the unfixed demand".into()));
        }
        let mut excess = window_total - unfixed_demand;
        for v in rung_supply.iter_mut() {
            if excess == 0 {
                break;
            }
            let cut = excess.min(*v);
            *v -= cut;
            excess -= cut;
        }
        pool -= excess;
    }
    if rung_supply.iter().all(|&v| v == 0) {
        // Nothing can be placed on the window rungs; the sub-solver would
        // put every job at time zero and fix nothing.
        return Ok(());
    }
    let sub_jobs: Vec<Job> = unfixed
        .iter()
        .enumerate()
        .map(|(idx, &id)| Job { id: idx, p: 0, w: inst.jobs[id].w, a: inst.jobs[id].a })
        .collect();
    let mut sub_arrivals = Vec::with_capacity(e - s + 2);
    sub_arrivals.push(Arrival {
        t: rint(0),
        b: pool.try_into().map_err(|_| {
            Error::NumericRange("pooled supply exceeds 64-bit range".into())
        })?,
    });
    for l in (s..=e).rev() {
        sub_arrivals.push(Arrival {
            t: ladder.times[l].clone(),
            b: rung_supply[l - s] as u64,
        });
    }
    let sub = Instance { jobs: sub_jobs, arrivals: sub_arrivals };
    let q_sub = sub.q() as u64;
    let k_sub = ceil_to_u64(&(rint(q_sub) / eps))
        .ok_or_else(|| Error::NumericRange("window guess size exceeds 64-bit range".into()))?;
    let (_, sub_asg) = constant_q_ptas_with_budget(&sub, k_sub as usize, budget)?;
    for (idx, &slot) in sub_asg.slots.iter().enumerate() {
        if slot == 0 {
            continue;
        }
        let rung = e - (slot - 1);
        if rung < fix_hi {
            fixed[unfixed[idx]] = Some(rung);
        }
    }
    Ok(())
}
