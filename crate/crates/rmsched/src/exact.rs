//! Exact oracles for small instances.
//!
//! Three independent solvers are provided so they can cross-check each other:
//!
//! * [`optimal_assignment_dp`] — a subset dynamic program over arrival slots
//!   for zero-processing-time instances, `O(3^n · q)`;
//! * [`optimal_assignment_enumeration`] — plain enumeration of all `q^n`
//!   assignments, used to validate the dynamic program;
//! * [`optimal_ordering_bruteforce`] — all `n!` processing orders for general
//!   processing times, evaluated with an integer fast path that is itself
//!   cross-checked against [`simulate_ordering`].
//!
//! All three break objective ties towards the lexicographically smallest
//! solution, so their outputs are comparable verbatim. The module also hosts
//! the minimum-weight covering problem ([`CoverProblem`]) and its exhaustive
//! solver [`min_cover_bruteforce`], the ground truth for the covering FPTAS.
//!
//! [`simulate_ordering`]: crate::instance::simulate_ordering

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::Error;
use crate::instance::{ensure_valid, require_zero_processing, Assignment, Instance, Ordering};
use crate::rational::Rat;

/// Default job cap for the assignment dynamic program.
pub const DEFAULT_DP_CAP: usize = 14;
/// Default job cap for the ordering brute force.
pub const DEFAULT_ORDERING_CAP: usize = 9;
/// Default candidate budget for plain assignment enumeration.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;
/// Default item cap for the covering brute force.
pub const DEFAULT_COVER_CAP: usize = 20;

const UNASSIGNED: u8 = u8::MAX;
const MAX_DP_JOBS: usize = 16;

/// Arrival times scaled to a common integer grid.
///
/// `scaled[i] / denom` equals the `i`-th input time. Keeping times integral
/// lets the oracles run on `u128` instead of big rationals.
pub(crate) struct ScaledTimes {
    pub denom: BigInt,
    pub scaled: Vec<u128>,
}

impl ScaledTimes {
    pub fn new(times: &[Rat]) -> Result<Self, Error> {
        let mut denom = BigInt::one();
        for t in times {
            denom = denom.lcm(t.denom());
        }
        let scaled = times
            .iter()
            .map(|t| {
                (t.numer() * &denom / t.denom()).to_u128().ok_or_else(|| {
                    Error::NumericRange(format!("scaled arrival time {t} does not fit in 128 bits"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ScaledTimes { denom, scaled })
    }

    pub fn to_rat(&self, v: u128) -> Rat {
        Rat::new(BigInt::from(v), self.denom.clone())
    }
}

/// Checks that an objective accumulated as `Σ w_j · c_j` with `c_j <= c_max`
/// (all on the scaled grid) stays within `u128`.
pub(crate) fn check_objective_range(total_weight: u64, c_max: &BigInt) -> Result<(), Error> {
    let bound = BigInt::from(total_weight) * c_max;
    if bound > BigInt::from(u128::MAX) {
        return Err(Error::NumericRange(
            "objective bound exceeds 128-bit integer range".into(),
        ));
    }
    Ok(())
}

/// Minimum-objective assignment for a zero-processing-time instance, with the
/// default job cap. Ties break towards the lexicographically smallest slot
/// vector. See [`optimal_assignment_dp_capped`].
pub fn optimal_assignment_dp(inst: &Instance) -> Result<(Rat, Assignment), Error> {
    optimal_assignment_dp_capped(inst, DEFAULT_DP_CAP)
}

/// Subset dynamic program over arrival slots.
///
/// Processes the arrivals in time order; the state after slot `k` is the set
/// of jobs assigned to slots `<= k`, feasible when its total requirement fits
/// the supply accumulated so far. Arrivals with no supply (other than the one
/// at time zero) are skipped: moving a job from such a slot to its
/// predecessor is always feasible and never later, so the lexicographically
/// smallest optimum does not use them. Per state the program keeps the best
/// `(cost, partial assignment)` pair, which provably yields the overall
/// lexicographically smallest minimum-cost assignment.
pub fn optimal_assignment_dp_capped(
    inst: &Instance,
    cap: usize,
) -> Result<(Rat, Assignment), Error> {
    ensure_valid(inst)?;
    require_zero_processing(inst)?;
    let n = inst.n();
    let cap = cap.min(MAX_DP_JOBS);
    if n > cap {
        return Err(Error::CapExceeded { what: "assignment dynamic program", n, cap });
    }
    if n == 0 {
        return Ok((Rat::from_integer(BigInt::ZERO), Assignment::new(Vec::new())));
    }

    let kept: Vec<usize> = (0..inst.q()).filter(|&i| i == 0 || inst.arrivals[i].b > 0).collect();
    if *kept.last().unwrap() >= UNASSIGNED as usize {
        return Err(Error::NumericRange(format!(
            "arrival index {} too large for the dynamic program",
            kept.last().unwrap()
        )));
    }
    let times: Vec<Rat> = kept.iter().map(|&i| inst.arrivals[i].t.clone()).collect();
    let st = ScaledTimes::new(&times)?;

    // Cumulative supply at each kept slot (skipped slots carry no supply).
    let mut cumsup = Vec::with_capacity(kept.len());
    let mut acc = 0u64;
    let mut it = kept.iter().peekable();
    for (i, r) in inst.arrivals.iter().enumerate() {
        acc += r.b;
        if it.peek() == Some(&&i) {
            it.next();
            cumsup.push(acc);
        } else if it.peek().map_or(false, |&&k| k < i) {
            unreachable!();
        }
    }
    // Supply after the last kept slot belongs to skipped slots and is zero.
    debug_assert_eq!(cumsup.len(), kept.len());

    let full = (1usize << n) - 1;
    let mut asum = vec![0u64; full + 1];
    let mut wsum = vec![0u64; full + 1];
    for m in 1..=full {
        let j = m.trailing_zeros() as usize;
        asum[m] = asum[m & (m - 1)] + inst.jobs[j].a;
        wsum[m] = wsum[m & (m - 1)] + inst.jobs[j].w;
    }
    let t_max = st.scaled.last().copied().unwrap_or(0);
    check_objective_range(wsum[full], &BigInt::from(t_max))?;

    let invalid = (u128::MAX, [UNASSIGNED; MAX_DP_JOBS]);
    let mut dp = vec![invalid; full + 1];
    dp[0].0 = 0;
    for (stage, &orig) in kept.iter().enumerate() {
        let t = st.scaled[stage];
        let cs = cumsup[stage];
        let mut next = vec![invalid; full + 1];
        for sp in 0..=full {
            if asum[sp] > cs {
                continue;
            }
            let slot = &mut next[sp];
            let mut d = sp;
            loop {
                let (pc, ppart) = &dp[sp ^ d];
                if *pc != u128::MAX {
                    let cost = pc + u128::from(wsum[d]) * t;
                    if cost <= slot.0 {
                        let mut part = *ppart;
                        let mut bits = d;
                        while bits != 0 {
                            let j = bits.trailing_zeros() as usize;
                            part[j] = orig as u8;
                            bits &= bits - 1;
                        }
                        if cost < slot.0 || part < slot.1 {
                            *slot = (cost, part);
                        }
                    }
                }
                if d == 0 {
                    break;
                }
                d = (d - 1) & sp;
            }
        }
        dp = next;
    }

    let (cost, part) = &dp[full];
    if *cost == u128::MAX {
        return Err(Error::Internal("no feasible assignment despite sufficient supply".into()));
    }
    let slots = part[..n].iter().map(|&s| s as usize).collect();
    Ok((st.to_rat(*cost), Assignment::new(slots)))
}

/// Minimum-objective assignment by enumerating all `q^n` slot vectors, with
/// the default candidate budget. See
/// [`optimal_assignment_enumeration_capped`].
pub fn optimal_assignment_enumeration(inst: &Instance) -> Result<(Rat, Assignment), Error> {
    optimal_assignment_enumeration_capped(inst, DEFAULT_ENUMERATION_BUDGET)
}

/// Enumerates every assignment in lexicographic order, keeping the first
/// strict improvement, so the reported optimum is the lexicographically
/// smallest one. Errors with [`Error::BudgetExceeded`] when `q^n` exceeds
/// `budget`. Independent of the dynamic program, and deliberately free of its
/// slot-skipping optimization.
pub fn optimal_assignment_enumeration_capped(
    inst: &Instance,
    budget: u64,
) -> Result<(Rat, Assignment), Error> {
    ensure_valid(inst)?;
    require_zero_processing(inst)?;
    let (n, q) = (inst.n(), inst.q());
    if n == 0 {
        return Ok((Rat::from_integer(BigInt::ZERO), Assignment::new(Vec::new())));
    }
    let mut candidates = 1u64;
    for _ in 0..n {
        candidates = candidates
            .checked_mul(q as u64)
            .filter(|&c| c <= budget)
            .ok_or(Error::BudgetExceeded { budget })?;
    }

    let times: Vec<Rat> = inst.arrivals.iter().map(|r| r.t.clone()).collect();
    let st = ScaledTimes::new(&times)?;
    let t_max = st.scaled.iter().max().copied().unwrap_or(0);
    let total_w: u64 = inst.jobs.iter().map(|j| j.w).sum();
    check_objective_range(total_w, &BigInt::from(t_max))?;

    let mut cumsup = Vec::with_capacity(q);
    let mut acc = 0u64;
    for r in &inst.arrivals {
        acc += r.b;
        cumsup.push(acc);
    }

    let mut slots = vec![0usize; n];
    let mut load = vec![0u64; q];
    let mut best: Option<(u128, Vec<usize>)> = None;
    'outer: loop {
        load.iter_mut().for_each(|l| *l = 0);
        for (j, &s) in slots.iter().enumerate() {
            load[s] += inst.jobs[j].a;
        }
        let mut cum = 0u64;
        let mut feasible = true;
        for k in 0..q {
            cum += load[k];
            if cum > cumsup[k] {
                feasible = false;
                break;
            }
        }
        if feasible {
            let obj: u128 = slots
                .iter()
                .enumerate()
                .map(|(j, &s)| u128::from(inst.jobs[j].w) * st.scaled[s])
                .sum();
            if best.as_ref().map_or(true, |(b, _)| obj < *b) {
                best = Some((obj, slots.clone()));
            }
        }
        let mut i = n;
        loop {
            if i == 0 {
                break 'outer;
            }
            i -= 1;
            slots[i] += 1;
            if slots[i] < q {
                break;
            }
            slots[i] = 0;
        }
    }
    match best {
        Some((obj, slots)) => Ok((st.to_rat(obj), Assignment::new(slots))),
        None => Err(Error::Internal("no feasible assignment despite sufficient supply".into())),
    }
}

/// Minimum-objective processing order by brute force over all `n!`
/// permutations, with the default job cap. See
/// [`optimal_ordering_bruteforce_capped`].
pub fn optimal_ordering_bruteforce(inst: &Instance) -> Result<(Rat, Ordering), Error> {
    optimal_ordering_bruteforce_capped(inst, DEFAULT_ORDERING_CAP)
}

/// Evaluates every processing order with an integer re-implementation of the
/// earliest-start simulation and keeps the first strict improvement in
/// lexicographic permutation order.
pub fn optimal_ordering_bruteforce_capped(
    inst: &Instance,
    cap: usize,
) -> Result<(Rat, Ordering), Error> {
    ensure_valid(inst)?;
    let n = inst.n();
    if n > cap {
        return Err(Error::CapExceeded { what: "ordering brute force", n, cap });
    }
    if n == 0 {
        return Ok((Rat::from_integer(BigInt::ZERO), Ordering::new(Vec::new())));
    }

    let times: Vec<Rat> = inst.arrivals.iter().map(|r| r.t.clone()).collect();
    let st = ScaledTimes::new(&times)?;
    let p_scaled: Vec<u128> = inst
        .jobs
        .iter()
        .map(|j| {
            (BigInt::from(j.p) * &st.denom).to_u128().ok_or_else(|| {
                Error::NumericRange(format!("scaled processing time of job {} overflows", j.id))
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    let t_max = st.scaled.iter().max().copied().unwrap_or(0);
    let p_total: u128 = p_scaled.iter().sum();
    let total_w: u64 = inst.jobs.iter().map(|j| j.w).sum();
    check_objective_range(total_w, &(BigInt::from(t_max) + BigInt::from(p_total)))?;

    let mut cumsup = Vec::with_capacity(inst.q());
    let mut acc = 0u64;
    for r in &inst.arrivals {
        acc += r.b;
        cumsup.push(acc);
    }

    let evaluate = |perm: &[usize]| -> u128 {
        let mut cum_req = 0u64;
        let mut prev_c = 0u128;
        let mut obj = 0u128;
        for &j in perm {
            let job = &inst.jobs[j];
            cum_req += job.a;
            let ready = if cum_req == 0 {
                0
            } else {
                st.scaled[cumsup.partition_point(|&s| s < cum_req)]
            };
            let start = prev_c.max(ready);
            let c = start + p_scaled[j];
            obj += u128::from(job.w) * c;
            prev_c = c;
        }
        obj
    };

    let mut perm: Vec<usize> = (0..n).collect();
    let mut best_obj = evaluate(&perm);
    let mut best_perm = perm.clone();
    while next_permutation(&mut perm) {
        let obj = evaluate(&perm);
        if obj < best_obj {
            best_obj = obj;
            best_perm = perm.clone();
        }
    }
    Ok((st.to_rat(best_obj), Ordering::new(best_perm)))
}

/// Advances `perm` to its lexicographic successor; returns false at the last
/// permutation.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// An item available for covering a demand: id, weight, amount.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverItem {
    pub id: usize,
    pub w: u64,
    pub a: u64,
}

/// Pick a minimum-weight set of items whose amounts sum to at least `demand`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverProblem {
    pub items: Vec<CoverItem>,
    pub demand: u64,
}

/// A set of items covering a demand: sorted ids, total weight, total amount.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSolution {
    pub ids: Vec<usize>,
    pub weight: u64,
    pub coverage: u64,
}

/// Exhaustive minimum-weight cover over at most [`DEFAULT_COVER_CAP`] items.
/// Ties break towards the lexicographically smallest sorted id list.
pub fn min_cover_bruteforce(cp: &CoverProblem) -> Result<CoverSolution, Error> {
    let m = cp.items.len();
    if m > DEFAULT_COVER_CAP {
        return Err(Error::CapExceeded { what: "covering brute force", n: m, cap: DEFAULT_COVER_CAP });
    }
    let available: u128 = cp.items.iter().map(|i| u128::from(i.a)).sum();
    if available < u128::from(cp.demand) {
        return Err(Error::UncoverableDemand {
            demand: cp.demand,
            available: available.try_into().unwrap_or(u64::MAX),
        });
    }
    let mut best: Option<(u128, Vec<usize>, u128)> = None;
    for mask in 0u32..(1u32 << m) {
        let mut weight = 0u128;
        let mut coverage = 0u128;
        for (i, item) in cp.items.iter().enumerate() {
            if mask >> i & 1 == 1 {
                weight += u128::from(item.w);
                coverage += u128::from(item.a);
            }
        }
        if coverage < u128::from(cp.demand) {
            continue;
        }
        let better = match &best {
            None => true,
            Some((bw, bids, _)) => {
                weight < *bw || (weight == *bw && {
                    let mut ids: Vec<usize> =
                        (0..m).filter(|i| mask >> i & 1 == 1).map(|i| cp.items[i].id).collect();
                    ids.sort_unstable();
                    ids < *bids
                })
            }
        };
        if better {
            let mut ids: Vec<usize> =
                (0..m).filter(|i| mask >> i & 1 == 1).map(|i| cp.items[i].id).collect();
            ids.sort_unstable();
            best = Some((weight, ids, coverage));
        }
    }
    let (weight, ids, coverage) = best.unwrap();
    Ok(CoverSolution {
        ids,
        weight: weight.try_into().map_err(|_| {
            Error::NumericRange("cover weight exceeds 64-bit integer range".into())
        })?,
        coverage: coverage.try_into().unwrap_or(u64::MAX),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{is_feasible, objective_assignment, simulate_ordering};
    use crate::rational::{rfrac, rint};

    fn five_job_instance() -> Instance {
        Instance::new(
            &[(0, 8, 2), (0, 8, 2), (0, 9, 95), (0, 10, 100), (0, 30, 400)],
            &[(0, 499), (1, 100)],
        )
    }

    #[test]
    fn dp_solves_the_five_job_instance() {
        let (obj, asg) = optimal_assignment_dp(&five_job_instance()).unwrap();
        assert_eq!(obj, rint(10));
        assert_eq!(asg.slots, vec![0, 0, 0, 1, 0]);
    }

    #[test]
    fn dp_breaks_ties_lexicographically() {
        let inst = Instance::new(&[(0, 1, 1), (0, 1, 1)], &[(0, 1), (1, 1)]);
        let (obj, asg) = optimal_assignment_dp(&inst).unwrap();
        assert_eq!(obj, rint(1));
        assert_eq!(asg.slots, vec![0, 1]);
    }

    #[test]
    fn dp_handles_empty_and_zero_requirement_jobs() {
        let (obj, asg) = optimal_assignment_dp(&Instance::new(&[], &[])).unwrap();
        assert_eq!(obj, rint(0));
        assert!(asg.slots.is_empty());

        let inst = Instance::new(&[(0, 5, 0), (0, 1, 2)], &[(0, 2)]);
        let (obj, asg) = optimal_assignment_dp(&inst).unwrap();
        assert_eq!(obj, rint(0));
        assert_eq!(asg.slots, vec![0, 0]);
    }

    #[test]
    fn dp_respects_its_cap() {
        let jobs: Vec<(u64, u64, u64)> = (0..5).map(|_| (0, 1, 1)).collect();
        let inst = Instance::new(&jobs, &[(0, 5)]);
        assert!(matches!(
            optimal_assignment_dp_capped(&inst, 4),
            Err(Error::CapExceeded { n: 5, cap: 4, .. })
        ));
    }

    #[test]
    fn dp_matches_enumeration_including_ties() {
        let instances = vec![
            five_job_instance(),
            Instance::new(&[(0, 2, 1), (0, 2, 1), (0, 1, 3)], &[(0, 3), (1, 1), (4, 1)]),
            // Interior arrival with no supply: the dynamic program skips it,
            // the enumeration does not; results must still agree.
            Instance::new(&[(0, 3, 2), (0, 1, 1)], &[(0, 1), (1, 0), (2, 2)]),
            Instance::new(&[(0, 1, 1), (0, 1, 1), (0, 1, 1)], &[(0, 1), (2, 1), (5, 1)]),
            // Surplus supply.
            Instance::new(&[(0, 4, 2), (0, 2, 2)], &[(0, 3), (1, 9)]),
        ];
        for inst in instances {
            let (od, ad) = optimal_assignment_dp(&inst).unwrap();
            let (oe, ae) = optimal_assignment_enumeration(&inst).unwrap();
            assert_eq!(od, oe, "objectives differ on {inst:?}");
            assert_eq!(ad, ae, "assignments differ on {inst:?}");
            assert!(is_feasible(&inst, &ad));
            assert_eq!(objective_assignment(&inst, &ad).unwrap(), od);
        }
    }

    #[test]
    fn dp_matches_enumeration_on_random_instances() {
        let mut state = 0x9E3779B97F4A7C15u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..120 {
            let n = (next() % 5 + 1) as usize;
            let q = (next() % 4 + 1) as usize;
            let jobs: Vec<(u64, u64, u64)> =
                (0..n).map(|_| (0, next() % 10, next() % 6 + 1)).collect();
            let need: u64 = jobs.iter().map(|j| j.2).sum();
            let surplus = next() % 4;
            let mut remaining = need + surplus;
            let mut arrivals = Vec::new();
            let mut t = 0u64;
            for i in 0..q {
                let b = if i + 1 == q { remaining } else { next() % (remaining + 1) };
                remaining -= b;
                arrivals.push((t, b));
                t += next() % 5 + 1;
            }
            let inst = Instance::new(&jobs, &arrivals);
            let (od, ad) = optimal_assignment_dp(&inst).unwrap();
            let (oe, ae) = optimal_assignment_enumeration(&inst).unwrap();
            assert_eq!(od, oe, "objectives differ on {inst:?}");
            assert_eq!(ad, ae, "assignments differ on {inst:?}");
        }
    }

    #[test]
    fn enumeration_respects_its_budget() {
        let jobs: Vec<(u64, u64, u64)> = (0..4).map(|_| (0, 1, 1)).collect();
        let inst = Instance::new(&jobs, &[(0, 2), (1, 2)]);
        assert!(matches!(
            optimal_assignment_enumeration_capped(&inst, 15),
            Err(Error::BudgetExceeded { budget: 15 })
        ));
        assert!(optimal_assignment_enumeration_capped(&inst, 16).is_ok());
    }

    #[test]
    fn bruteforce_identity_is_optimal_on_tight_family() {
        let inst = Instance::new(
            &[(1, 1, 1), (1, 1, 1), (0, 1, 1), (0, 1, 1), (1, 1, 1), (1, 1, 1)],
            &[(0, 1), (1, 1), (2, 3), (3, 1)],
        );
        let (obj, ord) = optimal_ordering_bruteforce(&inst).unwrap();
        assert_eq!(obj, rint(14));
        assert_eq!(ord.order, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(simulate_ordering(&inst, &ord).unwrap().objective, rint(14));
    }

    #[test]
    fn bruteforce_fast_path_matches_rational_simulation() {
        let mut state = 0xD1B54A32D192ED03u64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for _ in 0..60 {
            let n = (next() % 5 + 1) as usize;
            let q = (next() % 3 + 1) as usize;
            let jobs: Vec<(u64, u64, u64)> =
                (0..n).map(|_| (next() % 4, next() % 8, next() % 5)).collect();
            let need: u64 = jobs.iter().map(|j| j.2).sum();
            let mut remaining = need + next() % 3;
            let mut arrivals = Vec::new();
            let mut t = 0u64;
            for i in 0..q {
                let b = if i + 1 == q { remaining } else { next() % (remaining + 1) };
                remaining -= b;
                arrivals.push((t, b));
                t += next() % 6 + 1;
            }
            let inst = Instance::new(&jobs, &arrivals);
            let (obj, ord) = optimal_ordering_bruteforce(&inst).unwrap();
            assert_eq!(simulate_ordering(&inst, &ord).unwrap().objective, obj);
            // The reported optimum is no worse than any sampled ordering.
            let mut perm: Vec<usize> = (0..n).collect();
            for _ in 0..5 {
                let i = (next() % n as u64) as usize;
                let j = (next() % n as u64) as usize;
                perm.swap(i, j);
                let eval = simulate_ordering(&inst, &Ordering::new(perm.clone())).unwrap();
                assert!(obj <= eval.objective);
            }
        }
    }

    #[test]
    fn bruteforce_handles_rational_arrival_times() {
        let inst = Instance {
            jobs: Instance::new(&[(0, 2, 1), (1, 3, 1)], &[]).jobs,
            arrivals: vec![
                crate::instance::Arrival { t: rint(0), b: 1 },
                crate::instance::Arrival { t: rfrac(3, 2), b: 1 },
            ],
        };
        let (obj, ord) = optimal_ordering_bruteforce(&inst).unwrap();
        assert_eq!(simulate_ordering(&inst, &ord).unwrap().objective, obj);
        // Job 1 first: C_1 = 1, C_0 = 3/2; objective 3 + 3 = 6.
        // Job 0 first: C_0 = 0, C_1 = 5/2; objective 0 + 15/2.
        assert_eq!(obj, rint(6));
        assert_eq!(ord.order, vec![1, 0]);
    }

    #[test]
    fn bruteforce_respects_its_cap() {
        let jobs: Vec<(u64, u64, u64)> = (0..10).map(|_| (1, 1, 0)).collect();
        let inst = Instance::new(&jobs, &[(0, 1)]);
        assert!(matches!(
            optimal_ordering_bruteforce(&inst),
            Err(Error::CapExceeded { n: 10, cap: 9, .. })
        ));
    }

    #[test]
    fn next_permutation_visits_lexicographic_order() {
        let mut perm = vec![0, 1, 2];
        let mut seen = vec![perm.clone()];
        while next_permutation(&mut perm) {
            seen.push(perm.clone());
        }
        assert_eq!(
            seen,
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0],
            ]
        );
    }

    #[test]
    fn cover_bruteforce_picks_minimum_weight() {
        let cp = CoverProblem {
            items: vec![
                CoverItem { id: 0, w: 5, a: 3 },
                CoverItem { id: 1, w: 2, a: 2 },
                CoverItem { id: 2, w: 2, a: 2 },
                CoverItem { id: 3, w: 9, a: 10 },
            ],
            demand: 4,
        };
        let sol = min_cover_bruteforce(&cp).unwrap();
        assert_eq!(sol.weight, 4);
        assert_eq!(sol.ids, vec![1, 2]);
        assert_eq!(sol.coverage, 4);
    }

    #[test]
    fn cover_bruteforce_breaks_ties_by_id_list() {
        let cp = CoverProblem {
            items: vec![
                CoverItem { id: 0, w: 3, a: 4 },
                CoverItem { id: 1, w: 3, a: 4 },
            ],
            demand: 4,
        };
        let sol = min_cover_bruteforce(&cp).unwrap();
        assert_eq!(sol.ids, vec![0]);
    }

    #[test]
    fn cover_bruteforce_handles_zero_demand_and_shortfall() {
        let cp = CoverProblem { items: vec![CoverItem { id: 7, w: 1, a: 1 }], demand: 0 };
        let sol = min_cover_bruteforce(&cp).unwrap();
        assert_eq!((sol.weight, sol.ids.len(), sol.coverage), (0, 0, 0));

        let cp = CoverProblem { items: vec![CoverItem { id: 0, w: 1, a: 1 }], demand: 3 };
        assert!(matches!(
            min_cover_bruteforce(&cp),
            Err(Error::UncoverableDemand { demand: 3, available: 1 })
        ));
    }
}
