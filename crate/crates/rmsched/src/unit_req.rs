//! The unit-requirement variant: every job consumes exactly one resource
//! unit.
//!
//! Provides shortest-processing-time-first ([`spt_schedule`], a 3/2
//! approximation for the unweighted sum of completion times), the parametric
//! family on which its ratio approaches 3/2 ([`spt_tight_family`]), and the
//! reduction from 3-Partition ([`three_partition_instance`]) that shows the
//! variant is strongly NP-hard, together with the certificate schedule for
//! yes-instances ([`partition_to_schedule`]).

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::instance::{ensure_valid, simulate_ordering, Instance, Ordering, ScheduleEval};
use crate::rational::{rint, Rat};

fn require_unit_requirements(inst: &Instance) -> Result<(), Error> {
    if let Some(job) = inst.jobs.iter().find(|j| j.a != 1) {
        return Err(Error::NonUnitRequirement { job: job.id, a: job.a });
    }
    Ok(())
}

/// Shortest processing time first for unit-requirement instances: sorts jobs
/// by `(p, id)` and runs the earliest-start simulation. For unit weights the
/// resulting objective is at most 3/2 times the optimum.
pub fn spt_schedule(inst: &Instance) -> Result<(Ordering, ScheduleEval), Error> {
    ensure_valid(inst)?;
    require_unit_requirements(inst)?;
    let mut order: Vec<usize> = (0..inst.n()).collect();
    order.sort_by_key(|&j| (inst.jobs[j].p, j));
    let ord = Ordering::new(order);
    let eval = simulate_ordering(inst, &ord)?;
    Ok((ord, eval))
}

/// The family on which shortest-processing-time-first approaches its 3/2
/// bound. Jobs (all unit weight and requirement): `k1` jobs with `p = 1`
/// (ids `0..k1`), then `k1` jobs with `p = 0`, then `k2` jobs with `p = 1`.
/// Supply: one unit at each of `t = 0..k1`, except that `k1 + 1` units
/// arrive together at `t = k1`, and one unit at each of
/// `t = k1+1 .. k1+k2-1`.
///
/// Processing the jobs in id order is optimal; shortest-first schedules the
/// zero-length jobs first and pushes every unit-length job back.
pub fn spt_tight_family(k1: u64, k2: u64) -> Instance {
    assert!(k1 >= 1 && k2 >= 1, "the tight family needs k1 >= 1 and k2 >= 1");
    let mut jobs = Vec::new();
    jobs.extend((0..k1).map(|_| (1, 1, 1)));
    jobs.extend((0..k1).map(|_| (0, 1, 1)));
    jobs.extend((0..k2).map(|_| (1, 1, 1)));
    let mut arrivals: Vec<(u64, u64)> = (0..k1).map(|t| (t, 1)).collect();
    arrivals.push((k1, k1 + 1));
    arrivals.extend((k1 + 1..k1 + k2).map(|t| (t, 1)));
    Instance::new(&jobs, &arrivals)
}

/// Closed form of the shortest-first objective on the symmetric family
/// (`k1 = k2 = k`): `(9k² + k) / 2`.
pub fn spt_tight_spt_objective(k: u64) -> Rat {
    rint(9 * k * k + k) / rint(2)
}

/// Closed form of the optimal objective on the symmetric family: `3k² + k`.
pub fn spt_tight_optimal_objective(k: u64) -> Rat {
    rint(3 * k * k + k)
}

/// The ratio of the two closed forms, `(9k + 1) / (6k + 2)`. Increasing in
/// `k` with limit 3/2.
pub fn spt_tight_ratio(k: u64) -> Rat {
    rint(9 * k + 1) / rint(6 * k + 2)
}

/// Class of a job created by the 3-Partition reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JobClass {
    /// Carries one element of the 3-Partition input as its processing time.
    Normal,
    /// Unit-length filler; one per supply unit inside a block.
    Small,
    /// Length-`K` tail job keeping the machine busy after the blocks.
    Large,
}

/// A 3-Partition input: `3n` positive integers `xs`, each strictly between
/// `b/4` and `b/2`, summing to `n · b`. Asking whether they split into `n`
/// triples that each sum to `b` is strongly NP-hard.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ThreePartitionInput {
    pub b: u64,
    pub xs: Vec<u64>,
}

impl ThreePartitionInput {
    /// Number of triples.
    pub fn n(&self) -> usize {
        self.xs.len() / 3
    }

    /// Checks the structural requirements of a 3-Partition input.
    pub fn validate(&self) -> Result<(), Error> {
        if self.xs.is_empty() || self.xs.len() % 3 != 0 {
            return Err(Error::InvalidParameter(format!(
                "a 3-Partition input needs a positive multiple of 3 elements, got {}",
                self.xs.len()
            )));
        }
        let n = self.n() as u64;
        let sum: u64 = self.xs.iter().sum();
        if sum != n * self.b {
            return Err(Error::InvalidParameter(format!(
                "elements sum to {sum}, expected n * b = {}",
                n * self.b
            )));
        }
        for (i, &x) in self.xs.iter().enumerate() {
            if !(4 * x > self.b && 2 * x < self.b) {
                return Err(Error::InvalidParameter(format!(
                    "element {i} = {x} is not strictly between b/4 and b/2 (b = {})",
                    self.b
                )));
            }
        }
        Ok(())
    }
}

/// Data describing how a reduction instance was built.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionArtifacts {
    /// The padding length `K = 4 n b`.
    pub k: u64,
    /// Class of each job, by job id.
    pub labels: Vec<JobClass>,
    /// The decision threshold: the input is a yes-instance if and only if
    /// some schedule has total delay at most this value.
    pub threshold: u64,
}

const MAX_REDUCTION_JOBS: u64 = 1_000_000;

/// Builds the scheduling instance of the reduction from 3-Partition.
///
/// With `K = 4 n b` and block span `S = b + K`, the instance has, per triple
/// index `i < n`, three supply units at `t = i·S` and one unit at each of
/// `t = i·S + b .. i·S + b + K - 1`; after the blocks, one unit at each of
/// `t = n·S + j·K` for `j < n·K`. Jobs (unit weight and requirement): the
/// `3n` input elements as processing times, `n·K` unit-length jobs, and
/// `n·K` jobs of length `K`. The input splits into triples summing to `b`
/// exactly when the instance has a schedule with total delay at most `n·b`
/// (see [`total_delay`]).
pub fn three_partition_instance(
    input: &ThreePartitionInput,
) -> Result<(Instance, ReductionArtifacts), Error> {
    input.validate()?;
    let n = input.n() as u64;
    let b = input.b;
    let k = 4 * n * b;
    let total_jobs = 3 * n + 2 * n * k;
    if total_jobs > MAX_REDUCTION_JOBS {
        return Err(Error::InvalidParameter(format!(
            "reduction would create {total_jobs} jobs; refusing above {MAX_REDUCTION_JOBS}"
        )));
    }
    let span = b + k;

    let mut jobs: Vec<(u64, u64, u64)> = Vec::with_capacity(total_jobs as usize);
    let mut labels = Vec::with_capacity(total_jobs as usize);
    for &x in &input.xs {
        jobs.push((x, 1, 1));
        labels.push(JobClass::Normal);
    }
    for _ in 0..n * k {
        jobs.push((1, 1, 1));
        labels.push(JobClass::Small);
    }
    for _ in 0..n * k {
        jobs.push((k, 1, 1));
        labels.push(JobClass::Large);
    }

    let mut arrivals: Vec<(u64, u64)> = Vec::new();
    for i in 0..n {
        arrivals.push((i * span, 3));
        for j in b..span {
            arrivals.push((i * span + j, 1));
        }
    }
    for j in 0..n * k {
        arrivals.push((n * span + j * k, 1));
    }
    arrivals.sort_by_key(|&(t, _)| t);

    let inst = Instance::new(&jobs, &arrivals);
    debug_assert!(crate::instance::validate(&inst).is_empty());
    Ok((inst, ReductionArtifacts { k, labels, threshold: n * b }))
}

/// Total delay of a schedule on a unit-requirement, balanced instance:
/// `Σ_j (start_j − τ_j)` where `τ_1 <= τ_2 <= …` are the arrival times of
/// the individual supply units and the `j`-th job to start is matched with
/// `τ_j`. Equals `Σ_j C_j` minus an instance constant, so minimizing delay
/// and minimizing the unweighted objective are the same problem; delay is
/// never negative.
pub fn total_delay(inst: &Instance, eval: &ScheduleEval) -> Result<Rat, Error> {
    require_unit_requirements(inst)?;
    let supply = inst.total_supply();
    let requirement = inst.total_requirement();
    if supply != requirement {
        return Err(Error::UnbalancedSupply { supply, requirement });
    }
    let mut completion_sum = Rat::from_integer(0.into());
    for c in &eval.completion {
        completion_sum += c;
    }
    let mut unit_sum = Rat::from_integer(0.into());
    for r in &inst.arrivals {
        unit_sum += &r.t * rint(r.b);
    }
    let p_sum: u64 = inst.jobs.iter().map(|j| j.p).sum();
    Ok(completion_sum - unit_sum - rint(p_sum))
}

/// Searches for a partition of the elements into triples each summing to
/// `b`. Returns the lexicographically first partition, or `None` when the
/// 3-Partition instance is a no-instance. Exponential backtracking search,
/// meant for desk-scale inputs.
pub fn find_partition(input: &ThreePartitionInput) -> Result<Option<Vec<[usize; 3]>>, Error> {
    input.validate()?;
    fn descend(xs: &[u64], b: u64, used: &mut [bool], acc: &mut Vec<[usize; 3]>) -> bool {
        let Some(first) = used.iter().position(|&u| !u) else {
            return true;
        };
        used[first] = true;
        for second in first + 1..xs.len() {
            if used[second] || xs[first] + xs[second] >= b {
                continue;
            }
            used[second] = true;
            for third in second + 1..xs.len() {
                if used[third] || xs[first] + xs[second] + xs[third] != b {
                    continue;
                }
                used[third] = true;
                acc.push([first, second, third]);
                if descend(xs, b, used, acc) {
                    return true;
                }
                acc.pop();
                used[third] = false;
            }
            used[second] = false;
        }
        used[first] = false;
        false
    }
    let mut used = vec![false; input.xs.len()];
    let mut acc = Vec::with_capacity(input.n());
    let found = descend(&input.xs, input.b, &mut used, &mut acc);
    Ok(found.then_some(acc))
}

/// The certificate schedule derived from a partition into triples.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub ordering: Ordering,
    pub eval: ScheduleEval,
    /// Total delay of the schedule; at most the reduction threshold.
    pub delay: Rat,
}

/// Turns a partition of the elements into triples into the certificate
/// schedule of the reduction instance: per block, the triple's jobs in
/// ascending processing time, then the unit-length fillers; the length-`K`
/// jobs run after the last block. Each triple must cover ids `0..3n` exactly
/// once and sum to `b`.
pub fn partition_to_schedule(
    input: &ThreePartitionInput,
    partition: &[[usize; 3]],
) -> Result<Certificate, Error> {
    input.validate()?;
    let n = input.n();
    if partition.len() != n {
        return Err(Error::InvalidParameter(format!(
            "partition has {} triples, expected {n}",
            partition.len()
        )));
    }
    let mut seen = vec![false; 3 * n];
    for triple in partition {
        let mut sum = 0u64;
        for &j in triple {
            if j >= 3 * n || seen[j] {
                return Err(Error::InvalidParameter(format!(
                    "partition is not a permutation of the element ids (id {j})"
                )));
            }
            seen[j] = true;
            sum += input.xs[j];
        }
        if sum != input.b {
            return Err(Error::InvalidParameter(format!(
                "triple {triple:?} sums to {sum}, expected b = {}",
                input.b
            )));
        }
    }

    let (inst, artifacts) = three_partition_instance(input)?;
    let k = artifacts.k as usize;
    let mut order = Vec::with_capacity(inst.n());
    for (i, triple) in partition.iter().enumerate() {
        let mut sorted = *triple;
        sorted.sort_by_key(|&j| (input.xs[j], j));
        order.extend_from_slice(&sorted);
        let small_base = 3 * n + i * k;
        order.extend(small_base..small_base + k);
    }
    let large_base = 3 * n + n * k;
    order.extend(large_base..large_base + n * k);

    let ordering = Ordering::new(order);
    let eval = simulate_ordering(&inst, &ordering)?;
    let delay = total_delay(&inst, &eval)?;
    Ok(Certificate { ordering, eval, delay })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::optimal_ordering_bruteforce;
    use crate::rational::rfrac;
    use num_traits::Zero;

    #[test]
    fn spt_orders_by_processing_time_then_id() {
        let inst = Instance::new(
            &[(3, 1, 1), (0, 1, 1), (3, 1, 1), (1, 1, 1)],
            &[(0, 4)],
        );
        let (ord, eval) = spt_schedule(&inst).unwrap();
        assert_eq!(ord.order, vec![1, 3, 0, 2]);
        // Completions 0, 1, 4, 7.
        assert_eq!(eval.objective, rint(12));
    }

    #[test]
    fn spt_rejects_non_unit_requirements() {
        let inst = Instance::new(&[(1, 1, 2)], &[(0, 2)]);
        assert!(matches!(
            spt_schedule(&inst),
            Err(Error::NonUnitRequirement { job: 0, a: 2 })
        ));
    }

    #[test]
    fn tight_family_matches_frozen_small_case() {
        let inst = spt_tight_family(2, 2);
        assert_eq!(
            inst,
            Instance::new(
                &[(1, 1, 1), (1, 1, 1), (0, 1, 1), (0, 1, 1), (1, 1, 1), (1, 1, 1)],
                &[(0, 1), (1, 1), (2, 3), (3, 1)],
            )
        );
        let (_, spt_eval) = spt_schedule(&inst).unwrap();
        assert_eq!(spt_eval.objective, rint(19));
        let (opt, ord) = optimal_ordering_bruteforce(&inst).unwrap();
        assert_eq!(opt, rint(14));
        assert_eq!(ord.order, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(spt_eval.objective / opt, rfrac(19, 14));
    }

    #[test]
    fn tight_family_closed_forms_match_simulation() {
        for k in 1..=8 {
            let inst = spt_tight_family(k, k);
            let (_, spt_eval) = spt_schedule(&inst).unwrap();
            assert_eq!(spt_eval.objective, spt_tight_spt_objective(k), "spt at k = {k}");
            let identity = Ordering::new((0..inst.n()).collect());
            let eval = simulate_ordering(&inst, &identity).unwrap();
            assert_eq!(eval.objective, spt_tight_optimal_objective(k), "opt at k = {k}");
            assert_eq!(
                spt_tight_spt_objective(k) / spt_tight_optimal_objective(k),
                spt_tight_ratio(k)
            );
        }
    }

    #[test]
    fn tight_family_identity_is_optimal_for_small_sizes() {
        for (k1, k2) in [(1, 1), (1, 2), (2, 1), (1, 3), (2, 2)] {
            let inst = spt_tight_family(k1, k2);
            let identity = Ordering::new((0..inst.n()).collect());
            let identity_obj = simulate_ordering(&inst, &identity).unwrap().objective;
            let (opt, _) = optimal_ordering_bruteforce(&inst).unwrap();
            assert_eq!(identity_obj, opt, "identity not optimal at ({k1}, {k2})");
        }
    }

    #[test]
    fn tight_family_ratio_values() {
        assert_eq!(spt_tight_ratio(1), rfrac(10, 8));
        assert_eq!(spt_tight_ratio(2), rfrac(19, 14));
        assert_eq!(spt_tight_ratio(10), rfrac(91, 62));
        assert_eq!(spt_tight_ratio(50), rfrac(451, 302));
        for k in 1..60 {
            assert!(spt_tight_ratio(k) < spt_tight_ratio(k + 1));
            assert!(spt_tight_ratio(k) < rfrac(3, 2));
        }
    }

    #[test]
    fn three_partition_input_validation() {
        assert!(ThreePartitionInput { b: 12, xs: vec![4, 4, 4] }.validate().is_ok());
        // Wrong count.
        assert!(ThreePartitionInput { b: 12, xs: vec![4, 4] }.validate().is_err());
        // Wrong sum.
        assert!(ThreePartitionInput { b: 12, xs: vec![4, 4, 5] }.validate().is_err());
        // 6 is not strictly below b/2.
        assert!(ThreePartitionInput { b: 12, xs: vec![3, 3, 6] }.validate().is_err());
        // 3 is not strictly above b/4.
        assert!(ThreePartitionInput { b: 12, xs: vec![3, 4, 5] }.validate().is_err());
    }

    #[test]
    fn reduction_shape_for_the_smallest_input() {
        let input = ThreePartitionInput { b: 12, xs: vec![4, 4, 4] };
        let (inst, artifacts) = three_partition_instance(&input).unwrap();
        assert_eq!(artifacts.k, 48);
        assert_eq!(artifacts.threshold, 12);
        assert_eq!(inst.n(), 99); // 3 normal + 48 small + 48 large
        assert_eq!(inst.q(), 97); // 1 block head + 48 in-block + 48 tail
        assert_eq!(inst.total_supply(), 99);
        assert!(crate::instance::validate(&inst).is_empty());
        assert_eq!(artifacts.labels.iter().filter(|&&c| c == JobClass::Normal).count(), 3);
        assert_eq!(artifacts.labels.iter().filter(|&&c| c == JobClass::Small).count(), 48);
        assert_eq!(artifacts.labels.iter().filter(|&&c| c == JobClass::Large).count(), 48);
        // First arrivals: 3 units at 0, then singles at 12..59, then 60, 108.
        assert_eq!(inst.arrivals[0], crate::instance::Arrival::at(0, 3));
        assert_eq!(inst.arrivals[1], crate::instance::Arrival::at(12, 1));
        assert_eq!(inst.arrivals[48], crate::instance::Arrival::at(59, 1));
        assert_eq!(inst.arrivals[49], crate::instance::Arrival::at(60, 1));
        assert_eq!(inst.arrivals[50], crate::instance::Arrival::at(108, 1));
    }

    #[test]
    fn certificate_meets_the_threshold() {
        let input = ThreePartitionInput { b: 12, xs: vec![4, 4, 4] };
        let cert = partition_to_schedule(&input, &[[0, 1, 2]]).unwrap();
        assert_eq!(cert.delay, rint(12));
        assert!(cert.delay <= rint(12)); // threshold n * b
    }

    #[test]
    fn certificate_for_two_blocks() {
        // b = 8: elements strictly between 2 and 4 are all 3 — impossible to
        // sum to 8; use b = 10 with {3, 3, 4}.
        let input = ThreePartitionInput { b: 10, xs: vec![3, 4, 3, 3, 3, 4] };
        let cert = partition_to_schedule(&input, &[[0, 2, 1], [3, 4, 5]]).unwrap();
        // Per triple sorted (3, 3, 4): delay 2·3 + 3 = 9; two triples.
        assert_eq!(cert.delay, rint(18));
        // Certificate never idles inside blocks: delay of small and large
        // jobs is zero, so the total is below the threshold 2b = 20.
        assert!(cert.delay <= rint(20));
    }

    #[test]
    fn partition_search_finds_yes_and_rejects_no_instances() {
        let yes = ThreePartitionInput { b: 12, xs: vec![4, 4, 4] };
        assert_eq!(find_partition(&yes).unwrap(), Some(vec![[0, 1, 2]]));
        let two = ThreePartitionInput { b: 10, xs: vec![3, 4, 3, 3, 3, 4] };
        assert_eq!(find_partition(&two).unwrap(), Some(vec![[0, 1, 2], [3, 4, 5]]));
        // Structurally valid but with no triple summing to b.
        let no = ThreePartitionInput { b: 16, xs: vec![5, 5, 5, 5, 5, 7] };
        assert_eq!(find_partition(&no).unwrap(), None);
        assert!(find_partition(&ThreePartitionInput { b: 5, xs: vec![1] }).is_err());
    }

    #[test]
    fn partition_to_schedule_rejects_bad_partitions() {
        let input = ThreePartitionInput { b: 12, xs: vec![4, 4, 4] };
        assert!(partition_to_schedule(&input, &[[0, 0, 1]]).is_err());
        assert!(partition_to_schedule(&input, &[[0, 1, 3]]).is_err());
        assert!(partition_to_schedule(&input, &[]).is_err());
    }

    #[test]
    fn truncated_block_behaves_as_computed_by_hand() {
        // A hand-truncated one-block caricature of the reduction, small
        // enough for the brute force: three length-4 jobs, two unit fillers,
        // one length-48 tail job; supply 3 at 0, singles at 12, 13, 60. The
        // truncation drops the long filler cascade, so here — unlike in the
        // full reduction — running the fillers first pays off.
        let inst = Instance::new(
            &[(4, 1, 1), (4, 1, 1), (4, 1, 1), (1, 1, 1), (1, 1, 1), (48, 1, 1)],
            &[(0, 3), (12, 1), (13, 1), (60, 1)],
        );
        let identity = Ordering::new((0..6).collect());
        let eval = simulate_ordering(&inst, &identity).unwrap();
        // Completions 4, 8, 12, 13, 14, 108.
        assert_eq!(eval.objective, rint(159));
        // Starts 0, 4, 8, 12, 13, 60 against unit arrivals 0, 0, 0, 12, 13, 60.
        assert_eq!(total_delay(&inst, &eval).unwrap(), rint(12));

        // One filler first, the other slotted into the wait for the unit
        // arriving at 12: completions 1, 5, 9, 13, 17, 108.
        let (opt, ord) = optimal_ordering_bruteforce(&inst).unwrap();
        assert_eq!(opt, rint(153));
        assert_eq!(ord.order, vec![3, 0, 1, 4, 2, 5]);
        let opt_eval = simulate_ordering(&inst, &ord).unwrap();
        assert_eq!(total_delay(&inst, &opt_eval).unwrap(), rint(6));
        // Shortest-first finds the same optimum on this instance.
        let (_, spt_eval) = spt_schedule(&inst).unwrap();
        assert_eq!(spt_eval.objective, opt);
    }

    #[test]
    fn total_delay_is_nonnegative_and_consistent() {
        let inst = spt_tight_family(2, 2);
        let (_, spt_eval) = spt_schedule(&inst).unwrap();
        let identity = Ordering::new((0..inst.n()).collect());
        let opt_eval = simulate_ordering(&inst, &identity).unwrap();
        let d_spt = total_delay(&inst, &spt_eval).unwrap();
        let d_opt = total_delay(&inst, &opt_eval).unwrap();
        assert!(d_spt >= Rat::zero());
        assert!(d_opt >= Rat::zero());
        // Delay differences equal objective differences.
        assert_eq!(&d_spt - &d_opt, spt_eval.objective - opt_eval.objective);
    }
}
