//! Randomized structural invariants, checked with proptest: feasibility
//! criteria agree, simulation respects the machine and the resource,
//! objectives are exact dot products, residual demand is monotone, and
//! arrival rounding stays within its base.

use proptest::prelude::*;

use rmsched::instance::{feasibility_suffix, remaining_demand};
use rmsched::rational::{rint, Rat};
use rmsched::shift::shift_arrivals;
use rmsched::zero_p::greedy_schedule;
use rmsched::{is_feasible, objective_assignment, simulate_ordering, Assignment, Instance, Ordering};

/// A balanced instance: random jobs, distinct increasing times starting at
/// zero, and the total requirement split across the arrivals.
fn arb_instance(max_p: u64) -> impl Strategy<Value = Instance> {
    let jobs = prop::collection::vec((0..=max_p, 0u64..=9, 0u64..=5), 1..=7);
    let times = prop::collection::btree_set(1u64..=15, 0..=3);
    let raw_supply = prop::collection::vec(0u64..=10, 4);
    (jobs, times, raw_supply).prop_map(|(jobs, times, raw)| {
        let total: u64 = jobs.iter().map(|j| j.2).sum();
        let q = times.len() + 1;
        let raw = &raw[..q];
        let raw_total: u64 = raw.iter().sum();
        let mut supplies: Vec<u64> = if raw_total == 0 {
            vec![0; q]
        } else {
            raw.iter().map(|r| r * total / raw_total).collect()
        };
        let short = total - supplies.iter().sum::<u64>();
        supplies[q - 1] += short;
        let mut arrivals = vec![(0u64, supplies[0])];
        for (i, t) in times.into_iter().enumerate() {
            arrivals.push((t, supplies[i + 1]));
        }
        Instance::new(&jobs, &arrivals)
    })
}

/// An instance plus an arbitrary (not necessarily feasible) assignment.
fn arb_instance_and_assignment() -> impl Strategy<Value = (Instance, Assignment)> {
    arb_instance(0).prop_flat_map(|inst| {
        let q = inst.q();
        let slots = prop::collection::vec(0..q, inst.n());
        (Just(inst), slots.prop_map(Assignment::new))
    })
}

/// An instance plus a random permutation of its jobs.
fn arb_instance_and_ordering() -> impl Strategy<Value = (Instance, Ordering)> {
    arb_instance(4).prop_flat_map(|inst| {
        let n = inst.n();
        let perm = Just((0..n).collect::<Vec<usize>>()).prop_shuffle();
        (Just(inst), perm.prop_map(Ordering::new))
    })
}

proptest! {
    /// On balanced instances the prefix-supply criterion and the
    /// suffix-coverage criterion accept exactly the same assignments.
    #[test]
    fn prefix_and_suffix_feasibility_agree((inst, asg) in arb_instance_and_assignment()) {
        prop_assert!(inst.balanced());
        let prefix = is_feasible(&inst, &asg);
        let suffix = feasibility_suffix(&inst, &asg).unwrap();
        prop_assert_eq!(prefix, suffix);
    }

    /// Simulation runs one job at a time and never before its resource:
    /// along the chosen order, each start is at least the previous
    /// completion, and the objective is the exact weighted sum.
    #[test]
    fn simulation_respects_machine_and_objective((inst, ord) in arb_instance_and_ordering()) {
        let eval = simulate_ordering(&inst, &ord).unwrap();
        let mut previous_completion = rint(0);
        for &job in &ord.order {
            let p = rint(inst.jobs[job].p);
            let start = &eval.completion[job] - &p;
            prop_assert!(start >= previous_completion, "job {} starts early", job);
            previous_completion = eval.completion[job].clone();
        }
        let recomputed: Rat = inst
            .jobs
            .iter()
            .map(|j| rint(j.w) * &eval.completion[j.id])
            .fold(rint(0), |acc, x| acc + x);
        prop_assert_eq!(recomputed, eval.objective.clone());
    }

    /// The assignment objective is the dot product of weights with the
    /// chosen arrival times — nothing more is hidden in it.
    #[test]
    fn assignment_objective_is_a_dot_product((inst, asg) in arb_instance_and_assignment()) {
        let expected: Rat = inst
            .jobs
            .iter()
            .map(|j| rint(j.w) * &inst.arrivals[asg.slots[j.id]].t)
            .fold(rint(0), |acc, x| acc + x);
        let computed = objective_assignment(&inst, &asg).unwrap();
        prop_assert_eq!(computed, expected);
    }

    /// Residual demand never grows with the arrival index, starts at the
    /// total requirement, and ends at the last arrival's supply when the
    /// instance is balanced.
    #[test]
    fn residual_demand_is_monotone(inst in arb_instance(3)) {
        let mut previous = remaining_demand(&inst, 0).unwrap();
        prop_assert_eq!(previous, inst.total_requirement());
        for k in 1..inst.q() {
            let demand = remaining_demand(&inst, k).unwrap();
            prop_assert!(demand <= previous);
            previous = demand;
        }
        prop_assert_eq!(previous, inst.suffix_supply(inst.q() - 1));
    }

    /// Rounding arrivals to powers of two moves every positive time
    /// forward by strictly less than the base, keeps time zero fixed, maps
    /// original arrivals to slots monotonically, and preserves total supply.
    #[test]
    fn shifting_rounds_up_within_the_base(inst in arb_instance(0)) {
        let shifted = shift_arrivals(&inst, &rint(2)).unwrap();
        prop_assert_eq!(shifted.instance.total_supply(), inst.total_supply());
        let mut last_slot = 0usize;
        for (i, arrival) in inst.arrivals.iter().enumerate() {
            let slot = shifted.slot_of_original[i];
            prop_assert!(slot >= last_slot, "slot map must be monotone");
            last_slot = slot;
            let rounded = &shifted.instance.arrivals[slot].t;
            if arrival.t == rint(0) {
                prop_assert_eq!(rounded.clone(), rint(0));
            } else {
                prop_assert!(*rounded >= arrival.t);
                prop_assert!(*rounded < rint(2) * &arrival.t);
            }
        }
    }

    /// The greedy always returns a feasible assignment whose reported
    /// objective matches an independent recomputation.
    #[test]
    fn greedy_output_is_feasible_and_priced_correctly(inst in arb_instance(0)) {
        let (obj, asg) = greedy_schedule(&inst).unwrap();
        prop_assert!(is_feasible(&inst, &asg));
        prop_assert_eq!(obj, objective_assignment(&inst, &asg).unwrap());
    }
}
