//! The density greedy for zero-length jobs, a 6-approximation.
//!
//! With all processing times zero a schedule is just an assignment of jobs
//! to arrivals, and the cost of arrival `i` is its time multiplied by the
//! weight still waiting there. The greedy walks arrivals from last to first
//! and covers each one's remaining demand with low-density jobs gated by a
//! growing weight threshold. Its suffix at every arrival weighs at most six
//! times the cheapest possible cover of that arrival's demand — which is
//! what caps the overall objective at six times the optimum.

use rmsched::error::Error;
use rmsched::exact::{min_cover_bruteforce, optimal_assignment_dp, CoverItem, CoverProblem};
use rmsched::instance::remaining_demand;
use rmsched::rational::decimal6;
use rmsched::zero_p::greedy_schedule;
use rmsched::Instance;

fn main() -> Result<(), Error> {
    // Jobs are (0, weight, requirement); two heavy jobs look dense enough
    // to postpone, and the greedy drags four of the five jobs to time 1.
    let inst = Instance::new(
        &[(0, 8, 2), (0, 8, 2), (0, 9, 95), (0, 10, 100), (0, 30, 400)],
        &[(0, 499), (1, 100)],
    );
    println!("five zero-length jobs, supply 499 at t=0 and 100 at t=1");
    let (obj, asg) = greedy_schedule(&inst)?;
    println!("  greedy assignment (job -> arrival): {:?}", asg.slots);
    println!("  greedy objective: {obj}");
    let (opt, best) = optimal_assignment_dp(&inst)?;
    println!("  optimal assignment: {:?} with objective {opt}", best.slots);
    println!("  ratio: {} — within the factor-6 guarantee", decimal6(&(&obj / &opt)));
    println!();

    // The per-arrival certificate behind the guarantee: at every arrival
    // after the first, the weight the greedy leaves waiting is at most six
    // times the cheapest cover of the demand that must still be outstanding.
    println!("per-arrival cover certificate:");
    for index in 1..inst.q() {
        let demand = remaining_demand(&inst, index)?;
        let suffix_weight: u64 =
            inst.jobs.iter().filter(|j| asg.slots[j.id] >= index).map(|j| j.w).sum();
        let items: Vec<CoverItem> =
            inst.jobs.iter().map(|j| CoverItem { id: j.id, w: j.w, a: j.a }).collect();
        let cheapest = min_cover_bruteforce(&CoverProblem { items, demand })?;
        println!(
            "  arrival {index}: demand {demand}, greedy suffix weight {suffix_weight}, \
             cheapest cover weight {} (jobs {:?})",
            cheapest.weight, cheapest.ids
        );
        assert!(suffix_weight <= 6 * cheapest.weight);
    }
    Ok(())
}
