//! Shortest-processing-time-first on unit-requirement instances.
//!
//! Every job consumes exactly one unit of the resource, so only the order
//! matters: SPT sorts by processing time and is a 3/2-approximation. The
//! second half of the example walks the parametric family on which the ratio
//! climbs towards that constant.

use rmsched::error::Error;
use rmsched::exact::optimal_ordering_bruteforce;
use rmsched::rational::decimal6;
use rmsched::unit_req::{
    spt_schedule, spt_tight_family, spt_tight_optimal_objective, spt_tight_ratio,
    spt_tight_spt_objective,
};
use rmsched::Instance;

fn main() -> Result<(), Error> {
    // Jobs are (processing time, weight, requirement); arrivals are
    // (time, amount). Three quick jobs are stuck behind a scarce resource.
    let inst = Instance::new(
        &[(4, 1, 1), (1, 1, 1), (2, 1, 1), (7, 1, 1)],
        &[(0, 2), (5, 2)],
    );
    let (order, eval) = spt_schedule(&inst)?;
    println!("hand-built instance: n = {}, q = {}", inst.n(), inst.q());
    println!("  spt order:      {:?}", order.order);
    println!("  completions:    {:?}", eval.completion.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    println!("  spt objective:  {}", eval.objective);
    let (opt, best) = optimal_ordering_bruteforce(&inst)?;
    println!("  best order:     {:?} with objective {}", best.order, opt);
    println!("  ratio:          {}", decimal6(&(&eval.objective / &opt)));
    println!();

    // The tight family: k1 early unit jobs, k1 zero-length jobs that SPT
    // schedules too early, k2 late unit jobs. With k1 = k2 = k the ratio has
    // the closed form (9k^2 + ...)/(6k^2 + ...) -> 3/2.
    println!("tight family, k1 = k2 = k:");
    for k in [2u64, 5, 10, 50, 500] {
        let inst = spt_tight_family(k, k);
        let (_, eval) = spt_schedule(&inst)?;
        let spt_obj = spt_tight_spt_objective(k);
        let opt = spt_tight_optimal_objective(k);
        assert_eq!(eval.objective, spt_obj, "closed form matches simulation");
        let ratio = spt_tight_ratio(k);
        println!(
            "  k = {k:>3}: spt = {spt_obj:>8}  opt = {opt:>8}  ratio = {} ({ratio})",
            decimal6(&ratio),
        );
    }
    println!("  limit: 1.500000 (3/2), never attained");
    Ok(())
}
