//! Shift-and-cover for zero-length jobs: round arrival times to powers of
//! two, solve each rounded arrival with a covering FPTAS, and map the
//! assignment back. The result is a (4 + 4·eps)-approximation.
//!
//! The example first shows the covering FPTAS alone against the exact
//! minimum cover, then the arrival-time rounding, then the full pipeline
//! against the exact dynamic program.

use rmsched::error::Error;
use rmsched::exact::{min_cover_bruteforce, optimal_assignment_dp, CoverItem, CoverProblem};
use rmsched::rational::{decimal6, rfrac, rint};
use rmsched::shift::shift_arrivals;
use rmsched::zero_p::{min_cover_fptas, shift_and_cover};
use rmsched::{Instance, Rat};

fn main() -> Result<(), Error> {
    // Step 1: the covering subproblem. Pick a min-weight set of jobs whose
    // amounts sum to at least the demand.
    let cp = CoverProblem {
        items: vec![
            CoverItem { id: 0, w: 7, a: 10 },
            CoverItem { id: 1, w: 4, a: 6 },
            CoverItem { id: 2, w: 3, a: 5 },
            CoverItem { id: 3, w: 1, a: 2 },
        ],
        demand: 11,
    };
    let exact = min_cover_bruteforce(&cp)?;
    println!("cover demand 11 over four items:");
    println!("  exact minimum: weight {} using jobs {:?}", exact.weight, exact.ids);
    for eps in [rint(1), rfrac(1, 2), rfrac(1, 10)] {
        let approx = min_cover_fptas(&cp, &eps)?;
        let bound = (rint(1) + &eps) * rint(exact.weight);
        assert!(rint(approx.weight) <= bound);
        println!(
            "  fptas eps = {:>4}: weight {} using jobs {:?} (guarantee {})",
            eps.to_string(),
            approx.weight,
            approx.ids,
            decimal6(&bound)
        );
    }
    println!();

    // Step 2: push every arrival onto a geometric grid. Times round up to
    // the next scale*2^k, at most doubling, and arrivals that land on the
    // same grid point pool their supply. That coarsening costs one of the
    // two factor-2 losses in the final bound.
    let inst = Instance::new(
        &[(0, 5, 4), (0, 2, 3), (0, 9, 6), (0, 1, 2), (0, 4, 5)],
        &[(0, 6), (3, 5), (5, 4), (11, 5)],
    );
    let shifted = shift_arrivals(&inst, &rint(2))?;
    let times = |i: &Instance| i.arrivals.iter().map(|a| a.t.to_string()).collect::<Vec<_>>();
    println!("arrival times {:?} round to {:?}", times(&inst), times(&shifted.instance));
    println!();

    // Step 3: the full pipeline against the exact optimum.
    let eps = rfrac(1, 4);
    let (obj, asg) = shift_and_cover(&inst, &eps)?;
    let (opt, _) = optimal_assignment_dp(&inst)?;
    let bound: Rat = rint(4) + rint(4) * &eps;
    println!("shift-and-cover at eps = 1/4:");
    println!("  assignment (job -> arrival): {:?}", asg.slots);
    println!("  objective {obj} vs optimum {opt}: ratio {}", decimal6(&(&obj / &opt)));
    println!("  guarantee: 4 + 4*eps = {}", decimal6(&bound));
    assert!(obj <= bound * opt);
    Ok(())
}
