//! Approximation schemes for zero-length jobs.
//!
//! With a constant number of arrivals, guessing which `k` jobs of each
//! suffix carry the most weight gives a (1 + q/k)-approximation — so picking
//! k large enough makes the error arbitrarily small. The general scheme
//! removes the constant-q restriction by working on windows of a rounded
//! time ladder; at accuracy eps = 1/4 it is a 35/16-approximation.

use rmsched::error::Error;
use rmsched::exact::optimal_assignment_dp;
use rmsched::rational::{decimal6, rfrac, rint};
use rmsched::zero_p::{constant_q_ptas, general_ptas, minimal_admissible_r};
use rmsched::{Instance, Rat};

fn main() -> Result<(), Error> {
    let inst = Instance::new(
        &[(0, 1, 5), (0, 7, 2), (0, 6, 6), (0, 6, 3), (0, 2, 1), (0, 7, 2)],
        &[(0, 1), (1, 6), (6, 12)],
    );
    let (opt, _) = optimal_assignment_dp(&inst)?;
    println!("six jobs, three arrivals, optimum {opt}");
    println!("constant-arrival-count scheme, guarantee 1 + q/k:");
    for k in 1..=4 {
        let (obj, _) = constant_q_ptas(&inst, k)?;
        let bound: Rat = rint(1) + rfrac(inst.q() as u64, k as u64);
        assert!(obj <= &bound * &opt);
        let note = if obj == opt { " (matches the optimum)" } else { "" };
        println!(
            "  k = {k}: objective {obj}, ratio {} <= {}{note}",
            decimal6(&(&obj / &opt)),
            decimal6(&bound),
        );
    }
    println!();

    // The general scheme first snaps arrivals onto a ladder of r steps per
    // doubling; the smallest admissible ladder density depends on eps,
    // which must be at most 1/4.
    for (num, den) in [(1u64, 4u64), (1, 8), (1, 16)] {
        let eps = rfrac(num, den);
        println!("eps = {num}/{den}: ladder density r = {}", minimal_admissible_r(&eps)?);
    }
    let eps = rfrac(1, 4);
    let (obj, asg) = general_ptas(&inst, &eps)?;
    let bound = rfrac(35, 16);
    println!("general scheme at eps = 1/4:");
    println!("  assignment (job -> arrival): {:?}", asg.slots);
    println!(
        "  objective {obj} vs optimum {opt}: ratio {} <= guarantee {}",
        decimal6(&(&obj / &opt)),
        decimal6(&bound)
    );
    assert!(obj <= bound * &opt);

    // On a two-arrival instance whose times already sit on the ladder the
    // scheme loses nothing.
    let flat = Instance::new(&[(0, 5, 2), (0, 2, 2)], &[(0, 2), (1, 2)]);
    let (obj, _) = general_ptas(&flat, &eps)?;
    let (opt, _) = optimal_assignment_dp(&flat)?;
    assert_eq!(obj, opt);
    println!("  degenerate two-arrival instance: scheme output {obj} equals the optimum");
    Ok(())
}
