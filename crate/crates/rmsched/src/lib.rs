//! Single-machine scheduling with one non-renewable resource.
//!
//! Jobs `(p_j, w_j, a_j)` compete for a resource that arrives in batches
//! `(t_i, b_i)`; the goal is to minimize the weighted sum of completion
//! times. The crate provides the approximation algorithms for the
//! unit-requirement and zero-processing-time variants, exact oracles for
//! small instances, hardness gadgets, a robust scheduler for unknown arrival
//! times, and a benchmark harness with a thin CLI.
//!
//! Start with the runnable examples (`cargo run --example <name>`):
//!
//! * `spt_approximation` — shortest-processing-time-first on unit instances
//!   and the family of instances where its ratio approaches 3/2.
//! * `greedy_six_approx` — the density greedy for zero-length jobs with its
//!   per-arrival cover guarantee.
//! * `hardness_reduction` — the reduction from 3-Partition and a certificate
//!   schedule for a yes-instance.
//! * `shift_and_cover` — arrival-time shifting plus the covering FPTAS.
//! * `ptas` — the constant-arrival-count scheme and the general one built on
//!   top of it, compared against the exact oracle.
//! * `robust_arrivals` — scheduling with known quantities but unknown
//!   arrival times, and the family showing the guarantee is near-best.
//! * `bench_pipeline` — generate, solve, and report over a small suite.

pub mod bench;
pub mod error;
pub mod exact;
pub mod instance;
pub mod io;
pub mod rational;
pub mod robust;
pub mod shift;
pub mod unit_req;
pub mod zero_p;

pub use error::Error;
pub use instance::{
    is_feasible, objective_assignment, simulate_ordering, validate, Arrival, Assignment, Instance,
    Job, Ordering, ScheduleEval, Violation,
};
pub use rational::Rat;
