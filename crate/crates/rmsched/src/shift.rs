//! Arrival-time shifting: round arrival times up to powers of a base.
//!
//! Shifting replaces the arrival times by `0, s, s·base, s·base², …` (where
//! `s` is the second-smallest original time) and aggregates the supply of all
//! arrivals that round to the same power. Any assignment that is feasible for
//! the shifted instance maps back to a feasible assignment for the original
//! with no larger objective, and mapping an original assignment forward
//! multiplies its objective by less than `base`. Shifting therefore costs at
//! most a factor `base` in the objective while reducing the number of
//! relevant arrivals to `O(log t_max)`.

use num_traits::Zero;

use crate::error::Error;
use crate::instance::{ensure_valid, Arrival, Assignment, Instance};
use crate::rational::{rint, Rat};

/// A shifted instance together with the data needed to translate assignments
/// between it and the original.
#[derive(Debug, Clone)]
pub struct ShiftedInstance {
    /// The shifted instance: same jobs, arrival times rounded up to
    /// `scale · base^k` (expressed in original time units).
    pub instance: Instance,
    /// The normalization factor: the second-smallest original arrival time
    /// (1 when the original has at most one arrival).
    pub scale: Rat,
    /// The rounding base (> 1).
    pub base: Rat,
    /// For each original arrival index, the shifted slot it rounds to.
    /// Non-decreasing.
    pub slot_of_original: Vec<usize>,
    /// The original arrival times, kept for mapping assignments back.
    pub original_times: Vec<Rat>,
}

/// Rounds the arrival times of `inst` up to `scale · base^k` and aggregates
/// supply per rounded slot. Requires a structurally valid instance and
/// `base > 1`. Instances with at most one arrival are returned unchanged.
pub fn shift_arrivals(inst: &Instance, base: &Rat) -> Result<ShiftedInstance, Error> {
    ensure_valid(inst)?;
    if *base <= rint(1) {
        return Err(Error::InvalidParameter(format!("shift base must exceed 1, got {base}")));
    }
    let original_times: Vec<Rat> = inst.arrivals.iter().map(|r| r.t.clone()).collect();
    if inst.q() <= 1 {
        return Ok(ShiftedInstance {
            instance: inst.clone(),
            scale: rint(1),
            base: base.clone(),
            slot_of_original: (0..inst.q()).collect(),
            original_times,
        });
    }

    let scale = inst.arrivals[1].t.clone();
    // Normalized slot times 0, 1, base, base², …, ending at the first power
    // that reaches the largest normalized arrival time.
    let last = &inst.arrivals[inst.q() - 1].t / &scale;
    let mut slot_times = vec![Rat::zero(), rint(1)];
    while *slot_times.last().unwrap() < last {
        let next = slot_times.last().unwrap() * base;
        slot_times.push(next);
    }

    let mut slot_of_original = Vec::with_capacity(inst.q());
    let mut supply = vec![0u64; slot_times.len()];
    let mut k = 0usize;
    for r in &inst.arrivals {
        let tau = &r.t / &scale;
        while slot_times[k] < tau {
            k += 1;
        }
        slot_of_original.push(k);
        supply[k] += r.b;
    }

    let arrivals = slot_times
        .into_iter()
        .zip(supply)
        .map(|(s, b)| Arrival { t: s * &scale, b })
        .collect();
    Ok(ShiftedInstance {
        instance: Instance { jobs: inst.jobs.clone(), arrivals },
        scale,
        base: base.clone(),
        slot_of_original,
        original_times,
    })
}

impl ShiftedInstance {
    /// Maps an assignment on the original instance to the shifted one by
    /// sending each job to the slot its arrival rounds to. Preserves
    /// feasibility; the objective grows by a factor below `base`.
    pub fn map_forward(&self, asg: &Assignment) -> Result<Assignment, Error> {
        if asg.slots.len() != self.instance.n() {
            return Err(Error::InvalidAssignment(format!(
                "{} slots for {} jobs",
                asg.slots.len(),
                self.instance.n()
            )));
        }
        let slots = asg
            .slots
            .iter()
            .map(|&s| {
                self.slot_of_original.get(s).copied().ok_or(Error::IndexOutOfRange {
                    index: s,
                    q: self.slot_of_original.len(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Assignment::new(slots))
    }

    /// Maps an assignment on the shifted instance back to the original by
    /// sending each job to the latest original arrival whose slot is at most
    /// the assigned one. Preserves feasibility; the objective never grows.
    pub fn map_back(&self, asg: &Assignment) -> Result<Assignment, Error> {
        asg.check(&self.instance)?;
        let slots = asg
            .slots
            .iter()
            .map(|&k| {
                let idx = self.slot_of_original.partition_point(|&s| s <= k);
                if idx == 0 {
                    Err(Error::Internal(format!("no original arrival at or before slot {k}")))
                } else {
                    Ok(idx - 1)
                }
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Assignment::new(slots))
    }
}
