//! Instance files: parsing and serialization of the structured-text format.
//!
//! A file holds one object: `{"jobs":[{"p":int,"w":int,"a":int},...],
//! "arrivals":[{"t":int,"b":int},...]}`. Inputs for the unknown-arrival-time
//! model use the same shape with the `t` field omitted from *every* arrival
//! (see [`parse_robust_input`]). All numbers on disk are decimal integers;
//! exact rationals only ever appear in report CSVs, never in instance files.
//!
//! Parsing is strict: malformed text and negative or fractional numbers are
//! rejected with line/column diagnostics, arrivals out of order are rejected
//! by index. The one normalization applied on ingestion is that arrivals
//! sharing the same time are merged into a single arrival carrying their
//! summed amount.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::instance::{Arrival, Instance, Job};
use crate::rational::to_u64;
use crate::robust::RobustInput;

#[derive(Debug, Serialize, Deserialize)]
struct JobWire {
    p: u64,
    w: u64,
    a: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct ArrivalWire {
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u64>,
    b: u64,
}

#[derive(Debug, Serialize, Deserialize)]
struct InstanceWire {
    jobs: Vec<JobWire>,
    arrivals: Vec<ArrivalWire>,
}

fn parse_wire(text: &str) -> Result<InstanceWire, Error> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

/// Parses a timed instance. Every arrival must carry a `t` field; equal
/// times are merged (amounts summed), decreasing times are rejected.
pub fn parse_instance(text: &str) -> Result<Instance, Error> {
    wire_to_instance(parse_wire(text)?)
}

/// A parsed instance file of either flavor.
#[derive(Debug, Clone, PartialEq)]
pub enum ParsedInput {
    /// Arrivals carry times.
    Timed(Instance),
    /// Arrivals are quantities only (unknown-time model).
    QuantityOnly(RobustInput),
}

/// Parses either flavor: quantity-only when no arrival carries a `t`,
/// timed otherwise (a file mixing both is rejected by the timed reader).
pub fn parse_any(text: &str) -> Result<ParsedInput, Error> {
    let wire = parse_wire(text)?;
    if !wire.arrivals.is_empty() && wire.arrivals.iter().all(|a| a.t.is_none()) {
        wire_to_robust(wire).map(ParsedInput::QuantityOnly)
    } else {
        wire_to_instance(wire).map(ParsedInput::Timed)
    }
}

fn wire_to_instance(wire: InstanceWire) -> Result<Instance, Error> {
    let jobs = wire
        .jobs
        .into_iter()
        .enumerate()
        .map(|(id, j)| Job { id, p: j.p, w: j.w, a: j.a })
        .collect();
    let mut arrivals: Vec<(u64, u64)> = Vec::with_capacity(wire.arrivals.len());
    for (index, arr) in wire.arrivals.into_iter().enumerate() {
        let t = arr.t.ok_or_else(|| {
            Error::Parse(format!(
                "arrivals[{index}]: missing \"t\" — a timed instance needs every \
                 arrival time; quantity-only inputs belong to the robust reader"
            ))
        })?;
        match arrivals.last_mut() {
            Some(&mut (prev_t, ref mut prev_b)) if prev_t == t => {
                *prev_b = prev_b.checked_add(arr.b).ok_or_else(|| {
                    Error::NumericRange(format!(
                        "arrivals[{index}]: merged amount at time {t} exceeds the 64-bit range"
                    ))
                })?;
            }
            Some(&mut (prev_t, _)) if prev_t > t => {
                return Err(Error::Parse(format!(
                    "arrivals[{index}]: time {t} is earlier than the preceding time {prev_t}; \
                     arrivals must be sorted"
                )));
            }
            _ => arrivals.push((t, arr.b)),
        }
    }
    Ok(Instance {
        jobs,
        arrivals: arrivals.into_iter().map(|(t, b)| Arrival::at(t, b)).collect(),
    })
}

/// Serializes a timed instance; requires integer arrival times (shifted
/// instances with fractional times never touch disk).
pub fn write_instance(inst: &Instance) -> Result<String, Error> {
    let arrivals = inst
        .arrivals
        .iter()
        .map(|r| to_u64(&r.t).map(|t| ArrivalWire { t: Some(t), b: r.b }).ok_or(Error::NonIntegerTime))
        .collect::<Result<Vec<_>, _>>()?;
    let wire = InstanceWire {
        jobs: inst.jobs.iter().map(|j| JobWire { p: j.p, w: j.w, a: j.a }).collect(),
        arrivals,
    };
    render(&wire)
}

/// Parses a quantity-only input for the unknown-arrival-time model. Every
/// arrival must omit `t`, and every job must have `p = 0`.
pub fn parse_robust_input(text: &str) -> Result<RobustInput, Error> {
    wire_to_robust(parse_wire(text)?)
}

fn wire_to_robust(wire: InstanceWire) -> Result<RobustInput, Error> {
    if let Some((index, _)) = wire.arrivals.iter().enumerate().find(|(_, a)| a.t.is_some()) {
        return Err(Error::Parse(format!(
            "arrivals[{index}]: carries a \"t\" field — inputs for the unknown-time \
             model list quantities only"
        )));
    }
    if let Some((index, job)) = wire.jobs.iter().enumerate().find(|(_, j)| j.p != 0) {
        return Err(Error::Parse(format!(
            "jobs[{index}]: processing time {} — the unknown-time model requires p = 0",
            job.p
        )));
    }
    let jobs: Vec<(u64, u64)> = wire.jobs.iter().map(|j| (j.w, j.a)).collect();
    let quantities: Vec<u64> = wire.arrivals.iter().map(|a| a.b).collect();
    let input = RobustInput::new(&jobs, &quantities);
    input.ensure_valid()?;
    Ok(input)
}

/// Serializes a quantity-only input: arrivals carry `b` but no `t`.
pub fn write_robust_input(input: &RobustInput) -> Result<String, Error> {
    let wire = InstanceWire {
        jobs: input.jobs.iter().map(|j| JobWire { p: j.p, w: j.w, a: j.a }).collect(),
        arrivals: input.quantities.iter().map(|&b| ArrivalWire { t: None, b }).collect(),
    };
    render(&wire)
}

fn render(wire: &InstanceWire) -> Result<String, Error> {
    let mut text = serde_json::to_string_pretty(wire)
        .map_err(|e| Error::Internal(format!("serialization failed: {e}")))?;
    text.push('\n');
    Ok(text)
}

/// Reads and parses a timed instance file, naming the file in diagnostics.
pub fn load_instance(path: &std::path::Path) -> Result<Instance, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_instance(&text).map_err(|e| prefix_path(path, e))
}

/// Reads and parses a quantity-only input file, naming the file in
/// diagnostics.
pub fn load_robust_input(path: &std::path::Path) -> Result<RobustInput, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_robust_input(&text).map_err(|e| prefix_path(path, e))
}

/// Reads and parses an instance file of either flavor, naming the file in
/// diagnostics.
pub fn load_any(path: &std::path::Path) -> Result<ParsedInput, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    parse_any(&text).map_err(|e| prefix_path(path, e))
}

fn prefix_path(path: &std::path::Path, e: Error) -> Error {
    match e {
        Error::Parse(msg) => Error::Parse(format!("{}: {msg}", path.display())),
        other => other,
    }
}
