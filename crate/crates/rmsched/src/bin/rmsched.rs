//! Command-line front end: instance generation (`gen`), single solves
//! (`solve`), benchmark suites (`bench`) and CSV summaries (`report`).
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 feasibility or bound
//! violation, 3 enumeration budget or oracle cap exceeded.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;

use rmsched::bench::{
    gen_random, limits_from_env, load_suite_config, render_csv, run_suite, solve_one, Algo,
    AlgoSpec, RandomSpec, RunReport, ScheduleDetail, SuiteConfig, CSV_HEADER,
};
use rmsched::error::Error;
use rmsched::io::{load_any, write_instance, write_robust_input, ParsedInput};
use rmsched::rational::decimal6;
use rmsched::robust::{adversarial_instance, robust_schedule, robustness_report};
use rmsched::unit_req::{
    find_partition, partition_to_schedule, spt_tight_family, three_partition_instance, JobClass,
    ThreePartitionInput,
};
use rmsched::Rat;

#[derive(Parser)]
#[command(
    name = "rmsched",
    version,
    about = "Single-machine scheduling with one non-renewable resource: \
             generators, approximation algorithms, exact oracles, benchmarks"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate an instance file from one of the built-in families.
    Gen(GenArgs),
    /// Run one algorithm on one instance file.
    Solve(SolveArgs),
    /// Run a benchmark suite described by a JSON config.
    Bench(BenchArgs),
    /// Summarize a report CSV.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Family {
    /// Seeded pseudo-random instance.
    Random,
    /// Hardness-reduction instance built from a 3-Partition input.
    #[value(name = "3part")]
    ThreePart,
    /// Family on which the shortest-processing-time rule approaches its
    /// worst case.
    SptTight,
    /// Quantity-only family punishing non-robust schedules.
    Adversarial,
}

fn parse_range(text: &str) -> Result<(u64, u64), String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected LO,HI — got {text:?}"));
    }
    let lo = parts[0].trim().parse().map_err(|e| format!("bad lower bound: {e}"))?;
    let hi = parts[1].trim().parse().map_err(|e| format!("bad upper bound: {e}"))?;
    Ok((lo, hi))
}

#[derive(Args)]
struct GenArgs {
    /// Instance family.
    #[arg(long, value_enum)]
    family: Family,
    /// Output instance file.
    #[arg(long)]
    out: PathBuf,

    /// [random] Generator seed.
    #[arg(long)]
    seed: Option<u64>,
    /// [random] Number of jobs; [3part] number of triples (must match the
    /// element count); [adversarial] size parameter (>= 2).
    #[arg(long)]
    n: Option<usize>,
    /// [random] Number of arrivals.
    #[arg(long)]
    q: Option<usize>,
    /// [random] Weight range LO,HI.
    #[arg(long, value_parser = parse_range, default_value = "1,9")]
    weights: (u64, u64),
    /// [random] Requirement range LO,HI.
    #[arg(long, value_parser = parse_range, default_value = "1,9")]
    reqs: (u64, u64),
    /// [random] Arrival/processing time range LO,HI.
    #[arg(long, value_parser = parse_range, default_value = "0,20")]
    times: (u64, u64),
    /// [random] Force all processing times to zero.
    #[arg(long)]
    zero_p: bool,

    /// [3part] Target triple sum B.
    #[arg(long = "B")]
    b_value: Option<u64>,
    /// [3part] The 3n elements, comma-separated.
    #[arg(long, value_delimiter = ',')]
    xs: Option<Vec<u64>>,
    /// [3part] Search for a certifying partition and verify its schedule
    /// against the threshold.
    #[arg(long)]
    certify: bool,

    /// [spt-tight] Count of early unit-length jobs.
    #[arg(long)]
    k1: Option<u64>,
    /// [spt-tight] Count of late zero-length jobs.
    #[arg(long)]
    k2: Option<u64>,

    /// [adversarial] Weight granularity (>= 1).
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args)]
struct SolveArgs {
    /// Algorithm to run.
    #[arg(long, value_enum)]
    algo: Algo,
    /// Accuracy parameter as an exact fraction p/q (shift-cover, ptas,
    /// robust).
    #[arg(long)]
    eps: Option<String>,
    /// Guessed-set size (ptas-q).
    #[arg(long)]
    k: Option<usize>,
    /// Instance file; quantity-only files (no arrival times) are accepted
    /// by --algo robust.
    #[arg(long)]
    input: PathBuf,
    /// Append a one-row report CSV here.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Also compute the exact optimum and the resulting ratio.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct BenchArgs {
    /// Suite configuration (JSON).
    #[arg(long)]
    config: PathBuf,
}

#[derive(Args)]
struct ReportArgs {
    /// Report CSV produced by `solve --output` or `bench`.
    #[arg(long)]
    input: PathBuf,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::CapExceeded { .. } | Error::BudgetExceeded { .. } => 3,
                _ => 1,
            };
            std::process::exit(code);
        }
    }
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Gen(args) => run_gen(args),
        Cmd::Solve(args) => run_solve(args),
        Cmd::Bench(args) => run_bench(args),
        Cmd::Report(args) => run_report(args),
    }
}

fn require<T>(value: Option<T>, family: &str, flag: &str) -> Result<T, Error> {
    value.ok_or_else(|| {
        Error::InvalidParameter(format!("--family {family} requires --{flag}"))
    })
}

fn forbid<T>(value: &Option<T>, family: &str, flag: &str) -> Result<(), Error> {
    if value.is_some() {
        return Err(Error::InvalidParameter(format!(
            "--{flag} does not apply to --family {family}"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct SidecarCertificate {
    partition: Vec<[usize; 3]>,
    /// Total delay of the certificate schedule, exact.
    delay: String,
    threshold_met: bool,
}

#[derive(Serialize)]
struct Sidecar<'a> {
    /// Padding length of the reduction.
    k: u64,
    /// Decision threshold on the total delay.
    threshold: u64,
    /// Class of each job, by job id.
    labels: &'a [JobClass],
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<SidecarCertificate>,
}

fn run_gen(args: GenArgs) -> Result<i32, Error> {
    match args.family {
        Family::Random => {
            for (flag, given) in [
                ("B", args.b_value.is_some()),
                ("xs", args.xs.is_some()),
                ("k1", args.k1.is_some()),
                ("k2", args.k2.is_some()),
                ("m", args.m.is_some()),
            ] {
                if given {
                    return Err(Error::InvalidParameter(format!(
                        "--{flag} does not apply to --family random"
                    )));
                }
            }
            let spec = RandomSpec {
                id: stem_of(&args.out),
                seed: require(args.seed, "random", "seed")?,
                n: require(args.n, "random", "n")?,
                q: require(args.q, "random", "q")?,
                weights: args.weights,
                reqs: args.reqs,
                times: args.times,
                zero_p: args.zero_p,
            };
            let inst = gen_random(&spec)?;
            std::fs::write(&args.out, write_instance(&inst)?)?;
            println!(
                "wrote {} (random: n={} q={} seed={})",
                args.out.display(),
                inst.n(),
                inst.q(),
                spec.seed
            );
        }
        Family::ThreePart => {
            forbid(&args.seed, "3part", "seed")?;
            forbid(&args.q, "3part", "q")?;
            forbid(&args.k1, "3part", "k1")?;
            forbid(&args.m, "3part", "m")?;
            let input = ThreePartitionInput {
                b: require(args.b_value, "3part", "B")?,
                xs: require(args.xs, "3part", "xs")?,
            };
            if let Some(n) = args.n {
                if n * 3 != input.xs.len() {
                    return Err(Error::InvalidParameter(format!(
                        "--n {n} disagrees with {} elements (expected 3n)",
                        input.xs.len()
                    )));
                }
            }
            let (inst, artifacts) = three_partition_instance(&input)?;
            std::fs::write(&args.out, write_instance(&inst)?)?;
            let certificate = if args.certify {
                match find_partition(&input)? {
                    Some(partition) => {
                        let cert = partition_to_schedule(&input, &partition)?;
                        let met = cert.delay <= rmsched::rational::rint(artifacts.threshold);
                        println!(
                            "certificate: partition {partition:?}, delay {} — threshold {} {}",
                            cert.delay,
                            artifacts.threshold,
                            if met { "met" } else { "MISSED" }
                        );
                        Some(SidecarCertificate {
                            partition,
                            delay: cert.delay.to_string(),
                            threshold_met: met,
                        })
                    }
                    None => {
                        println!("certificate: no partition into triples summing to {}", input.b);
                        None
                    }
                }
            } else {
                None
            };
            let sidecar_path = PathBuf::from(format!("{}.labels.json", args.out.display()));
            let sidecar = Sidecar {
                k: artifacts.k,
                threshold: artifacts.threshold,
                labels: &artifacts.labels,
                certificate,
            };
            let mut text = serde_json::to_string_pretty(&sidecar)
                .map_err(|e| Error::Internal(format!("sidecar serialization failed: {e}")))?;
            text.push('\n');
            std::fs::write(&sidecar_path, text)?;
            println!(
                "wrote {} (3part: jobs={} threshold={}) and {}",
                args.out.display(),
                inst.n(),
                artifacts.threshold,
                sidecar_path.display()
            );
        }
        Family::SptTight => {
            let k1 = require(args.k1, "spt-tight", "k1")?;
            let k2 = require(args.k2, "spt-tight", "k2")?;
            let inst = spt_tight_family(k1, k2);
            std::fs::write(&args.out, write_instance(&inst)?)?;
            println!(
                "wrote {} (spt-tight: k1={k1} k2={k2}, n={} q={})",
                args.out.display(),
                inst.n(),
                inst.q()
            );
        }
        Family::Adversarial => {
            let n = require(args.n, "adversarial", "n")?;
            let m = require(args.m, "adversarial", "m")?;
            let input = adversarial_instance(n, m)?;
            std::fs::write(&args.out, write_robust_input(&input)?)?;
            println!(
                "wrote {} (adversarial: n={n} m={m}, jobs={} quantities={})",
                args.out.display(),
                input.n(),
                input.q()
            );
        }
    }
    Ok(0)
}

fn stem_of(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_else(|| "instance".into())
}

fn run_solve(args: SolveArgs) -> Result<i32, Error> {
    let limits = limits_from_env()?;
    let spec = AlgoSpec { algo: args.algo, eps: args.eps.clone(), k: args.k };
    match load_any(&args.input)? {
        ParsedInput::QuantityOnly(input) => {
            if args.algo != Algo::Robust {
                return Err(Error::InvalidParameter(format!(
                    "{}: the input has no arrival times; only --algo robust accepts \
                     quantity-only files",
                    args.input.display()
                )));
            }
            if args.output.is_some() {
                return Err(Error::InvalidParameter(
                    "a quantity-only input has no realized objective; omit --output".into(),
                ));
            }
            let eps = rmsched::rational::parse_fraction(args.eps.as_deref().ok_or_else(
                || Error::InvalidParameter("robust: eps is required".into()),
            )?)?;
            let asg = robust_schedule(&input, &eps)?;
            println!("slots: {}", join(&asg.slots));
            let mut suffix_weights = Vec::with_capacity(input.q());
            for index in 0..input.q() {
                let w: u64 = input
                    .jobs
                    .iter()
                    .filter(|j| asg.slots[j.id] >= index)
                    .map(|j| j.w)
                    .sum();
                suffix_weights.push(w);
            }
            println!("suffix weights: {}", join(&suffix_weights));
            if args.oracle {
                let report = robustness_report(&input, &asg)?;
                for entry in &report.per_index {
                    println!(
                        "index {}: achieved {} optimal {} ratio {}",
                        entry.index,
                        entry.achieved_weight,
                        entry.optimal_weight,
                        entry.ratio.as_ref().map(decimal6).unwrap_or_else(|| "-".into())
                    );
                }
                println!(
                    "max ratio: {}",
                    report.max_ratio.as_ref().map(decimal6).unwrap_or_else(|| "-".into())
                );
            }
            Ok(0)
        }
        ParsedInput::Timed(inst) => {
            let outcome = solve_one(&inst, &spec, &limits)?;
            println!("objective: {} ({})", outcome.objective, decimal6(&outcome.objective));
            match &outcome.schedule {
                ScheduleDetail::Slots(asg) => println!("slots: {}", join(&asg.slots)),
                ScheduleDetail::Order(ord) => println!("order: {}", join(&ord.order)),
            }
            println!("feasible: {}", outcome.feasible);
            let oracle_objective = if args.oracle {
                let oracle = rmsched::bench::oracle_objective(&inst, &limits)?;
                let ratio = if oracle == rmsched::rational::rint(0) {
                    "-".to_string()
                } else {
                    decimal6(&(&outcome.objective / &oracle))
                };
                println!("oracle: {oracle} (ratio {ratio})");
                Some(oracle)
            } else {
                None
            };
            if let Some(path) = &args.output {
                let ratio = oracle_objective
                    .as_ref()
                    .filter(|o| **o != rmsched::rational::rint(0))
                    .map(|o| &outcome.objective / o);
                let report = RunReport {
                    instance_id: stem_of(&args.input),
                    algo: args.algo,
                    params: outcome.params.clone(),
                    objective: outcome.objective.clone(),
                    oracle_objective,
                    ratio,
                    feasible: outcome.feasible,
                    runtime_ms: 0,
                };
                std::fs::write(path, render_csv(std::slice::from_ref(&report)))?;
                println!("wrote {}", path.display());
            }
            Ok(if outcome.feasible { 0 } else { 2 })
        }
    }
}

fn join<T: std::fmt::Display>(items: &[T]) -> String {
    items.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn run_bench(args: BenchArgs) -> Result<i32, Error> {
    let limits = limits_from_env()?;
    let (cfg, base): (SuiteConfig, PathBuf) = load_suite_config(&args.config)?;
    let outcome = run_suite(&cfg, &base, &limits)?;
    for violation in &outcome.violations {
        eprintln!("violation: {violation}");
    }
    println!("wrote {} rows to {}", outcome.reports.len(), cfg.output.display());
    Ok(if outcome.violations.is_empty() { 0 } else { 2 })
}

struct GroupStats {
    rows: usize,
    infeasible: usize,
    max_ratio: Option<Rat>,
}

fn run_report(args: ReportArgs) -> Result<i32, Error> {
    let text = std::fs::read_to_string(&args.input)
        .map_err(|e| Error::Parse(format!("{}: {e}", args.input.display())))?;
    let mut lines = text.lines();
    match lines.next() {
        Some(header) if header == CSV_HEADER => {}
        other => {
            return Err(Error::Parse(format!(
                "{}: expected header {CSV_HEADER:?}, found {other:?}",
                args.input.display()
            )))
        }
    }
    let mut groups: std::collections::BTreeMap<(String, String), GroupStats> =
        std::collections::BTreeMap::new();
    let mut total_rows = 0usize;
    let mut total_infeasible = 0usize;
    for (lineno, line) in lines.enumerate() {
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 10 {
            return Err(Error::Parse(format!(
                "{}: line {}: expected 10 columns, found {}",
                args.input.display(),
                lineno + 2,
                fields.len()
            )));
        }
        let parse_int = |what: &str, s: &str| -> Result<BigInt, Error> {
            s.parse().map_err(|_| {
                Error::Parse(format!(
                    "{}: line {}: bad {what} {s:?}",
                    args.input.display(),
                    lineno + 2
                ))
            })
        };
        let objective =
            Rat::new(parse_int("objective_num", fields[3])?, parse_int("objective_den", fields[4])?);
        let oracle = if fields[5].is_empty() && fields[6].is_empty() {
            None
        } else {
            Some(Rat::new(parse_int("oracle_num", fields[5])?, parse_int("oracle_den", fields[6])?))
        };
        let ratio = oracle.as_ref().filter(|o| !num_traits::Zero::is_zero(*o)).map(|o| &objective / o);
        let expected_ratio = ratio.as_ref().map(decimal6).unwrap_or_default();
        if fields[7] != expected_ratio {
            return Err(Error::Parse(format!(
                "{}: line {}: ratio column {:?} disagrees with the recomputed {:?}",
                args.input.display(),
                lineno + 2,
                fields[7],
                expected_ratio
            )));
        }
        let feasible = match fields[8] {
            "true" => true,
            "false" => false,
            other => {
                return Err(Error::Parse(format!(
                    "{}: line {}: bad feasible flag {other:?}",
                    args.input.display(),
                    lineno + 2
                )))
            }
        };
        total_rows += 1;
        if !feasible {
            total_infeasible += 1;
        }
        let entry = groups
            .entry((fields[1].to_string(), fields[2].to_string()))
            .or_insert(GroupStats { rows: 0, infeasible: 0, max_ratio: None });
        entry.rows += 1;
        if !feasible {
            entry.infeasible += 1;
        }
        if let Some(r) = ratio {
            if entry.max_ratio.as_ref().is_none_or(|m| r > *m) {
                entry.max_ratio = Some(r);
            }
        }
    }
    for ((algo, params), stats) in &groups {
        let max = stats
            .max_ratio
            .as_ref()
            .map(|r| format!("{} ({r})", decimal6(r)))
            .unwrap_or_else(|| "-".into());
        println!(
            "{algo} {params}: rows {}, infeasible {}, max ratio {max}",
            stats.rows, stats.infeasible
        );
    }
    println!("total: rows {total_rows}, infeasible {total_infeasible}");
    Ok(if total_infeasible == 0 { 0 } else { 2 })
}
