//! Why the unit-requirement problem is strongly NP-hard: a reduction from
//! 3-Partition.
//!
//! Given `3n` integers that should split into `n` triples of equal sum `b`,
//! the reduction builds a scheduling instance whose resource arrives in `n`
//! equal blocks. A schedule keeps the total delay below the threshold
//! exactly when each block is filled by one triple. The example builds the
//! instance for a yes-input, finds a partition, converts it into a schedule
//! meeting the threshold, and shows a no-input where the search proves that
//! no partition exists.

use rmsched::error::Error;
use rmsched::unit_req::{
    find_partition, partition_to_schedule, three_partition_instance, JobClass, ThreePartitionInput,
};

fn main() -> Result<(), Error> {
    let yes = ThreePartitionInput { b: 20, xs: vec![6, 6, 8, 6, 7, 7] };
    let (inst, artifacts) = three_partition_instance(&yes)?;
    let counts = |class: JobClass| artifacts.labels.iter().filter(|&&c| c == class).count();
    println!("yes-input: b = {}, xs = {:?}", yes.b, yes.xs);
    println!(
        "  reduced instance: {} jobs, {} arrivals, padding k = {}",
        inst.n(),
        inst.q(),
        artifacts.k
    );
    println!(
        "  job classes: {} normal, {} small, {} large",
        counts(JobClass::Normal),
        counts(JobClass::Small),
        counts(JobClass::Large)
    );
    println!("  delay threshold: {}", artifacts.threshold);

    match find_partition(&yes)? {
        Some(partition) => {
            println!("  partition found: {partition:?}");
            let cert = partition_to_schedule(&yes, &partition)?;
            println!(
                "  certificate schedule: total delay {} <= threshold {} — decision YES",
                cert.delay, artifacts.threshold
            );
            assert!(cert.delay <= rmsched::rational::rint(artifacts.threshold));
        }
        None => unreachable!("this input does partition"),
    }
    println!();

    // The 9 can never sit in a triple summing to 20: its two partners would
    // have to sum to 11, but each is at least 6. So this input has no
    // partition, and the reduced instance cannot meet its threshold.
    let no = ThreePartitionInput { b: 20, xs: vec![9, 7, 6, 6, 6, 6] };
    let (_, artifacts) = three_partition_instance(&no)?;
    println!("no-input: b = {}, xs = {:?}", no.b, no.xs);
    match find_partition(&no)? {
        Some(p) => unreachable!("unexpected partition {p:?}"),
        None => println!(
            "  exhaustive search: no partition into triples of sum {} — every schedule \
             of the reduced instance exceeds the threshold {} — decision NO",
            no.b, artifacts.threshold
        ),
    }
    Ok(())
}
