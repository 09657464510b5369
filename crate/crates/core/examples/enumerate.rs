// Isomorph-free enumeration, plain and cycle-filtered, single job and sharded.

use qindex::graph6;
use qindex::search::{count_sharded, enumerate, partition_jobs, EnumerationSpec};

pub fn run_example() -> qindex::Result<()> {
    for n in 1..=7 {
        let all = enumerate(&EnumerationSpec::new(n), |_| {})?;
        let connected = enumerate(&EnumerationSpec::new(n).connected(true), |_| {})?;
        println!("n = {n}: {all} classes, {connected} connected");
    }

    let spec = EnumerationSpec::new(5).forbid_cycle(3)?;
    let mut names = Vec::new();
    enumerate(&spec, |g| names.push(graph6::encode(g)))?;
    println!("triangle-free on 5 vertices: {}", names.join(" "));

    let spec = EnumerationSpec::new(8);
    let jobs = partition_jobs(&spec, 6)?;
    let counts = count_sharded(&spec, 6)?;
    println!(
        "n = 8 over {} jobs (split at level {}): {:?}, total {}",
        jobs.len(),
        jobs[0].seed_level,
        counts,
        counts.iter().sum::<u64>()
    );
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
