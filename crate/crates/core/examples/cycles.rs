// Fixed-length cycle and path detection.

use qindex::graph6;
use qindex::patterns::{contains_cycle, contains_path, parse_pattern_list};

pub fn run_example() -> qindex::Result<()> {
    let petersen = graph6::decode("IheA@GUAo")?;
    for k in 3..=10 {
        println!("C{k:<2} {}", if contains_cycle(&petersen, k)? { "yes" } else { "no" });
    }
    println!("P10 {}", contains_path(&petersen, 10)?);
    for p in parse_pattern_list("C4,C5,P6")? {
        println!("{p} occurs: {}", p.occurs_in(&petersen));
    }
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
