// Runs a small verification suite from a config string and prints the CSV report.

use qindex::verify::report::to_csv;
use qindex::verify::{run_suite, verify_theorem_c5, SuiteConfig};

pub fn run_example() -> qindex::Result<()> {
    let cfg = SuiteConfig::parse(
        "claims = THM1, PROP1, CONJ2\n\
         thm1.n = 4..7\n\
         prop1.n = 4..8\n\
         conj.n = 6..7\n",
        None,
    )?;
    let certs = run_suite(&cfg)?;
    print!("{}", to_csv(&certs)?);

    let c = verify_theorem_c5(5)?;
    println!("{} n=5: {} with witnesses {:?}", c.claim, c.verdict, c.witnesses);
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
