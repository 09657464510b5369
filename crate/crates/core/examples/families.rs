// Named families, their closed forms and the friendship interval.

use qindex::families::{build, friendship_bounds, q_closed};
use qindex::spectra::q_index;
use qindex::{graph6, FamilySpec};

pub fn run_example() -> qindex::Result<()> {
    for token in ["F:9", "F:10", "S:9,2", "S+:10,2", "T2:8", "SP:7", "K1T:7"] {
        let spec: FamilySpec = token.parse()?;
        let g = build(&spec)?;
        let q = q_index(&g)?.value;
        let closed = q_closed(&spec).map_or("-".to_string(), |c| format!("{c:.10}"));
        println!("{token:<8} {:<12} q = {q:.10}  closed = {closed}", graph6::encode(&g));
    }
    for n in [9, 10] {
        let (lo, hi) = friendship_bounds(n)?;
        println!("F_{n} lies in ({lo:.6}, {hi:.6})");
    }
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
