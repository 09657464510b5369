// Canonical forms, automorphism orbits and graph6 round trips.

use qindex::canon::canonize;
use qindex::{canonical_form, graph6, Graph};

pub fn run_example() -> qindex::Result<()> {
    let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)])?;
    let relabeled = p5.permute(&[3, 0, 4, 1, 2])?;
    assert_eq!(canonical_form(&p5), canonical_form(&relabeled));

    let c = canonize(&p5);
    println!("canonical graph6 {}", graph6::encode(&c.canonical_graph));
    println!("labeling {:?}", c.form.labeling);
    println!("orbits {:?}", c.orbits());
    println!("{} automorphism generator(s)", c.generators.len());

    let text = graph6::encode(&relabeled);
    assert_eq!(graph6::decode(&text)?, relabeled);
    println!("round trip ok: {text}");
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
