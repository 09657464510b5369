// Merris and Das bounds, and the edge bound for path-free graphs.

use qindex::bounds::{das_bound, erdos_gallai_report, merris_bound};
use qindex::families::build;
use qindex::graph6;

pub fn run_example() -> qindex::Result<()> {
    let petersen = graph6::decode("IheA@GUAo")?;
    let m = merris_bound(&petersen)?;
    let d = das_bound(&petersen)?;
    println!("Petersen: Merris {:.4} (slack {:.4}), Das {:.4} (slack {:.4})", m.value, m.slack, d.value, d.slack);

    // two disjoint triangles have no P_4 and meet the edge bound for k = 2
    let g = build(&"K:3".parse()?)?.disjoint_union(&build(&"K:3".parse()?)?)?;
    let eg = erdos_gallai_report(&g, 2)?;
    println!(
        "2K_3: e = {}, kn/2 = {}, equality {}, clique union {}",
        eg.edges,
        eg.twice_limit as f64 / 2.0,
        eg.equality,
        eg.clique_union
    );
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
