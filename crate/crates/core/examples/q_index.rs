// Q-index and adjacency index of a graph given by its edges.

use qindex::spectra::{mu_index, q_index, signless_laplacian};
use qindex::{graph6, Graph};

pub fn run_example() -> qindex::Result<()> {
    // the paw: a triangle with a pendant edge
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)])?;
    let q = q_index(&g)?;
    let mu = mu_index(&g)?;
    println!("graph6 {}", graph6::encode(&g));
    println!("q  = {:.10} ({} iterations, residual {:.1e})", q.value, q.iterations, q.residual);
    println!("mu = {:.10}", mu.value);

    let m = signless_laplacian(&g);
    for row in m.chunks(g.order()) {
        println!("  {row:?}");
    }
    assert!(q.value >= 2.0 * mu.value - 1e-9);
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
