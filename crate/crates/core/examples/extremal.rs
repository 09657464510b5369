// Maximum Q-index over C4-free and C5-free graphs, compared with F_n and S_{n,2}.

use qindex::families::{q_friendship_closed, q_snk2_closed};
use qindex::search::{find_extremal, find_extremal_sharded, EnumerationSpec, Objective};

pub fn run_example() -> qindex::Result<()> {
    for n in 5..=8 {
        let c4 = find_extremal(&EnumerationSpec::new(n).forbid_cycle(4)?, Objective::Q)?;
        println!(
            "C4-free n = {n}: max q {:.10} by {:?}; q(F_n) = {:.10}",
            c4.max_value,
            c4.maximizer_graph6,
            q_friendship_closed(n)?
        );
        let c5 = find_extremal_sharded(&EnumerationSpec::new(n).forbid_cycle(5)?, Objective::Q, 4)?;
        println!(
            "C5-free n = {n}: max q {:.10} by {:?}; q(S_n2) = {:.10}",
            c5.max_value,
            c5.maximizer_graph6,
            q_snk2_closed(n)?
        );
    }
    let mu = find_extremal(&EnumerationSpec::new(7).forbid_cycle(6)?, Objective::Mu)?;
    println!("C6-free n = 7: max mu {:.10} by {:?}", mu.max_value, mu.maximizer_graph6);
    Ok(())
}

fn main() -> qindex::Result<()> {
    run_example()
}
