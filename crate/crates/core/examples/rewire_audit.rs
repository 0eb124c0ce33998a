//! Watch the rewiring pass vertex by vertex and summarise the decision log.

use smallworld::rewire::rewire_with_audit;
use smallworld::{build_ring_lattice, Outcome};

fn main() -> smallworld::Result<()> {
    let lattice = build_ring_lattice(12, 4)?;
    let (graph, log) = rewire_with_audit(&lattice, 0.4, 3, |i, g| {
        println!(
            "after vertex {:>2}: {} edges, degree of {} is {}",
            i + 1,
            g.edge_count(),
            i + 1,
            g.degree(i)
        );
    })?;

    for event in log.events() {
        let what = match event.outcome {
            Outcome::Kept => "kept".to_string(),
            Outcome::Rewired(j) => format!("rewired to {}", j + 1),
            Outcome::ExhaustedKept => "kept, pool empty".to_string(),
        };
        println!(
            "({}, {}) {what} [pool {}]",
            event.source + 1,
            (event.source + event.offset) % graph.n() + 1,
            event.candidate_pool_size
        );
    }
    println!(
        "{} rewired, {} kept",
        log.rewired_count(),
        log.events().len() - log.rewired_count()
    );
    Ok(())
}
