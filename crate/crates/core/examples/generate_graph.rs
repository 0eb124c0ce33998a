//! Build a small-world graph, check its invariants and write it as an edge list.
//!
//! ```text
//! cargo run --example generate_graph
//! ```

use smallworld::export::{write_edge_list, EdgeListHeader};
use smallworld::{generate, validate, Params};

fn main() -> smallworld::Result<()> {
    let params = Params::new(20, 4, 0.5, 42)?;
    let (graph, log) = generate(&params)?;

    let report = validate(&graph);
    println!(
        "n={} edges={} (expected {}) symmetric={} loop-free={}",
        graph.n(),
        report.edge_count,
        report.expected_edge_count,
        report.symmetric,
        report.no_self_loops
    );
    println!(
        "rewired {} of {} edges, {} exhausted",
        log.rewired_count(),
        log.events().len(),
        log.exhausted_count()
    );

    let header = EdgeListHeader {
        n: params.n,
        k: params.k,
        p: params.p,
        seed: params.seed,
        exhausted: log.exhausted_count(),
    };
    write_edge_list(std::io::stdout().lock(), &graph, &header)
}
