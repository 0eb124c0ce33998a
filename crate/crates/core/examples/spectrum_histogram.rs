//! Eigenvalues of one sampled adjacency matrix, drawn as a text histogram.

use smallworld::spectral::{adjacency_matrix, eigenvalues, spectral_histogram};
use smallworld::{generate, Params};

fn main() -> smallworld::Result<()> {
    let (graph, _) = generate(&Params::new(300, 6, 0.2, 11)?)?;
    let spectrum = eigenvalues(&adjacency_matrix(&graph))?;
    println!(
        "lambda_min = {:.4}, lambda_max = {:.4}, sum lambda^2 / n = {:.6}",
        spectrum.min().unwrap(),
        spectrum.max().unwrap(),
        spectrum.power_sum(2) / graph.n() as f64
    );

    let hist = spectral_histogram(&spectrum, 24)?;
    let widest = hist.counts.iter().copied().max().unwrap_or(1);
    for (lo, hi, count) in hist.bins() {
        let bar = "#".repeat((count * 50 / widest) as usize);
        println!("[{lo:>7.3}, {hi:>7.3}) {count:>4} {bar}");
    }
    Ok(())
}
