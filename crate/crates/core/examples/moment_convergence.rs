//! Monte Carlo estimates of the third spectral moment approaching their
//! n -> infinity limit 3/4 k(k-2)(1-p)^3.

use smallworld::montecarlo::{check_sweep, convergence_sweep};
use smallworld::spectral::{adjacency_matrix, moment};
use smallworld::{generate, Params};

fn main() -> smallworld::Result<()> {
    // the ring lattice hits the limit exactly
    let (lattice, _) = generate(&Params::new(100, 6, 0.0, 0)?)?;
    println!(
        "p = 0, k = 6: m3 = {}",
        moment(&adjacency_matrix(&lattice), 3)?
    );

    let rows = convergence_sweep(4, 0.3, &[100, 200, 400], 200, 1)?;
    for row in &rows {
        println!(
            "n = {:>4}  m3 = {:.4} ± {:.4}  limit = {:.4}  gap = {:+.4}",
            row.n,
            row.estimate.mean,
            row.estimate.stderr,
            row.limit.unwrap(),
            row.gap.unwrap()
        );
    }
    let check = check_sweep(&rows);
    println!(
        "within band: {:?}, gap shrinking: {}",
        check.rows_within_band, check.gap_not_growing
    );
    Ok(())
}
