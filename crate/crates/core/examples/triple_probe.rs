//! Probability that all three edges of a canonical triple survive, and how
//! it decays with n for triples with far pairs.

use smallworld::configurations::{
    canonical_triple, estimate_triple_probability, scaling_exponent, ConfigClass,
};
use smallworld::Params;

fn main() -> smallworld::Result<()> {
    let params = Params::new(200, 4, 0.3, 5)?;
    let triple = canonical_triple(ConfigClass::AllClose, 200, 4)?;
    let e = estimate_triple_probability(&params, triple, 5_000)?;
    println!(
        "all-close {:?}: {:.4} ± {:.4}, (1-p)^3 = {:.4}",
        e.triple,
        e.point,
        e.stderr,
        0.7f64.powi(3)
    );

    let fit = scaling_exponent(4, 0.5, ConfigClass::OneFar, &[50, 100, 200], 20_000, 5)?;
    for point in &fit.points {
        println!(
            "one-far n = {:>3}: {:.5} ({} hits)",
            point.n, point.estimate.point, point.estimate.hits
        );
    }
    println!("fitted exponent {:.3}", fit.exponent);
    Ok(())
}
