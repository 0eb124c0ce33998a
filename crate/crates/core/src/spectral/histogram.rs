use serde::Serialize;

use super::eigen::Spectrum;
use crate::error::{invalid, Result};

/// Odd, so that a bin is centred on zero for spectra symmetric about it.
pub const DEFAULT_BINS: usize = 101;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub bin_edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub total: u64,
}

impl Histogram {
    /// `(lo, hi, count)` per bin.
    pub fn bins(&self) -> impl Iterator<Item = (f64, f64, u64)> + '_ {
        self.bin_edges
            .windows(2)
            .zip(&self.counts)
            .map(|(w, &c)| (w[0], w[1], c))
    }
}

/// Equal-width histogram over `[min - eps, max + eps]` with
/// `eps = 1e-9 * (max - min + 1)`.
pub fn spectral_histogram(spectrum: &Spectrum, bins: usize) -> Result<Histogram> {
    if bins == 0 {
        return Err(invalid("histogram needs at least one bin"));
    }
    let (Some(min), Some(max)) = (spectrum.min(), spectrum.max()) else {
        return Err(invalid("histogram of an empty spectrum"));
    };
    let eps = 1e-9 * (max - min + 1.0);
    let lo = min - eps;
    let hi = max + eps;
    let width = (hi - lo) / bins as f64;

    let mut bin_edges: Vec<f64> = (0..bins).map(|b| lo + b as f64 * width).collect();
    bin_edges.push(hi);

    let mut counts = vec![0u64; bins];
    for &x in spectrum.eigenvalues() {
        let b = (((x - lo) / width) as usize).min(bins - 1);
        counts[b] += 1;
    }
    Ok(Histogram {
        bin_edges,
        counts,
        total: spectrum.len() as u64,
    })
}
