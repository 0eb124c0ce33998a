use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};

/// Parameters of the small-world law `SW(n, k, p)` plus the seed of the
/// random stream used to draw one realisation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Params {
    pub n: usize,
    pub k: usize,
    pub p: f64,
    pub seed: u64,
}

impl Params {
    /// Validates and builds a parameter set.
    ///
    /// `k` must be even and at least 2 and `p` must lie in `[0, 1]`. When
    /// `p > 0` the graph needs `n >= 2k + 2` so that the first rewiring step of
    /// every vertex has a candidate; with `p = 0` nothing is rewired and the
    /// lattice bound `n >= k + 1` is enough.
    pub fn new(n: usize, k: usize, p: f64, seed: u64) -> Result<Self> {
        let params = Params { n, k, p, seed };
        params.check()?;
        if n < 10 * k {
            log::warn!("n = {n} is small relative to k = {k}; the moment results assume n >> k");
        }
        Ok(params)
    }

    pub fn check(&self) -> Result<()> {
        check_degree(self.k)?;
        if !(0.0..=1.0).contains(&self.p) {
            return Err(invalid(format!("p = {} is not in [0, 1]", self.p)));
        }
        if self.p > 0.0 {
            if self.n < 2 * self.k + 2 {
                return Err(invalid(format!(
                    "n = {} is below 2k + 2 = {} required for rewiring",
                    self.n,
                    2 * self.k + 2
                )));
            }
        } else if self.n < self.k + 1 {
            return Err(invalid(format!(
                "n = {} is below k + 1 = {}",
                self.n,
                self.k + 1
            )));
        }
        Ok(())
    }

    /// Number of downside neighbours per vertex, `k / 2`.
    pub fn half_degree(&self) -> usize {
        self.k / 2
    }

    pub fn with_seed(self, seed: u64) -> Self {
        Params { seed, ..self }
    }
}

pub(crate) fn check_degree(k: usize) -> Result<()> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(invalid(format!("k = {k} must be an even integer >= 2")));
    }
    Ok(())
}
