//! Vertex-triple configurations on the ring and the triangle probabilities
//! attached to them.
//!
//! A triple of distinct vertices is classified by how many of its three
//! pairwise torus distances exceed `k/2`. Vertex arguments in this module are
//! 1-based, matching the labels written to disk.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::params::{check_degree, Params};
use crate::rewire;
use crate::rng::derive_seed;

/// Largest `n` accepted by [`enumerate_counts`].
pub const DEFAULT_ENUMERATION_CAP: usize = 600;

/// Cycle distance `min(|i - j|, n - |i - j|)` between 1-based vertices.
pub fn torus_distance(i: usize, j: usize, n: usize) -> Result<usize> {
    for v in [i, j] {
        if v == 0 || v > n {
            return Err(Error::OutOfRange { vertex: v, n });
        }
    }
    Ok(ring_distance(i, j, n))
}

fn ring_distance(i: usize, j: usize, n: usize) -> usize {
    let d = i.abs_diff(j);
    d.min(n - d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConfigClass {
    AllClose,
    OneFar,
    TwoFar,
    AllFar,
}

impl ConfigClass {
    pub const ALL: [ConfigClass; 4] = [
        ConfigClass::AllClose,
        ConfigClass::OneFar,
        ConfigClass::TwoFar,
        ConfigClass::AllFar,
    ];

    /// Class with the given number of far pairs (0..=3).
    pub fn from_far_pairs(far: usize) -> Self {
        Self::ALL[far]
    }

    pub fn far_pairs(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            ConfigClass::AllClose => "all-close",
            ConfigClass::OneFar => "one-far",
            ConfigClass::TwoFar => "two-far",
            ConfigClass::AllFar => "all-far",
        }
    }
}

impl fmt::Display for ConfigClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConfigClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| {
                invalid(format!(
                    "unknown class {s:?}; expected all-close, one-far, two-far or all-far"
                ))
            })
    }
}

/// Classifies an ordered triple of distinct 1-based vertices.
pub fn classify_triple(i1: usize, i2: usize, i3: usize, n: usize, k: usize) -> Result<ConfigClass> {
    let d12 = torus_distance(i1, i2, n)?;
    let d23 = torus_distance(i2, i3, n)?;
    let d31 = torus_distance(i3, i1, n)?;
    if i1 == i2 || i2 == i3 || i3 == i1 {
        return Err(Error::NonDistinct(i1, i2, i3));
    }
    let half = k / 2;
    let far = [d12, d23, d31].into_iter().filter(|&d| d > half).count();
    Ok(ConfigClass::from_far_pairs(far))
}

/// Ordered-triple counts per configuration class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct ConfigCounts {
    pub all_close: u64,
    pub one_far: u64,
    pub two_far: u64,
    pub all_far: u64,
}

impl ConfigCounts {
    pub fn get(&self, class: ConfigClass) -> u64 {
        match class {
            ConfigClass::AllClose => self.all_close,
            ConfigClass::OneFar => self.one_far,
            ConfigClass::TwoFar => self.two_far,
            ConfigClass::AllFar => self.all_far,
        }
    }

    fn bump(&mut self, class: ConfigClass) {
        match class {
            ConfigClass::AllClose => self.all_close += 1,
            ConfigClass::OneFar => self.one_far += 1,
            ConfigClass::TwoFar => self.two_far += 1,
            ConfigClass::AllFar => self.all_far += 1,
        }
    }

    pub fn total(&self) -> u64 {
        self.all_close + self.one_far + self.two_far + self.all_far
    }
}

impl std::ops::Add for ConfigCounts {
    type Output = ConfigCounts;

    fn add(self, rhs: Self) -> Self {
        ConfigCounts {
            all_close: self.all_close + rhs.all_close,
            one_far: self.one_far + rhs.one_far,
            two_far: self.two_far + rhs.two_far,
            all_far: self.all_far + rhs.all_far,
        }
    }
}

pub fn enumerate_counts(n: usize, k: usize) -> Result<ConfigCounts> {
    enumerate_counts_capped(n, k, DEFAULT_ENUMERATION_CAP)
}

/// Exact counts by classifying every ordered triple of distinct vertices.
pub fn enumerate_counts_capped(n: usize, k: usize, cap: usize) -> Result<ConfigCounts> {
    check_degree(k)?;
    if n < k + 2 {
        return Err(invalid(format!(
            "enumeration needs n >= k + 2, got n = {n}, k = {k}"
        )));
    }
    if n > cap {
        return Err(Error::SizeLimit { n, cap });
    }
    let half = k / 2;
    let far: Vec<bool> = (0..n).map(|diff| diff.min(n - diff) > half).collect();
    let far_between = |a: usize, b: usize| far[a.abs_diff(b)] as usize;

    let counts = (0..n)
        .into_par_iter()
        .map(|a| {
            let mut local = ConfigCounts::default();
            for b in (0..n).filter(|&b| b != a) {
                let ab = far_between(a, b);
                for c in (0..n).filter(|&c| c != a && c != b) {
                    let pairs = ab + far_between(b, c) + far_between(c, a);
                    local.bump(ConfigClass::from_far_pairs(pairs));
                }
            }
            local
        })
        .reduce(ConfigCounts::default, |x, y| x + y);
    Ok(counts)
}

/// The textbook closed-form expressions for the four triple counts.
///
/// `all_close` is exact whenever the `k/2`-windows do not wrap (`n > 3k`);
/// `one_far` and `two_far` are the base-pattern counts that only fix the
/// order of growth; `all_far_bound` is stated as an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ClosedFormCounts {
    pub all_close: i64,
    pub one_far: i64,
    pub two_far: i64,
    pub all_far_bound: i64,
    /// `n > 3k`; outside it the expressions are not meaningful.
    pub in_regime: bool,
}

pub fn closed_form_counts(n: usize, k: usize) -> ClosedFormCounts {
    let (n, k) = (n as i64, k as i64);
    ClosedFormCounts {
        // 3/4 nk(k-2); k(k-2) is a multiple of 8 for even k
        all_close: 3 * n * (k * (k - 2) / 4),
        // nk(k+2)/4
        one_far: n * (k * (k + 2) / 4),
        // nk(n - 5k/4 - 3/2) = (nk/2)(4n - 5k - 6)/2
        two_far: (n * k / 2) * (4 * n - 5 * k - 6) / 2,
        all_far_bound: n * (n - k - 1) * (n - 2 * k - 2),
        in_regime: n > 3 * k,
    }
}

/// Enumerated counts next to the closed forms, with `enumerated / closed`
/// ratios.
#[derive(Debug, Clone, Serialize)]
pub struct CountsReport {
    pub n: usize,
    pub k: usize,
    pub all_close: u64,
    pub one_far: u64,
    pub two_far: u64,
    pub all_far: u64,
    pub total: u64,
    pub closed_form: ClosedFormCounts,
    pub ratios: CountRatios,
    pub checks: CountChecks,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CountRatios {
    pub all_close: Option<f64>,
    pub one_far: Option<f64>,
    pub two_far: Option<f64>,
    pub all_far: Option<f64>,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct CountChecks {
    pub total_is_ordered_triples: bool,
    pub all_close_exact: bool,
    pub one_far_within_factor_6: bool,
    pub two_far_within_factor_6: bool,
    pub all_far_within_bound: bool,
}

impl CountChecks {
    pub fn all(&self) -> bool {
        self.total_is_ordered_triples
            && self.all_close_exact
            && self.one_far_within_factor_6
            && self.two_far_within_factor_6
            && self.all_far_within_bound
    }
}

impl CountsReport {
    pub fn new(n: usize, k: usize, counts: ConfigCounts) -> Self {
        let closed = closed_form_counts(n, k);
        let ratio = |num: u64, den: i64| (den > 0).then(|| num as f64 / den as f64);
        let within = |r: Option<f64>| r.is_some_and(|r| (1.0..=6.0).contains(&r));
        let ratios = CountRatios {
            all_close: ratio(counts.all_close, closed.all_close),
            one_far: ratio(counts.one_far, closed.one_far),
            two_far: ratio(counts.two_far, closed.two_far),
            all_far: ratio(counts.all_far, closed.all_far_bound),
        };
        let ordered = (n * (n - 1) * (n - 2)) as u64;
        CountsReport {
            n,
            k,
            all_close: counts.all_close,
            one_far: counts.one_far,
            two_far: counts.two_far,
            all_far: counts.all_far,
            total: counts.total(),
            closed_form: closed,
            ratios,
            checks: CountChecks {
                total_is_ordered_triples: counts.total() == ordered,
                all_close_exact: counts.all_close as i64 == closed.all_close,
                one_far_within_factor_6: within(ratios.one_far),
                two_far_within_factor_6: within(ratios.two_far),
                all_far_within_bound: counts.all_far as i64 <= closed.all_far_bound,
            },
        }
    }
}

/// Monte Carlo estimate of the probability that a fixed triple forms a
/// triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProbEstimate {
    pub point: f64,
    pub stderr: f64,
    pub hits: u64,
    pub trials: u64,
    pub triple: (usize, usize, usize),
}

impl ProbEstimate {
    fn from_hits(hits: u64, trials: u64, triple: (usize, usize, usize)) -> Self {
        let point = hits as f64 / trials as f64;
        ProbEstimate {
            point,
            stderr: (point * (1.0 - point) / trials as f64).sqrt(),
            hits,
            trials,
            triple,
        }
    }
}

/// Samples `trials` independent graphs (trial `t` uses seed
/// `derive_seed(params.seed, [t])`) and counts how often the three edges of
/// the 1-based `triple` are all present.
pub fn estimate_triple_probability(
    params: &Params,
    triple: (usize, usize, usize),
    trials: u64,
) -> Result<ProbEstimate> {
    params.check()?;
    if trials < 100 {
        return Err(invalid(format!("need at least 100 trials, got {trials}")));
    }
    let (a, b, c) = triple;
    classify_triple(a, b, c, params.n, params.k)?;
    let (a, b, c) = (a - 1, b - 1, c - 1);

    let hits = (0..trials)
        .into_par_iter()
        .filter(|&t| {
            let g = rewire::sample(&params.with_seed(derive_seed(params.seed, &[t])));
            g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(c, a)
        })
        .count() as u64;
    Ok(ProbEstimate::from_hits(hits, trials, triple))
}

/// Fixed representative triple of a configuration class for a given `n`:
///
/// - all close: `(1, 2, 3)` (needs `k >= 4`)
/// - one far: `(1, 1 + k/2, 1 + k)`
/// - two far: `(1, 2, 2 + ceil(n/2))`
/// - all far: `(1, 1 + ceil(n/3), 1 + ceil(2n/3))`
pub fn canonical_triple(class: ConfigClass, n: usize, k: usize) -> Result<(usize, usize, usize)> {
    let half = k / 2;
    let triple = match class {
        ConfigClass::AllClose => (1, 2, 3),
        ConfigClass::OneFar => (1, 1 + half, 1 + k),
        ConfigClass::TwoFar => (1, 2, 2 + n.div_ceil(2)),
        ConfigClass::AllFar => (1, 1 + n.div_ceil(3), 1 + (2 * n).div_ceil(3)),
    };
    let got = classify_triple(triple.0, triple.1, triple.2, n, k)?;
    if got != class {
        return Err(invalid(format!(
            "no canonical {class} triple for n = {n}, k = {k}"
        )));
    }
    Ok(triple)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ScalingPoint {
    pub n: usize,
    pub class: ConfigClass,
    pub estimate: ProbEstimate,
}

/// Least-squares line through `(ln n, ln estimate)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeFit {
    pub exponent: f64,
    pub intercept: f64,
    /// Root mean square of the fit residuals in log space.
    pub residual: f64,
    pub points: Vec<ScalingPoint>,
}

/// Estimates the canonical-triple triangle probability of `class` at each
/// `n` and fits its power-law decay exponent. Each `n` gets its own seed,
/// `derive_seed(seed, [n])`.
pub fn scaling_exponent(
    k: usize,
    p: f64,
    class: ConfigClass,
    n_list: &[usize],
    trials: u64,
    seed: u64,
) -> Result<SlopeFit> {
    if class == ConfigClass::AllClose {
        return Err(invalid("all-close probabilities do not decay with n"));
    }
    if n_list.len() < 3 {
        return Err(invalid("scaling fit needs at least 3 values of n"));
    }
    if n_list.windows(2).any(|w| w[0] >= w[1]) {
        return Err(invalid("n values must be strictly ascending"));
    }
    if let Some(&n) = n_list.iter().find(|&&n| n <= 3 * k) {
        return Err(invalid(format!("n = {n} must exceed 3k = {}", 3 * k)));
    }
    let points = probe_class(k, p, class, n_list, trials, seed)?;
    if let Some(zero) = points.iter().find(|pt| pt.estimate.hits == 0) {
        return Err(Error::ZeroHits { n: zero.n, trials });
    }
    let xy: Vec<(f64, f64)> = points
        .iter()
        .map(|pt| ((pt.n as f64).ln(), pt.estimate.point.ln()))
        .collect();
    let (exponent, intercept, residual) = fit_line(&xy);
    Ok(SlopeFit {
        exponent,
        intercept,
        residual,
        points,
    })
}

/// Canonical-triple estimates for each `n`, without fitting.
pub fn probe_class(
    k: usize,
    p: f64,
    class: ConfigClass,
    n_list: &[usize],
    trials: u64,
    seed: u64,
) -> Result<Vec<ScalingPoint>> {
    n_list
        .iter()
        .map(|&n| {
            let params = Params::new(n, k, p, derive_seed(seed, &[n as u64]))?;
            let triple = canonical_triple(class, n, k)?;
            let estimate = estimate_triple_probability(&params, triple, trials)?;
            log::info!("{class} n={n}: {}/{} hits", estimate.hits, estimate.trials);
            Ok(ScalingPoint { n, class, estimate })
        })
        .collect()
}

/// Unweighted least squares; returns `(slope, intercept, rms residual)`.
pub(crate) fn fit_line(points: &[(f64, f64)]) -> (f64, f64, f64) {
    let m = points.len() as f64;
    let mx = points.iter().map(|p| p.0).sum::<f64>() / m;
    let my = points.iter().map(|p| p.1).sum::<f64>() / m;
    let sxx: f64 = points.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let sxy: f64 = points.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let rss: f64 = points
        .iter()
        .map(|p| (p.1 - intercept - slope * p.0).powi(2))
        .sum();
    (slope, intercept, (rss / m).sqrt())
}
