//! The sequential rewiring pass of the small-world construction.
//!
//! For `i = 0..n` and `d = 1..=k/2`, the lattice edge `{i, i+d}` is kept with
//! probability `1 - p`. Otherwise a new endpoint `j'` is drawn uniformly from
//! the vertices outside the window `{i-k/2, …, i+k/2}` and outside the current
//! neighbourhood of `i` (which includes edges rewired into `i` earlier in the
//! pass), and `{i, i+d}` is replaced by `{i, j'}`. If no vertex qualifies the
//! edge is kept and the step is logged as exhausted.

use rand::Rng;
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::graph::{build_ring_lattice, Graph};
use crate::params::Params;
use crate::rng::DecisionStreams;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Kept,
    /// Replaced by an edge to this (0-based) vertex.
    Rewired(usize),
    /// Chosen for rewiring but the candidate pool was empty.
    ExhaustedKept,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RewireEvent {
    pub source: usize,
    pub offset: usize,
    pub outcome: Outcome,
    /// Number of eligible targets at decision time.
    pub candidate_pool_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct RewireLog {
    events: Vec<RewireEvent>,
    in_rewirings: Vec<usize>,
    exhausted_count: usize,
}

impl RewireLog {
    /// One event per downside lattice edge, ordered by `(source, offset)`.
    pub fn events(&self) -> &[RewireEvent] {
        &self.events
    }

    /// For each vertex, how many edges had been rewired into it when its own
    /// pass started.
    pub fn in_rewirings(&self) -> &[usize] {
        &self.in_rewirings
    }

    pub fn exhausted_count(&self) -> usize {
        self.exhausted_count
    }

    pub fn rewired_count(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e.outcome, Outcome::Rewired(_)))
            .count()
    }
}

/// Samples `SW(n, k, p)`: builds the ring lattice and rewires it.
pub fn generate(params: &Params) -> Result<(Graph, RewireLog)> {
    params.check()?;
    let lattice = build_ring_lattice(params.n, params.k)?;
    rewire(&lattice, params.p, params.seed)
}

/// Runs the rewiring pass over an unmodified ring lattice.
///
/// Unlike [`generate`], this accepts any lattice size `n >= k + 1`; steps
/// that find no eligible target are logged as [`Outcome::ExhaustedKept`].
pub fn rewire(lattice: &Graph, p: f64, seed: u64) -> Result<(Graph, RewireLog)> {
    rewire_with_audit(lattice, p, seed, |_, _| {})
}

/// Like [`rewire`], calling `after_vertex(i, &graph)` once vertex `i`'s
/// downside edges have all been decided.
pub fn rewire_with_audit(
    lattice: &Graph,
    p: f64,
    seed: u64,
    after_vertex: impl FnMut(usize, &Graph),
) -> Result<(Graph, RewireLog)> {
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("p = {p} is not in [0, 1]")));
    }
    if *lattice != build_ring_lattice(lattice.n(), lattice.k())? {
        return Err(invalid("rewire expects an unmodified ring lattice"));
    }
    let mut log = RewireLog {
        events: Vec::with_capacity(lattice.n() * lattice.k() / 2),
        in_rewirings: vec![0; lattice.n()],
        exhausted_count: 0,
    };
    let graph = run_pass(lattice.clone(), p, seed, Some(&mut log), after_vertex);
    Ok((graph, log))
}

/// Draws one sample without keeping a log. `params` must already be valid.
pub(crate) fn sample(params: &Params) -> Graph {
    let lattice = build_ring_lattice(params.n, params.k).expect("validated params");
    run_pass(lattice, params.p, params.seed, None, |_, _| {})
}

fn run_pass(
    mut graph: Graph,
    p: f64,
    seed: u64,
    mut log: Option<&mut RewireLog>,
    mut after_vertex: impl FnMut(usize, &Graph),
) -> Graph {
    let n = graph.n();
    let half = graph.k() / 2;
    let mut streams = DecisionStreams::new(seed);
    let mut incoming = vec![0usize; n];
    let mut excluded = Vec::with_capacity(4 * half + 2);

    for i in 0..n {
        if let Some(log) = log.as_deref_mut() {
            log.in_rewirings[i] = incoming[i];
        }
        for d in 1..=half {
            let j = (i + d) % n;
            debug_assert!(
                graph.has_edge(i, j),
                "lattice edge {{{i}, {j}}} missing at its own step"
            );

            let mut draw = if p > 0.0 {
                let rng = streams.stream((i * half + d - 1) as u64);
                rng.gen_bool(p).then_some(rng)
            } else {
                None
            };

            let pool = if draw.is_some() || log.is_some() {
                collect_excluded(&graph, i, half, &mut excluded);
                n - excluded.len()
            } else {
                0
            };

            let outcome = match draw.as_mut() {
                None => Outcome::Kept,
                Some(_) if pool == 0 => Outcome::ExhaustedKept,
                Some(rng) => {
                    let target = nth_allowed(&excluded, rng.gen_range(0..pool));
                    graph.remove_edge(i, j);
                    graph.insert_edge(i, target);
                    incoming[target] += 1;
                    Outcome::Rewired(target)
                }
            };

            if let Some(log) = log.as_deref_mut() {
                if outcome == Outcome::ExhaustedKept {
                    log.exhausted_count += 1;
                }
                log.events.push(RewireEvent {
                    source: i,
                    offset: d,
                    outcome,
                    candidate_pool_size: pool,
                });
            }
        }
        after_vertex(i, &graph);
    }
    graph
}

/// Sorted, deduplicated union of the window around `i` and its neighbours.
fn collect_excluded(graph: &Graph, i: usize, half: usize, out: &mut Vec<usize>) {
    let n = graph.n();
    out.clear();
    out.extend((0..=2 * half).map(|t| (i + n - half + t) % n));
    out.extend_from_slice(graph.neighbors(i));
    out.sort_unstable();
    out.dedup();
}

/// The `rank`-th smallest vertex not in `excluded` (sorted ascending); this is
/// indexing into the sorted candidate pool without materialising it.
fn nth_allowed(excluded: &[usize], rank: usize) -> usize {
    let mut candidate = rank;
    for &e in excluded {
        if e <= candidate {
            candidate += 1;
        } else {
            break;
        }
    }
    candidate
}
