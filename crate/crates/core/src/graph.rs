//! Undirected simple graphs on the vertex ring `0..n` and the regular ring
//! lattice that seeds the small-world construction.
//!
//! Vertices are 0-based here; everything written to disk is 1-based.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::params::check_degree;

/// Undirected graph stored as one sorted neighbour list per vertex.
///
/// `k` is the nominal degree the graph was built with; it fixes the expected
/// edge count `n k / 2` that [`validate`] checks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    k: usize,
    neighbors: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from raw neighbour lists without enforcing any of the
    /// structural invariants, so that broken graphs can be inspected with
    /// [`validate`]. Lists are sorted and deduplicated; out-of-range entries
    /// are rejected.
    pub fn from_neighbors(k: usize, mut neighbors: Vec<Vec<usize>>) -> Result<Self> {
        let n = neighbors.len();
        for (i, list) in neighbors.iter_mut().enumerate() {
            if let Some(&bad) = list.iter().find(|&&v| v >= n) {
                return Err(invalid(format!(
                    "vertex {i} lists neighbour {bad} >= n = {n}"
                )));
            }
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { k, neighbors })
    }

    /// Builds a symmetric graph from 0-based undirected edges.
    pub fn from_edges(n: usize, k: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut neighbors = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(invalid(format!("edge ({u}, {v}) has a vertex >= n = {n}")));
            }
            neighbors[u].push(v);
            if u != v {
                neighbors[v].push(u);
            }
        }
        Graph::from_neighbors(k, neighbors)
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.neighbors[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.neighbors[i].len()
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.neighbors[i].binary_search(&j).is_ok()
    }

    /// Number of undirected edges; a self-loop counts once.
    pub fn edge_count(&self) -> usize {
        let loops = (0..self.n()).filter(|&i| self.has_edge(i, i)).count();
        let degree_sum: usize = self.neighbors.iter().map(Vec::len).sum();
        (degree_sum + loops) / 2
    }

    /// Undirected edges `(u, v)` with `u <= v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v >= u).map(move |&v| (u, v)))
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        insert_sorted(&mut self.neighbors[u], v);
        insert_sorted(&mut self.neighbors[v], u);
    }

    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        let a = remove_sorted(&mut self.neighbors[u], v);
        let b = remove_sorted(&mut self.neighbors[v], u);
        debug_assert_eq!(a, b, "asymmetric edge {{{u}, {v}}}");
        a && b
    }
}

fn insert_sorted(list: &mut Vec<usize>, v: usize) {
    if let Err(pos) = list.binary_search(&v) {
        list.insert(pos, v);
    }
}

fn remove_sorted(list: &mut Vec<usize>, v: usize) -> bool {
    match list.binary_search(&v) {
        Ok(pos) => {
            list.remove(pos);
            true
        }
        Err(_) => false,
    }
}

/// Regular ring lattice: vertex `i` is joined to `i ± 1, …, i ± k/2 (mod n)`.
///
/// Requires `k` even, `k >= 2` and `n >= k + 1`; at `n = k + 1` the lattice is
/// the complete graph.
pub fn build_ring_lattice(n: usize, k: usize) -> Result<Graph> {
    check_degree(k)?;
    if n < k + 1 {
        return Err(invalid(format!(
            "ring lattice needs n >= k + 1, got n = {n}, k = {k}"
        )));
    }
    let half = k / 2;
    let neighbors = (0..n)
        .map(|i| {
            let mut list: Vec<usize> = (1..=half)
                .flat_map(|d| [(i + d) % n, (i + n - d) % n])
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    Ok(Graph { k, neighbors })
}

/// Outcome of the structural checks run by [`validate`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub symmetric: bool,
    pub no_self_loops: bool,
    pub edge_count: usize,
    pub expected_edge_count: usize,
}

impl ValidationReport {
    pub fn edge_count_ok(&self) -> bool {
        self.edge_count == self.expected_edge_count
    }

    pub fn passed(&self) -> bool {
        self.symmetric && self.no_self_loops && self.edge_count_ok()
    }
}

/// Checks symmetry of the neighbour relation, absence of self-loops, and that
/// the edge count equals `n k / 2`.
pub fn validate(graph: &Graph) -> ValidationReport {
    let n = graph.n();
    let symmetric = (0..n).all(|i| graph.neighbors(i).iter().all(|&j| graph.has_edge(j, i)));
    let no_self_loops = (0..n).all(|i| !graph.has_edge(i, i));
    ValidationReport {
        symmetric,
        no_self_loops,
        edge_count: graph.edge_count(),
        expected_edge_count: n * graph.k() / 2,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k2_lattice_is_a_cycle() {
        let g = build_ring_lattice(6, 2).unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(edges, vec![(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]);
        assert!((0..6).all(|i| g.degree(i) == 2));
    }

    #[test]
    fn n8_k4_neighbourhood_of_first_vertex() {
        let g = build_ring_lattice(8, 4).unwrap();
        // 1-based {7, 8, 2, 3}
        assert_eq!(g.neighbors(0), &[1, 2, 6, 7]);
        assert_eq!(g.edge_count(), 16);
    }

    #[test]
    fn saturated_lattice_is_complete() {
        let g = build_ring_lattice(5, 4).unwrap();
        assert_eq!(g.edge_count(), 10);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(g.has_edge(i, j), i != j);
            }
        }
    }

    #[test]
    fn lattice_rejects_bad_shapes() {
        assert!(build_ring_lattice(4, 4).is_err());
        assert!(build_ring_lattice(10, 3).is_err());
        assert!(build_ring_lattice(10, 0).is_err());
    }

    #[test]
    fn lattice_validates() {
        let report = validate(&build_ring_lattice(12, 4).unwrap());
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.edge_count, 24);
    }

    #[test]
    fn injected_self_loop_is_reported() {
        let lattice = build_ring_lattice(12, 4).unwrap();
        let mut edges: Vec<_> = lattice.edges().collect();
        edges.pop();
        edges.push((3, 3));
        let g = Graph::from_edges(12, 4, &edges).unwrap();
        let report = validate(&g);
        assert!(!report.no_self_loops);
        assert!(report.symmetric);
        assert!(!report.passed());
    }

    #[test]
    fn asymmetry_is_reported() {
        let mut lists = vec![Vec::new(); 4];
        lists[0].push(1);
        let g = Graph::from_neighbors(2, lists).unwrap();
        let report = validate(&g);
        assert!(!report.symmetric);
    }

    #[test]
    fn edge_surgery_keeps_lists_sorted() {
        let mut g = build_ring_lattice(10, 2).unwrap();
        assert!(g.remove_edge(0, 1));
        assert!(!g.remove_edge(0, 1));
        g.insert_edge(0, 5);
        assert_eq!(g.neighbors(0), &[5, 9]);
        assert_eq!(g.neighbors(5), &[0, 4, 6]);
    }
}
