use crate::error::{invalid, Error, Result};
use crate::graph::Graph;

/// Dense symmetric matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zeros(n: usize) -> Self {
        SymmetricMatrix {
            n,
            entries: vec![0.0; n * n],
        }
    }

    /// Builds from row-major entries; fails unless the data is square and
    /// exactly symmetric.
    pub fn from_rows(n: usize, entries: Vec<f64>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(invalid(format!(
                "expected {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if entries[i * n + j] != entries[j * n + i] {
                    return Err(invalid(format!("entries ({i}, {j}) and ({j}, {i}) differ")));
                }
            }
        }
        Ok(SymmetricMatrix { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.entries[i * self.n + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set(&mut self, i: usize, j: usize, value: f64) {
        self.entries[i * self.n + j] = value;
        self.entries[j * self.n + i] = value;
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [f64] {
        &mut self.entries
    }

    /// Nonzero pattern as per-row `(column, integer value)` lists.
    fn integer_rows(&self) -> Result<Vec<Vec<(usize, u64)>>> {
        (0..self.n)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0.0)
                    .map(|(j, &x)| {
                        if x < 0.0 || x.fract() != 0.0 || x > u64::MAX as f64 {
                            Err(Error::NonIntegerMatrix {
                                row: i,
                                col: j,
                                value: x,
                            })
                        } else {
                            Ok((j, x as u64))
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// 0/1 adjacency matrix of `graph`.
pub fn adjacency_matrix(graph: &Graph) -> SymmetricMatrix {
    let n = graph.n();
    let mut m = SymmetricMatrix::zeros(n);
    for i in 0..n {
        for &j in graph.neighbors(i) {
            m.entries[i * n + j] = 1.0;
        }
    }
    m
}

/// Exact `Tr(A^order)`, the number of closed walks of length `order`.
///
/// Entries must be non-negative integers. The power is built by repeated
/// integer products that skip zero entries of the right factor, so the cost
/// is about `order * n * nnz(A)`. Any 64-bit overflow is reported as
/// [`Error::OrderTooLarge`].
pub fn trace_power(matrix: &SymmetricMatrix, order: u32) -> Result<u64> {
    if order == 0 {
        return Err(invalid("trace_power needs order >= 1"));
    }
    let n = matrix.n();
    let rows = matrix.integer_rows()?;
    let overflow = || Error::OrderTooLarge { order, n };

    match order {
        1 => (0..n).try_fold(0u64, |acc, i| {
            let diag = rows[i].iter().find(|(j, _)| *j == i).map_or(0, |&(_, v)| v);
            acc.checked_add(diag).ok_or_else(overflow)
        }),
        _ => {
            // power = A^(order-1), then Tr(power * A) = sum_ij power_ij A_ji
            let mut power: Vec<u64> = vec![0; n * n];
            for (i, row) in rows.iter().enumerate() {
                for &(j, v) in row {
                    power[i * n + j] = v;
                }
            }
            for _ in 2..order {
                power = multiply_sparse_right(&power, &rows, n).ok_or_else(overflow)?;
            }
            let mut trace = 0u64;
            for (i, row) in rows.iter().enumerate() {
                for &(j, a_ij) in row {
                    // A is symmetric, so A_ji = A_ij
                    let term = power[j * n + i].checked_mul(a_ij).ok_or_else(overflow)?;
                    trace = trace.checked_add(term).ok_or_else(overflow)?;
                }
            }
            Ok(trace)
        }
    }
}

fn multiply_sparse_right(
    left: &[u64],
    right_rows: &[Vec<(usize, u64)>],
    n: usize,
) -> Option<Vec<u64>> {
    let mut out = vec![0u64; n * n];
    for i in 0..n {
        let out_row = &mut out[i * n..(i + 1) * n];
        for (m, &l) in left[i * n..(i + 1) * n].iter().enumerate() {
            if l == 0 {
                continue;
            }
            for &(j, r) in &right_rows[m] {
                out_row[j] = out_row[j].checked_add(l.checked_mul(r)?)?;
            }
        }
    }
    Some(out)
}

/// Spectral moment `Tr(A^order) / n`.
pub fn moment(matrix: &SymmetricMatrix, order: u32) -> Result<f64> {
    if matrix.n() == 0 {
        return Err(invalid("moment of an empty matrix"));
    }
    Ok(trace_power(matrix, order)? as f64 / matrix.n() as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_ring_lattice;

    /// Closed walks counted by enumerating vertex sequences.
    fn closed_walks(graph: &Graph, len: u32) -> u64 {
        fn go(g: &Graph, start: usize, at: usize, left: u32) -> u64 {
            if left == 0 {
                return (at == start) as u64;
            }
            g.neighbors(at)
                .iter()
                .map(|&v| go(g, start, v, left - 1))
                .sum()
        }
        (0..graph.n()).map(|s| go(graph, s, s, len)).sum()
    }

    #[test]
    fn cycle_matrix_is_circulant() {
        let a = adjacency_matrix(&build_ring_lattice(6, 2).unwrap());
        for i in 0..6usize {
            for j in 0..6 {
                let d = i.abs_diff(j);
                let expected = if d == 1 || d == 5 { 1.0 } else { 0.0 };
                assert_eq!(a.get(i, j), expected);
            }
        }
    }

    #[test]
    fn complete_graph_matrix() {
        let a = adjacency_matrix(&build_ring_lattice(5, 4).unwrap());
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(a.get(i, j), if i == j { 0.0 } else { 1.0 });
            }
        }
    }

    #[test]
    fn lattice_rows_sum_to_k() {
        let a = adjacency_matrix(&build_ring_lattice(20, 6).unwrap());
        for i in 0..20 {
            assert_eq!(a.row(i).iter().sum::<f64>(), 6.0);
        }
    }

    #[test]
    fn lattice_third_trace_matches_walk_enumeration() {
        let g = build_ring_lattice(12, 4).unwrap();
        let a = adjacency_matrix(&g);
        assert_eq!(closed_walks(&g, 3), 72);
        assert_eq!(trace_power(&a, 3).unwrap(), 72);
        assert_eq!(moment(&a, 3).unwrap(), 6.0);
        assert_eq!(trace_power(&a, 1).unwrap(), 0);
        assert_eq!(trace_power(&a, 2).unwrap(), 48);
    }

    #[test]
    fn higher_orders_match_walk_enumeration() {
        let g = build_ring_lattice(9, 4).unwrap();
        let a = adjacency_matrix(&g);
        for order in 1..=6 {
            assert_eq!(
                trace_power(&a, order).unwrap(),
                closed_walks(&g, order),
                "order {order}"
            );
        }
    }

    #[test]
    fn overflow_is_detected() {
        let a = adjacency_matrix(&build_ring_lattice(21, 20).unwrap());
        // Tr(K21^l) ~ 20^l, beyond u64 for l = 16
        assert!(matches!(
            trace_power(&a, 16),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(trace_power(&a, 10).is_ok());
    }

    #[test]
    fn rejects_non_integer_and_zero_order() {
        let mut m = SymmetricMatrix::zeros(3);
        m.set(0, 1, 0.5);
        assert!(matches!(
            trace_power(&m, 2),
            Err(Error::NonIntegerMatrix { .. })
        ));
        assert!(trace_power(&SymmetricMatrix::zeros(3), 0).is_err());
    }

    #[test]
    fn from_rows_checks_symmetry() {
        assert!(SymmetricMatrix::from_rows(2, vec![0.0, 1.0, 2.0, 0.0]).is_err());
        assert!(SymmetricMatrix::from_rows(2, vec![0.0, 1.0, 1.0, 0.0]).is_ok());
        assert!(SymmetricMatrix::from_rows(2, vec![0.0; 3]).is_err());
    }
}
