use crate::graph::Graph;

/// Number of unordered mutually adjacent vertex triples.
///
/// Each triangle `u < v < w` is found once, from its lowest edge `{u, v}`,
/// by merging the sorted neighbour lists of `u` and `v` above `v`.
pub fn triangle_count(graph: &Graph) -> u64 {
    let mut count = 0;
    for u in 0..graph.n() {
        let nu = graph.neighbors(u);
        for &v in nu.iter().filter(|&&v| v > u) {
            let nv = graph.neighbors(v);
            let (mut a, mut b) = (
                nu.partition_point(|&x| x <= v),
                nv.partition_point(|&x| x <= v),
            );
            while a < nu.len() && b < nv.len() {
                match nu[a].cmp(&nv[b]) {
                    std::cmp::Ordering::Less => a += 1,
                    std::cmp::Ordering::Greater => b += 1,
                    std::cmp::Ordering::Equal => {
                        count += 1;
                        a += 1;
                        b += 1;
                    }
                }
            }
        }
    }
    count
}
