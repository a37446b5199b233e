//! Non-isomorphic graphs on few vertices, for exhaustive testing.

use std::collections::HashMap;

use crate::graph::Graph;

/// Isomorphism invariant used to bucket candidates.
fn invariant(g: &Graph) -> Vec<(usize, Vec<usize>)> {
    let mut inv: Vec<(usize, Vec<usize>)> = (0..g.vertex_count())
        .map(|v| {
            let mut nd: Vec<usize> = g.adjacency(v).iter().map(|w| g.degree(w)).collect();
            nd.sort_unstable();
            (g.degree(v), nd)
        })
        .collect();
    inv.sort();
    inv
}

/// One representative of every isomorphism class on `n` vertices, built by
/// adding a vertex to each class on `n - 1` vertices in every possible way.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::empty(0)];
    for m in 1..=n {
        let mut out: Vec<Graph> = Vec::new();
        let mut buckets: HashMap<Vec<(usize, Vec<usize>)>, Vec<usize>> = HashMap::new();
        for base in &level {
            let old = base.edges();
            for mask in 0u64..(1 << (m - 1)) {
                let mut edges = old.clone();
                edges.extend((0..m - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, m - 1)));
                let g = Graph::from_edges(m, &edges).expect("simple edges");
                let bucket = buckets.entry(invariant(&g)).or_default();
                if bucket.iter().all(|&i| !out[i].is_isomorphic(&g)) {
                    bucket.push(out.len());
                    out.push(g);
                }
            }
        }
        level = out;
    }
    level
}

/// Every class on `0..=n` vertices.
pub fn all_graphs_up_to(n: usize) -> Vec<Graph> {
    (0..=n).flat_map(all_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| all_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
    }
}
