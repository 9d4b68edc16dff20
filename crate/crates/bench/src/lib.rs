//! Benchmarks for the specfac kernels; see `benches/kernels.rs`.

use specfac::{construct_family, Graph};

/// A deterministic dense graph: the family member `K_s v (K_n1 u iK1)` with
/// every fifth clique edge removed.
pub fn sparse_family(s: usize, n1: usize, i: usize) -> Graph {
    let base = construct_family(s, n1, i).expect("valid shape");
    let edges: Vec<_> = base.edges().enumerate().filter(|(k, _)| k % 5 != 0).map(|(_, e)| e).collect();
    Graph::new(base.n(), &edges).expect("subgraph of a valid graph")
}
