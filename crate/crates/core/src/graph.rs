//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Graphs are immutable once built; every constructor returns a fresh value.
//! The family constructors lay vertices out as hub block first, clique block
//! second and independent block last, and the spectral module relies on that
//! order when it builds the natural partitions.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut sets = vec![BTreeSet::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Self::from_sets(sets))
    }

    fn from_sets(sets: Vec<BTreeSet<usize>>) -> Self {
        let adj: Vec<Vec<usize>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph { adj, m }
    }

    /// Graph on `n` vertices with no edges. `n = 0` is allowed here and
    /// yields the null graph used as an identity for unions.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn complete(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyGraph);
        }
        let adj = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
        Ok(Graph { adj, m: n * (n - 1) / 2 })
    }

    /// Disjoint union; `other`'s vertices are shifted above `self`'s.
    pub fn union(&self, other: &Graph) -> Graph {
        let off = self.n();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|ns| ns.iter().map(|&u| u + off).collect()));
        Graph { adj, m: self.m + other.m }
    }

    /// Union plus every edge between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Graph {
        let (a, b) = (self.n(), other.n());
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(a + b);
        for ns in &self.adj {
            let mut row = ns.clone();
            row.extend(a..a + b);
            adj.push(row);
        }
        for ns in &other.adj {
            let mut row: Vec<usize> = (0..a).collect();
            row.extend(ns.iter().map(|&u| u + a));
            adj.push(row);
        }
        Graph { adj, m: self.m + other.m + a * b }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &u in &self.adj[v] {
                if !seen[u] {
                    seen[u] = true;
                    count += 1;
                    stack.push(u);
                }
            }
        }
        count == n
    }

    pub fn is_tree(&self) -> bool {
        self.n() >= 1 && self.m + 1 == self.n() && self.is_connected()
    }

    /// Same graph with one more edge. Errors if the pair is invalid;
    /// adding an existing edge returns an identical graph.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut edges: Vec<(usize, usize)> = self.edges().collect();
        edges.push((u, v));
        Graph::new(self.n(), &edges)
    }

    /// Relabels so that vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n(), "permutation length must equal n");
        let mut sets = vec![BTreeSet::new(); self.n()];
        for (u, v) in self.edges() {
            sets[perm[u]].insert(perm[v]);
            sets[perm[v]].insert(perm[u]);
        }
        Graph::from_sets(sets)
    }

    /// Subgraph induced by `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut pos = vec![usize::MAX; self.n()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut sets = vec![BTreeSet::new(); vertices.len()];
        for (i, &v) in vertices.iter().enumerate() {
            for &u in &self.adj[v] {
                if pos[u] != usize::MAX {
                    sets[i].insert(pos[u]);
                }
            }
        }
        Graph::from_sets(sets)
    }

    /// Neighborhood bitmasks; `None` when `n > 64`.
    pub fn masks(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|ns| ns.iter().fold(0u64, |acc, &u| acc | (1u64 << u)))
                .collect(),
        )
    }

    /// Number of vertices outside `s` whose whole neighborhood lies in `s`,
    /// i.e. the isolated vertices of `G - S`.
    pub fn isolated_count(&self, s: &VertexSubset) -> usize {
        (0..self.n())
            .filter(|&v| !s.contains(v) && self.adj[v].iter().all(|&u| s.contains(u)))
            .count()
    }
}

/// A set of vertices of some graph, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSubset {
    members: Vec<usize>,
    flags: Vec<bool>,
}

impl VertexSubset {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut flags = vec![false; n];
        for v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            flags[v] = true;
        }
        let members = (0..n).filter(|&v| flags[v]).collect();
        Ok(VertexSubset { members, flags })
    }

    pub fn empty(n: usize) -> Self {
        VertexSubset { members: Vec::new(), flags: vec![false; n] }
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.flags.get(v).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// `K_s ∨ (K_{n1} ∪ i·K_1)`.
///
/// Vertices `0..s` are the hub clique, `s..s+n1` the clique part and the last
/// `i` vertices the independent part. With `n1 = 0` this is `K_s ∨ i·K_1`.
pub fn construct_family(s: usize, n1: usize, i: usize) -> Result<Graph> {
    if s + n1 + i == 0 {
        return Err(Error::EmptyGraph);
    }
    let hub = if s > 0 { Graph::complete(s)? } else { Graph::empty(0) };
    let clique = if n1 > 0 { Graph::complete(n1)? } else { Graph::empty(0) };
    Ok(hub.join(&clique.union(&Graph::empty(i))))
}

/// The extremal graph `K_1 ∨ (K_{n-3} ∪ 2K_1)`.
pub fn extremal_g2(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::ParameterRange(format!("extremal graph needs n >= 4, got {n}")));
    }
    construct_family(1, n - 3, 2)
}

/// `K_2 ∨ (K_{n-6} ∪ 4K_1)`.
pub fn extremal_g3(n: usize) -> Result<Graph> {
    if n < 7 {
        return Err(Error::ParameterRange(format!("G3 needs n >= 7, got {n}")));
    }
    construct_family(2, n - 6, 4)
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::new(n, &edges)
}

pub fn star(leaves: usize) -> Result<Graph> {
    let edges: Vec<_> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::new(leaves + 1, &edges)
}
