//! Explicit factor search and certificate validation.
//!
//! The search covers the lowest uncovered vertex with a block, trying
//! expanded-tree blocks (largest first), then triangles, then edges. A
//! tree block is accepted when some family member of that order embeds as a
//! spanning tree of the chosen vertex set. Failed uncovered-sets are memoised.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::trees::{is_t3_member, t3_members_up_to, TreeSpec};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default order cap for [`find_factor`].
pub const DEFAULT_MAX_ORDER: usize = 14;
/// Default bound on the size of a tree block.
pub const DEFAULT_BLOCK_CAP: usize = 15;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BlockKind {
    P2,
    C3,
    P5,
    T3,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Block {
    pub vertices: Vec<usize>,
    pub kind: BlockKind,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FactorCertificate {
    pub blocks: Vec<Block>,
}

/// Why a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateDefect {
    VertexOutOfRange(usize),
    VertexRepeated(usize),
    VertexUncovered(usize),
    MissingEdge(usize, usize),
    EdgeLeavesBlock(usize, usize),
    WrongSize { block: usize, size: usize },
    NotSpanningPath(usize),
    NotTriangle(usize),
    NotFamilyTree(usize),
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::VertexOutOfRange(v) => write!(f, "vertex {v} is out of range"),
            Self::VertexRepeated(v) => write!(f, "vertex {v} lies in two blocks"),
            Self::VertexUncovered(v) => write!(f, "vertex {v} is not covered"),
            Self::MissingEdge(u, v) => write!(f, "edge {u}-{v} is not in the graph"),
            Self::EdgeLeavesBlock(u, v) => write!(f, "edge {u}-{v} leaves its block"),
            Self::WrongSize { block, size } => write!(f, "block {block} has invalid size {size}"),
            Self::NotSpanningPath(b) => write!(f, "block {b} edges are not a spanning path"),
            Self::NotTriangle(b) => write!(f, "block {b} edges are not a triangle"),
            Self::NotFamilyTree(b) => write!(f, "block {b} edges are not an expanded {{1,3}}-tree"),
        }
    }
}

/// Checks every certificate invariant against `g`.
pub fn verify_certificate(g: &Graph, cert: &FactorCertificate) -> std::result::Result<(), CertificateDefect> {
    let n = g.n();
    let mut owner = vec![usize::MAX; n];
    for (b, block) in cert.blocks.iter().enumerate() {
        for &v in &block.vertices {
            if v >= n {
                return Err(CertificateDefect::VertexOutOfRange(v));
            }
            if owner[v] != usize::MAX {
                return Err(CertificateDefect::VertexRepeated(v));
            }
            owner[v] = b;
        }
    }
    if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(CertificateDefect::VertexUncovered(v));
    }
    for (b, block) in cert.blocks.iter().enumerate() {
        for &(u, v) in &block.edges {
            if u >= n || v >= n {
                return Err(CertificateDefect::VertexOutOfRange(u.max(v)));
            }
            if owner[u] != b || owner[v] != b {
                return Err(CertificateDefect::EdgeLeavesBlock(u, v));
            }
            if !g.has_edge(u, v) {
                return Err(CertificateDefect::MissingEdge(u, v));
            }
        }
        let size = block.vertices.len();
        let size_ok = match block.kind {
            BlockKind::P2 => size == 2,
            BlockKind::C3 => size == 3,
            BlockKind::P5 => size == 5,
            BlockKind::T3 => size >= 5 && size % 5 == 0,
        };
        if !size_ok {
            return Err(CertificateDefect::WrongSize { block: b, size });
        }
        let local = local_graph(&block.vertices, &block.edges);
        match block.kind {
            BlockKind::P2 if local.edge_count() != 1 => return Err(CertificateDefect::NotSpanningPath(b)),
            BlockKind::C3 if local.edge_count() != 3 => return Err(CertificateDefect::NotTriangle(b)),
            BlockKind::P5 if !local.is_tree() || (0..5).any(|v| local.degree(v) > 2) => {
                return Err(CertificateDefect::NotSpanningPath(b))
            }
            BlockKind::T3 if !is_t3_member(&local) => return Err(CertificateDefect::NotFamilyTree(b)),
            _ => {}
        }
    }
    Ok(())
}

pub fn is_valid_certificate(g: &Graph, cert: &FactorCertificate) -> bool {
    verify_certificate(g, cert).is_ok()
}

fn local_graph(vertices: &[usize], edges: &[(usize, usize)]) -> Graph {
    let pos = |x: usize| vertices.iter().position(|&v| v == x).expect("edge endpoints checked");
    let local: Vec<_> = edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect();
    // duplicate edges collapse, self loops are rejected as a non-tree
    Graph::new(vertices.len(), &local).unwrap_or_else(|_| Graph::empty(0))
}

/// A factor of `g`, or `None` when none exists, for `n ≤ 14`.
pub fn find_factor(g: &Graph, block_cap: usize) -> Result<Option<FactorCertificate>> {
    find_factor_capped(g, block_cap, DEFAULT_MAX_ORDER)
}

pub fn find_factor_capped(g: &Graph, block_cap: usize, max_order: usize) -> Result<Option<FactorCertificate>> {
    let n = g.n();
    let max_order = max_order.min(64);
    if n > max_order {
        return Err(Error::CapExceeded { what: "factor search", n, cap: max_order });
    }
    if block_cap < 5 {
        return Err(Error::ParameterRange(format!("block cap must be at least 5, got {block_cap}")));
    }
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let largest = block_cap.min(n) / 5 * 5;
    let shapes: Vec<Vec<TreeShape>> = (1..=largest / 5)
        .rev()
        .map(|k| {
            t3_members_up_to(5 * k)
                .map(|ms| ms.into_iter().filter(|(_, t)| t.n() == 5 * k).map(|(_, t)| TreeShape::new(&t)).collect())
        })
        .collect::<Result<_>>()?;
    let adj = g.masks().expect("n <= 64");
    let mut search = FactorSearch { adj: &adj, shapes: &shapes, failed: HashSet::new(), blocks: Vec::new() };
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    Ok(search.cover(full).then_some(FactorCertificate { blocks: search.blocks }))
}

/// A tree in BFS order: `parent[i] < i` for every `i > 0`.
struct TreeShape {
    parent: Vec<usize>,
}

impl TreeShape {
    fn new(t: &TreeSpec) -> Self {
        let g = t.graph();
        let n = g.n();
        let mut order = vec![0usize];
        let mut index = vec![usize::MAX; n];
        index[0] = 0;
        let mut parent = vec![0usize];
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            for &u in g.neighbors(v) {
                if index[u] == usize::MAX {
                    index[u] = order.len();
                    order.push(u);
                    parent.push(head);
                }
            }
            head += 1;
        }
        TreeShape { parent }
    }

    fn len(&self) -> usize {
        self.parent.len()
    }
}

struct FactorSearch<'a> {
    adj: &'a [u64],
    shapes: &'a [Vec<TreeShape>],
    failed: HashSet<u64>,
    blocks: Vec<Block>,
}

impl FactorSearch<'_> {
    fn cover(&mut self, free: u64) -> bool {
        if free == 0 {
            return true;
        }
        if self.failed.contains(&free) {
            return false;
        }
        let v = free.trailing_zeros() as usize;
        let reach = self.adj[v] & free;
        if reach == 0 {
            self.failed.insert(free);
            return false;
        }
        for shapes in self.shapes {
            let size = shapes[0].len();
            if (free.count_ones() as usize) < size {
                continue;
            }
            if self.try_trees(v, free, shapes) {
                return true;
            }
        }
        let nbrs = bits(reach);
        for (a, &x) in nbrs.iter().enumerate() {
            for &y in &nbrs[a + 1..] {
                if self.adj[x] >> y & 1 == 1 {
                    let mask = 1 << v | 1 << x | 1 << y;
                    let edges = vec![(v, x), (v, y), (x, y)];
                    if self.descend(free & !mask, vec![v, x, y], BlockKind::C3, edges) {
                        return true;
                    }
                }
            }
        }
        for &x in &nbrs {
            if self.descend(free & !(1 << v | 1 << x), vec![v, x], BlockKind::P2, vec![(v, x)]) {
                return true;
            }
        }
        self.failed.insert(free);
        false
    }

    fn descend(&mut self, rest: u64, vertices: Vec<usize>, kind: BlockKind, edges: Vec<(usize, usize)>) -> bool {
        self.blocks.push(Block { vertices, kind, edges });
        if self.cover(rest) {
            return true;
        }
        self.blocks.pop();
        false
    }

    /// Enumerates connected vertex sets containing `v` of the shapes' order
    /// (each set once, by the usual extension-set scheme) and tries to
    /// embed a shape into each.
    fn try_trees(&mut self, v: usize, free: u64, shapes: &[TreeShape]) -> bool {
        let size = shapes[0].len();
        let mut sets: Vec<u64> = Vec::new();
        connected_sets(self.adj, free, 1 << v, self.adj[v] & free, 1 << v, size, &mut sets);
        let mut image = Vec::with_capacity(size);
        for set in sets {
            let found = shapes
                .iter()
                .find_map(|shape| embed(self.adj, set, shape, &mut image).map(|edges| (image.clone(), edges)));
            if let Some((vertices, edges)) = found {
                let kind = if size == 5 { BlockKind::P5 } else { BlockKind::T3 };
                if self.descend(free & !set, vertices, kind, edges) {
                    return true;
                }
            }
        }
        false
    }
}

fn bits(mut mask: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        out.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    out
}

/// Connected sets of `size` vertices within `free` that contain `set`.
/// `frontier` holds candidates adjacent to `set`; `banned` collects vertices
/// already excluded on this branch so each set is produced exactly once.
fn connected_sets(adj: &[u64], free: u64, set: u64, frontier: u64, banned: u64, size: usize, out: &mut Vec<u64>) {
    if set.count_ones() as usize == size {
        out.push(set);
        return;
    }
    let mut candidates = frontier & !banned;
    let mut banned = banned;
    while candidates != 0 {
        let u = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        let grown = set | 1 << u;
        let next_frontier = (frontier | adj[u] & free) & !grown;
        connected_sets(adj, free, grown, next_frontier, banned | 1 << u, size, out);
        banned |= 1 << u;
    }
}

/// Maps `shape` onto exactly the vertices of `set`, trying every root.
fn embed(adj: &[u64], set: u64, shape: &TreeShape, image: &mut Vec<usize>) -> Option<Vec<(usize, usize)>> {
    for root in bits(set) {
        image.clear();
        image.push(root);
        if extend_embedding(adj, set & !(1 << root), shape, image) {
            let edges = (1..shape.len()).map(|i| (image[shape.parent[i]], image[i])).collect();
            return Some(edges);
        }
    }
    None
}

fn extend_embedding(adj: &[u64], left: u64, shape: &TreeShape, image: &mut Vec<usize>) -> bool {
    let i = image.len();
    if i == shape.len() {
        return true;
    }
    let mut options = adj[image[shape.parent[i]]] & left;
    while options != 0 {
        let u = options.trailing_zeros() as usize;
        options &= options - 1;
        image.push(u);
        if extend_embedding(adj, left & !(1 << u), shape, image) {
            return true;
        }
        image.pop();
    }
    false
}
