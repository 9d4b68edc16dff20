//! Canonical labeling by individualization and refinement.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton cell per level and refines to an equitable ordered
//! partition. Leaves are compared by their permuted adjacency rows and the
//! largest one wins. Automorphisms discovered from equal leaves prune both
//! sibling subtrees (backjump to the divergence level) and orbit-equivalent
//! candidates at each node.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

/// Default order cap for [`canonical_form`].
pub const DEFAULT_CAP: usize = 16;
/// Hard limit from the bitset representation.
pub const MAX_ORDER: usize = 64;

/// Certificate of an unlabeled graph: graph6 bytes of the canonical relabeling.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalLabel(Vec<u8>);

impl CanonicalLabel {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn as_str(&self) -> &str {
        std::str::from_utf8(&self.0).expect("graph6 is ASCII")
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel> {
    canonical_form_capped(g, DEFAULT_CAP)
}

pub fn canonical_form_capped(g: &Graph, cap: usize) -> Result<CanonicalLabel> {
    let order = canonical_order_capped(g, cap)?;
    let canon = relabel_by_order(g, &order);
    Ok(CanonicalLabel(graph6::encode(&canon)?.into_bytes()))
}

/// The canonical graph itself (isomorphic to `g`).
pub fn canonical_graph(g: &Graph, cap: usize) -> Result<Graph> {
    let order = canonical_order_capped(g, cap)?;
    Ok(relabel_by_order(g, &order))
}

/// `order[i]` is the vertex of `g` placed at canonical position `i`.
pub fn canonical_order_capped(g: &Graph, cap: usize) -> Result<Vec<usize>> {
    let n = g.n();
    let cap = cap.min(MAX_ORDER);
    if n > cap {
        return Err(Error::CapExceeded { what: "canonical form", n, cap });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let adj = g.masks().expect("n <= 64");
    let mut search = Search { adj: &adj, first: None, best: None, autos: Vec::new() };
    search.run(vec![(0..n).collect()], &mut Vec::new());
    Ok(search.best.expect("search visits at least one leaf").order)
}

fn relabel_by_order(g: &Graph, order: &[usize]) -> Graph {
    let mut perm = vec![0; order.len()];
    for (i, &v) in order.iter().enumerate() {
        perm[v] = i;
    }
    g.relabel(&perm)
}

#[derive(Clone)]
struct Leaf {
    code: Vec<u64>,
    order: Vec<usize>,
    prefix: Vec<usize>,
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<Vec<usize>>,
}

fn cell_mask(cell: &[usize]) -> u64 {
    cell.iter().fold(0, |m, &v| m | 1 << v)
}

fn divergence(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Splits cells by neighbour counts into each splitter cell until stable.
    fn refine(&self, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
        loop {
            let mut changed = false;
            let mut si = 0;
            while si < cells.len() {
                let smask = cell_mask(&cells[si]);
                let before = cells.len();
                let mut next = Vec::with_capacity(before);
                for cell in cells {
                    if cell.len() == 1 {
                        next.push(cell);
                        continue;
                    }
                    let mut keyed: Vec<(u32, usize)> =
                        cell.iter().map(|&v| ((self.adj[v] & smask).count_ones(), v)).collect();
                    keyed.sort_unstable();
                    let mut start = 0;
                    for k in 1..=keyed.len() {
                        if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                            next.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                            start = k;
                        }
                    }
                }
                changed |= next.len() != before;
                cells = next;
                si += 1;
            }
            if !changed {
                return cells;
            }
        }
    }

    fn leaf_code(&self, order: &[usize]) -> Vec<u64> {
        order
            .iter()
            .map(|&v| {
                order.iter().enumerate().fold(0u64, |row, (j, &u)| {
                    row | (((self.adj[v] >> u) & 1) << (63 - j))
                })
            })
            .collect()
    }

    fn orbit_blocked(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        if tried.is_empty() {
            return false;
        }
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.autos {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for (x, &y) in gamma.iter().enumerate() {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, y));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        let root = find(&mut parent, v);
        tried.iter().any(|&t| find(&mut parent, t) == root)
    }

    /// Returns `Some(level)` to abandon everything below the node at `level`.
    fn run(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) -> Option<usize> {
        let cells = self.refine(cells);
        let level = prefix.len();
        let Some(target) = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|(i, c)| (c.len(), *i))
            .map(|(i, _)| i)
        else {
            let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            return self.visit_leaf(order, prefix);
        };

        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        let mut tried: Vec<usize> = Vec::new();
        for v in candidates {
            if self.orbit_blocked(prefix, &tried, v) {
                continue;
            }
            let mut child = Vec::with_capacity(cells.len() + 1);
            for (i, c) in cells.iter().enumerate() {
                if i == target {
                    child.push(vec![v]);
                    child.push(c.iter().copied().filter(|&u| u != v).collect());
                } else {
                    child.push(c.clone());
                }
            }
            prefix.push(v);
            let jump = self.run(child, prefix);
            prefix.pop();
            if let Some(k) = jump {
                if k < level {
                    return Some(k);
                }
            }
            tried.push(v);
        }
        None
    }

    fn visit_leaf(&mut self, order: Vec<usize>, prefix: &[usize]) -> Option<usize> {
        let code = self.leaf_code(&order);
        let Some(first) = &self.first else {
            let leaf = Leaf { code, order, prefix: prefix.to_vec() };
            self.best = Some(leaf.clone());
            self.first = Some(leaf);
            return None;
        };
        let best = self.best.as_ref().expect("set with first");
        for reference in [first, best] {
            if reference.code == code {
                let mut gamma = vec![0; order.len()];
                for (a, b) in reference.order.iter().zip(&order) {
                    gamma[*a] = *b;
                }
                let d = divergence(&reference.prefix, prefix);
                self.autos.push(gamma);
                return Some(d);
            }
        }
        if code > best.code {
            self.best = Some(Leaf { code, order, prefix: prefix.to_vec() });
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::path;
    use proptest::prelude::*;
    use std::collections::HashSet;

    /// Minimum adjacency string over all permutations; exact, factorial time.
    fn brute_label(g: &Graph) -> Vec<bool> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut best: Option<Vec<bool>> = None;
        loop {
            let code: Vec<bool> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .map(|(i, j)| g.has_edge(perm[i], perm[j]))
                .collect();
            if best.as_ref().is_none_or(|b| code < *b) {
                best = Some(code);
            }
            // next permutation
            let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        best.unwrap_or_default()
    }

    fn all_labeled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                let edges: Vec<_> = pairs.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &e)| e).collect();
                Graph::new(n, &edges).unwrap()
            })
            .collect()
    }

    #[test]
    fn relabeled_path_and_distinct_pair() {
        let p = path(4).unwrap();
        let q = Graph::new(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(canonical_form(&p).unwrap(), canonical_form(&q).unwrap());
        let k3 = Graph::complete(3).unwrap();
        assert_ne!(canonical_form(&k3).unwrap(), canonical_form(&path(3).unwrap()).unwrap());
    }

    #[test]
    fn eleven_unlabeled_graphs_on_four_vertices() {
        let labels: HashSet<_> = all_labeled(4).iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(labels.len(), 11);
    }

    #[test]
    fn agrees_with_brute_force_partition_on_five_vertices() {
        let graphs = all_labeled(5);
        let fast: HashSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        let slow: HashSet<_> = graphs.iter().map(brute_label).collect();
        assert_eq!(fast.len(), 34);
        assert_eq!(slow.len(), 34);
        // equal labels exactly when brute-force labels are equal
        for g in graphs.iter().step_by(7) {
            for h in graphs.iter().step_by(11) {
                assert_eq!(
                    canonical_form(g).unwrap() == canonical_form(h).unwrap(),
                    brute_label(g) == brute_label(h)
                );
            }
        }
    }

    #[test]
    fn symmetric_graphs_finish() {
        for n in [8, 12, 16] {
            let k = Graph::complete(n).unwrap();
            assert_eq!(canonical_graph(&k, 16).unwrap(), k);
            let e = Graph::empty(n);
            assert_eq!(canonical_graph(&e, 16).unwrap(), e);
        }
        // Petersen graph
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let pet = Graph::new(10, &edges).unwrap();
        let shuffled = pet.relabel(&[3, 7, 1, 9, 0, 2, 8, 4, 6, 5]);
        assert_eq!(canonical_form(&pet).unwrap(), canonical_form(&shuffled).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let g = Graph::empty(17);
        assert!(matches!(canonical_form(&g), Err(Error::CapExceeded { .. })));
        assert!(canonical_form_capped(&g, 20).is_ok());
    }

    fn arb_graph_with_perm() -> impl Strategy<Value = (Graph, Vec<usize>)> {
        (1usize..=12).prop_flat_map(|n| {
            (
                proptest::collection::vec(proptest::bool::weighted(0.4), n * (n - 1) / 2),
                Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
            )
                .prop_map(move |(bits, perm)| {
                    let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
                    let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
                    (Graph::new(n, &edges).unwrap(), perm)
                })
        })
    }

    proptest! {
        #[test]
        fn invariant_under_relabeling((g, perm) in arb_graph_with_perm()) {
            let h = g.relabel(&perm);
            prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
            let c = canonical_graph(&g, 16).unwrap();
            prop_assert_eq!(c.edge_count(), g.edge_count());
        }
    }
}
