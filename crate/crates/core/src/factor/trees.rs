//! `{1,3}`-trees and the expanded family built from them.
//!
//! From a `{1,3}`-tree `R` the expansion subdivides every edge once and hangs
//! a pendant edge on every leaf. The result has `5I + 5` vertices when `R`
//! has `I` vertices of degree 3.

use std::collections::{HashMap, HashSet};

use crate::canon::{canonical_form_capped, CanonicalLabel};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest internal-vertex count accepted by [`generate_13_trees`].
pub const MAX_INTERNAL: usize = 8;
/// Largest order accepted by [`enumerate_trees`].
pub const MAX_TREE_ORDER: usize = 18;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Role {
    Leaf,
    Degree2,
    Degree3,
    Other,
}

/// A graph known to be a tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeSpec {
    graph: Graph,
}

impl TreeSpec {
    pub fn new(graph: Graph) -> Result<Self> {
        if !graph.is_tree() {
            return Err(Error::ParameterRange("graph is not a tree".into()));
        }
        Ok(TreeSpec { graph })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn roles(&self) -> Vec<Role> {
        (0..self.n())
            .map(|v| match self.graph.degree(v) {
                1 => Role::Leaf,
                2 => Role::Degree2,
                3 => Role::Degree3,
                _ => Role::Other,
            })
            .collect()
    }

    pub fn leaves(&self) -> Vec<usize> {
        (0..self.n()).filter(|&v| self.graph.degree(v) == 1).collect()
    }

    /// Vertices of degree 3.
    pub fn internal_count(&self) -> usize {
        (0..self.n()).filter(|&v| self.graph.degree(v) == 3).count()
    }

    pub fn is_13_tree(&self) -> bool {
        self.n() >= 2 && (0..self.n()).all(|v| matches!(self.graph.degree(v), 1 | 3))
    }
}

fn label(g: &Graph) -> CanonicalLabel {
    canonical_form_capped(g, crate::canon::MAX_ORDER).expect("tree orders stay below the canonical cap")
}

fn attach(g: &Graph, at: usize, count: usize) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..count).map(|k| (at, n + k)));
    Graph::new(n + count, &edges).expect("valid extension")
}

/// One representative per isomorphism class of `{1,3}`-trees with at most
/// `max_internal` vertices of degree 3, ordered by internal count.
///
/// Every `{1,3}`-tree with `I ≥ 1` has a degree-3 vertex carrying two
/// leaves, so growing two leaves on a leaf of each class at level `I - 1`
/// reaches every class at level `I`.
pub fn generate_13_trees(max_internal: usize) -> Result<Vec<TreeSpec>> {
    if max_internal > MAX_INTERNAL {
        return Err(Error::CapExceeded { what: "{1,3}-tree generation", n: max_internal, cap: MAX_INTERNAL });
    }
    let mut level = vec![Graph::complete(2)?];
    let mut out: Vec<TreeSpec> = level.iter().cloned().map(|graph| TreeSpec { graph }).collect();
    for _ in 0..max_internal {
        let mut seen = HashMap::new();
        for t in &level {
            for v in (0..t.n()).filter(|&v| t.degree(v) == 1) {
                let g = attach(t, v, 2);
                seen.entry(label(&g)).or_insert(g);
            }
        }
        let mut next: Vec<(CanonicalLabel, Graph)> = seen.into_iter().collect();
        next.sort_by(|a, b| a.0.cmp(&b.0));
        level = next.into_iter().map(|(_, g)| g).collect();
        out.extend(level.iter().cloned().map(|graph| TreeSpec { graph }));
    }
    Ok(out)
}

/// Subdivide every edge once and add a pendant edge at every leaf.
///
/// Vertex ids of `R` are kept; subdivision vertices follow in edge order,
/// then the pendant vertices in leaf order.
pub fn expand_to_t3(r: &TreeSpec) -> Result<TreeSpec> {
    if !r.is_13_tree() {
        return Err(Error::NotThirteenTree);
    }
    let g = r.graph();
    let mut next = g.n();
    let mut edges = Vec::new();
    for (u, v) in g.edges() {
        edges.push((u, next));
        edges.push((next, v));
        next += 1;
    }
    for leaf in r.leaves() {
        edges.push((leaf, next));
        next += 1;
    }
    TreeSpec::new(Graph::new(next, &edges)?)
}

/// Recognizes expanded `{1,3}`-trees by undoing the construction.
pub fn is_t3_member(t: &Graph) -> bool {
    let n = t.n();
    if n < 5 || !n.is_multiple_of(5) || !t.is_tree() || (0..n).any(|v| t.degree(v) > 3) {
        return false;
    }
    let is_leaf = |v: usize| t.degree(v) == 1;
    // every leaf hangs off a degree-2 vertex that carries exactly one leaf
    for v in (0..n).filter(|&v| is_leaf(v)) {
        let u = t.neighbors(v)[0];
        if t.degree(u) != 2 || t.neighbors(u).iter().filter(|&&w| is_leaf(w)).count() != 1 {
            return false;
        }
    }
    // degrees after deleting the leaves
    let deg: Vec<usize> = (0..n)
        .map(|v| if is_leaf(v) { 0 } else { t.neighbors(v).iter().filter(|&&w| !is_leaf(w)).count() })
        .collect();
    let kept = |v: usize| !is_leaf(v);
    let branch = |v: usize| kept(v) && deg[v] != 2;
    // each maximal path between branch vertices has one interior vertex
    let mut smoothed_degree = vec![0usize; n];
    for b in (0..n).filter(|&v| branch(v)) {
        for &start in t.neighbors(b).iter().filter(|&&w| kept(w)) {
            let (mut prev, mut cur, mut interior) = (b, start, 0);
            while !branch(cur) {
                interior += 1;
                let step = t.neighbors(cur).iter().copied().find(|&w| kept(w) && w != prev);
                match step {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                    }
                    None => return false,
                }
            }
            if interior != 1 {
                return false;
            }
            smoothed_degree[b] += 1;
        }
    }
    (0..n).filter(|&v| branch(v)).all(|v| matches!(smoothed_degree[v], 1 | 3))
        && (0..n).any(branch)
}

/// Every member of the expanded family with at most `max_order` vertices,
/// produced from [`generate_13_trees`], keyed by canonical label.
pub fn t3_members_up_to(max_order: usize) -> Result<Vec<(CanonicalLabel, TreeSpec)>> {
    if max_order < 5 {
        return Ok(Vec::new());
    }
    let max_internal = max_order / 5 - 1;
    let mut out = Vec::new();
    for r in generate_13_trees(max_internal)? {
        let t = expand_to_t3(&r)?;
        out.push((label(t.graph()), t));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// One representative per isomorphism class of trees on `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_TREE_ORDER {
        return Err(Error::CapExceeded { what: "tree enumeration", n, cap: MAX_TREE_ORDER });
    }
    let mut level = vec![Graph::empty(1)];
    for _ in 1..n {
        let mut seen: HashSet<CanonicalLabel> = HashSet::new();
        let mut next = Vec::new();
        for t in &level {
            for v in 0..t.n() {
                let g = attach(t, v, 1);
                if seen.insert(label(&g)) {
                    next.push(g);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path, star};

    fn spider(legs: usize, len: usize) -> Graph {
        let mut edges = Vec::new();
        let mut next = 1;
        for _ in 0..legs {
            let mut prev = 0;
            for _ in 0..len {
                edges.push((prev, next));
                prev = next;
                next += 1;
            }
        }
        Graph::new(next, &edges).unwrap()
    }

    #[test]
    fn first_levels() {
        let trees = generate_13_trees(1).unwrap();
        assert_eq!(trees.len(), 2);
        assert_eq!(trees[0].n(), 2);
        assert_eq!(label(trees[1].graph()), label(&star(3).unwrap()));
    }

    #[test]
    fn leaf_count_identity() {
        for t in generate_13_trees(6).unwrap() {
            let i = t.internal_count();
            assert!(t.is_13_tree());
            assert_eq!(t.leaves().len(), i + 2);
            assert_eq!(t.n(), 2 * i + 2);
        }
    }

    #[test]
    fn class_counts_match_filtered_tree_enumeration() {
        for i in 0..=5 {
            let n = 2 * i + 2;
            let filtered = enumerate_trees(n)
                .unwrap()
                .into_iter()
                .filter(|g| (0..n).all(|v| matches!(g.degree(v), 1 | 3)))
                .count();
            let generated = generate_13_trees(i).unwrap().iter().filter(|t| t.internal_count() == i).count();
            assert_eq!(filtered, generated, "I = {i}");
        }
    }

    #[test]
    fn expansions() {
        let k2 = TreeSpec::new(Graph::complete(2).unwrap()).unwrap();
        assert_eq!(label(expand_to_t3(&k2).unwrap().graph()), label(&path(5).unwrap()));
        let k13 = TreeSpec::new(star(3).unwrap()).unwrap();
        assert_eq!(label(expand_to_t3(&k13).unwrap().graph()), label(&spider(3, 3)));
        let p3 = TreeSpec::new(path(3).unwrap()).unwrap();
        assert_eq!(expand_to_t3(&p3), Err(Error::NotThirteenTree));
        for r in generate_13_trees(5).unwrap() {
            let t = expand_to_t3(&r).unwrap();
            let i = r.internal_count();
            assert_eq!(t.n(), 5 * i + 5);
            let roles = t.roles();
            assert_eq!(roles.iter().filter(|&&x| x == Role::Degree3).count(), i);
            assert_eq!(roles.iter().filter(|&&x| x == Role::Degree2).count(), r.n() - 1 + r.leaves().len());
            assert_eq!(roles.iter().filter(|&&x| x == Role::Leaf).count(), r.leaves().len());
        }
    }

    #[test]
    fn recognition_examples() {
        assert!(is_t3_member(&path(5).unwrap()));
        assert!(!is_t3_member(&path(4).unwrap()));
        assert!(!is_t3_member(&path(10).unwrap()));
        assert!(is_t3_member(&spider(3, 3)));
        assert!(!is_t3_member(&star(3).unwrap()));
        assert!(!is_t3_member(&spider(4, 1)));
        assert!(!is_t3_member(&Graph::complete(5).unwrap()));
    }

    #[test]
    fn recognition_matches_oracle_up_to_fifteen() {
        let members: HashSet<CanonicalLabel> = t3_members_up_to(15).unwrap().into_iter().map(|(l, _)| l).collect();
        for n in 1..=15 {
            for g in enumerate_trees(n).unwrap() {
                assert_eq!(is_t3_member(&g), members.contains(&label(&g)), "{g:?}");
            }
        }
    }

    #[test]
    fn tree_counts() {
        let counts: Vec<usize> = (1..=12).map(|n| enumerate_trees(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    }

    #[test]
    fn relabeled_members_recognized() {
        for (_, t) in t3_members_up_to(25).unwrap() {
            let n = t.n();
            let perm: Vec<usize> = (0..n).map(|v| (v * 7 + 3) % n).collect();
            if perm.iter().collect::<HashSet<_>>().len() == n {
                assert!(is_t3_member(&t.graph().relabel(&perm)));
            }
            assert!(is_t3_member(t.graph()));
        }
    }
}
