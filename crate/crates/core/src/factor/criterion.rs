//! The isolated-vertex criterion: a `{P2, C3, P5, T(3)}`-factor exists iff
//! `i(G - S) ≤ 3|S|/2` for every vertex set `S`.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Order cap for the subset scan.
pub const SUBSET_SCAN_CAP: usize = 26;
/// Order cap for the independent-set scan (bitset width).
pub const INDEPENDENT_SET_CAP: usize = 64;

/// A violating set `S`, the isolated count of `G - S`, and `i - 3|S|/2`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CriterionWitness {
    pub set: Vec<usize>,
    pub isolated: usize,
    pub slack: f64,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ScanStrategy {
    /// All `S` with `|S| < 2n/5`, by size then lexicographically.
    SubsetScan,
    /// Every minimum violating `S` equals `N(I)` for the isolated set `I`
    /// of `G - S`, so scanning independent sets finds the same witness.
    IndependentSets,
    /// Subset scan up to its cap, independent sets above it.
    #[default]
    Auto,
}

#[inline]
fn violates(isolated: usize, size: usize) -> bool {
    2 * isolated > 3 * size
}

fn witness(set: Vec<usize>, isolated: usize) -> CriterionWitness {
    let slack = isolated as f64 - 1.5 * set.len() as f64;
    CriterionWitness { set, isolated, slack }
}

fn members(mask: u64) -> Vec<usize> {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

fn isolated_in(adj: &[u64], s: u64) -> usize {
    adj.iter().enumerate().filter(|&(v, &nb)| s >> v & 1 == 0 && nb & !s == 0).count()
}

/// `(true, None)` iff no set violates the inequality; otherwise the
/// violating set of minimum size, ties broken lexicographically.
pub fn has_factor_criterion(g: &Graph) -> Result<(bool, Option<CriterionWitness>)> {
    has_factor_criterion_with(g, ScanStrategy::Auto)
}

pub fn has_factor_criterion_with(g: &Graph, strategy: ScanStrategy) -> Result<(bool, Option<CriterionWitness>)> {
    let n = g.n();
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let found = match strategy {
        ScanStrategy::SubsetScan => subset_scan(g)?,
        ScanStrategy::IndependentSets => independent_scan(g)?,
        ScanStrategy::Auto if n <= SUBSET_SCAN_CAP => subset_scan(g)?,
        ScanStrategy::Auto => independent_scan(g)?,
    };
    Ok((found.is_none(), found))
}

fn subset_scan(g: &Graph) -> Result<Option<CriterionWitness>> {
    let n = g.n();
    if n > SUBSET_SCAN_CAP {
        return Err(Error::CapExceeded { what: "criterion subset scan", n, cap: SUBSET_SCAN_CAP });
    }
    let adj = g.masks().expect("n <= 26");
    let degrees = g.degrees();
    let mut k = 0;
    while 5 * k < 2 * n {
        // only vertices of degree <= k can end up isolated
        let candidates = degrees.iter().filter(|&&d| d <= k).count();
        if violates(candidates, k) {
            if let Some(w) = scan_size(&adj, n, k) {
                return Ok(Some(w));
            }
        }
        k += 1;
    }
    Ok(None)
}

/// First violating `k`-subset in lexicographic order.
fn scan_size(adj: &[u64], n: usize, k: usize) -> Option<CriterionWitness> {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let s = idx.iter().fold(0u64, |acc, &v| acc | 1 << v);
        let i = isolated_in(adj, s);
        if violates(i, k) {
            return Some(witness(idx, i));
        }
        let mut pos = k;
        while pos > 0 && idx[pos - 1] == n - k + pos - 1 {
            pos -= 1;
        }
        if pos == 0 {
            return None;
        }
        idx[pos - 1] += 1;
        for j in pos..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn independent_scan(g: &Graph) -> Result<Option<CriterionWitness>> {
    let n = g.n();
    if n > INDEPENDENT_SET_CAP {
        return Err(Error::CapExceeded { what: "criterion independent-set scan", n, cap: INDEPENDENT_SET_CAP });
    }
    let adj = g.masks().expect("n <= 64");
    let mut seen: HashSet<u64> = HashSet::new();
    let mut best: Option<(usize, Vec<usize>, usize)> = None;
    let mut stack: Vec<(u64, u64, usize)> = vec![(0, 0, 0)];
    // depth-first over independent sets: (members, their neighbourhood, next vertex)
    while let Some((set, nbhd, from)) = stack.pop() {
        if set != 0 && seen.insert(nbhd) {
            let size = nbhd.count_ones() as usize;
            let i = isolated_in(&adj, nbhd);
            if violates(i, size) {
                let key = (size, members(nbhd));
                let better = match &best {
                    None => true,
                    Some((bs, bm, _)) => (size, &key.1) < (*bs, bm),
                };
                if better {
                    best = Some((size, key.1, i));
                }
            }
        }
        for v in from..n {
            if set >> v & 1 == 0 && nbhd >> v & 1 == 0 {
                stack.push((set | 1 << v, nbhd | adj[v], v + 1));
            }
        }
    }
    Ok(best.map(|(_, set, i)| witness(set, i)))
}
