//! Isomorphism-class enumeration of small graphs.
//!
//! Orders up to 6 are produced by bucketing all labeled graphs by canonical
//! form. Orders 7 to 9 extend every class of order `n - 1` by one vertex in
//! every possible way and keep one representative per canonical label.
//! Larger orders must come from a graph6 corpus.

use std::collections::HashMap;
use std::io::BufRead;

use rayon::prelude::*;

use crate::canon::{canonical_form, canonical_graph, CanonicalLabel};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::graph6;

pub const MAX_BUILTIN_ORDER: usize = 9;
const BRUTE_FORCE_MAX: usize = 6;

/// One canonical representative per isomorphism class of graphs of order
/// `n`, connected or not, sorted by canonical label.
pub fn enumerate_all(n: usize) -> Result<Vec<Graph>> {
    if n == 0 || n > MAX_BUILTIN_ORDER {
        return Err(Error::EnumerationUnavailable(n));
    }
    if n <= BRUTE_FORCE_MAX {
        return Ok(brute_force(n));
    }
    let parents = enumerate_all(n - 1)?;
    let buckets: Vec<Vec<(CanonicalLabel, Graph)>> = parents
        .par_iter()
        .map(|p| {
            let mut local: HashMap<CanonicalLabel, Graph> = HashMap::new();
            for mask in 0u64..1 << (n - 1) {
                let g = extend(p, mask);
                let label = canonical_form(&g).expect("n <= 9 within cap");
                local.entry(label).or_insert(g);
            }
            local.into_iter().collect()
        })
        .collect();
    Ok(dedupe(buckets.into_iter().flatten()))
}

/// One representative per isomorphism class of connected graphs of order `n`.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_all(n)?.into_iter().filter(Graph::is_connected).collect())
}

/// Connected graphs from a graph6 corpus, deduplicated up to isomorphism.
/// Lines that are empty are skipped; malformed lines are errors.
pub fn connected_from_corpus<R: BufRead>(reader: R, n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for line in reader.lines() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let g = graph6::decode(line.trim())?;
        if g.n() == n && g.is_connected() {
            out.push(g);
        }
    }
    let labeled = out.into_iter().map(|g| {
        let label = crate::canon::canonical_form_capped(&g, crate::canon::MAX_ORDER)?;
        Ok((label, g))
    });
    let labeled: Result<Vec<_>> = labeled.collect();
    Ok(dedupe(labeled?.into_iter()))
}

fn extend(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    edges.extend((0..n).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n)));
    Graph::new(n + 1, &edges).expect("valid extension")
}

fn brute_force(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let buckets: Vec<(CanonicalLabel, Graph)> = (0u64..1 << pairs.len())
        .into_par_iter()
        .map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = Graph::new(n, &edges).expect("valid pairs");
            (canonical_form(&g).expect("n <= 6"), g)
        })
        .collect();
    dedupe(buckets.into_iter())
}

fn dedupe(items: impl Iterator<Item = (CanonicalLabel, Graph)>) -> Vec<Graph> {
    let mut classes: HashMap<CanonicalLabel, Graph> = HashMap::new();
    for (label, g) in items {
        classes.entry(label).or_insert(g);
    }
    let mut reps: Vec<(CanonicalLabel, Graph)> = classes.into_iter().collect();
    reps.sort_by(|a, b| a.0.cmp(&b.0));
    reps.into_iter()
        .map(|(_, g)| canonical_graph(&g, crate::canon::MAX_ORDER).expect("within cap"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn small_connected_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn all_graph_counts() {
        let counts: Vec<usize> = (1..=7).map(|n| enumerate_all(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn augmentation_matches_brute_force_at_six() {
        let parents = brute_force(5);
        let via_aug: HashSet<_> = parents
            .iter()
            .flat_map(|p| (0u64..32).map(move |m| canonical_form(&extend(p, m)).unwrap()))
            .collect();
        let direct: HashSet<_> = brute_force(6).iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(via_aug, direct);
    }

    #[test]
    fn representatives_pairwise_distinct() {
        let graphs = enumerate_connected(7).unwrap();
        assert_eq!(graphs.len(), 853);
        let labels: HashSet<_> = graphs.iter().map(|g| canonical_form(g).unwrap()).collect();
        assert_eq!(labels.len(), graphs.len());
    }

    #[test]
    fn unsupported_orders() {
        assert_eq!(enumerate_connected(0).unwrap_err(), Error::EnumerationUnavailable(0));
        assert_eq!(enumerate_connected(10).unwrap_err(), Error::EnumerationUnavailable(10));
    }

    #[test]
    fn corpus_ingestion_dedupes() {
        let text = "Bw\nBW\nB?\nBo\n\n";
        // Bw = K3, BW / Bo = paths on 3 vertices, B? edgeless
        let graphs = connected_from_corpus(text.as_bytes(), 3).unwrap();
        assert_eq!(graphs.len(), 2);
        assert!(connected_from_corpus("B!".as_bytes(), 3).is_err());
    }
}
