//! Independent oracles shared by the integration tests. Nothing here calls the
//! library's canonical labeling or generator.
#![allow(dead_code)]

use std::collections::BTreeMap;

use qindex::Graph;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

/// Filtered class counts for n = 1..=7, computed with networkx from the graph
/// atlas (all graphs up to 7 vertices) and a brute-force cycle test.
pub const ATLAS_C3_FREE: [u64; 7] = [1, 2, 3, 7, 14, 38, 107];
pub const ATLAS_C4_FREE: [u64; 7] = [1, 2, 4, 8, 18, 44, 117];
pub const ATLAS_C5_FREE: [u64; 7] = [1, 2, 4, 11, 26, 80, 251];
pub const ATLAS_C6_FREE: [u64; 7] = [1, 2, 4, 11, 34, 108, 392];
/// n = 8, from a separate networkx vertex-extension run deduplicated by
/// isomorphism tests.
pub const NX_C4_FREE_8: u64 = 351;
pub const NX_C5_FREE_8: u64 = 929;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for v in 1..n {
        for u in 0..v {
            out.push((u, v));
        }
    }
    out
}

/// Every labeled graph on n vertices, as edge masks over [`pairs`].
pub fn labeled_graph(n: usize, mask: u64) -> Graph {
    let edges: Vec<_> = pairs(n)
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, e)| e)
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Least edge mask over all n! relabelings.
pub fn brute_canonical_code(g: &Graph) -> u64 {
    let n = g.order();
    let pr = pairs(n);
    let index: BTreeMap<(usize, usize), usize> = pr.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let edges = g.edges();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for &(u, v) in &edges {
            let (a, b) = (perm[u].min(perm[v]), perm[u].max(perm[v]));
            code |= 1 << index[&(a, b)];
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

/// One representative per isomorphism class among labeled graphs on n ≤ 6
/// vertices that pass `keep`, keyed by brute-force canonical code.
pub fn brute_classes(n: usize, keep: impl Fn(&Graph) -> bool) -> BTreeMap<u64, Graph> {
    let m = n * n.saturating_sub(1) / 2;
    let mut out = BTreeMap::new();
    for mask in 0..1u64 << m {
        let g = labeled_graph(n, mask);
        if !keep(&g) {
            continue;
        }
        out.entry(brute_canonical_code(&g)).or_insert(g);
    }
    out
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let edges: Vec<_> = pairs(n).into_iter().filter(|_| rng.gen_bool(p)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn random_permutation(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
