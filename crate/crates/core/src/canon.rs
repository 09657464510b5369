//! Canonical labeling by partition refinement and individualization.
//!
//! The search tree is pruned with automorphisms discovered at equivalent
//! leaves. The automorphisms found this way generate the full automorphism
//! group, so [`Canon::orbits`] returns true vertex orbits.

use std::cmp::Ordering;

use crate::graph::{Bits, Graph};
use crate::graph6;

/// Isomorphism-invariant encoding plus the labeling that produced it.
/// Equality, ordering and hashing look at the encoding only, so two forms are
/// equal exactly when their graphs are isomorphic.
#[derive(Clone, Debug)]
pub struct CanonicalForm {
    /// graph6 bytes of the canonically relabeled graph.
    pub encoding: Vec<u8>,
    /// `labeling[v]` is the canonical label of vertex `v`.
    pub labeling: Vec<usize>,
}

impl PartialEq for CanonicalForm {
    fn eq(&self, other: &Self) -> bool {
        self.encoding == other.encoding
    }
}

impl Eq for CanonicalForm {}

impl std::hash::Hash for CanonicalForm {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.encoding.hash(state);
    }
}

impl PartialOrd for CanonicalForm {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for CanonicalForm {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.encoding.cmp(&other.encoding)
    }
}

/// Full result of a canonical labeling run.
#[derive(Clone, Debug)]
pub struct Canon {
    pub form: CanonicalForm,
    pub canonical_graph: Graph,
    /// Generators of the automorphism group, as vertex maps.
    pub generators: Vec<Vec<usize>>,
}

impl Canon {
    /// Orbit representative (least member) for every vertex.
    pub fn orbits(&self) -> Vec<usize> {
        orbits_of(self.form.labeling.len(), self.generators.iter())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    canonize(g).form
}

/// Runs the full canonical labeling search on `g`.
pub fn canonize(g: &Graph) -> Canon {
    let n = g.order();
    let mut s = Searcher {
        g,
        first: None,
        best: None,
        generators: Vec::new(),
    };
    let mut cells = vec![g.vertices().0];
    let mut prefix = Vec::with_capacity(n);
    s.descend(&mut cells, &mut prefix);
    let best = s.best.expect("search reaches at least one leaf");
    let labeling = best.perm;
    let canonical_graph = Graph::from_adjacency_unchecked(best.rows);
    Canon {
        form: CanonicalForm {
            encoding: graph6::encode(&canonical_graph).into_bytes(),
            labeling,
        },
        canonical_graph,
        generators: s.generators,
    }
}

/// Union-find orbits of the group generated by `gens`.
pub fn orbits_of<'a, I>(n: usize, gens: I) -> Vec<usize>
where
    I: IntoIterator<Item = &'a Vec<usize>>,
{
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for gen in gens {
        for (v, &w) in gen.iter().enumerate() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                parent[hi] = lo;
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}

/// Equitable refinement of an ordered partition.
///
/// Each pass splits every cell by the vector of neighbor counts into all
/// current cells; subcells are ordered by that vector, so the result only
/// depends on the graph up to relabeling.
pub fn refine(g: &Graph, cells: &mut Vec<u64>) {
    let mut sig: Vec<(Vec<u8>, usize)> = Vec::new();
    loop {
        let mut out = Vec::with_capacity(g.order());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                out.push(cell);
                continue;
            }
            sig.clear();
            for v in Bits(cell) {
                let row = g.nbrs(v);
                let key: Vec<u8> = cells.iter().map(|&c| (row & c).count_ones() as u8).collect();
                sig.push((key, v));
            }
            sig.sort();
            let mut cur = 0u64;
            for i in 0..sig.len() {
                if i > 0 && sig[i].0 != sig[i - 1].0 {
                    out.push(cur);
                    cur = 0;
                }
                cur |= 1u64 << sig[i].1;
            }
            out.push(cur);
        }
        let done = out.len() == cells.len();
        *cells = out;
        if done {
            return;
        }
    }
}

struct Searcher<'a> {
    g: &'a Graph,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
}

impl Searcher<'_> {
    /// Returns `Some(level)` to unwind to the node whose prefix has that length.
    fn descend(&mut self, cells: &mut Vec<u64>, prefix: &mut Vec<usize>) -> Option<usize> {
        refine(self.g, cells);
        let n = self.g.order();
        if cells.len() == n {
            return self.leaf(cells, prefix);
        }
        let level = prefix.len();
        let target = cells.iter().position(|c| c.count_ones() > 1).unwrap();
        let mut explored: Vec<usize> = Vec::new();
        let mut gens_seen = usize::MAX;
        let mut orbit = Vec::new();
        for w in Bits(cells[target]) {
            if gens_seen != self.generators.len() {
                gens_seen = self.generators.len();
                let fixing = self
                    .generators
                    .iter()
                    .filter(|gen| prefix.iter().all(|&p| gen[p] == p));
                orbit = orbits_of(n, fixing);
            }
            if explored.iter().any(|&e| orbit[e] == orbit[w]) {
                continue;
            }
            explored.push(w);
            let mut child = Vec::with_capacity(n);
            child.extend_from_slice(&cells[..target]);
            child.push(1u64 << w);
            child.push(cells[target] & !(1u64 << w));
            child.extend_from_slice(&cells[target + 1..]);
            prefix.push(w);
            let jump = self.descend(&mut child, prefix);
            prefix.pop();
            if let Some(k) = jump {
                if k < level {
                    return Some(k);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], prefix: &[usize]) -> Option<usize> {
        let n = self.g.order();
        let mut perm = vec![0usize; n];
        for (label, &c) in cells.iter().enumerate() {
            perm[c.trailing_zeros() as usize] = label;
        }
        let rows = self.g.permute_unchecked(&perm).rows().to_vec();
        let leaf = Leaf {
            perm,
            rows,
            prefix: prefix.to_vec(),
        };
        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return None;
        };
        if leaf.rows == first.rows {
            self.generators.push(compose_inverse(&first.perm, &leaf.perm));
            return Some(common_prefix(&first.prefix, prefix));
        }
        let best = self.best.as_ref().unwrap();
        match leaf.rows.cmp(&best.rows) {
            Ordering::Equal => {
                // the best leaf sits in an already finished sibling subtree
                self.generators.push(compose_inverse(&best.perm, &leaf.perm));
                Some(common_prefix(&best.prefix, prefix))
            }
            Ordering::Less => {
                self.best = Some(leaf);
                None
            }
            Ordering::Greater => None,
        }
    }
}

#[derive(Clone)]
struct Leaf {
    perm: Vec<usize>,
    rows: Vec<u64>,
    prefix: Vec<usize>,
}

/// `first^{-1} ∘ perm`: maps `v` to the vertex that `first` sends to `perm[v]`.
fn compose_inverse(first: &[usize], perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0usize; first.len()];
    for (v, &l) in first.iter().enumerate() {
        inv[l] = v;
    }
    perm.iter().map(|&l| inv[l]).collect()
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn cycle(order: &[usize]) -> Graph {
        let n = order.len();
        let e: Vec<_> = (0..n).map(|i| (order[i], order[(i + 1) % n])).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn relabeled_cycle_has_same_form() {
        assert_eq!(
            canonical_form(&cycle(&[0, 1, 2, 3])),
            canonical_form(&cycle(&[0, 1, 2, 3]))
        );
        assert_eq!(
            canonical_form(&cycle(&[0, 1, 2, 3])).encoding,
            canonical_form(&cycle(&[0, 2, 1, 3])).encoding
        );
    }

    #[test]
    fn path_and_star_differ() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_ne!(canonical_form(&p4).encoding, canonical_form(&star).encoding);
    }

    #[test]
    fn labeling_maps_graph_onto_canonical_graph() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (2, 5)]).unwrap();
        let c = canonize(&g);
        assert_eq!(g.permute(&c.form.labeling).unwrap(), c.canonical_graph);
    }

    #[test]
    fn generators_are_automorphisms_and_orbits_are_right() {
        let edgeless = Graph::empty(9).unwrap();
        let c = canonize(&edgeless);
        assert!(c.orbits().iter().all(|&r| r == 0));
        // path 0-1-2-3-4: orbits {0,4}, {1,3}, {2}
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let c = canonize(&p5);
        for gen in &c.generators {
            assert_eq!(p5.permute(gen).unwrap(), p5);
        }
        assert_eq!(c.orbits(), vec![0, 1, 2, 1, 0]);
    }

    #[test]
    fn petersen_is_vertex_transitive() {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((i, (i + 1) % 5));
            e.push((i, i + 5));
            e.push((5 + i, 5 + (i + 2) % 5));
        }
        let g = Graph::from_edges(10, &e).unwrap();
        let c = canonize(&g);
        assert!(c.orbits().iter().all(|&r| r == 0));
    }

    #[test]
    fn labeled_dedup_n4_gives_11() {
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|a| (a + 1..4).map(move |b| (a, b))).collect();
        let mut seen = HashSet::new();
        for mask in 0u32..1 << pairs.len() {
            let e: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p).collect();
            seen.insert(canonical_form(&Graph::from_edges(4, &e).unwrap()).encoding);
        }
        assert_eq!(seen.len(), 11);
    }
}
