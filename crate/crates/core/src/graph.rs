//! Undirected simple graphs on at most 64 vertices with one `u64` neighbor
//! mask per vertex.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_ORDER: usize = 64;

/// A set of vertex indices packed into a single word.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(it: I) -> Self {
        VertexSet(it.into_iter().fold(0u64, |m, v| m | (1u64 << v)))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Iterates members in increasing order.
    pub fn iter(self) -> Bits {
        Bits(self.0)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Bits;
    fn into_iter(self) -> Bits {
        Bits(self.0)
    }
}

/// Iterator over the set bits of a word, lowest first.
#[derive(Clone, Debug)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;
    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Undirected simple graph. Values are immutable; edits return new graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = Graph::empty(n)?.adj;
        for &(u, v) in edges {
            check_vertex(n, u)?;
            check_vertex(n, v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1u64 << v;
            adj[v] |= 1u64 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Builds a graph from raw neighbor masks, checking symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n == 0 || n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let outside = !VertexSet::full(n).0;
        for (u, &row) in adj.iter().enumerate() {
            if row >> u & 1 == 1 {
                return Err(Error::SelfLoop(u));
            }
            if row & outside != 0 {
                return Err(Error::Precondition(format!("row {u} references vertices >= {n}")));
            }
            for v in Bits(row) {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::Precondition(format!("adjacency not symmetric at ({u},{v})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Caller guarantees symmetry, no loops and `1 <= adj.len() <= 64`.
    pub(crate) fn from_adjacency_unchecked(adj: Vec<u64>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        Graph { n: adj.len(), adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Γ(u).
    pub fn neighbors(&self, u: usize) -> Result<VertexSet> {
        check_vertex(self.n, u)?;
        Ok(VertexSet(self.adj[u]))
    }

    #[inline]
    pub(crate) fn nbrs(&self, u: usize) -> u64 {
        self.adj[u]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn degree(&self, u: usize) -> Result<usize> {
        check_vertex(self.n, u)?;
        Ok(self.adj[u].count_ones() as usize)
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(|r| r.count_ones() as usize).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).min().unwrap_or(0)
    }

    /// e(G).
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in Bits(self.adj[u] >> u >> 1) {
                out.push((u, u + 1 + v));
            }
        }
        out
    }

    /// e(X): edges with both endpoints in `x`.
    pub fn edges_within(&self, x: VertexSet) -> usize {
        let x = x.intersection(self.vertices());
        x.iter().map(|u| (self.adj[u] & x.0).count_ones() as usize).sum::<usize>() / 2
    }

    /// e(X, Y) for disjoint `x` and `y`.
    pub fn edges_between(&self, x: VertexSet, y: VertexSet) -> Result<usize> {
        if !x.is_disjoint(y) {
            return Err(Error::OverlappingSets);
        }
        let x = x.intersection(self.vertices());
        Ok(x.iter().map(|u| (self.adj[u] & y.0).count_ones() as usize).sum())
    }

    /// Σ_{v∈Γ(u)} d(v).
    pub fn neighborhood_degree_sum(&self, u: usize) -> Result<usize> {
        check_vertex(self.n, u)?;
        Ok(Bits(self.adj[u]).map(|v| self.adj[v].count_ones() as usize).sum())
    }

    /// Returns a copy with edge `{u, v}` present.
    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        check_vertex(self.n, u)?;
        check_vertex(self.n, v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1u64 << v;
        adj[v] |= 1u64 << u;
        Ok(Graph { n: self.n, adj })
    }

    /// Returns a copy with a new vertex `n` joined to `nbrs`.
    pub fn add_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        if self.n >= MAX_ORDER {
            return Err(Error::InvalidOrder(self.n + 1));
        }
        if !nbrs.difference(self.vertices()).is_empty() {
            return Err(Error::Precondition("new neighbors outside the graph".into()));
        }
        Ok(self.add_vertex_unchecked(nbrs.0))
    }

    pub(crate) fn add_vertex_unchecked(&self, nbrs: u64) -> Graph {
        let v = self.n;
        let mut adj = Vec::with_capacity(v + 1);
        adj.extend(self.adj.iter().enumerate().map(|(u, &r)| r | ((nbrs >> u & 1) << v)));
        adj.push(nbrs);
        Graph { n: v + 1, adj }
    }

    /// Induced subgraph on `keep`, relabeled in increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Result<Graph> {
        let keep = keep.intersection(self.vertices());
        let verts: Vec<usize> = keep.iter().collect();
        if verts.is_empty() {
            return Err(Error::InvalidOrder(0));
        }
        let adj = verts
            .iter()
            .map(|&u| {
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.adj[u] >> w & 1 == 1)
                    .fold(0u64, |m, (i, _)| m | 1u64 << i)
            })
            .collect();
        Ok(Graph { n: verts.len(), adj })
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition("permutation length differs from order".into()));
        }
        let mut seen = 0u64;
        for &p in perm {
            check_vertex(self.n, p)?;
            seen |= 1u64 << p;
        }
        if seen.count_ones() as usize != self.n {
            return Err(Error::Precondition("not a permutation".into()));
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Graph {
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let row = Bits(self.adj[u]).fold(0u64, |m, v| m | 1u64 << perm[v]);
            adj[perm[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Vertex sets of the connected components, ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices().0;
        let mut out = Vec::new();
        while left != 0 {
            let start = left & left.wrapping_neg();
            let mut comp = start;
            let mut frontier = start;
            while frontier != 0 {
                let next = Bits(frontier).fold(0u64, |m, v| m | self.adj[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            left &= !comp;
            out.push(VertexSet(comp));
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Disjoint union, `other` relabeled after `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj })
    }

    /// Join: every vertex of `self` adjacent to every vertex of `other`.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_ORDER {
            return Err(Error::InvalidOrder(n));
        }
        let left = VertexSet::full(self.n).0;
        let right = VertexSet::full(other.n).0 << self.n;
        let mut adj: Vec<u64> = self.adj.iter().map(|r| r | right).collect();
        adj.extend(other.adj.iter().map(|r| (r << self.n) | left));
        Ok(Graph { n, adj })
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().0;
        let adj = (0..self.n).map(|u| !self.adj[u] & full & !(1u64 << u)).collect();
        Graph { n: self.n, adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[inline]
pub(crate) fn check_vertex(n: usize, u: usize) -> Result<()> {
    if u < n {
        Ok(())
    } else {
        Err(Error::VertexOutOfRange { vertex: u, n })
    }
}
