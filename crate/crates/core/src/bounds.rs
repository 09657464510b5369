//! Upper bounds on q(G) and the edge bound for path-free graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::patterns::{contains_cycle, contains_path};
use crate::spectra::q_index;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundReport {
    pub value: f64,
    /// Vertex attaining a vertex-maximized bound.
    pub vertex: Option<usize>,
    /// `value − q(G)`.
    pub slack: f64,
}

/// max over non-isolated u of `d(u) + Σ_{v∈Γ(u)} d(v) / d(u)`.
pub fn merris_bound(g: &Graph) -> Result<BoundReport> {
    let (vertex, value) = merris_value(g)?;
    Ok(BoundReport {
        value,
        vertex: Some(vertex),
        slack: value - q_index(g)?.value,
    })
}

/// The Merris maximum and an attaining vertex, without computing q(G).
pub fn merris_value(g: &Graph) -> Result<(usize, f64)> {
    let mut best: Option<(usize, f64)> = None;
    for u in 0..g.order() {
        let d = g.degree(u)?;
        if d == 0 {
            continue;
        }
        let val = d as f64 + g.neighborhood_degree_sum(u)? as f64 / d as f64;
        if best.is_none_or(|(_, b)| val > b) {
            best = Some((u, val));
        }
    }
    best.ok_or_else(|| Error::Precondition("Merris bound is undefined on an edgeless graph".into()))
}

/// `2e(G)/(n − 1) + n − 2`.
pub fn das_bound(g: &Graph) -> Result<BoundReport> {
    let value = das_value(g)?;
    Ok(BoundReport {
        value,
        vertex: None,
        slack: value - q_index(g)?.value,
    })
}

pub fn das_value(g: &Graph) -> Result<f64> {
    let n = g.order();
    if n < 2 {
        return Err(Error::Precondition("Das bound needs n >= 2".into()));
    }
    Ok(2.0 * g.edge_count() as f64 / (n as f64 - 1.0) + n as f64 - 2.0)
}

/// Outcome of the path-free edge bound on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ErdosGallai {
    pub edges: usize,
    /// `k·n`, compared against `2e` in integers.
    pub twice_limit: usize,
    pub equality: bool,
    pub clique_union: bool,
}

impl ErdosGallai {
    pub fn holds(&self) -> bool {
        2 * self.edges <= self.twice_limit && (!self.equality || self.clique_union)
    }
}

/// For a `P_{k+2}`-free graph: `e ≤ kn/2`, with equality only for disjoint
/// unions of `K_{k+1}`. Returns whether both parts hold.
pub fn erdos_gallai_check(g: &Graph, k: usize) -> Result<bool> {
    Ok(erdos_gallai_report(g, k)?.holds())
}

pub fn erdos_gallai_report(g: &Graph, k: usize) -> Result<ErdosGallai> {
    if k < 1 {
        return Err(Error::Precondition("path parameter k must be >= 1".into()));
    }
    if contains_path(g, k + 2)? {
        return Err(Error::Precondition(format!("graph contains P_{}", k + 2)));
    }
    let edges = g.edge_count();
    let twice_limit = k * g.order();
    Ok(ErdosGallai {
        edges,
        twice_limit,
        equality: 2 * edges == twice_limit,
        clique_union: is_clique_union(g, k + 1),
    })
}

/// True when every component is a complete graph of order `size`.
pub fn is_clique_union(g: &Graph, size: usize) -> bool {
    g.components().into_iter().all(|c| {
        c.len() == size && g.edges_within(c) == size * (size - 1) / 2
    })
}

/// `1 + d(u) + (n − 1)/d(u)`: the per-vertex Merris term after using that
/// no vertex other than `u` has two neighbors in `Γ(u)` in a C4-free graph.
pub fn proof_local_bound_c4(g: &Graph, u: usize) -> Result<f64> {
    let d = g.degree(u)?;
    if d < 2 {
        return Err(Error::Precondition(format!("vertex {u} has degree {d} < 2")));
    }
    if contains_cycle(g, 4)? {
        return Err(Error::Precondition("graph contains C4".into()));
    }
    let n = g.order() as f64;
    Ok(1.0 + d as f64 + (n - 1.0) / d as f64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build, FamilySpec};

    fn fam(s: &str) -> Graph {
        build(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn merris_examples() {
        let c6 = fam("C:6");
        let r = merris_bound(&c6).unwrap();
        assert!((r.value - 4.0).abs() < 1e-12 && r.slack.abs() < 1e-9);
        let r = merris_bound(&fam("F:5")).unwrap();
        assert_eq!(r.value, 6.0);
        assert_eq!(r.vertex, Some(0));
        assert!((r.slack - (6.0 - 5.5615528128)).abs() < 1e-8);
        let r = merris_bound(&fam("K:4")).unwrap();
        assert!((r.value - 6.0).abs() < 1e-12 && r.slack.abs() < 1e-9);
        assert!(merris_bound(&Graph::empty(3).unwrap()).is_err());
    }

    #[test]
    fn merris_skips_isolated_vertices() {
        let g = fam("K:3").disjoint_union(&Graph::empty(2).unwrap()).unwrap();
        assert_eq!(merris_bound(&g).unwrap().value, 4.0);
    }

    #[test]
    fn das_examples() {
        let r = das_bound(&fam("K:4")).unwrap();
        assert!((r.value - 6.0).abs() < 1e-12);
        let r = das_bound(&fam("S:6,2")).unwrap();
        assert!((r.value - 7.6).abs() < 1e-12 && r.slack > 0.0);
        assert!((das_bound(&fam("K:2")).unwrap().value - 2.0).abs() < 1e-12);
        assert!(das_bound(&Graph::empty(1).unwrap()).is_err());
    }

    #[test]
    fn erdos_gallai_examples() {
        let two_k3 = fam("K:3").disjoint_union(&fam("K:3")).unwrap();
        let r = erdos_gallai_report(&two_k3, 2).unwrap();
        assert!(r.equality && r.clique_union && r.holds());
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let r = erdos_gallai_report(&star, 2).unwrap();
        assert!(!r.equality && r.holds() && r.edges == 5);
        assert!(erdos_gallai_check(&fam("P:3"), 2).unwrap());
        assert!(erdos_gallai_check(&fam("P:4"), 2).is_err());
    }

    #[test]
    fn c4_local_bound_examples() {
        let f5 = fam("F:5");
        assert_eq!(proof_local_bound_c4(&f5, 0).unwrap(), 6.0);
        assert_eq!(proof_local_bound_c4(&f5, 1).unwrap(), 5.0);
        let star = build(&FamilySpec::split(7, 1).unwrap()).unwrap();
        assert_eq!(proof_local_bound_c4(&star, 0).unwrap(), 8.0);
        assert!(proof_local_bound_c4(&star, 1).is_err());
        assert!(proof_local_bound_c4(&fam("C:4"), 0).is_err());
    }
}
