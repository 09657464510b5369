//! Isomorph-free exhaustive generation by canonical augmentation, and
//! extremal search for q or μ over the generated classes.
//!
//! A graph on `m + 1` vertices is produced from its canonical parent, the
//! graph obtained by deleting its designated vertex: among the vertices of
//! least `(degree, neighbor degree sum)`, the one with the largest canonical
//! label. A child `G + v` is accepted only if `v` lies in the automorphism
//! orbit of the designated vertex, and each parent is extended by one
//! neighbor set per orbit of `Aut(G)` on vertex subsets. Forbidden cycles
//! and paths are hereditary, so a child containing one is cut with its
//! whole subtree.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::merris_value;
use crate::canon::{canonize, orbits_of};
use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};
use crate::graph6;
use crate::patterns::{contains_cycle_bruteforce, PatternKind, PatternQuery};
use crate::spectra::{mu_index, q_index};

/// Absolute tolerance under which two objective values count as tied.
pub const EPS_TIE: f64 = 1e-9;
/// Largest order enumerated without any forbidden pattern.
pub const UNFILTERED_LIMIT: usize = 10;
/// Largest order enumerated with forbidden-pattern pruning.
pub const FILTERED_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSpec {
    pub n: usize,
    pub forbidden: Vec<PatternQuery>,
    pub connected_only: bool,
    /// Lifts the desk-scale resource guard.
    pub allow_large: bool,
}

impl EnumerationSpec {
    pub fn new(n: usize) -> Self {
        EnumerationSpec {
            n,
            forbidden: Vec::new(),
            connected_only: false,
            allow_large: false,
        }
    }

    pub fn forbid(mut self, p: PatternQuery) -> Self {
        self.forbidden.push(p);
        self
    }

    pub fn forbid_cycle(self, k: usize) -> Result<Self> {
        Ok(self.forbid(PatternQuery::cycle(k)?))
    }

    pub fn connected(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn check_feasible(&self) -> Result<()> {
        if self.n == 0 || self.n > crate::graph::MAX_ORDER {
            return Err(Error::InvalidOrder(self.n));
        }
        if self.allow_large {
            return Ok(());
        }
        let limit = if self.forbidden.is_empty() {
            UNFILTERED_LIMIT
        } else {
            FILTERED_LIMIT
        };
        if self.n > limit {
            return Err(Error::Infeasible(format!(
                "n = {} exceeds the desk-scale limit {limit} for this filter; set the override to force it",
                self.n
            )));
        }
        Ok(())
    }

    fn admits_child(&self, g: &Graph, new_vertex: usize) -> bool {
        self.forbidden.iter().all(|p| !p.occurs_through(g, new_vertex))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Objective {
    Q,
    Mu,
}

impl Objective {
    pub fn evaluate(self, g: &Graph) -> Result<f64> {
        Ok(match self {
            Objective::Q => q_index(g)?.value,
            Objective::Mu => mu_index(g)?.value,
        })
    }

    /// Cheap upper bound on the objective: the Merris bound for q and half of
    /// it for μ, since 2μ ≤ q.
    fn upper_bound(self, g: &Graph) -> f64 {
        match merris_value(g) {
            Ok((_, b)) => match self {
                Objective::Q => b,
                Objective::Mu => b / 2.0,
            },
            Err(_) => 0.0,
        }
    }
}

impl fmt::Display for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Objective::Q => "q",
            Objective::Mu => "mu",
        })
    }
}

impl FromStr for Objective {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "q" => Ok(Objective::Q),
            "mu" => Ok(Objective::Mu),
            other => Err(Error::Config(format!("unknown objective {other:?}"))),
        }
    }
}

/// Checks that run alongside enumeration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditOptions {
    /// Keep every emitted canonical form and fail on a repeat.
    pub distinct_forms: bool,
    /// Re-check one emitted graph in `sample_every` with the brute-force
    /// cycle oracle; 0 disables.
    pub sample_every: u64,
}

impl AuditOptions {
    pub fn full() -> Self {
        AuditOptions {
            distinct_forms: true,
            sample_every: 100,
        }
    }
}

struct Node {
    graph: Graph,
    generators: Vec<Vec<usize>>,
}

impl Node {
    fn root() -> Node {
        Node {
            graph: Graph::empty(1).expect("order 1 is valid"),
            generators: Vec::new(),
        }
    }

    fn from_graph(graph: Graph) -> Node {
        let generators = canonize(&graph).generators;
        Node { graph, generators }
    }
}

fn key(g: &Graph, u: usize) -> (u32, u32) {
    let row = g.nbrs(u);
    (row.count_ones(), Bits(row).map(|v| g.nbrs(v).count_ones()).sum())
}

/// Least representative of each orbit of `Aut` on subsets of `0..m`.
fn subset_representatives(m: usize, generators: &[Vec<usize>]) -> Vec<u64> {
    let total = 1usize << m;
    if generators.is_empty() {
        return (0..total as u64).collect();
    }
    let image = |mask: u64, gen: &[usize]| Bits(mask).fold(0u64, |acc, v| acc | 1u64 << gen[v]);
    let mut seen = vec![false; total];
    let mut reps = Vec::new();
    let mut stack = Vec::new();
    for mask in 0..total {
        if seen[mask] {
            continue;
        }
        reps.push(mask as u64);
        seen[mask] = true;
        stack.push(mask as u64);
        while let Some(s) = stack.pop() {
            for gen in generators {
                let t = image(s, gen) as usize;
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t as u64);
                }
            }
        }
    }
    reps
}

/// Accepted children of `node`. Generators are computed only when
/// `need_generators` is set, which the last level does not require.
fn children(node: &Node, spec: &EnumerationSpec, need_generators: bool) -> Vec<Node> {
    let m = node.graph.order();
    let mut out = Vec::new();
    for s in subset_representatives(m, &node.generators) {
        let child = node.graph.add_vertex_unchecked(s);
        if !spec.admits_child(&child, m) {
            continue;
        }
        let keys: Vec<(u32, u32)> = (0..=m).map(|u| key(&child, u)).collect();
        let least = *keys.iter().min().unwrap();
        if keys[m] != least {
            continue;
        }
        let tied = keys.iter().filter(|&&k| k == least).count();
        if tied == 1 {
            let generators = if need_generators {
                canonize(&child).generators
            } else {
                Vec::new()
            };
            out.push(Node { graph: child, generators });
            continue;
        }
        let canon = canonize(&child);
        let designated = (0..=m)
            .filter(|&u| keys[u] == least)
            .max_by_key(|&u| canon.form.labeling[u])
            .unwrap();
        let orbits = orbits_of(m + 1, canon.generators.iter());
        if orbits[designated] == orbits[m] {
            out.push(Node {
                graph: child,
                generators: if need_generators { canon.generators } else { Vec::new() },
            });
        }
    }
    out
}

struct Walker<'a, F: FnMut(&Graph)> {
    spec: &'a EnumerationSpec,
    visit: F,
    count: u64,
}

impl<F: FnMut(&Graph)> Walker<'_, F> {
    fn walk(&mut self, node: &Node) {
        let m = node.graph.order();
        if m == self.spec.n {
            if !self.spec.connected_only || node.graph.is_connected() {
                self.count += 1;
                (self.visit)(&node.graph);
            }
            return;
        }
        let last = m + 1 == self.spec.n;
        for child in children(node, self.spec, !last) {
            self.walk(&child);
        }
    }
}

/// Visits one representative per isomorphism class of order `spec.n` that is
/// free of every forbidden pattern; returns the number visited.
pub fn enumerate<F: FnMut(&Graph)>(spec: &EnumerationSpec, visitor: F) -> Result<u64> {
    spec.check_feasible()?;
    let mut w = Walker { spec, visit: visitor, count: 0 };
    w.walk(&Node::root());
    Ok(w.count)
}

/// Like [`enumerate`], with audit checks. Fails on a repeated class or an
/// emitted graph that the brute-force oracle finds a forbidden cycle in.
pub fn enumerate_audited<F: FnMut(&Graph)>(spec: &EnumerationSpec, audit: AuditOptions, mut visitor: F) -> Result<u64> {
    let mut forms = HashSet::new();
    let mut failure: Option<Error> = None;
    let mut seq = 0u64;
    let count = enumerate(spec, |g| {
        seq += 1;
        if audit.distinct_forms && !forms.insert(canonize(g).form.encoding) && failure.is_none() {
            failure = Some(Error::Precondition(format!(
                "isomorphism class visited twice: {}",
                graph6::encode(g)
            )));
        }
        if audit.sample_every > 0 && seq % audit.sample_every == 1 % audit.sample_every {
            let bad = spec
                .forbidden
                .iter()
                .any(|p| p.kind == PatternKind::Cycle && contains_cycle_bruteforce(g, p.length));
            if bad && failure.is_none() {
                failure = Some(Error::Precondition(format!(
                    "emitted graph contains a forbidden cycle: {}",
                    graph6::encode(g)
                )));
            }
        }
        visitor(g);
    })?;
    match failure {
        Some(e) => Err(e),
        None => Ok(count),
    }
}

/// A unit of parallel work: the subtrees below a set of seed nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Job {
    pub shard: usize,
    pub seed_level: usize,
    /// Seed graphs in generator labeling, graph6-encoded.
    pub seeds: Vec<String>,
}

/// Splits the search tree at the shallowest level with at least `shards`
/// nodes and deals those nodes round-robin. Always returns `shards` jobs;
/// some may be empty when the tree is small.
pub fn partition_jobs(spec: &EnumerationSpec, shards: usize) -> Result<Vec<Job>> {
    spec.check_feasible()?;
    let shards = shards.max(1);
    if shards == 1 {
        return Ok(vec![Job {
            shard: 0,
            seed_level: 1,
            seeds: vec![graph6::encode(&Node::root().graph)],
        }]);
    }
    let mut level = vec![Node::root()];
    let mut depth = 1;
    while level.len() < shards && depth < spec.n {
        level = level.iter().flat_map(|node| children(node, spec, true)).collect();
        depth += 1;
    }
    let mut jobs: Vec<Job> = (0..shards)
        .map(|shard| Job {
            shard,
            seed_level: depth,
            seeds: Vec::new(),
        })
        .collect();
    for (i, node) in level.iter().enumerate() {
        jobs[i % shards].seeds.push(graph6::encode(&node.graph));
    }
    Ok(jobs)
}

/// Runs one job's subtrees; returns the number of graphs visited.
pub fn run_job<F: FnMut(&Graph)>(spec: &EnumerationSpec, job: &Job, visitor: F) -> Result<u64> {
    spec.check_feasible()?;
    let mut w = Walker { spec, visit: visitor, count: 0 };
    for seed in &job.seeds {
        let g = graph6::decode(seed)?;
        if g.order() != job.seed_level || g.order() > spec.n {
            return Err(Error::Precondition(format!("seed {seed} does not match job level")));
        }
        w.walk(&Node::from_graph(g));
    }
    Ok(w.count)
}

/// Running maximum with every candidate inside the tie window.
#[derive(Clone, Debug)]
pub struct ExtremalTracker {
    pub objective: Objective,
    pub eps: f64,
    max: f64,
    candidates: Vec<(f64, Graph)>,
    pub examined: u64,
    pub evaluated: u64,
}

impl ExtremalTracker {
    pub fn new(objective: Objective, eps: f64) -> Self {
        ExtremalTracker {
            objective,
            eps,
            max: f64::NEG_INFINITY,
            candidates: Vec::new(),
            examined: 0,
            evaluated: 0,
        }
    }

    pub fn max(&self) -> f64 {
        self.max
    }

    pub fn offer(&mut self, g: &Graph) -> Result<()> {
        self.examined += 1;
        if self.objective.upper_bound(g) < self.max - self.eps - 1e-12 {
            return Ok(());
        }
        self.evaluated += 1;
        let value = self.objective.evaluate(g)?;
        self.offer_value(value, g.clone());
        Ok(())
    }

    fn offer_value(&mut self, value: f64, g: Graph) {
        if value > self.max {
            self.max = value;
            let floor = value - self.eps;
            self.candidates.retain(|(v, _)| *v >= floor);
        }
        if value >= self.max - self.eps {
            self.candidates.push((value, g));
        }
    }

    /// Max-with-ties merge; associative and commutative.
    pub fn merge(mut self, other: ExtremalTracker) -> ExtremalTracker {
        self.examined += other.examined;
        self.evaluated += other.evaluated;
        for (v, g) in other.candidates {
            self.offer_value(v, g);
        }
        self
    }

    fn finish(self, started: Instant) -> Result<SearchOutcome> {
        let floor = self.max - self.eps;
        let mut maximizers: Vec<(String, Graph, f64)> = self
            .candidates
            .into_iter()
            .filter(|(v, _)| *v >= floor)
            .map(|(v, g)| {
                let c = canonize(&g);
                (graph6::encode(&c.canonical_graph), c.canonical_graph, v)
            })
            .collect();
        maximizers.sort_by(|a, b| a.0.cmp(&b.0));
        maximizers.dedup_by(|a, b| a.0 == b.0);
        if maximizers.is_empty() {
            return Err(Error::Precondition("empty class: nothing to maximize".into()));
        }
        Ok(SearchOutcome {
            objective: self.objective,
            max_value: self.max,
            tie_tolerance: self.eps,
            maximizer_values: maximizers.iter().map(|m| m.2).collect(),
            maximizer_graph6: maximizers.iter().map(|m| m.0.clone()).collect(),
            maximizers: maximizers.into_iter().map(|m| m.1).collect(),
            graphs_examined: self.examined,
            spectra_evaluated: self.evaluated,
            wall_time: started.elapsed(),
        })
    }
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub objective: Objective,
    pub max_value: f64,
    pub tie_tolerance: f64,
    /// Canonically labeled, pairwise non-isomorphic, sorted by graph6.
    pub maximizers: Vec<Graph>,
    pub maximizer_graph6: Vec<String>,
    pub maximizer_values: Vec<f64>,
    pub graphs_examined: u64,
    /// Graphs whose spectrum was computed; the rest were ruled out by the
    /// Merris bound.
    pub spectra_evaluated: u64,
    pub wall_time: Duration,
}

impl SearchOutcome {
    pub fn is_unique(&self) -> bool {
        self.maximizers.len() == 1
    }
}

pub fn find_extremal(spec: &EnumerationSpec, objective: Objective) -> Result<SearchOutcome> {
    let started = Instant::now();
    let mut tracker = ExtremalTracker::new(objective, EPS_TIE);
    let mut failure = None;
    enumerate(spec, |g| {
        if let Err(e) = tracker.offer(g) {
            failure.get_or_insert(e);
        }
    })?;
    if let Some(e) = failure {
        return Err(e);
    }
    tracker.finish(started)
}

/// [`find_extremal`] over `shards` jobs run on the rayon pool.
pub fn find_extremal_sharded(spec: &EnumerationSpec, objective: Objective, shards: usize) -> Result<SearchOutcome> {
    let started = Instant::now();
    let jobs = partition_jobs(spec, shards)?;
    let trackers = jobs
        .par_iter()
        .map(|job| {
            let mut tracker = ExtremalTracker::new(objective, EPS_TIE);
            let mut failure = None;
            run_job(spec, job, |g| {
                if let Err(e) = tracker.offer(g) {
                    failure.get_or_insert(e);
                }
            })?;
            failure.map_or(Ok(tracker), Err)
        })
        .collect::<Result<Vec<_>>>()?;
    let merged = trackers
        .into_iter()
        .reduce(ExtremalTracker::merge)
        .expect("at least one job");
    merged.finish(started)
}

/// Class counts per shard, computed in parallel.
pub fn count_sharded(spec: &EnumerationSpec, shards: usize) -> Result<Vec<u64>> {
    let jobs = partition_jobs(spec, shards)?;
    jobs.par_iter().map(|job| run_job(spec, job, |_| {})).collect()
}
