//! Cycle and path containment as (not necessarily induced) subgraphs.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{Bits, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    Cycle,
    Path,
}

/// `C_k` or `P_k`, where `k` counts vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternQuery {
    pub kind: PatternKind,
    pub length: usize,
}

impl PatternQuery {
    pub fn cycle(length: usize) -> Result<Self> {
        if length < 3 {
            return Err(Error::InvalidPattern(format!("cycle length must be >= 3, got {length}")));
        }
        Ok(PatternQuery { kind: PatternKind::Cycle, length })
    }

    pub fn path(length: usize) -> Result<Self> {
        if length < 1 {
            return Err(Error::InvalidPattern("path order must be >= 1".into()));
        }
        Ok(PatternQuery { kind: PatternKind::Path, length })
    }

    pub fn occurs_in(&self, g: &Graph) -> bool {
        match self.kind {
            PatternKind::Cycle => has_cycle(g, self.length),
            PatternKind::Path => has_path(g, self.length),
        }
    }

    /// Occurrence using vertex `v`; cheaper when `g − v` is known to be free.
    pub fn occurs_through(&self, g: &Graph, v: usize) -> bool {
        match self.kind {
            PatternKind::Cycle => cycle_through(g, v, self.length),
            PatternKind::Path => self.occurs_in(g),
        }
    }
}

impl fmt::Display for PatternQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self.kind {
            PatternKind::Cycle => 'C',
            PatternKind::Path => 'P',
        };
        write!(f, "{c}{}", self.length)
    }
}

impl FromStr for PatternQuery {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidPattern(format!("expected C<k> or P<k>, got {s:?}"));
        let (head, num) = s.split_at(s.char_indices().nth(1).map(|(i, _)| i).ok_or_else(bad)?);
        let k: usize = num.parse().map_err(|_| bad())?;
        match head {
            "C" | "c" => PatternQuery::cycle(k),
            "P" | "p" => PatternQuery::path(k),
            _ => Err(bad()),
        }
    }
}

/// Parses a comma-separated list such as `C4,C5`.
pub fn parse_pattern_list(s: &str) -> Result<Vec<PatternQuery>> {
    s.split(',').filter(|t| !t.trim().is_empty()).map(str::parse).collect()
}

pub fn contains_cycle(g: &Graph, k: usize) -> Result<bool> {
    if k < 3 {
        return Err(Error::InvalidPattern(format!("cycle length must be >= 3, got {k}")));
    }
    Ok(has_cycle(g, k))
}

pub fn contains_path(g: &Graph, k: usize) -> Result<bool> {
    if k < 1 {
        return Err(Error::InvalidPattern("path order must be >= 1".into()));
    }
    Ok(has_path(g, k))
}

pub fn is_forbidden_free(g: &Graph, forbidden: &[PatternQuery]) -> bool {
    forbidden.iter().all(|p| !p.occurs_in(g))
}

fn has_cycle(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k > n {
        return false;
    }
    // the start is the least vertex of the cycle
    (0..n).any(|s| {
        let allowed = !((2u64 << s) - 1);
        closes_cycle(g, s, s, 1u64 << s, 1, k, allowed)
    })
}

fn cycle_through(g: &Graph, v: usize, k: usize) -> bool {
    k <= g.order() && closes_cycle(g, v, v, 1u64 << v, 1, k, u64::MAX)
}

fn closes_cycle(g: &Graph, start: usize, last: usize, visited: u64, len: usize, k: usize, allowed: u64) -> bool {
    let next = g.nbrs(last) & !visited & allowed;
    if len + 1 == k {
        return next & g.nbrs(start) != 0;
    }
    Bits(next).any(|w| closes_cycle(g, start, w, visited | 1u64 << w, len + 1, k, allowed))
}

fn has_path(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k > n {
        return false;
    }
    if k == 1 {
        return true;
    }
    (0..n).any(|s| extends_path(g, s, 1u64 << s, 1, k))
}

fn extends_path(g: &Graph, last: usize, visited: u64, len: usize, k: usize) -> bool {
    if len == k {
        return true;
    }
    Bits(g.nbrs(last) & !visited).any(|w| extends_path(g, w, visited | 1u64 << w, len + 1, k))
}

/// Oracle: tries every k-subset and every cyclic ordering of it.
/// Exponential; meant for cross-checks on small graphs.
pub fn contains_cycle_bruteforce(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k < 3 || k > n {
        return false;
    }
    let mut subset = Vec::with_capacity(k);
    subsets(n, k, 0, &mut subset, &mut |s| {
        // fix s[0] first; permute the rest
        let mut rest: Vec<usize> = s[1..].to_vec();
        permute_any(&mut rest, 0, &mut |order| {
            let mut prev = s[0];
            for &v in order {
                if !g.has_edge(prev, v) {
                    return false;
                }
                prev = v;
            }
            g.has_edge(prev, s[0])
        })
    })
}

fn subsets(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if cur.len() == k {
        return f(cur);
    }
    for v in from..n {
        cur.push(v);
        let hit = subsets(n, k, v + 1, cur, f);
        cur.pop();
        if hit {
            return true;
        }
    }
    false
}

fn permute_any(xs: &mut Vec<usize>, i: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    if i == xs.len() {
        return f(xs);
    }
    for j in i..xs.len() {
        xs.swap(i, j);
        let hit = permute_any(xs, i + 1, f);
        xs.swap(i, j);
        if hit {
            return true;
        }
    }
    false
}
