//! Named graph families and their closed-form Q-indices.
//!
//! Vertex 0 is the dominating (center) vertex whenever the family has one.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectra::{largest_real_root, Polynomial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    /// `F_n`: ⌊n/2⌋ triangles on a common vertex, plus a pendant edge at it when n is even.
    Friendship,
    /// `S_{n,k} = K_k ∨ complement(K_{n−k})`.
    SplitSnk,
    /// `S_{n,k}` plus one edge inside the independent set.
    SplitSnkPlus,
    /// Balanced complete bipartite graph `T_2(n)`.
    Turan2,
    /// `S_{n,1}^+`: the star with one extra edge.
    StarPlus,
    /// `K_1 ∨ ((n−1)/3) K_3`.
    K1JoinTriangles,
    CompleteKn,
    CycleCn,
    PathPn,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub n: usize,
    pub k: usize,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, n: usize) -> Result<Self> {
        let spec = FamilySpec { kind, n, k: 0 };
        spec.validate()?;
        Ok(spec)
    }

    pub fn with_k(kind: FamilyKind, n: usize, k: usize) -> Result<Self> {
        let spec = FamilySpec { kind, n, k };
        spec.validate()?;
        Ok(spec)
    }

    pub fn friendship(n: usize) -> Result<Self> {
        FamilySpec::new(FamilyKind::Friendship, n)
    }

    pub fn split(n: usize, k: usize) -> Result<Self> {
        FamilySpec::with_k(FamilyKind::SplitSnk, n, k)
    }

    pub fn split_plus(n: usize, k: usize) -> Result<Self> {
        FamilySpec::with_k(FamilyKind::SplitSnkPlus, n, k)
    }

    pub fn validate(&self) -> Result<()> {
        let (n, k) = (self.n, self.k);
        let bad = |m: String| Err(Error::InvalidFamily(m));
        if n == 0 || n > crate::graph::MAX_ORDER {
            return bad(format!("order {n} outside 1..=64"));
        }
        match self.kind {
            FamilyKind::Friendship if n < 3 => bad(format!("friendship graph needs n >= 3, got {n}")),
            FamilyKind::SplitSnk if !(1..n).contains(&k) => bad(format!("S_(n,k) needs 1 <= k < n, got n={n}, k={k}")),
            FamilyKind::SplitSnkPlus if k < 1 || k + 2 > n => {
                bad(format!("S+_(n,k) needs k >= 1 and n - k >= 2, got n={n}, k={k}"))
            }
            FamilyKind::Turan2 if n < 2 => bad(format!("T_2(n) needs n >= 2, got {n}")),
            FamilyKind::StarPlus if n < 3 => bad(format!("S+_(n,1) needs n >= 3, got {n}")),
            FamilyKind::K1JoinTriangles if n < 4 || n % 3 != 1 => {
                bad(format!("K_1 v ((n-1)/3)K_3 needs n = 1 mod 3 and n >= 4, got {n}"))
            }
            FamilyKind::CycleCn if n < 3 => bad(format!("cycle needs n >= 3, got {n}")),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.n;
        match self.kind {
            FamilyKind::Friendship => write!(f, "F:{n}"),
            FamilyKind::SplitSnk => write!(f, "S:{n},{}", self.k),
            FamilyKind::SplitSnkPlus => write!(f, "S+:{n},{}", self.k),
            FamilyKind::Turan2 => write!(f, "T2:{n}"),
            FamilyKind::StarPlus => write!(f, "SP:{n}"),
            FamilyKind::K1JoinTriangles => write!(f, "K1T:{n}"),
            FamilyKind::CompleteKn => write!(f, "K:{n}"),
            FamilyKind::CycleCn => write!(f, "C:{n}"),
            FamilyKind::PathPn => write!(f, "P:{n}"),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// Accepts `F:9`, `S:9,2`, `S+:10,2`, `T2:8`, `SP:7`, `K1T:7`, `K:5`, `C:6`, `P:4`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidFamily(format!("cannot parse family spec {s:?}"));
        let (tag, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums = args
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        let kind = match tag.trim() {
            "F" => FamilyKind::Friendship,
            "S" => FamilyKind::SplitSnk,
            "S+" => FamilyKind::SplitSnkPlus,
            "T2" => FamilyKind::Turan2,
            "SP" => FamilyKind::StarPlus,
            "K1T" => FamilyKind::K1JoinTriangles,
            "K" => FamilyKind::CompleteKn,
            "C" => FamilyKind::CycleCn,
            "P" => FamilyKind::PathPn,
            _ => return Err(bad()),
        };
        let needs_k = matches!(kind, FamilyKind::SplitSnk | FamilyKind::SplitSnkPlus);
        match (needs_k, nums.as_slice()) {
            (true, &[n, k]) => FamilySpec::with_k(kind, n, k),
            (false, &[n]) => FamilySpec::new(kind, n),
            _ => Err(bad()),
        }
    }
}

pub fn build(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let (n, k) = (spec.n, spec.k);
    let mut e: Vec<(usize, usize)> = Vec::new();
    match spec.kind {
        FamilyKind::Friendship => {
            for t in 0..(n - 1) / 2 {
                let (a, b) = (2 * t + 1, 2 * t + 2);
                e.extend([(0, a), (0, b), (a, b)]);
            }
            if n % 2 == 0 {
                e.push((0, n - 1));
            }
        }
        FamilyKind::SplitSnk | FamilyKind::SplitSnkPlus => {
            for a in 0..k {
                for b in a + 1..n {
                    e.push((a, b));
                }
            }
            if spec.kind == FamilyKind::SplitSnkPlus {
                e.push((k, k + 1));
            }
        }
        FamilyKind::Turan2 => {
            let a = n / 2;
            for u in 0..a {
                for v in a..n {
                    e.push((u, v));
                }
            }
        }
        FamilyKind::StarPlus => {
            e.extend((1..n).map(|v| (0, v)));
            e.push((1, 2));
        }
        FamilyKind::K1JoinTriangles => {
            e.extend((1..n).map(|v| (0, v)));
            for t in 0..(n - 1) / 3 {
                let b = 3 * t + 1;
                e.extend([(b, b + 1), (b, b + 2), (b + 1, b + 2)]);
            }
        }
        FamilyKind::CompleteKn => {
            for a in 0..n {
                e.extend((a + 1..n).map(|b| (a, b)));
            }
        }
        FamilyKind::CycleCn => e.extend((0..n).map(|i| (i, (i + 1) % n))),
        FamilyKind::PathPn => e.extend((1..n).map(|i| (i - 1, i))),
    }
    Graph::from_edges(n, &e)
}

/// q(F_n): the quadratic closed form for odd n, the largest root of
/// `x³ − (n+3)x² + 3nx − 2n + 4` for even n.
pub fn q_friendship_closed(n: usize) -> Result<f64> {
    if n < 3 {
        return Err(Error::InvalidFamily(format!("friendship graph needs n >= 3, got {n}")));
    }
    let x = n as f64;
    if n % 2 == 1 {
        return Ok((x + 2.0 + ((x - 2.0).powi(2) + 8.0).sqrt()) / 2.0);
    }
    let cubic = Polynomial::new(vec![-2.0 * x + 4.0, 3.0 * x, -(x + 3.0), 1.0])?;
    largest_real_root(&cubic, (x + 2.0 / x, x + 2.0 / (x - 1.0)))
}

/// q(S_{n,2}) = (n + 2 + √(n² + 4n − 12)) / 2.
pub fn q_snk2_closed(n: usize) -> Result<f64> {
    if n < 4 {
        return Err(Error::InvalidFamily(format!("S_(n,2) closed form needs n >= 4, got {n}")));
    }
    let x = n as f64;
    Ok((x + 2.0 + (x * x + 4.0 * x - 12.0).sqrt()) / 2.0)
}

/// q(K_1 ∨ ((n−1)/3) K_3) = (n + 4 + √((n − 4)² + 16)) / 2.
pub fn q_k1_join_triangles_closed(n: usize) -> Result<f64> {
    if n < 4 || n % 3 != 1 {
        return Err(Error::InvalidFamily(format!(
            "K_1 v ((n-1)/3)K_3 needs n = 1 mod 3 and n >= 4, got {n}"
        )));
    }
    let x = n as f64;
    Ok((x + 4.0 + ((x - 4.0).powi(2) + 16.0).sqrt()) / 2.0)
}

/// Open interval known to contain q(F_n): even n ≥ 4 or odd n ≥ 5.
pub fn friendship_bounds(n: usize) -> Result<(f64, f64)> {
    let x = n as f64;
    match n {
        n if n % 2 == 0 && n >= 4 => Ok((x + 2.0 / x, x + 2.0 / (x - 1.0))),
        n if n % 2 == 1 && n >= 5 => Ok((x + 2.0 / (x - 1.0), x + 2.0 / (x - 2.0))),
        _ => Err(Error::InvalidFamily(format!(
            "friendship bounds hold for even n >= 4 and odd n >= 5, got {n}"
        ))),
    }
}

/// Closed-form q for the families that have one.
pub fn q_closed(spec: &FamilySpec) -> Option<f64> {
    let (n, x) = (spec.n, spec.n as f64);
    match spec.kind {
        FamilyKind::Friendship => q_friendship_closed(n).ok(),
        FamilyKind::SplitSnk if spec.k == 1 => Some(x),
        FamilyKind::SplitSnk if spec.k == 2 => q_snk2_closed(n).ok(),
        FamilyKind::K1JoinTriangles => q_k1_join_triangles_closed(n).ok(),
        FamilyKind::Turan2 => Some(x),
        FamilyKind::CompleteKn => Some(2.0 * (x - 1.0)),
        FamilyKind::CycleCn => Some(4.0),
        FamilyKind::PathPn if n >= 2 => Some(2.0 + 2.0 * (std::f64::consts::PI / x).cos()),
        _ => None,
    }
}

/// n + 2 − 4/(n + 1), a strict lower bound on q(S_{n,2}) for n ≥ 4.
pub fn snk2_lower_bound(n: usize) -> f64 {
    let x = n as f64;
    x + 2.0 - 4.0 / (x + 1.0)
}
