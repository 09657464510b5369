//! Suite configuration (plain `key = value` lines) and the suite runner.

use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use super::claims::*;
use super::report::{write_report, ReportFormat};
use super::{Certificate, ClaimId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteConfig {
    pub claims: Vec<ClaimId>,
    pub thm1_n: RangeInclusive<usize>,
    pub thm2_n: RangeInclusive<usize>,
    pub prop1_n: RangeInclusive<usize>,
    pub prop2_n: RangeInclusive<usize>,
    /// Orders outside `n ≡ 1 (mod 3)` are skipped.
    pub prop3_n: RangeInclusive<usize>,
    pub mantel_n: RangeInclusive<usize>,
    pub starplus_n: RangeInclusive<usize>,
    pub bounds_n: RangeInclusive<usize>,
    pub erdos_gallai_n: RangeInclusive<usize>,
    pub erdos_gallai_k: RangeInclusive<usize>,
    pub enum_n: RangeInclusive<usize>,
    pub conj_n: RangeInclusive<usize>,
    pub conj_k: RangeInclusive<usize>,
    pub shards: usize,
    pub csv: Option<PathBuf>,
    pub json: Option<PathBuf>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            claims: ClaimId::ALL.to_vec(),
            thm1_n: 4..=9,
            thm2_n: 5..=9,
            prop1_n: 4..=50,
            prop2_n: 4..=50,
            prop3_n: 7..=49,
            mantel_n: 3..=7,
            starplus_n: 5..=50,
            bounds_n: 7..=7,
            erdos_gallai_n: 1..=7,
            erdos_gallai_k: 1..=5,
            enum_n: 1..=8,
            conj_n: 6..=9,
            conj_k: 2..=2,
            shards: 1,
            csv: None,
            json: None,
        }
    }
}

fn parse_range(key: &str, v: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Config(format!("{key}: expected N or A..B, got {v:?}"));
    let num = |s: &str| s.trim().parse::<usize>().map_err(|_| bad());
    match v.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            let r = num(a)?..=num(b)?;
            if r.is_empty() {
                return Err(bad());
            }
            Ok(r)
        }
        None => {
            let x = num(v)?;
            Ok(x..=x)
        }
    }
}

impl SuiteConfig {
    /// `"default"` or a path to a config file.
    pub fn load(source: &str) -> Result<Self> {
        if source == "default" {
            return Ok(SuiteConfig::default());
        }
        let text = std::fs::read_to_string(source)
            .map_err(|e| Error::Config(format!("cannot read suite file {source}: {e}")))?;
        SuiteConfig::parse(&text, Path::new(source).parent())
    }

    /// Parses `key = value` lines over the defaults; `#` starts a comment.
    /// Relative output paths resolve against `base`.
    pub fn parse(text: &str, base: Option<&Path>) -> Result<Self> {
        let mut cfg = SuiteConfig::default();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Config(format!("line {}: expected key = value", lineno + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let path = |v: &str| {
                let p = PathBuf::from(v);
                match base {
                    Some(b) if p.is_relative() => b.join(p),
                    _ => p,
                }
            };
            match key {
                "claims" => {
                    cfg.claims = value
                        .split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(str::parse)
                        .collect::<Result<_>>()?
                }
                "thm1.n" => cfg.thm1_n = parse_range(key, value)?,
                "thm2.n" => cfg.thm2_n = parse_range(key, value)?,
                "prop1.n" => cfg.prop1_n = parse_range(key, value)?,
                "prop2.n" => cfg.prop2_n = parse_range(key, value)?,
                "prop3.n" => cfg.prop3_n = parse_range(key, value)?,
                "mantel.n" => cfg.mantel_n = parse_range(key, value)?,
                "starplus.n" => cfg.starplus_n = parse_range(key, value)?,
                "bounds.n" => cfg.bounds_n = parse_range(key, value)?,
                "erdos_gallai.n" => cfg.erdos_gallai_n = parse_range(key, value)?,
                "erdos_gallai.k" => cfg.erdos_gallai_k = parse_range(key, value)?,
                "enum.n" => cfg.enum_n = parse_range(key, value)?,
                "conj.n" => cfg.conj_n = parse_range(key, value)?,
                "conj.k" => cfg.conj_k = parse_range(key, value)?,
                "shards" => {
                    cfg.shards = value
                        .parse()
                        .ok()
                        .filter(|&s: &usize| s >= 1)
                        .ok_or_else(|| Error::Config(format!("shards: expected a positive integer, got {value:?}")))?
                }
                "output.csv" => cfg.csv = Some(path(value)),
                "output.json" => cfg.json = Some(path(value)),
                other => return Err(Error::Config(format!("line {}: unknown key {other:?}", lineno + 1))),
            }
        }
        Ok(cfg)
    }
}

#[derive(Clone, Copy, Debug)]
enum Task {
    Thm1(usize),
    Thm2(usize),
    Prop1(usize),
    Prop2(usize),
    Prop3(usize),
    Mantel(usize),
    StarPlus(usize),
    Bounds(usize, ClaimId),
    ErdosGallai(usize, usize),
    Enum(usize),
    Conj(ConjectureKind, usize, usize),
}

fn tasks(cfg: &SuiteConfig) -> Vec<Task> {
    let mut out = Vec::new();
    for &claim in &cfg.claims {
        match claim {
            ClaimId::Thm1 => out.extend(cfg.thm1_n.clone().map(Task::Thm1)),
            ClaimId::Thm2 => out.extend(cfg.thm2_n.clone().map(Task::Thm2)),
            ClaimId::Prop1 => out.extend(cfg.prop1_n.clone().map(Task::Prop1)),
            ClaimId::Prop2 => out.extend(cfg.prop2_n.clone().map(Task::Prop2)),
            ClaimId::Prop3Formula => out.extend(cfg.prop3_n.clone().filter(|n| n % 3 == 1).map(Task::Prop3)),
            ClaimId::MantelQ => out.extend(cfg.mantel_n.clone().map(Task::Mantel)),
            ClaimId::StarPlusQ => out.extend(cfg.starplus_n.clone().map(Task::StarPlus)),
            ClaimId::BoundMerris | ClaimId::BoundDas => {
                out.extend(cfg.bounds_n.clone().map(|n| Task::Bounds(n, claim)))
            }
            ClaimId::ErdosGallai => {
                for n in cfg.erdos_gallai_n.clone() {
                    out.extend(cfg.erdos_gallai_k.clone().map(|k| Task::ErdosGallai(n, k)));
                }
            }
            ClaimId::EnumCount => out.extend(cfg.enum_n.clone().map(Task::Enum)),
            ClaimId::Conj1 | ClaimId::Conj2 | ClaimId::Conj3 => {
                let kind = match claim {
                    ClaimId::Conj1 => ConjectureKind::OddQ,
                    ClaimId::Conj2 => ConjectureKind::EvenQ,
                    _ => ConjectureKind::EvenMu,
                };
                for k in cfg.conj_k.clone() {
                    out.extend(cfg.conj_n.clone().map(|n| Task::Conj(kind, n, k)));
                }
            }
        }
    }
    out
}

fn run_task(task: Task, opts: &VerifyOptions) -> Result<Certificate> {
    match task {
        Task::Thm1(n) => verify_theorem_c4_with(n, opts),
        Task::Thm2(n) => verify_theorem_c5_with(n, opts),
        Task::Prop1(n) => verify_prop1(n),
        Task::Prop2(n) => verify_prop2(n),
        Task::Prop3(n) => verify_prop3_formula(n),
        Task::Mantel(n) => verify_mantel_q(n),
        Task::StarPlus(n) => verify_star_plus(n),
        Task::Bounds(n, which) => {
            let (merris, das) = verify_bound_dominance(n)?;
            Ok(if which == ClaimId::BoundMerris { merris } else { das })
        }
        Task::ErdosGallai(n, k) => verify_erdos_gallai(n, k),
        Task::Enum(n) => verify_enumeration_count(n, opts.shards.max(2)),
        Task::Conj(kind, n, k) => probe_conjecture_with(kind, n, k, opts),
    }
}

/// Runs every configured claim instance, writes the configured reports and
/// returns the certificates in configuration order.
pub fn run_suite(cfg: &SuiteConfig) -> Result<Vec<Certificate>> {
    let opts = VerifyOptions { shards: cfg.shards };
    let certs = tasks(cfg)
        .into_par_iter()
        .map(|t| run_task(t, &opts))
        .collect::<Result<Vec<_>>>()?;
    if let Some(p) = &cfg.csv {
        write_report(p, &certs, ReportFormat::Csv)?;
    }
    if let Some(p) = &cfg.json {
        write_report(p, &certs, ReportFormat::Json)?;
    }
    Ok(certs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_config() {
        let cfg = SuiteConfig::parse(
            "# comment\nclaims = PROP1, THM1\nthm1.n = 4..6\nprop1.n = 5\nshards = 3\noutput.csv = out.csv\n",
            Some(Path::new("/tmp/x")),
        )
        .unwrap();
        assert_eq!(cfg.claims, vec![ClaimId::Prop1, ClaimId::Thm1]);
        assert_eq!(cfg.thm1_n, 4..=6);
        assert_eq!(cfg.prop1_n, 5..=5);
        assert_eq!(cfg.shards, 3);
        assert_eq!(cfg.csv, Some(PathBuf::from("/tmp/x/out.csv")));
    }

    #[test]
    fn parse_errors() {
        assert!(SuiteConfig::parse("nonsense", None).is_err());
        assert!(SuiteConfig::parse("claims = THM9", None).is_err());
        assert!(SuiteConfig::parse("thm1.n = 9..4", None).is_err());
        assert!(SuiteConfig::parse("shards = 0", None).is_err());
        assert!(SuiteConfig::parse("colour = red", None).is_err());
    }

    #[test]
    fn prop1_only_gives_47_certificates() {
        let cfg = SuiteConfig {
            claims: vec![ClaimId::Prop1],
            ..SuiteConfig::default()
        };
        let certs = run_suite(&cfg).unwrap();
        assert_eq!(certs.len(), 47);
        assert!(certs.iter().all(|c| c.holds()));
    }

    #[test]
    fn beyond_desk_limit_is_refused() {
        let cfg = SuiteConfig::parse("claims = THM1\nthm1.n = 13", None).unwrap();
        assert!(matches!(run_suite(&cfg), Err(Error::Infeasible(_))));
    }
}
