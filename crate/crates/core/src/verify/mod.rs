//! Claim verification: each check produces a [`Certificate`] recording the
//! verdict, the witness graphs (graph6) and the numbers behind it.

mod claims;
pub mod report;
pub mod suite;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

pub use claims::*;
pub use suite::{run_suite, SuiteConfig};

/// Agreement required between closed forms and the eigensolver.
pub const VERIFY_TOL: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClaimId {
    #[serde(rename = "THM1")]
    Thm1,
    #[serde(rename = "THM2")]
    Thm2,
    #[serde(rename = "PROP1")]
    Prop1,
    #[serde(rename = "PROP2")]
    Prop2,
    #[serde(rename = "PROP3-FORMULA")]
    Prop3Formula,
    #[serde(rename = "MANTEL-Q")]
    MantelQ,
    #[serde(rename = "STARPLUS-Q")]
    StarPlusQ,
    #[serde(rename = "BOUND-MERRIS")]
    BoundMerris,
    #[serde(rename = "BOUND-DAS")]
    BoundDas,
    #[serde(rename = "ERDOS-GALLAI")]
    ErdosGallai,
    #[serde(rename = "ENUM-COUNT")]
    EnumCount,
    #[serde(rename = "CONJ1")]
    Conj1,
    #[serde(rename = "CONJ2")]
    Conj2,
    #[serde(rename = "CONJ3")]
    Conj3,
}

impl ClaimId {
    pub const ALL: [ClaimId; 14] = [
        ClaimId::Thm1,
        ClaimId::Thm2,
        ClaimId::Prop1,
        ClaimId::Prop2,
        ClaimId::Prop3Formula,
        ClaimId::MantelQ,
        ClaimId::StarPlusQ,
        ClaimId::BoundMerris,
        ClaimId::BoundDas,
        ClaimId::ErdosGallai,
        ClaimId::EnumCount,
        ClaimId::Conj1,
        ClaimId::Conj2,
        ClaimId::Conj3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::Thm1 => "THM1",
            ClaimId::Thm2 => "THM2",
            ClaimId::Prop1 => "PROP1",
            ClaimId::Prop2 => "PROP2",
            ClaimId::Prop3Formula => "PROP3-FORMULA",
            ClaimId::MantelQ => "MANTEL-Q",
            ClaimId::StarPlusQ => "STARPLUS-Q",
            ClaimId::BoundMerris => "BOUND-MERRIS",
            ClaimId::BoundDas => "BOUND-DAS",
            ClaimId::ErdosGallai => "ERDOS-GALLAI",
            ClaimId::EnumCount => "ENUM-COUNT",
            ClaimId::Conj1 => "CONJ1",
            ClaimId::Conj2 => "CONJ2",
            ClaimId::Conj3 => "CONJ3",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let t = s.trim().to_ascii_uppercase();
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == t)
            .ok_or_else(|| Error::Config(format!("unknown claim id {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "HOLDS")]
    Holds,
    #[serde(rename = "FAILS")]
    Fails,
    #[serde(rename = "REPORT_ONLY")]
    ReportOnly,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "HOLDS",
            Verdict::Fails => "FAILS",
            Verdict::ReportOnly => "REPORT_ONLY",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct RunStats {
    pub graphs_examined: u64,
    pub spectra_evaluated: u64,
    pub wall_ms: f64,
}

/// Machine-readable record of one verified claim instance.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Certificate {
    pub claim: ClaimId,
    pub n: usize,
    pub k: Option<usize>,
    pub verdict: Verdict,
    /// graph6 strings of maximizers, tie witnesses or counterexamples.
    pub witnesses: Vec<String>,
    pub max_value: Option<f64>,
    pub closed_form: Option<f64>,
    pub gap: Option<f64>,
    pub note: String,
    pub stats: RunStats,
}

impl Certificate {
    pub(crate) fn new(claim: ClaimId, n: usize, k: Option<usize>) -> Self {
        Certificate {
            claim,
            n,
            k,
            verdict: Verdict::Holds,
            witnesses: Vec::new(),
            max_value: None,
            closed_form: None,
            gap: None,
            note: String::new(),
            stats: RunStats::default(),
        }
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}
