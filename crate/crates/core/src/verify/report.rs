//! CSV and JSON renderings of certificate lists.

use std::path::Path;
use std::str::FromStr;

use super::claims::fmt_sig;
use super::Certificate;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

impl FromStr for ReportFormat {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            other => Err(Error::Config(format!("unknown report format {other:?}"))),
        }
    }
}

pub const CSV_HEADER: [&str; 11] = [
    "claim",
    "n",
    "k",
    "verdict",
    "max_value",
    "closed_form",
    "gap",
    "witnesses",
    "note",
    "graphs_examined",
    "wall_ms",
];

/// Index of the first timing column; everything before it is reproducible.
pub const CSV_TIMING_FROM: usize = 10;

fn opt(x: Option<f64>) -> String {
    x.map(fmt_sig).unwrap_or_default()
}

pub fn csv_row(c: &Certificate) -> Vec<String> {
    vec![
        c.claim.to_string(),
        c.n.to_string(),
        c.k.map(|k| k.to_string()).unwrap_or_default(),
        c.verdict.to_string(),
        opt(c.max_value),
        opt(c.closed_form),
        opt(c.gap),
        c.witnesses.join(";"),
        c.note.clone(),
        c.stats.graphs_examined.to_string(),
        format!("{:.3}", c.stats.wall_ms),
    ]
}

pub fn to_csv(certs: &[Certificate]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| Error::Io(e.to_string());
    w.write_record(CSV_HEADER).map_err(io)?;
    for c in certs {
        w.write_record(csv_row(c)).map_err(io)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

pub fn to_json(certs: &[Certificate]) -> Result<String> {
    serde_json::to_string_pretty(certs).map_err(|e| Error::Io(e.to_string()))
}

pub fn render(certs: &[Certificate], format: ReportFormat) -> Result<String> {
    match format {
        ReportFormat::Csv => to_csv(certs),
        ReportFormat::Json => to_json(certs),
    }
}

pub fn write_report(path: &Path, certs: &[Certificate], format: ReportFormat) -> Result<()> {
    std::fs::write(path, render(certs, format)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_prop1, verify_theorem_c5};

    #[test]
    fn csv_quotes_fields_with_commas() {
        let c = verify_theorem_c5(5).unwrap();
        let text = to_csv(&[c]).unwrap();
        let mut rd = csv::Reader::from_reader(text.as_bytes());
        let row = rd.records().next().unwrap().unwrap();
        assert_eq!(&row[0], "THM2");
        assert_eq!(&row[3], "HOLDS");
        assert_eq!(row[7].split(';').count(), 2);
        assert!(row[8].contains(','));
    }

    #[test]
    fn json_round_trips() {
        let certs = vec![verify_prop1(7).unwrap()];
        let back: Vec<Certificate> = serde_json::from_str(&to_json(&certs).unwrap()).unwrap();
        assert_eq!(back, certs);
    }
}
