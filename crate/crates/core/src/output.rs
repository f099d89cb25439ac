//! Flat records for CSV and JSON output.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::solver::{TableCell, Variant};

pub const CSV_HEADER: [&str; 10] = ["class", "b", "coeff_mag", "target", "alpha", "gamma", "variant", "rho", "residual", "status"];

/// One `(b, target)` row. Field order is the column order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub class: String,
    pub b: f64,
    pub coeff_mag: f64,
    pub target: String,
    pub alpha: Option<f64>,
    pub gamma: Option<f64>,
    pub variant: String,
    pub rho: Option<f64>,
    pub residual: Option<f64>,
    pub status: String,
}

/// Rounds to 15 significant digits, the precision the records are printed
/// with, so that CSV and JSON carry the same value.
pub fn quantize(x: f64) -> f64 {
    format_num(x).parse().unwrap_or(x)
}

pub fn format_num(x: f64) -> String {
    format!("{x:.14e}")
}

pub fn status_of(outcome: &Result<crate::solver::RadiusResult, Error>, extrapolated: bool) -> String {
    match outcome {
        Err(e) => format!("ERROR:{}", e.kind()),
        Ok(_) if extrapolated => "EXTRAPOLATION".into(),
        Ok(_) => "OK".into(),
    }
}

impl OutputRecord {
    pub fn from_cell(cell: &TableCell, variant: Variant) -> Self {
        let ok = cell.outcome.as_ref().ok();
        OutputRecord {
            class: cell.spec.class_id().name().into(),
            b: quantize(cell.spec.b()),
            coeff_mag: quantize(cell.spec.coeff_mag()),
            target: cell.target.family().name().into(),
            alpha: cell.target.alpha().map(quantize),
            gamma: cell.target.gamma().map(quantize),
            variant: variant.name().into(),
            rho: ok.map(|r| quantize(r.rho)),
            residual: ok.map(|r| quantize(r.residual)),
            status: status_of(&cell.outcome, cell.extrapolated),
        }
    }

    pub fn is_failure(&self) -> bool {
        self.status.starts_with("ERROR")
    }

    fn csv_fields(&self) -> [String; 10] {
        let opt = |v: Option<f64>| v.map(format_num).unwrap_or_default();
        [
            self.class.clone(),
            format_num(self.b),
            format_num(self.coeff_mag),
            self.target.clone(),
            opt(self.alpha),
            opt(self.gamma),
            self.variant.clone(),
            opt(self.rho),
            opt(self.residual),
            self.status.clone(),
        ]
    }
}

pub fn write_csv<W: std::io::Write>(out: W, records: &[OutputRecord]) -> csv::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: std::io::Read>(input: R) -> csv::Result<Vec<OutputRecord>> {
    csv::Reader::from_reader(input).deserialize().collect()
}

/// JSON array, one record per line.
pub fn write_json<W: std::io::Write>(mut out: W, records: &[OutputRecord]) -> std::io::Result<()> {
    writeln!(out, "[")?;
    for (i, r) in records.iter().enumerate() {
        let sep = if i + 1 < records.len() { "," } else { "" };
        writeln!(out, "  {}{sep}", serde_json::to_string(r)?)?;
    }
    writeln!(out, "]")
}

pub fn read_json(input: &str) -> serde_json::Result<Vec<OutputRecord>> {
    serde_json::from_str(input)
}
