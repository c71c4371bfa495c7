//! BoundReport: the per-claim grid of lhs/rhs values with a calibrated
//! constant and a three-way verdict, serialized as CSV.

use std::fmt;

/// Every asymptotic claim is tested as calibrate-and-freeze: the constant
/// comes from the grid points up to CALIBRATION_CUTOFF and the inequality
/// must hold with SAFETY_FACTOR slack at the rest.
pub const CALIBRATION_CUTOFF: u64 = 100_000;
pub const SAFETY_FACTOR: f64 = 2.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    HoldsCalibrated,
    Violated,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Holds => "Holds",
            Verdict::HoldsCalibrated => "HoldsCalibrated",
            Verdict::Violated => "Violated",
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct ReportRow {
    pub x: u64,
    pub lhs: f64,
    pub rhs: f64,
    pub ratio: f64,
}

#[derive(Clone, Debug)]
pub struct BoundReport {
    pub claim_id: String,
    pub rows: Vec<ReportRow>,
    pub calibrated_constant: f64,
    pub verdict: Verdict,
}

impl BoundReport {
    /// Assemble a report from (x, lhs, rhs) triples.
    ///
    /// Holds iff every ratio <= 1. Otherwise the constant is the max ratio
    /// over the calibration points (x <= 1e5, falling back to the two
    /// smallest x when the grid starts higher), and the claim holds
    /// calibrated iff every ratio stays within SAFETY_FACTOR times it.
    pub fn from_rows(claim_id: impl Into<String>, data: &[(u64, f64, f64)]) -> BoundReport {
        let mut rows: Vec<ReportRow> = data
            .iter()
            .map(|&(x, lhs, rhs)| ReportRow {
                x,
                lhs,
                rhs,
                ratio: lhs / rhs,
            })
            .collect();
        rows.sort_by_key(|r| r.x);

        let calib: Vec<&ReportRow> = {
            let small: Vec<&ReportRow> =
                rows.iter().filter(|r| r.x <= CALIBRATION_CUTOFF).collect();
            if small.is_empty() {
                rows.iter().take(2).collect()
            } else {
                small
            }
        };
        let constant = calib.iter().fold(0.0f64, |m, r| m.max(r.ratio));

        let verdict = if rows.iter().all(|r| r.ratio <= 1.0) {
            Verdict::Holds
        } else if rows.iter().all(|r| r.ratio <= SAFETY_FACTOR * constant) {
            Verdict::HoldsCalibrated
        } else {
            Verdict::Violated
        };

        BoundReport {
            claim_id: claim_id.into(),
            rows,
            calibrated_constant: constant,
            verdict,
        }
    }

    pub fn max_ratio(&self) -> f64 {
        self.rows
            .iter()
            .fold(f64::NEG_INFINITY, |m, r| m.max(r.ratio))
    }

    pub fn csv_header() -> &'static str {
        "claim_id,x,lhs,rhs,ratio,constant,verdict\n"
    }

    pub fn csv_rows(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            out.push_str(&format!(
                "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{}\n",
                self.claim_id, r.x, r.lhs, r.rhs, r.ratio, self.calibrated_constant, self.verdict
            ));
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from(Self::csv_header());
        out.push_str(&self.csv_rows());
        out
    }
}

/// Serialize several reports into one CSV (one header, grouped rows).
pub fn reports_to_csv(reports: &[BoundReport]) -> String {
    let mut out = String::from(BoundReport::csv_header());
    for r in reports {
        out.push_str(&r.csv_rows());
    }
    out
}

/// Worst verdict across reports, for exit-code mapping.
pub fn combined_verdict(reports: &[BoundReport]) -> Verdict {
    let mut v = Verdict::Holds;
    for r in reports {
        v = match (v, r.verdict) {
            (_, Verdict::Violated) | (Verdict::Violated, _) => Verdict::Violated,
            (_, Verdict::HoldsCalibrated) | (Verdict::HoldsCalibrated, _) => {
                Verdict::HoldsCalibrated
            }
            _ => Verdict::Holds,
        };
    }
    v
}
