//! Check outcomes and the certificate report.

use crate::matrix::{SparseMat, Witness};
use crate::rootdata::Family;
use serde::Serialize;
use std::fmt;
use std::time::{Duration, Instant};

/// Outcome of a single identity check. Passing iff `witness` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub witness: Option<String>,
}

impl Check {
    pub fn pass(name: impl Into<String>) -> Check {
        Check { name: name.into(), witness: None }
    }

    pub fn fail(name: impl Into<String>, witness: impl Into<String>) -> Check {
        Check { name: name.into(), witness: Some(witness.into()) }
    }

    pub fn from_witness(name: impl Into<String>, w: Option<Witness>) -> Check {
        Check { name: name.into(), witness: w.map(|w| w.to_string()) }
    }

    /// Passes when `lhs == rhs`; otherwise records the first differing entry.
    pub fn equal(name: impl Into<String>, lhs: &SparseMat, rhs: &SparseMat) -> Check {
        Check::from_witness(name, lhs.first_difference(rhs))
    }

    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }

    /// Folds several checks into one named check, keeping the first failure.
    pub fn all(name: impl Into<String>, checks: impl IntoIterator<Item = Check>) -> Check {
        let name = name.into();
        for c in checks {
            if let Some(w) = c.witness {
                return Check::fail(name, format!("{}: {}", c.name, w));
            }
        }
        Check::pass(name)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.witness {
            None => write!(f, "pass  {}", self.name),
            Some(w) => write!(f, "FAIL  {}  [{}]", self.name, w),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub check: String,
    pub family: Family,
    pub rank: usize,
    pub status: Status,
    pub witness: Option<String>,
    pub seconds: f64,
}

/// Ordered list of certificate outcomes, sorted by `(check, family, rank)`.
#[derive(Clone, Debug, Default, Serialize)]
pub struct CertificateReport {
    pub entries: Vec<ReportEntry>,
}

impl CertificateReport {
    pub fn push(&mut self, family: Family, rank: usize, check: Check, elapsed: Duration) {
        self.entries.push(ReportEntry {
            status: if check.passed() { Status::Pass } else { Status::Fail },
            check: check.name,
            family,
            rank,
            witness: check.witness,
            seconds: elapsed.as_secs_f64(),
        });
    }

    /// Runs `f`, timing it, and records every check it returns.
    pub fn run<F>(&mut self, family: Family, rank: usize, f: F)
    where
        F: FnOnce() -> Vec<Check>,
    {
        let t = Instant::now();
        let checks = f();
        let dt = t.elapsed();
        for c in checks {
            self.push(family, rank, c, dt);
        }
    }

    pub fn merge(&mut self, other: CertificateReport) {
        self.entries.extend(other.entries);
    }

    pub fn sort(&mut self) {
        self.entries
            .sort_by(|a, b| (&a.check, a.family, a.rank).cmp(&(&b.check, b.family, b.rank)));
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    /// JSON form without timings, stable across runs.
    pub fn to_json_deterministic(&self) -> serde_json::Value {
        let rows: Vec<serde_json::Value> = self
            .entries
            .iter()
            .map(|e| {
                serde_json::json!({
                    "check": e.check,
                    "family": e.family,
                    "rank": e.rank,
                    "status": e.status,
                    "witness": e.witness,
                })
            })
            .collect();
        serde_json::Value::Array(rows)
    }
}

impl fmt::Display for CertificateReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
            };
            write!(f, "{:4}  {}{}  {}  ({:.3}s)", tag, e.family, e.rank, e.check, e.seconds)?;
            if let Some(w) = &e.witness {
                write!(f, "  [{}]", w)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
