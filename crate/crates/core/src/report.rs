//! Structured verdicts for identity and duality checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::lattice::Point;
use crate::set::TruncatedSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    HypothesisNotMet,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::HypothesisNotMet => "hypothesis not met",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Point>,
    pub detail: String,
}

impl Check {
    pub fn pass(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::Pass,
            witness: None,
            detail: detail.into(),
        }
    }

    pub fn fail(
        name: impl Into<String>,
        witness: Option<Point>,
        detail: impl Into<String>,
    ) -> Self {
        Check {
            name: name.into(),
            status: Status::Fail,
            witness,
            detail: detail.into(),
        }
    }

    pub fn not_met(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: Status::HypothesisNotMet,
            witness: None,
            detail: detail.into(),
        }
    }

    /// Passes iff `lhs = rhs`; on failure the witness is the lexicographically
    /// first point in exactly one of them.
    pub fn set_equal(
        name: impl Into<String>,
        lhs: &TruncatedSet,
        rhs: &TruncatedSet,
    ) -> Result<Self> {
        let name = name.into();
        Ok(match lhs.first_difference(rhs)? {
            None => Check::pass(name, "equal"),
            Some(w) => {
                let side = if lhs.contains(&w) { "left" } else { "right" };
                Check::fail(
                    name,
                    Some(w.clone()),
                    format!("{w} only in the {side} side"),
                )
            }
        })
    }

    /// Passes iff the two verdicts agree.
    pub fn agree(name: impl Into<String>, lhs: bool, rhs: bool) -> Self {
        let detail = format!("left {lhs}, right {rhs}");
        if lhs == rhs {
            Check::pass(name, detail)
        } else {
            Check::fail(name, None, detail)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub identity: String,
    pub status: Status,
    pub checks: Vec<Check>,
    /// Inputs and intermediate sets, keyed by name.
    pub objects: BTreeMap<String, TruncatedSet>,
}

impl Report {
    pub fn new(identity: impl Into<String>) -> Self {
        Report {
            identity: identity.into(),
            status: Status::HypothesisNotMet,
            checks: Vec::new(),
            objects: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
        self.status = aggregate(&self.checks);
    }

    pub fn object(&mut self, name: &str, set: &TruncatedSet) {
        self.objects.insert(name.to_string(), set.clone());
    }

    pub fn passed(&self) -> bool {
        self.status != Status::Fail
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail)
    }
}

/// Fail if any check failed; otherwise pass if any check ran.
fn aggregate(checks: &[Check]) -> Status {
    if checks.iter().any(|c| c.status == Status::Fail) {
        Status::Fail
    } else if checks.iter().any(|c| c.status == Status::Pass) {
        Status::Pass
    } else {
        Status::HypothesisNotMet
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}: {}", self.identity, self.status)?;
        for c in &self.checks {
            write!(f, "  {} [{}] {}", c.name, c.status, c.detail)?;
            if let Some(w) = &c.witness {
                write!(f, " (witness {w})")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
