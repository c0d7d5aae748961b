use std::fmt;

use serde::{Deserialize, Serialize};

/// Whether a failing check should fail the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    /// An invariant the library depends on.
    Assert,
    /// A recorded comparison between competing readings of a formula.
    Audit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    /// Audit outcome: the readings disagree; detail says which one holds.
    Discrepancy,
    Skipped,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Pass => "PASS",
            Outcome::Fail => "FAIL",
            Outcome::Discrepancy => "DISCREPANCY",
            Outcome::Skipped => "SKIP",
        })
    }
}

/// Result of a single named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub kind: CheckKind,
    pub outcome: Outcome,
    pub detail: String,
}

impl Check {
    pub fn assert(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Assert,
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            detail: detail.into(),
        }
    }

    pub fn audit(name: impl Into<String>, agrees: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Audit,
            outcome: if agrees { Outcome::Pass } else { Outcome::Discrepancy },
            detail: detail.into(),
        }
    }

    pub fn skipped(name: impl Into<String>, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            kind: CheckKind::Assert,
            outcome: Outcome::Skipped,
            detail: detail.into(),
        }
    }

    /// Only asserted failures count.
    pub fn is_failure(&self) -> bool {
        self.kind == CheckKind::Assert && self.outcome == Outcome::Fail
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match (self.kind, self.outcome) {
            (CheckKind::Audit, Outcome::Pass) => "AUDIT-OK",
            (CheckKind::Audit, _) => "AUDIT",
            (_, o) => return write!(f, "[{o}] {}: {}", self.name, self.detail),
        };
        write!(f, "[{tag}] {}: {}", self.name, self.detail)
    }
}
