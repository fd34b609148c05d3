use std::collections::BTreeMap;

use serde::Serialize;

/// One violated law together with a minimal witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Name of the violated law, e.g. `"associativity"` or `"pentagon"`.
    pub law: String,
    /// Witnessing object or morphism ids, rendered deterministically.
    pub witness: String,
}

/// Outcome of a validator or a check suite.
///
/// `ok` holds iff `violations` is empty. `counts` carries named totals
/// (instances swept, structures enumerated) so exhaustive checks can report
/// how much ground they covered.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub counts: BTreeMap<String, u64>,
}

impl Report {
    pub fn ok() -> Self {
        Report {
            ok: true,
            violations: Vec::new(),
            counts: BTreeMap::new(),
        }
    }

    pub fn violation(law: impl Into<String>, witness: impl Into<String>) -> Self {
        let mut r = Report::ok();
        r.push(law, witness);
        r
    }

    pub fn push(&mut self, law: impl Into<String>, witness: impl Into<String>) {
        self.violations.push(Violation {
            law: law.into(),
            witness: witness.into(),
        });
        self.ok = false;
    }

    pub fn count(&mut self, key: impl Into<String>, n: u64) {
        *self.counts.entry(key.into()).or_insert(0) += n;
    }

    pub fn with_count(mut self, key: impl Into<String>, n: u64) -> Self {
        self.count(key, n);
        self
    }

    /// Folds another report into this one, keeping all violations and
    /// summing counts.
    pub fn merge(&mut self, other: Report) {
        self.ok &= other.ok;
        self.violations.extend(other.violations);
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }
}
