use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::exactlin::{format_scalar, Elem, Vector};

/// First failing basis multi-index of an identity, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub index: Vec<usize>,
    pub lhs: Vector,
    pub rhs: Vector,
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let fmt = |v: &Vector| v.iter().map(format_scalar).collect::<Vec<_>>();
        let mut st = s.serialize_struct("Witness", 3)?;
        st.serialize_field("index", &self.index)?;
        st.serialize_field("lhs", &fmt(&self.lhs))?;
        st.serialize_field("rhs", &fmt(&self.rhs))?;
        st.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckEntry {
    pub axiom: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckEntry {
    pub fn pass(axiom: impl Into<String>) -> Self {
        CheckEntry { axiom: axiom.into(), passed: true, witness: None }
    }

    pub fn fail(axiom: impl Into<String>, witness: Witness) -> Self {
        CheckEntry { axiom: axiom.into(), passed: false, witness: Some(witness) }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn entry(&self, axiom: &str) -> Option<&CheckEntry> {
        self.checks.iter().find(|c| c.axiom == axiom)
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.checks.push(entry);
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
        self.notes.extend(other.notes);
    }

    /// Appends `other` with every axiom name prefixed by `prefix: `.
    pub fn extend_prefixed(&mut self, prefix: &str, other: CheckReport) {
        for mut c in other.checks {
            c.axiom = format!("{prefix}: {}", c.axiom);
            self.checks.push(c);
        }
        for n in other.notes {
            self.notes.push(format!("{prefix}: {n}"));
        }
    }

    /// Adds an entry comparing two elements directly.
    pub fn compare(&mut self, axiom: impl Into<String>, lhs: &Elem, rhs: &Elem) {
        self.push(compare_entry(axiom, &[], lhs, rhs));
    }

    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!("{} checks, {} failed", self.checks.len(), failed)
    }
}

fn compare_entry(axiom: impl Into<String>, index: &[usize], lhs: &Elem, rhs: &Elem) -> CheckEntry {
    if lhs == rhs {
        CheckEntry::pass(axiom)
    } else {
        CheckEntry::fail(axiom, Witness { index: index.to_vec(), lhs: lhs.to_dense(), rhs: rhs.to_dense() })
    }
}

fn unflatten(mut flat: usize, shape: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; shape.len()];
    for s in (0..shape.len()).rev() {
        idx[s] = flat % shape[s];
        flat /= shape[s];
    }
    idx
}

/// Checks `lhs(idx) == rhs(idx)` for every basis multi-index in `shape`;
/// the witness is the lexicographically first failure regardless of how the
/// sweep is scheduled.
pub fn sweep<F>(axiom: impl Into<String>, shape: &[usize], f: F) -> CheckEntry
where
    F: Fn(&[usize]) -> (Elem, Elem) + Sync,
{
    let total: usize = shape.iter().product();
    let found = (0..total).into_par_iter().find_first(|&flat| {
        let (l, r) = f(&unflatten(flat, shape));
        l != r
    });
    match found {
        None => CheckEntry::pass(axiom),
        Some(flat) => {
            let idx = unflatten(flat, shape);
            let (l, r) = f(&idx);
            compare_entry(axiom, &idx, &l, &r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    #[test]
    fn sweep_reports_first_failure() {
        let entry = sweep("toy", &[3, 4], |idx| {
            let bad = idx[0] * 4 + idx[1] >= 6;
            (Elem::scalar(int(idx[0] as i64)), Elem::scalar(int(if bad { 99 } else { idx[0] as i64 })))
        });
        assert!(!entry.passed);
        assert_eq!(entry.witness.unwrap().index, vec![1, 2]);
    }

    #[test]
    fn passing_sweep_has_no_witness() {
        let entry = sweep("ok", &[2, 2], |_| (Elem::scalar(int(1)), Elem::scalar(int(1))));
        assert!(entry.passed && entry.witness.is_none());
    }
}
