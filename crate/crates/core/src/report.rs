//! Structured verification results.

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

/// The offending element and both reduced sides of a failed identity,
/// rendered in the canonical text grammar.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub element: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckEntry {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<f64>,
}

impl CheckEntry {
    pub fn pass(id: impl Into<String>) -> Self {
        CheckEntry {
            id: id.into(),
            params: BTreeMap::new(),
            status: Status::Pass,
            witness: None,
            note: None,
            elapsed_ms: None,
        }
    }

    pub fn fail(id: impl Into<String>, witness: Witness) -> Self {
        CheckEntry { status: Status::Fail, witness: Some(witness), ..CheckEntry::pass(id) }
    }

    pub fn skipped(id: impl Into<String>, reason: impl Into<String>) -> Self {
        CheckEntry { status: Status::Skipped, note: Some(reason.into()), ..CheckEntry::pass(id) }
    }

    /// Pass if `lhs == rhs`, otherwise fail with the rendered witness.
    pub fn compare<T: PartialEq>(
        id: impl Into<String>,
        element: impl Into<String>,
        lhs: &T,
        rhs: &T,
        render: impl Fn(&T) -> String,
    ) -> Self {
        if lhs == rhs {
            CheckEntry::pass(id)
        } else {
            CheckEntry::fail(id, Witness { element: element.into(), lhs: render(lhs), rhs: render(rhs) })
        }
    }

    /// Like [`CheckEntry::compare`], but an error while computing either
    /// side is itself a failure whose witness carries the error text.
    pub fn compare_result<T: PartialEq, E: std::fmt::Display>(
        id: impl Into<String>,
        element: impl Into<String>,
        sides: Result<(T, T), E>,
        render: impl Fn(&T) -> String,
    ) -> Self {
        match sides {
            Ok((l, r)) => CheckEntry::compare(id, element, &l, &r, render),
            Err(e) => CheckEntry::fail(id, Witness { element: element.into(), lhs: format!("error: {e}"), rhs: String::new() }),
        }
    }

    pub fn with_param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn with_params(mut self, params: &BTreeMap<String, String>) -> Self {
        for (k, v) in params {
            self.params.insert(k.clone(), v.clone());
        }
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// An ordered collection of check entries.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub entries: Vec<CheckEntry>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, entry: CheckEntry) {
        self.entries.push(entry);
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    /// Attach the same parameters to every entry.
    pub fn with_params(mut self, params: &BTreeMap<String, String>) -> Self {
        for e in &mut self.entries {
            for (k, v) in params {
                e.params.entry(k.clone()).or_insert_with(|| v.clone());
            }
        }
        self
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn count(&self, status: Status) -> usize {
        self.entries.iter().filter(|e| e.status == status).count()
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }
}

/// Parameter map helper: `params(&[("mu", "1"), ("nu", "-1")])`.
pub fn params(kv: &[(&str, String)]) -> BTreeMap<String, String> {
    kv.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

/// Accumulates many instances of one identity into a single entry that
/// keeps the first failing witness.
#[derive(Debug)]
pub struct Tally {
    id: String,
    instances: usize,
    failure: Option<Witness>,
}

impl Tally {
    pub fn new(id: impl Into<String>) -> Self {
        Tally { id: id.into(), instances: 0, failure: None }
    }

    pub fn record<T: PartialEq, E: std::fmt::Display>(
        &mut self,
        element: impl FnOnce() -> String,
        sides: Result<(T, T), E>,
        render: impl Fn(&T) -> String,
    ) {
        self.instances += 1;
        if self.failure.is_some() {
            return;
        }
        match sides {
            Ok((l, r)) if l == r => {}
            Ok((l, r)) => self.failure = Some(Witness { element: element(), lhs: render(&l), rhs: render(&r) }),
            Err(e) => self.failure = Some(Witness { element: element(), lhs: format!("error: {e}"), rhs: String::new() }),
        }
    }

    pub fn instances(&self) -> usize {
        self.instances
    }

    pub fn finish(self) -> CheckEntry {
        let note = format!("{} instances", self.instances);
        match self.failure {
            None => CheckEntry::pass(self.id),
            Some(w) => CheckEntry::fail(self.id, w),
        }
        .with_note(note)
    }
}
