//! Verification records and their text and JSON renderings.

use std::fmt::Write as _;

use forge_core::linalg::{Feasibility, Subspace};
use forge_core::{Matrix, Scalar, Verdict};
use serde::Serialize;

use crate::doc::RawMatrix;
use crate::export::raw_matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    /// Hypotheses unmet; does not affect the exit code.
    #[serde(rename = "N/A")]
    NotApplicable,
    /// An existence search proved that no solution exists.
    #[serde(rename = "NONE")]
    Absent,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::NotApplicable => "N/A",
            Status::Absent => "NONE",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub name: String,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub name: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: RawMatrix,
}

/// `rank < augmented_rank` of the stated system proves infeasibility; for
/// bijectivity tests `rank < rows` or `rank < cols`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub system: String,
    pub rows: usize,
    pub cols: usize,
    pub rank: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub augmented_rank: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Record {
    pub command: String,
    pub subject: String,
    /// The construction or criterion the verdict rests on.
    pub route: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub items: Vec<Item>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub certificates: Vec<Certificate>,
}

impl Record {
    pub fn new(command: &str, subject: &str, route: &str) -> Self {
        Record {
            command: command.into(),
            subject: subject.into(),
            route: route.into(),
            status: Status::Pass,
            items: Vec::new(),
            notes: Vec::new(),
            witnesses: Vec::new(),
            certificates: Vec::new(),
        }
    }

    pub fn not_applicable(command: &str, subject: &str, route: &str, why: impl Into<String>) -> Self {
        let mut r = Record::new(command, subject, route);
        r.status = Status::NotApplicable;
        r.notes.push(why.into());
        r
    }

    /// Records an item; a false item turns the record into a failure.
    pub fn item(&mut self, name: &str, ok: bool) -> &mut Self {
        self.items.push(Item { name: name.into(), ok });
        if !ok {
            self.status = Status::Fail;
        }
        self
    }

    pub fn verdict(&mut self, prefix: &str, v: &Verdict) -> &mut Self {
        for (name, ok) in &v.checked {
            let full = if prefix.is_empty() { name.clone() } else { format!("{prefix}.{name}") };
            self.item(&full, *ok);
        }
        self
    }

    pub fn note(&mut self, s: impl Into<String>) -> &mut Self {
        self.notes.push(s.into());
        self
    }

    pub fn witness<S: Scalar>(&mut self, name: &str, m: &Matrix<S>) -> &mut Self {
        self.witnesses.push(Witness { name: name.into(), rows: m.rows(), cols: m.cols(), entries: raw_matrix(m) });
        self
    }

    pub fn vector_witness<S: Scalar>(&mut self, name: &str, v: &[S]) -> &mut Self {
        self.witness(name, &Matrix::from_columns(v.len(), &[v.to_vec()]))
    }

    pub fn subspace_witness<S: Scalar>(&mut self, name: &str, s: &Subspace<S>) -> &mut Self {
        self.witness(name, &s.basis)
    }

    pub fn certificate(&mut self, c: Certificate) -> &mut Self {
        self.certificates.push(c);
        self
    }

    /// Records the outcome of a feasibility search and returns the solution.
    pub fn feasibility<S: Scalar>(
        &mut self,
        system: &str,
        equations: usize,
        unknowns: usize,
        f: Feasibility<S>,
    ) -> Option<Vec<S>> {
        match f {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible { rank, augmented_rank } => {
                self.certificate(Certificate {
                    system: system.into(),
                    rows: equations,
                    cols: unknowns,
                    rank,
                    augmented_rank: Some(augmented_rank),
                });
                None
            }
        }
    }

    pub fn fail(&mut self) -> &mut Self {
        self.status = Status::Fail;
        self
    }

    /// Marks an honest negative answer to an existence question.
    pub fn absent(&mut self) -> &mut Self {
        if self.status == Status::Pass {
            self.status = Status::Absent;
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub source: String,
    pub field: String,
    pub records: Vec<Record>,
}

impl Report {
    pub fn failed(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn exit_code(&self) -> i32 {
        i32::from(self.failed())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "source: {}  field: {}", self.source, self.field);
        for r in &self.records {
            let _ = writeln!(out, "[{}] {} {} ({})", r.status.label(), r.command, r.subject, r.route);
            for i in &r.items {
                let _ = writeln!(out, "    {} {}", if i.ok { "ok  " } else { "FAIL" }, i.name);
            }
            for n in &r.notes {
                let _ = writeln!(out, "    note: {n}");
            }
            for c in &r.certificates {
                let aug = c.augmented_rank.map(|a| format!(", augmented rank {a}")).unwrap_or_default();
                let _ = writeln!(out, "    certificate: {} ({}x{}) rank {}{aug}", c.system, c.rows, c.cols, c.rank);
            }
            for w in &r.witnesses {
                let _ = writeln!(out, "    witness {} ({}x{}):", w.name, w.rows, w.cols);
                for row in &w.entries {
                    let _ = writeln!(out, "      [{}]", row.join(" "));
                }
            }
        }
        let count = |s: Status| self.records.iter().filter(|r| r.status == s).count();
        let _ = writeln!(
            out,
            "summary: {} pass, {} fail, {} not applicable, {} none",
            count(Status::Pass),
            count(Status::Fail),
            count(Status::NotApplicable),
            count(Status::Absent)
        );
        out
    }
}
