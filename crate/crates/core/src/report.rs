//! Structured run reports and exact matrix comparison.

use std::fmt::Write as _;

use serde::Serialize;

use crate::algebra::{Matrix, RfMatrix};
use crate::error::{structural, Result};
use crate::fixtures::MatrixFixture;
use crate::verdict::Verdict;

#[derive(Clone, Debug, Serialize)]
pub struct Fact {
    pub key: String,
    pub value: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Section {
    pub title: String,
    pub verdicts: Vec<Verdict>,
    pub facts: Vec<Fact>,
    pub matrices: Vec<MatrixFixture>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section { title: title.into(), ..Default::default() }
    }

    pub fn fact(&mut self, key: impl Into<String>, value: impl ToString) {
        self.facts.push(Fact { key: key.into(), value: value.to_string() });
    }

    pub fn verdict(&mut self, v: Verdict) {
        self.verdicts.push(v);
    }

    pub fn pass(&self) -> bool {
        crate::verdict::all_pass(&self.verdicts)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct TransitionReport {
    pub example: String,
    pub settings: Vec<Fact>,
    pub sections: Vec<Section>,
    pub pass: bool,
}

impl TransitionReport {
    pub fn new(example: impl Into<String>, settings: Vec<Fact>, sections: Vec<Section>) -> Self {
        let pass = sections.iter().all(Section::pass);
        TransitionReport { example: example.into(), settings, sections, pass }
    }

    pub fn failures(&self) -> Vec<(&str, &Verdict)> {
        self.sections
            .iter()
            .flat_map(|s| s.verdicts.iter().filter(|v| !v.pass).map(move |v| (s.title.as_str(), v)))
            .collect()
    }

    pub fn find(&self, section: &str, check: &str) -> Option<&Verdict> {
        self.sections.iter().filter(|s| s.title == section).flat_map(|s| &s.verdicts).find(|v| v.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "== {} ==", self.example);
        for f in &self.settings {
            let _ = writeln!(out, "{}: {}", f.key, f.value);
        }
        for s in &self.sections {
            let _ = writeln!(out, "\n-- {} --", s.title);
            for v in &s.verdicts {
                let mark = if v.pass { "pass" } else { "FAIL" };
                match &v.witness {
                    Some(w) => {
                        let _ = writeln!(out, "  [{mark}] {}  ({w})", v.check);
                    }
                    None => {
                        let _ = writeln!(out, "  [{mark}] {}", v.check);
                    }
                }
            }
            for f in &s.facts {
                let _ = writeln!(out, "  {}: {}", f.key, f.value);
            }
            for m in &s.matrices {
                out.push_str(&render_matrix(m));
            }
        }
        let _ = writeln!(out, "\n{}", if self.pass { "ALL CHECKS PASS" } else { "SOME CHECKS FAIL" });
        out
    }
}

/// Column-aligned matrix with basis labels, rows and columns in basis order.
pub fn render_matrix(m: &MatrixFixture) -> String {
    let mut out = format!("  {}⋆ on [{}]\n", m.element, m.basis.join(", "));
    let width = m.rows.iter().flatten().map(|e| e.chars().count()).max().unwrap_or(1);
    for row in &m.rows {
        let cells: Vec<String> = row.iter().map(|e| format!("{e:>width$}")).collect();
        let _ = writeln!(out, "    [{}]", cells.join("  "));
    }
    out
}

/// Serialize a matrix in the fixture layout.
pub fn dump_matrix(
    element: &str,
    m: &RfMatrix,
    basis: &[String],
    generators: &[String],
    variables: &[String],
    note: &str,
) -> MatrixFixture {
    MatrixFixture {
        note: note.into(),
        convention: None,
        variables: variables.to_vec(),
        generators: generators.to_vec(),
        basis: basis.to_vec(),
        element: element.into(),
        rows: m.rows().iter().map(|r| r.iter().map(|x| x.format_with(variables)).collect()).collect(),
    }
}

pub fn dump_scalar_matrix(
    element: &str,
    m: &Matrix,
    basis: &[String],
    generators: &[String],
    note: &str,
) -> MatrixFixture {
    dump_matrix(element, &RfMatrix::from_scalar(m, 0), basis, generators, &[], note)
}

/// One differing entry, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryDiff {
    pub row: usize,
    pub col: usize,
    pub left: String,
    pub right: String,
}

/// Entrywise exact comparison of two matrices over the same variables.
pub fn diff_matrices(a: &RfMatrix, b: &RfMatrix, variables: &[String]) -> Result<Vec<EntryDiff>> {
    if a.dim() != b.dim() || a.nvars() != b.nvars() {
        return Err(structural(format!(
            "shape mismatch: {}×{} over {} variables vs {}×{} over {}",
            a.dim(),
            a.dim(),
            a.nvars(),
            b.dim(),
            b.dim(),
            b.nvars()
        )));
    }
    let n = a.dim();
    Ok((0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .filter(|&(i, j)| a.get(i, j) != b.get(i, j))
        .map(|(i, j)| EntryDiff {
            row: i,
            col: j,
            left: a.get(i, j).format_with(variables),
            right: b.get(i, j).format_with(variables),
        })
        .collect())
}

/// Compare two serialized matrices; the variable lists and bases must agree.
pub fn diff_fixtures(a: &MatrixFixture, b: &MatrixFixture) -> Result<Vec<EntryDiff>> {
    if a.variables != b.variables {
        return Err(structural(format!("variables differ: {:?} vs {:?}", a.variables, b.variables)));
    }
    if a.basis != b.basis {
        return Err(structural("bases differ"));
    }
    diff_matrices(&a.to_matrix()?, &b.to_matrix()?, &a.variables)
}

/// Verdict for an exact comparison, listing every differing entry (1-based).
pub fn matrix_verdict(check: &str, diffs: &[EntryDiff]) -> Verdict {
    Verdict::from_witness(
        check,
        (!diffs.is_empty()).then(|| {
            diffs
                .iter()
                .map(|d| format!("({},{}): {} vs {}", d.row + 1, d.col + 1, d.left, d.right))
                .collect::<Vec<_>>()
                .join("; ")
        }),
    )
}
