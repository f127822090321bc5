use std::fmt;

use serde::Serialize;

/// Outcome of a single machine check, with a witness on failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl Verdict {
    pub fn pass(check: impl Into<String>) -> Self {
        Verdict { check: check.into(), pass: true, witness: None }
    }

    pub fn fail(check: impl Into<String>, witness: impl Into<String>) -> Self {
        Verdict { check: check.into(), pass: false, witness: Some(witness.into()) }
    }

    /// Pass unless a witness is supplied.
    pub fn from_witness(check: impl Into<String>, witness: Option<String>) -> Self {
        match witness {
            None => Verdict::pass(check),
            Some(w) => Verdict::fail(check, w),
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        let note = note.into();
        self.witness = Some(match self.witness {
            Some(w) => format!("{w}; {note}"),
            None => note,
        });
        self
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", if self.pass { "pass" } else { "FAIL" }, self.check)?;
        match &self.witness {
            Some(w) => write!(f, "  ({w})"),
            None => Ok(()),
        }
    }
}

pub fn all_pass(vs: &[Verdict]) -> bool {
    vs.iter().all(|v| v.pass)
}
