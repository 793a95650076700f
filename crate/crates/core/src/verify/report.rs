use std::fmt;
use std::time::Duration;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIP",
        })
    }
}

/// A counterexample: the inputs and both sides of the violated identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub inputs: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub id: String,
    pub status: Status,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl Check {
    pub fn skipped(id: impl Into<String>, note: impl Into<String>) -> Self {
        Check {
            id: id.into(),
            status: Status::Skipped,
            cases: 0,
            failures: 0,
            note: Some(note.into()),
            witness: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn is_fail(&self) -> bool {
        self.status == Status::Fail
    }
}

/// Accumulates cases of one check, keeping the first counterexample.
pub struct CheckBuilder {
    id: String,
    cases: usize,
    failures: usize,
    note: Option<String>,
    witness: Option<Witness>,
    clock: Stopwatch,
}

impl CheckBuilder {
    pub fn new(id: impl Into<String>) -> Self {
        CheckBuilder {
            id: id.into(),
            cases: 0,
            failures: 0,
            note: None,
            witness: None,
            clock: Stopwatch::start(),
        }
    }

    /// Records one case; `witness` is only evaluated for the first failure.
    pub fn case(&mut self, ok: bool, witness: impl FnOnce() -> Witness) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
    }

    /// Compares two displayable values.
    pub fn expect_eq<T: PartialEq + fmt::Display>(
        &mut self,
        inputs: impl FnOnce() -> Vec<String>,
        lhs: &T,
        rhs: &T,
    ) {
        self.case(lhs == rhs, || Witness {
            inputs: inputs(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }

    /// Records a failure with a message in place of the two sides.
    pub fn error(&mut self, inputs: Vec<String>, message: String) {
        self.case(false, || Witness {
            inputs,
            lhs: message,
            rhs: String::new(),
        });
    }

    pub fn note(&mut self, note: impl Into<String>) {
        self.note = Some(note.into());
    }

    pub fn finish(self) -> Check {
        Check {
            id: self.id,
            status: if self.failures == 0 {
                Status::Pass
            } else {
                Status::Fail
            },
            cases: self.cases,
            failures: self.failures,
            note: self.note,
            witness: self.witness,
            elapsed: self.clock.elapsed(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub spec: String,
    pub field: String,
    pub seed: u64,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(Check::is_fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> + '_ {
        self.checks.iter().filter(|c| c.is_fail())
    }

    pub fn get(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }
}

/// Wall-clock timer; reads zero where no clock is available.
pub(crate) struct Stopwatch {
    #[cfg(not(target_arch = "wasm32"))]
    start: std::time::Instant,
}

impl Stopwatch {
    pub(crate) fn start() -> Self {
        Stopwatch {
            #[cfg(not(target_arch = "wasm32"))]
            start: std::time::Instant::now(),
        }
    }

    pub(crate) fn elapsed(&self) -> Duration {
        #[cfg(not(target_arch = "wasm32"))]
        {
            self.start.elapsed()
        }
        #[cfg(target_arch = "wasm32")]
        {
            Duration::ZERO
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_witness_is_kept() {
        let mut b = CheckBuilder::new("x");
        b.expect_eq(|| vec!["a".into()], &1, &1);
        b.expect_eq(|| vec!["b".into()], &1, &2);
        b.expect_eq(|| vec!["c".into()], &3, &2);
        let c = b.finish();
        assert_eq!(c.status, Status::Fail);
        assert_eq!((c.cases, c.failures), (3, 2));
        assert_eq!(c.witness.unwrap().inputs, vec!["b".to_string()]);
    }

    #[test]
    fn empty_check_passes() {
        assert_eq!(CheckBuilder::new("x").finish().status, Status::Pass);
    }
}
