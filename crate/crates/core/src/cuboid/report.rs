//! Per-claim verification outcomes.
//!
//! Each verification procedure returns a [`VerificationReport`]: a named
//! bundle of claims, each identified by a stable id string so downstream
//! tooling can key on individual results. Reports render either as
//! human-readable text or as tab-separated records, both sorted by claim
//! id so repeated runs are byte-identical.

use std::fmt;
use std::time::Duration;

/// Outcome of a single claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ClaimOutcome {
    Pass,
    /// The claim as recorded contains a defect (a transcription slip in
    /// the source material), but a corrected statement, derived
    /// mechanically and documented in the witness, verifies exactly.
    PassWithCorrections,
    Fail,
}

impl ClaimOutcome {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimOutcome::Pass => "pass",
            ClaimOutcome::PassWithCorrections => "pass-with-corrections",
            ClaimOutcome::Fail => "fail",
        }
    }
}

impl fmt::Display for ClaimOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One verified claim: a stable id, the outcome, and a witness string
/// (canonical polynomial text, cofactor lists, or a short explanation).
#[derive(Clone, Debug)]
pub struct Claim {
    pub id: String,
    pub outcome: ClaimOutcome,
    pub witness: String,
}

/// A named group of claims with its wall-clock cost.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    name: String,
    claims: Vec<Claim>,
    elapsed: Duration,
}

impl VerificationReport {
    pub fn new(name: impl Into<String>) -> Self {
        VerificationReport {
            name: name.into(),
            claims: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn push(&mut self, id: impl Into<String>, outcome: ClaimOutcome, witness: impl Into<String>) {
        self.claims.push(Claim {
            id: id.into(),
            outcome,
            witness: witness.into(),
        });
    }

    pub fn pass(&mut self, id: impl Into<String>, witness: impl Into<String>) {
        self.push(id, ClaimOutcome::Pass, witness);
    }

    pub fn set_elapsed(&mut self, elapsed: Duration) {
        self.elapsed = elapsed;
    }

    /// Records `pass` when `ok` holds and `fail` otherwise, with the same
    /// witness text either way.
    pub fn check(&mut self, id: impl Into<String>, ok: bool, witness: impl Into<String>) {
        self.push(
            id,
            if ok { ClaimOutcome::Pass } else { ClaimOutcome::Fail },
            witness,
        );
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Claims sorted by id.
    pub fn claims(&self) -> Vec<&Claim> {
        let mut sorted: Vec<&Claim> = self.claims.iter().collect();
        sorted.sort_by(|a, b| a.id.cmp(&b.id));
        sorted
    }

    pub fn elapsed(&self) -> Duration {
        self.elapsed
    }

    /// Overall status: `fail` if any claim failed, otherwise
    /// `pass-with-corrections` if any claim needed one, otherwise `pass`.
    pub fn status(&self) -> ClaimOutcome {
        self.claims
            .iter()
            .map(|c| c.outcome)
            .max()
            .map(|worst| match worst {
                ClaimOutcome::Fail => ClaimOutcome::Fail,
                other => other,
            })
            .unwrap_or(ClaimOutcome::Pass)
    }

    /// True unless some claim failed outright.
    pub fn passed(&self) -> bool {
        self.status() != ClaimOutcome::Fail
    }

    /// Human-readable rendering, one line per claim.
    pub fn render_text(&self) -> String {
        let mut out = format!(
            "== {} [{}] ({:.3}s)\n",
            self.name,
            self.status(),
            self.elapsed.as_secs_f64()
        );
        for claim in self.claims() {
            out.push_str(&format!(
                "  {:<32} {:<21} {}\n",
                claim.id, claim.outcome, claim.witness
            ));
        }
        out
    }

    /// Machine-readable rendering: `id<TAB>status<TAB>witness` per claim.
    pub fn render_records(&self) -> String {
        let mut out = String::new();
        for claim in self.claims() {
            out.push_str(&format!("{}\t{}\t{}\n", claim.id, claim.outcome, claim.witness));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_aggregates_worst_outcome() {
        let mut r = VerificationReport::new("demo");
        assert_eq!(r.status(), ClaimOutcome::Pass);
        r.pass("a/one", "ok");
        assert_eq!(r.status(), ClaimOutcome::Pass);
        r.push("a/two", ClaimOutcome::PassWithCorrections, "fixed");
        assert_eq!(r.status(), ClaimOutcome::PassWithCorrections);
        assert!(r.passed());
        r.check("a/three", false, "broken");
        assert_eq!(r.status(), ClaimOutcome::Fail);
        assert!(!r.passed());
    }

    #[test]
    fn renderings_sort_by_claim_id() {
        let mut r = VerificationReport::new("demo");
        r.pass("b/later", "second");
        r.pass("a/earlier", "first");
        let records = r.render_records();
        let lines: Vec<&str> = records.lines().collect();
        assert_eq!(lines[0], "a/earlier\tpass\tfirst");
        assert_eq!(lines[1], "b/later\tpass\tsecond");
        let text = r.render_text();
        assert!(text.contains("== demo [pass]"));
        let a_pos = text.find("a/earlier").unwrap();
        let b_pos = text.find("b/later").unwrap();
        assert!(a_pos < b_pos);
    }
}
