use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
    /// Precondition checks downgrade a failure to `PreconditionFailed`.
    pub precondition: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Verified,
    PreconditionFailed(String),
    Refuted(String),
}

impl Conclusion {
    pub fn label(&self) -> &'static str {
        match self {
            Conclusion::Verified => "Verified",
            Conclusion::PreconditionFailed(_) => "PreconditionFailed",
            Conclusion::Refuted(_) => "Refuted",
        }
    }

    pub fn witness(&self) -> Option<&str> {
        match self {
            Conclusion::Verified => None,
            Conclusion::PreconditionFailed(w) | Conclusion::Refuted(w) => Some(w),
        }
    }
}

impl fmt::Display for Conclusion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.witness() {
            None => write!(f, "{}", self.label()),
            Some(w) => write!(f, "{}({w})", self.label()),
        }
    }
}

/// Record of one verifier run. The conclusion is derived from the checks:
/// any failed precondition wins, then any failed claim check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifierReport {
    pub claim: String,
    pub instance: String,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl VerifierReport {
    pub fn new(claim: &str, instance: String) -> Self {
        VerifierReport { claim: claim.into(), instance, checks: Vec::new(), notes: Vec::new() }
    }

    pub fn precondition(&mut self, name: &str, passed: bool, witness: Option<String>) -> bool {
        self.checks.push(Check { name: name.into(), passed, witness, precondition: true });
        passed
    }

    pub fn check(&mut self, name: &str, passed: bool, witness: Option<String>) -> bool {
        self.checks.push(Check { name: name.into(), passed, witness, precondition: false });
        passed
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn conclusion(&self) -> Conclusion {
        let describe = |c: &Check| match &c.witness {
            Some(w) => format!("{}: {w}", c.name),
            None => c.name.clone(),
        };
        if let Some(c) = self.checks.iter().find(|c| c.precondition && !c.passed) {
            return Conclusion::PreconditionFailed(describe(c));
        }
        if let Some(c) = self.checks.iter().find(|c| !c.passed) {
            return Conclusion::Refuted(describe(c));
        }
        Conclusion::Verified
    }

    pub fn is_verified(&self) -> bool {
        self.conclusion() == Conclusion::Verified
    }

    /// Merges another report's checks under a name prefix.
    pub fn absorb(&mut self, prefix: &str, other: VerifierReport) {
        for mut c in other.checks {
            c.name = format!("{prefix}.{}", c.name);
            self.checks.push(c);
        }
        self.notes.extend(other.notes.into_iter().map(|n| format!("{prefix}: {n}")));
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("claim: {}\ninstance: {}\n", self.claim, self.instance);
        for c in &self.checks {
            let kind = if c.precondition { "precondition" } else { "check" };
            let status = if c.passed { "pass" } else { "FAIL" };
            out.push_str(&format!("{kind} {}: {status}", c.name));
            if let Some(w) = &c.witness {
                out.push_str(&format!(" (witness: {w})"));
            }
            out.push('\n');
        }
        for n in &self.notes {
            out.push_str(&format!("note: {n}\n"));
        }
        out.push_str(&format!("verdict: {}\n", self.conclusion()));
        out
    }

    /// Flat `key = value` lines in a fixed order.
    pub fn to_key_values(&self) -> String {
        let mut out = format!("verify.claim = {}\nverify.instance = {}\n", self.claim, self.instance);
        for c in &self.checks {
            out.push_str(&format!("verify.check.{} = {}\n", c.name, if c.passed { "pass" } else { "fail" }));
            if let Some(w) = &c.witness {
                out.push_str(&format!("verify.check.{}.witness = {w}\n", c.name));
            }
        }
        for (i, n) in self.notes.iter().enumerate() {
            out.push_str(&format!("verify.note.{i} = {n}\n"));
        }
        let conclusion = self.conclusion();
        out.push_str(&format!("verdict = {}\n", conclusion.label()));
        if let Some(w) = conclusion.witness() {
            out.push_str(&format!("verdict.witness = {w}\n"));
        }
        out
    }
}
