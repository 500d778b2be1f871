//! Per-axiom pass/fail bookkeeping.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub axiom: String,
    pub detail: String,
}

/// Result of an axiom suite: every checked axiom with its outcome.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verdict {
    pub checked: Vec<(String, bool)>,
    pub violations: Vec<Violation>,
}

impl Verdict {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn check(&mut self, axiom: &str, ok: bool, detail: impl FnOnce() -> String) {
        self.checked.push((axiom.to_string(), ok));
        if !ok {
            self.violations.push(Violation { axiom: axiom.to_string(), detail: detail() });
        }
    }

    /// Records a check with no extra detail on failure.
    pub fn expect(&mut self, axiom: &str, ok: bool) {
        self.check(axiom, ok, || format!("{axiom} does not hold"));
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violated(&self, axiom: &str) -> bool {
        self.violations.iter().any(|v| v.axiom == axiom)
    }

    pub fn violated_axioms(&self) -> Vec<&str> {
        self.violations.iter().map(|v| v.axiom.as_str()).collect()
    }

    /// Absorbs another verdict, prefixing its axiom names.
    pub fn merge(&mut self, prefix: &str, other: Verdict) {
        let name = |a: &str| if prefix.is_empty() { a.to_string() } else { format!("{prefix}.{a}") };
        for (a, ok) in other.checked {
            self.checked.push((name(&a), ok));
        }
        for v in other.violations {
            self.violations.push(Violation { axiom: name(&v.axiom), detail: v.detail });
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "all {} axioms hold", self.checked.len())
        } else {
            let names: Vec<&str> = self.violated_axioms();
            write!(f, "violated: {}", names.join(", "))
        }
    }
}
