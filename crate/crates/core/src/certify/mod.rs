//! Irreducibility and factor-count certificates for `f(X, g(X, Y))`.
//!
//! Every check either issues a [`Certificate`] or returns a [`Rejection`]
//! carrying the inequality that failed. Errors are reserved for malformed
//! input.

mod rules;
mod search;

pub use rules::{
    check_cor1, check_cor2, check_cor3, check_cor4, check_cor5, check_cor6, check_theorem1, DivisorChoice,
    MultiDivisorChoice,
};
pub use search::{best_certificate, SearchOptions};

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::uni::Degree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Rule {
    Thm1Strong,
    Thm1Wider,
    Cor1,
    Cor2,
    Cor3,
    Cor4,
    Cor5Strong,
    Cor5Wider,
    Cor6,
}

impl Rule {
    /// Rules whose conclusion is irreducibility rather than a factor bound.
    pub fn concludes_irreducible(self) -> bool {
        matches!(self, Rule::Cor2 | Rule::Cor3 | Rule::Cor4 | Rule::Cor6)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    FactorBound(u64),
    Irreducible,
}

impl Verdict {
    pub fn bound(self) -> u64 {
        match self {
            Verdict::FactorBound(k) => k,
            Verdict::Irreducible => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Claim {
    FIrreducibleOverKX,
    PPrimeElement,
    /// The Ω values of `a_m/d_1` and `b_n/d_2` used for the bound.
    OmegaValues,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    CertifiedByCor2,
    VerifiedByOracle,
    VerifiedByEisenstein,
    VerifiedByFactorization,
    CallerAsserted,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Assumption {
    pub claim: Claim,
    pub provenance: Provenance,
}

impl Assumption {
    pub fn new(claim: Claim, provenance: Provenance) -> Self {
        Assumption { claim, provenance }
    }
}

/// One strict integer inequality `lhs > rhs`; `MinusInfinity` sits below
/// every integer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceEntry {
    pub name: String,
    pub lhs: Degree,
    pub rhs: Degree,
}

impl TraceEntry {
    pub fn new(name: impl Into<String>, lhs: Degree, rhs: Degree) -> Self {
        TraceEntry {
            name: name.into(),
            lhs,
            rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.lhs > self.rhs
    }
}

impl fmt::Display for TraceEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = if self.holds() { "holds" } else { "fails" };
        write!(f, "{}: {} > {} {mark}", self.name, self.lhs, self.rhs)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "wire::Certificate", try_from = "wire::Certificate")]
pub struct Certificate {
    pub rule: Rule,
    pub verdict: Verdict,
    pub trace: Vec<TraceEntry>,
    pub assumptions: Vec<Assumption>,
    /// Canonical text of the inputs, keyed by symbol.
    pub inputs: BTreeMap<String, String>,
}

impl Certificate {
    pub fn bound(&self) -> u64 {
        self.verdict.bound()
    }

    /// Re-evaluates the trace and the rule/verdict pairing.
    pub fn validate(&self) -> std::result::Result<(), String> {
        if let Some(e) = self.trace.iter().find(|e| !e.holds()) {
            return Err(format!("trace entry does not hold: {e}"));
        }
        match self.verdict {
            Verdict::Irreducible if !self.rule.concludes_irreducible() => {
                Err(format!("rule {} cannot conclude irreducibility", self.rule))
            }
            Verdict::FactorBound(0) => Err("factor bound must be positive".into()),
            _ => Ok(()),
        }
    }

    pub fn caller_asserted(&self) -> impl Iterator<Item = &Assumption> {
        self.assumptions.iter().filter(|a| a.provenance == Provenance::CallerAsserted)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "wire::Rejection", try_from = "wire::Rejection")]
pub struct Rejection {
    /// The rule that was attempted last.
    pub rule: Rule,
    pub reason: String,
    pub trace: Vec<TraceEntry>,
}

impl Rejection {
    /// The first inequality in the trace that fails, if any.
    pub fn failing(&self) -> Option<&TraceEntry> {
        self.trace.iter().find(|e| !e.holds())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Certified(Certificate),
    NotApplicable(Rejection),
}

impl Outcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            Outcome::Certified(c) => Some(c),
            Outcome::NotApplicable(_) => None,
        }
    }

    pub fn rejection(&self) -> Option<&Rejection> {
        match self {
            Outcome::Certified(_) => None,
            Outcome::NotApplicable(r) => Some(r),
        }
    }

    pub fn is_certified(&self) -> bool {
        matches!(self, Outcome::Certified(_))
    }

    pub fn to_json(&self) -> String {
        match self {
            Outcome::Certified(c) => c.to_json(),
            Outcome::NotApplicable(r) => serde_json::to_string(r).expect("rejection serializes"),
        }
    }

    pub(crate) fn relabel(self, map: impl Fn(Rule) -> Rule) -> Outcome {
        match self {
            Outcome::Certified(mut c) => {
                c.rule = map(c.rule);
                Outcome::Certified(c)
            }
            Outcome::NotApplicable(mut r) => {
                r.rule = map(r.rule);
                Outcome::NotApplicable(r)
            }
        }
    }
}

/// Flat string-valued forms used for JSON, so integers print as decimal strings.
mod wire {
    use std::collections::BTreeMap;

    use serde::{Deserialize, Serialize};

    use super::{Assumption, Rule, TraceEntry, Verdict};
    use crate::uni::Degree;

    #[derive(Clone, Serialize, Deserialize)]
    pub struct Trace {
        name: String,
        lhs: String,
        rel: String,
        rhs: String,
    }

    #[derive(Clone, Serialize, Deserialize)]
    pub struct Certificate {
        rule: Rule,
        verdict: String,
        bound: String,
        trace: Vec<Trace>,
        assumptions: Vec<Assumption>,
        inputs: BTreeMap<String, String>,
    }

    #[derive(Clone, Serialize, Deserialize)]
    pub struct Rejection {
        rule: Rule,
        verdict: String,
        reason: String,
        trace: Vec<Trace>,
    }

    fn degree_text(d: Degree) -> String {
        d.to_string()
    }

    fn parse_degree(s: &str) -> Result<Degree, String> {
        if s == "-inf" {
            return Ok(Degree::MinusInfinity);
        }
        s.parse::<u64>()
            .map(Degree::Finite)
            .map_err(|_| format!("bad integer `{s}`"))
    }

    impl From<TraceEntry> for Trace {
        fn from(e: TraceEntry) -> Self {
            Trace {
                name: e.name,
                lhs: degree_text(e.lhs),
                rel: ">".into(),
                rhs: degree_text(e.rhs),
            }
        }
    }

    impl TryFrom<Trace> for TraceEntry {
        type Error = String;

        fn try_from(t: Trace) -> Result<Self, String> {
            if t.rel != ">" {
                return Err(format!("unsupported relation `{}`", t.rel));
            }
            Ok(TraceEntry {
                name: t.name,
                lhs: parse_degree(&t.lhs)?,
                rhs: parse_degree(&t.rhs)?,
            })
        }
    }

    impl From<super::Certificate> for Certificate {
        fn from(c: super::Certificate) -> Self {
            let verdict = match c.verdict {
                Verdict::FactorBound(_) => "FactorBound",
                Verdict::Irreducible => "Irreducible",
            };
            Certificate {
                rule: c.rule,
                verdict: verdict.into(),
                bound: c.verdict.bound().to_string(),
                trace: c.trace.into_iter().map(Trace::from).collect(),
                assumptions: c.assumptions,
                inputs: c.inputs,
            }
        }
    }

    impl TryFrom<Certificate> for super::Certificate {
        type Error = String;

        fn try_from(w: Certificate) -> Result<Self, String> {
            let bound: u64 = w.bound.parse().map_err(|_| format!("bad bound `{}`", w.bound))?;
            let verdict = match w.verdict.as_str() {
                "FactorBound" => Verdict::FactorBound(bound),
                "Irreducible" if bound == 1 => Verdict::Irreducible,
                "Irreducible" => return Err("Irreducible verdict with bound other than 1".into()),
                other => return Err(format!("unknown verdict `{other}`")),
            };
            Ok(super::Certificate {
                rule: w.rule,
                verdict,
                trace: w.trace.into_iter().map(TraceEntry::try_from).collect::<Result<_, _>>()?,
                assumptions: w.assumptions,
                inputs: w.inputs,
            })
        }
    }

    impl From<super::Rejection> for Rejection {
        fn from(r: super::Rejection) -> Self {
            Rejection {
                rule: r.rule,
                verdict: "NotApplicable".into(),
                reason: r.reason,
                trace: r.trace.into_iter().map(Trace::from).collect(),
            }
        }
    }

    impl TryFrom<Rejection> for super::Rejection {
        type Error = String;

        fn try_from(w: Rejection) -> Result<Self, String> {
            if w.verdict != "NotApplicable" {
                return Err(format!("unexpected verdict `{}`", w.verdict));
            }
            Ok(super::Rejection {
                rule: w.rule,
                reason: w.reason,
                trace: w.trace.into_iter().map(TraceEntry::try_from).collect::<Result<_, _>>()?,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Certificate {
        Certificate {
            rule: Rule::Thm1Wider,
            verdict: Verdict::FactorBound(3),
            trace: vec![TraceEntry::new("deg a_m > n*deg d1 + mn*deg d2 + H1(f)", Degree::Finite(7), Degree::Finite(4))],
            assumptions: vec![Assumption::new(Claim::FIrreducibleOverKX, Provenance::CallerAsserted)],
            inputs: [("f".to_string(), "Y^2 + X".to_string())].into_iter().collect(),
        }
    }

    #[test]
    fn json_layout_and_round_trip() {
        let c = sample();
        let text = c.to_json();
        assert_eq!(
            text,
            r#"{"rule":"Thm1Wider","verdict":"FactorBound","bound":"3","trace":[{"name":"deg a_m > n*deg d1 + mn*deg d2 + H1(f)","lhs":"7","rel":">","rhs":"4"}],"assumptions":[{"claim":"FIrreducibleOverKX","provenance":"CallerAsserted"}],"inputs":{"f":"Y^2 + X"}}"#
        );
        assert_eq!(Certificate::from_json(&text).unwrap(), c);
        assert_eq!(c.caller_asserted().count(), 1);
    }

    #[test]
    fn minus_infinity_in_trace() {
        let mut c = sample();
        c.trace[0].rhs = Degree::MinusInfinity;
        let text = c.to_json();
        assert!(text.contains(r#""rhs":"-inf""#));
        assert_eq!(Certificate::from_json(&text).unwrap(), c);
    }

    #[test]
    fn validation() {
        assert!(sample().validate().is_ok());
        let mut bad = sample();
        bad.verdict = Verdict::Irreducible;
        assert!(bad.validate().is_err());
        let mut bad = sample();
        bad.trace[0].lhs = Degree::Finite(4);
        assert!(bad.validate().is_err());
        assert!(Certificate::from_json(&sample().to_json().replace("\"3\"", "\"x\"")).is_err());
    }
}
