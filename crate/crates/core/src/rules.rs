//! Rewrite rules and rewrite systems.
//!
//! A rule is a span `L ← I+O → R` given by two interfaced hypergraphs whose
//! input and output lists correspond positionally. Validity (the
//! left-connectedness conditions) is reported as data, not enforced at
//! construction, so a front end can show every violation at once.

use std::fmt;

use indexmap::IndexSet;

use crate::error::{Error, Result};
use crate::hypergraph::Signature;
use crate::interfaced::InterfacedHypergraph;

/// A rewrite rule `L ← I+O → R` with positional interface correspondence.
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteRule {
    pub name: String,
    pub left: InterfacedHypergraph,
    pub right: InterfacedHypergraph,
}

/// One failed left-connectedness clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RuleViolation {
    /// Interface sizes differ between the two sides.
    Arity {
        inputs_left: usize,
        inputs_right: usize,
        outputs_left: usize,
        outputs_right: usize,
    },
    /// `I → L ← O` is not an ma-cospan.
    MaLeft,
    /// `I → R ← O` is not an ma-cospan.
    MaRight,
    /// `[i_L, o_L]` is not mono: a node serves as both input and output of L.
    MonoInterface,
    /// Some input of L has no path to some output of L.
    StrongConnectivity,
}

impl RuleViolation {
    pub fn clause(&self) -> &'static str {
        match self {
            RuleViolation::Arity { .. } => "arity",
            RuleViolation::MaLeft => "ma-left",
            RuleViolation::MaRight => "ma-right",
            RuleViolation::MonoInterface => "mono-interface",
            RuleViolation::StrongConnectivity => "strong-connectivity",
        }
    }
}

impl fmt::Display for RuleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleViolation::Arity {
                inputs_left,
                inputs_right,
                outputs_left,
                outputs_right,
            } => write!(
                f,
                "arity: interface sizes differ (inputs {inputs_left} vs {inputs_right}, outputs {outputs_left} vs {outputs_right})"
            ),
            RuleViolation::MaLeft => write!(f, "ma-left: left side is not an ma-cospan"),
            RuleViolation::MaRight => write!(f, "ma-right: right side is not an ma-cospan"),
            RuleViolation::MonoInterface => {
                write!(f, "mono-interface: left interface lists overlap")
            }
            RuleViolation::StrongConnectivity => write!(
                f,
                "strong-connectivity: some input of the left side cannot reach some output"
            ),
        }
    }
}

/// Check every left-connectedness clause; empty means the rule is valid.
pub fn validate_rule(rule: &RewriteRule) -> Vec<RuleViolation> {
    let mut violations = Vec::new();
    if rule.left.inputs().len() != rule.right.inputs().len()
        || rule.left.outputs().len() != rule.right.outputs().len()
    {
        violations.push(RuleViolation::Arity {
            inputs_left: rule.left.inputs().len(),
            inputs_right: rule.right.inputs().len(),
            outputs_left: rule.left.outputs().len(),
            outputs_right: rule.right.outputs().len(),
        });
    }
    if !rule.left.is_ma_cospan() {
        violations.push(RuleViolation::MaLeft);
    }
    if !rule.right.is_ma_cospan() {
        violations.push(RuleViolation::MaRight);
    }
    let inputs: IndexSet<_> = rule.left.inputs().iter().collect();
    if rule.left.outputs().iter().any(|v| inputs.contains(v)) {
        violations.push(RuleViolation::MonoInterface);
    }
    if !rule.left.graph().is_strongly_connected() {
        violations.push(RuleViolation::StrongConnectivity);
    }
    violations
}

/// An ordered list of rules over a shared signature.
#[derive(Debug, Clone, PartialEq)]
pub struct RewriteSystem {
    signature: Signature,
    rules: Vec<RewriteRule>,
}

impl RewriteSystem {
    /// Build a system; every rule's graphs must use the shared signature.
    pub fn new(signature: Signature, rules: Vec<RewriteRule>) -> Result<Self> {
        for r in &rules {
            if r.left.graph().signature() != &signature || r.right.graph().signature() != &signature
            {
                return Err(Error::SignatureMismatch);
            }
        }
        Ok(Self { signature, rules })
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule(&self, index: usize) -> Result<&RewriteRule> {
        self.rules
            .get(index)
            .ok_or(Error::RuleIndexOutOfRange(index))
    }

    /// Violations per rule, indexed; empty means the whole system is a valid
    /// left-connected rewrite system.
    pub fn validate(&self) -> Vec<(usize, Vec<RuleViolation>)> {
        self.rules
            .iter()
            .enumerate()
            .map(|(i, r)| (i, validate_rule(r)))
            .filter(|(_, v)| !v.is_empty())
            .collect()
    }

    /// Error out (with the first offending rule) unless the system is valid.
    pub fn require_valid(&self) -> Result<()> {
        match self.validate().into_iter().next() {
            None => Ok(()),
            Some((i, violations)) => Err(Error::InvalidRule {
                name: format!("#{i} ({})", self.rules[i].name),
                violations: violations
                    .iter()
                    .map(|v| v.clause())
                    .collect::<Vec<_>>()
                    .join(", "),
            }),
        }
    }
}
