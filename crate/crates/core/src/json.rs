//! JSON formats for systems, graphs, critical pairs, and reports.
//!
//! A system file carries the signature and the rules; graphs inside it are
//! parsed against that signature. Emission preserves element ids and
//! ordering, so parse∘emit is the identity on well-formed files and every
//! emitted artifact is byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::confluence::{ConfluenceReport, ConfluenceVerdict, JoinVerdict, JoinabilityResult};
use crate::critical_pairs::CriticalPairCandidate;
use crate::error::Error;
use crate::hypergraph::{EdgeId, Hypergraph, Label, NodeId, Signature};
use crate::interfaced::InterfacedHypergraph;
use crate::morphism::Morphism;
use crate::rewrite::Derivation;
use crate::rules::{RewriteRule, RewriteSystem};

/// A parse failure: either malformed JSON (with position) or a well-formed
/// file describing an invalid object.
#[derive(Debug)]
pub enum ParseError {
    Json(serde_json::Error),
    Semantic(Error),
}

impl std::fmt::Display for ParseError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ParseError::Json(e) => write!(f, "line {}, column {}: {e}", e.line(), e.column()),
            ParseError::Semantic(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ParseError {}

impl From<Error> for ParseError {
    fn from(e: Error) -> Self {
        ParseError::Semantic(e)
    }
}

#[derive(Serialize, Deserialize)]
struct SignatureEntryDto {
    label: String,
    arity: usize,
    coarity: usize,
}

#[derive(Serialize, Deserialize)]
struct EdgeDto {
    id: String,
    label: String,
    sources: Vec<String>,
    targets: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct InterfacedDto {
    nodes: Vec<String>,
    edges: Vec<EdgeDto>,
    inputs: Vec<String>,
    outputs: Vec<String>,
}

#[derive(Serialize, Deserialize)]
struct RuleDto {
    name: String,
    left: InterfacedDto,
    right: InterfacedDto,
}

#[derive(Serialize, Deserialize)]
struct SystemDto {
    signature: Vec<SignatureEntryDto>,
    rules: Vec<RuleDto>,
}

#[derive(Serialize, Deserialize)]
pub struct MorphismDto {
    pub nodes: BTreeMap<String, String>,
    pub edges: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
pub struct CriticalPairDto {
    pub rule_i: usize,
    pub rule_j: usize,
    pub glued_edges: Vec<(String, String)>,
    pub glued_nodes: Vec<(String, String)>,
    pub source: serde_json::Value,
    pub match1: MorphismDto,
    pub match2: MorphismDto,
}

fn interfaced_to_dto(ih: &InterfacedHypergraph) -> InterfacedDto {
    InterfacedDto {
        nodes: ih.graph().nodes().map(|v| v.0.clone()).collect(),
        edges: ih
            .graph()
            .edges()
            .map(|(id, e)| EdgeDto {
                id: id.0.clone(),
                label: e.label.0.clone(),
                sources: e.sources.iter().map(|v| v.0.clone()).collect(),
                targets: e.targets.iter().map(|v| v.0.clone()).collect(),
            })
            .collect(),
        inputs: ih.inputs().iter().map(|v| v.0.clone()).collect(),
        outputs: ih.outputs().iter().map(|v| v.0.clone()).collect(),
    }
}

fn interfaced_from_dto(dto: &InterfacedDto, sig: &Signature) -> Result<InterfacedHypergraph, Error> {
    let mut g = Hypergraph::new(sig.clone());
    for n in &dto.nodes {
        g.add_node(NodeId::from(n.clone()))?;
    }
    for e in &dto.edges {
        g.add_edge(
            EdgeId::from(e.id.clone()),
            Label::from(e.label.clone()),
            e.sources.iter().map(|v| NodeId::from(v.clone())).collect(),
            e.targets.iter().map(|v| NodeId::from(v.clone())).collect(),
        )?;
    }
    InterfacedHypergraph::new(
        g,
        dto.inputs.iter().map(|v| NodeId::from(v.clone())).collect(),
        dto.outputs.iter().map(|v| NodeId::from(v.clone())).collect(),
    )
}

pub fn parse_system(text: &str) -> Result<RewriteSystem, ParseError> {
    let dto: SystemDto = serde_json::from_str(text).map_err(ParseError::Json)?;
    let mut sig = Signature::new();
    for entry in &dto.signature {
        sig.add(Label::from(entry.label.clone()), entry.arity, entry.coarity)?;
    }
    let mut rules = Vec::with_capacity(dto.rules.len());
    for r in &dto.rules {
        rules.push(RewriteRule {
            name: r.name.clone(),
            left: interfaced_from_dto(&r.left, &sig)?,
            right: interfaced_from_dto(&r.right, &sig)?,
        });
    }
    Ok(RewriteSystem::new(sig, rules)?)
}

pub fn emit_system(sys: &RewriteSystem) -> String {
    let dto = SystemDto {
        signature: sys
            .signature()
            .labels()
            .map(|l| {
                let (arity, coarity) = sys.signature().profile(l).unwrap();
                SignatureEntryDto {
                    label: l.0.clone(),
                    arity,
                    coarity,
                }
            })
            .collect(),
        rules: sys
            .rules()
            .iter()
            .map(|r| RuleDto {
                name: r.name.clone(),
                left: interfaced_to_dto(&r.left),
                right: interfaced_to_dto(&r.right),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&dto).expect("system serialization")
}

fn morphism_to_dto(m: &Morphism) -> MorphismDto {
    MorphismDto {
        nodes: m
            .node_map()
            .iter()
            .map(|(a, b)| (a.0.clone(), b.0.clone()))
            .collect(),
        edges: m
            .edge_map()
            .iter()
            .map(|(a, b)| (a.0.clone(), b.0.clone()))
            .collect(),
    }
}

pub fn critical_pair_to_dto(c: &CriticalPairCandidate) -> CriticalPairDto {
    CriticalPairDto {
        rule_i: c.rule_i,
        rule_j: c.rule_j,
        glued_edges: c
            .hyperedge_scheme
            .pairs()
            .iter()
            .map(|(a, b)| (a.0.clone(), b.0.clone()))
            .collect(),
        glued_nodes: c
            .node_scheme
            .pairs()
            .iter()
            .map(|(a, b)| (a.0.clone(), b.0.clone()))
            .collect(),
        source: serde_json::to_value(interfaced_to_dto(&c.source)).expect("source serialization"),
        match1: morphism_to_dto(&c.match1),
        match2: morphism_to_dto(&c.match2),
    }
}

/// One critical pair as a single JSON line.
pub fn emit_critical_pair(c: &CriticalPairCandidate) -> String {
    serde_json::to_string(&critical_pair_to_dto(c)).expect("pair serialization")
}

/// Parse an emitted pair record back into its graph and match data, against
/// the signature of `sys`. Used for round-trip checking.
pub fn parse_critical_pair_source(
    text: &str,
    sys: &RewriteSystem,
) -> Result<InterfacedHypergraph, ParseError> {
    let dto: CriticalPairDto = serde_json::from_str(text).map_err(ParseError::Json)?;
    let source: InterfacedDto =
        serde_json::from_value(dto.source).map_err(ParseError::Json)?;
    Ok(interfaced_from_dto(&source, sys.signature())?)
}

#[derive(Serialize)]
struct WitnessStepDto {
    rule: usize,
    #[serde(rename = "match")]
    match_morphism: MorphismDto,
}

#[derive(Serialize)]
struct PairReportDto {
    pair: CriticalPairDto,
    joinable: Option<bool>,
    depth: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<Vec<WitnessStepDto>>>,
}

#[derive(Serialize)]
struct ReportDto {
    verdict: &'static str,
    pairs: Vec<PairReportDto>,
}

fn witness_steps(steps: &[Derivation]) -> Vec<WitnessStepDto> {
    steps
        .iter()
        .map(|d| WitnessStepDto {
            rule: d.rule_index,
            match_morphism: morphism_to_dto(&d.match_morphism),
        })
        .collect()
}

pub fn emit_report(report: &ConfluenceReport) -> String {
    let verdict = match report.verdict {
        ConfluenceVerdict::LocallyConfluent => "locally_confluent",
        ConfluenceVerdict::NotLocallyConfluent => "not_locally_confluent",
        ConfluenceVerdict::Unknown => "unknown",
    };
    let pairs = report
        .pairs
        .iter()
        .map(|r: &JoinabilityResult| {
            let (joinable, depth, witness) = match &r.verdict {
                JoinVerdict::Joinable {
                    witness_left,
                    witness_right,
                } => (
                    Some(true),
                    witness_left.len().max(witness_right.len()),
                    Some(vec![witness_steps(witness_left), witness_steps(witness_right)]),
                ),
                JoinVerdict::NotJoinableWithin { depth, exhausted } => {
                    (if *exhausted { Some(false) } else { None }, *depth, None)
                }
            };
            PairReportDto {
                pair: critical_pair_to_dto(&r.pair),
                joinable,
                depth,
                witness,
            }
        })
        .collect();
    let dto = ReportDto { verdict, pairs };
    serde_json::to_string_pretty(&dto).expect("report serialization")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SMALL: &str = r#"{
      "signature": [
        {"label": "mu", "arity": 2, "coarity": 1},
        {"label": "eta", "arity": 0, "coarity": 1}
      ],
      "rules": [
        {
          "name": "unitR",
          "left": {
            "nodes": ["5", "6", "7"],
            "edges": [
              {"id": "m1", "label": "mu", "sources": ["5", "7"], "targets": ["6"]},
              {"id": "e1", "label": "eta", "sources": [], "targets": ["7"]}
            ],
            "inputs": ["5"],
            "outputs": ["6"]
          },
          "right": {
            "nodes": ["5"],
            "edges": [],
            "inputs": ["5"],
            "outputs": ["5"]
          }
        }
      ]
    }"#;

    #[test]
    fn parse_emit_parse_is_stable() {
        let sys = parse_system(SMALL).unwrap();
        assert_eq!(sys.rules().len(), 1);
        assert!(sys.validate().is_empty());
        let emitted = emit_system(&sys);
        let sys2 = parse_system(&emitted).unwrap();
        assert_eq!(sys, sys2);
        assert_eq!(emit_system(&sys2), emitted);
    }

    #[test]
    fn json_errors_carry_position() {
        let err = parse_system("{\"signature\": [,]}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.starts_with("line "), "{msg}");
    }

    #[test]
    fn semantic_errors_are_distinguished() {
        let bad = SMALL.replace("\"targets\": [\"7\"]", "\"targets\": [\"zz\"]");
        match parse_system(&bad) {
            Err(ParseError::Semantic(Error::NodeNotInGraph(_))) => {}
            other => panic!("expected semantic error, got {other:?}"),
        }
    }
}
