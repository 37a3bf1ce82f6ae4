//! A single convex DPOI rewrite step.
//!
//! Given an ma-cospan `n → G ← m`, a rule `L ← I+O → R` and a mono match
//! `L → G`, the step removes the match image except for the interface image
//! (pushout complement) and glues `R` back in along `I+O` (pushout). The
//! interface of the result consists of the images of `G`'s interface nodes
//! under the context-side maps, preserving their order.

use crate::colimits::{pushout, pushout_complement};
use crate::error::{Error, Result};
use crate::hypergraph::{Hypergraph, NodeId};
use crate::interfaced::InterfacedHypergraph;
use crate::morphism::Morphism;
use crate::rules::RewriteRule;

/// A completed rewrite step with every corner of the double square, kept so
/// that both pushouts can be replayed and checked.
#[derive(Debug, Clone)]
pub struct Derivation {
    pub source: InterfacedHypergraph,
    pub rule_index: usize,
    /// The match `L → G`.
    pub match_morphism: Morphism,
    /// The context `C` (what remains of `G`).
    pub context: Hypergraph,
    pub result: InterfacedHypergraph,
    /// `I+O → L`.
    pub interface_to_left: Morphism,
    /// `I+O → R`.
    pub interface_to_right: Morphism,
    /// `I+O → C`.
    pub interface_to_context: Morphism,
    /// The inclusion `C → G`.
    pub context_to_source: Morphism,
    /// `C → H`.
    pub context_to_result: Morphism,
    /// `R → H`.
    pub rhs_to_result: Morphism,
}

/// The discrete interface graph `I+O` of a rule together with its two legs.
/// Interface nodes are named positionally (`i:0`, `i:1`, …, `o:0`, …).
pub fn rule_interface(rule: &RewriteRule) -> Result<(Morphism, Morphism)> {
    let mut k = Hypergraph::new(rule.left.graph().signature().clone());
    let mut to_left = std::collections::BTreeMap::new();
    let mut to_right = std::collections::BTreeMap::new();
    for (prefix, left_list, right_list) in [
        ("i", rule.left.inputs(), rule.right.inputs()),
        ("o", rule.left.outputs(), rule.right.outputs()),
    ] {
        for (pos, (l, r)) in left_list.iter().zip(right_list).enumerate() {
            let id = NodeId::new(format!("{prefix}:{pos}"));
            k.add_node(id.clone())?;
            to_left.insert(id.clone(), l.clone());
            to_right.insert(id, r.clone());
        }
    }
    let k2l = Morphism::new(k.clone(), rule.left.graph().clone(), to_left, Default::default())?;
    let k2r = Morphism::new(k, rule.right.graph().clone(), to_right, Default::default())?;
    Ok((k2l, k2r))
}

/// Apply `rule` to `source` at `match_morphism`. The source must be an
/// ma-cospan and the match mono (hence convex for left-connected rules);
/// the result is checked to be an ma-cospan again.
pub fn rewrite_step(
    source: &InterfacedHypergraph,
    rule_index: usize,
    rule: &RewriteRule,
    match_morphism: &Morphism,
) -> Result<Derivation> {
    if !source.is_ma_cospan() {
        return Err(Error::SourceNotMaCospan);
    }
    let (k2l, k2r) = rule_interface(rule)?;
    let (context, k2c, c2g) = pushout_complement(&k2l, match_morphism)?;
    let (result_graph, c2h, r2h) = pushout(&k2c, &k2r)?;

    // G's interface nodes survive into C untouched (internal nodes of L are
    // internal in G too, by monogamy), so the result interface is their image
    // under C -> H, in the original order.
    let map_interface = |list: &[NodeId]| -> Vec<NodeId> {
        list.iter().map(|v| c2h.node_image(v).clone()).collect()
    };
    let inputs = map_interface(source.inputs());
    let outputs = map_interface(source.outputs());
    let result = InterfacedHypergraph::new(result_graph, inputs, outputs)?;
    if !result.is_ma_cospan() {
        return Err(Error::ResultNotMaCospan);
    }
    Ok(Derivation {
        source: source.clone(),
        rule_index,
        match_morphism: match_morphism.clone(),
        context,
        result,
        interface_to_left: k2l,
        interface_to_right: k2r,
        interface_to_context: k2c,
        context_to_source: c2g,
        context_to_result: c2h,
        rhs_to_result: r2h,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{EdgeId, Label, Signature};
    use crate::iso::isomorphic;
    use crate::matching::enumerate_matches;

    fn sig() -> Signature {
        let mut sig = Signature::new();
        sig.add(Label::from("mu"), 2, 1).unwrap();
        sig.add(Label::from("eta"), 0, 1).unwrap();
        sig
    }

    /// mu(x, eta) => x
    fn unit_rule() -> RewriteRule {
        let mut l = Hypergraph::new(sig());
        for n in ["5", "6", "7"] {
            l.add_node(NodeId::from(n)).unwrap();
        }
        l.add_edge(
            EdgeId::from("m1"),
            Label::from("mu"),
            vec![NodeId::from("5"), NodeId::from("7")],
            vec![NodeId::from("6")],
        )
        .unwrap();
        l.add_edge(EdgeId::from("e1"), Label::from("eta"), vec![], vec![NodeId::from("7")])
            .unwrap();
        let left =
            InterfacedHypergraph::new(l, vec![NodeId::from("5")], vec![NodeId::from("6")]).unwrap();
        let mut r = Hypergraph::new(sig());
        r.add_node(NodeId::from("5")).unwrap();
        let right =
            InterfacedHypergraph::new(r, vec![NodeId::from("5")], vec![NodeId::from("5")]).unwrap();
        RewriteRule {
            name: "unitR".into(),
            left,
            right,
        }
    }

    #[test]
    fn rewriting_l_itself_gives_r() {
        let rule = unit_rule();
        let g = rule.left.clone();
        let m = Morphism::identity(g.graph());
        let d = rewrite_step(&g, 0, &rule, &m).unwrap();
        assert!(isomorphic(&d.result, &rule.right).is_some());
        assert!(d.result.is_ma_cospan());
    }

    #[test]
    fn match_enumeration_feeds_rewriting() {
        // host: mu(mu(a, eta), b) — one unit redex
        let rule = unit_rule();
        let mut g = Hypergraph::new(sig());
        for n in ["a", "u", "t", "b", "out"] {
            g.add_node(NodeId::from(n)).unwrap();
        }
        g.add_edge(EdgeId::from("e"), Label::from("eta"), vec![], vec![NodeId::from("u")])
            .unwrap();
        g.add_edge(
            EdgeId::from("m1"),
            Label::from("mu"),
            vec![NodeId::from("a"), NodeId::from("u")],
            vec![NodeId::from("t")],
        )
        .unwrap();
        g.add_edge(
            EdgeId::from("m2"),
            Label::from("mu"),
            vec![NodeId::from("t"), NodeId::from("b")],
            vec![NodeId::from("out")],
        )
        .unwrap();
        let host = InterfacedHypergraph::with_natural_interface(g);
        let matches = enumerate_matches(rule.left.graph(), host.graph());
        assert_eq!(matches.len(), 1);
        let d = rewrite_step(&host, 0, &rule, &matches[0]).unwrap();
        // result: mu(a, b) with the same interface arity
        assert_eq!(d.result.graph().edge_count(), 1);
        assert_eq!(d.result.inputs().len(), 2);
        assert_eq!(d.result.outputs().len(), 1);
        assert!(d.result.is_ma_cospan());
    }
}
