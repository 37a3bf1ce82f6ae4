//! Shared fixtures, brute-force oracles, and random generators for the
//! integration and acceptance suites. Everything here recomputes expected
//! values from definitions (morphism enumeration, path enumeration, subset
//! filters) independently of the enumeration pipeline it is used to check.

#![allow(dead_code)]

use std::collections::BTreeMap;
use std::path::PathBuf;

use rand::rngs::StdRng;
use rand::Rng;

use sdcp_core::colimits::{coequalizer, coproduct, pushout, pushout_complement};
use sdcp_core::critical_pairs::CriticalPairCandidate;
use sdcp_core::hypergraph::{EdgeId, Hyperedge, Hypergraph, Label, NodeId, Signature};
use sdcp_core::interfaced::InterfacedHypergraph;
use sdcp_core::morphism::Morphism;
use sdcp_core::rewrite::rule_interface;
use sdcp_core::rules::{validate_rule, RewriteRule, RewriteSystem};

pub fn corpus_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(name)
}

pub fn load_corpus(name: &str) -> RewriteSystem {
    let text = std::fs::read_to_string(corpus_path(name)).expect("corpus file");
    sdcp_core::json::parse_system(&text).expect("corpus parses")
}

pub fn assoc_unit() -> RewriteSystem {
    load_corpus("assoc-unit.json")
}

pub fn bimonoid() -> RewriteSystem {
    load_corpus("bimonoid.json")
}

// ---------------------------------------------------------------------------
// morphism enumeration (not necessarily mono) — the oracle for universal
// properties and parallel-pair checks

struct MorphismSearch<'a> {
    pattern: &'a Hypergraph,
    host: &'a Hypergraph,
    node_map: BTreeMap<NodeId, NodeId>,
    edge_map: BTreeMap<EdgeId, EdgeId>,
    results: Vec<Morphism>,
}

impl<'a> MorphismSearch<'a> {
    fn edges(&mut self, order: &[(EdgeId, Hyperedge)], idx: usize) {
        if idx == order.len() {
            let free: Vec<NodeId> = self
                .pattern
                .nodes()
                .filter(|v| !self.node_map.contains_key(*v))
                .cloned()
                .collect();
            self.free_nodes(&free, 0);
            return;
        }
        let (pid, pedge) = &order[idx];
        let candidates: Vec<(EdgeId, Hyperedge)> = self
            .host
            .edges()
            .filter(|(_, e)| e.label == pedge.label)
            .map(|(id, e)| (id.clone(), e.clone()))
            .collect();
        for (hid, hedge) in candidates {
            let mut trail = Vec::new();
            let mut ok = true;
            for (x, y) in pedge
                .sources
                .iter()
                .zip(&hedge.sources)
                .chain(pedge.targets.iter().zip(&hedge.targets))
            {
                match self.node_map.get(x) {
                    Some(existing) if existing != y => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        self.node_map.insert(x.clone(), y.clone());
                        trail.push(x.clone());
                    }
                }
            }
            if ok {
                self.edge_map.insert(pid.clone(), hid);
                self.edges(order, idx + 1);
                self.edge_map.remove(pid);
            }
            for x in &trail {
                self.node_map.remove(x);
            }
        }
    }

    fn free_nodes(&mut self, free: &[NodeId], idx: usize) {
        if idx == free.len() {
            self.results.push(
                Morphism::new(
                    self.pattern.clone(),
                    self.host.clone(),
                    self.node_map.clone(),
                    self.edge_map.clone(),
                )
                .expect("search state is a morphism"),
            );
            return;
        }
        let x = free[idx].clone();
        let candidates: Vec<NodeId> = self.host.nodes().cloned().collect();
        for y in candidates {
            self.node_map.insert(x.clone(), y);
            self.free_nodes(free, idx + 1);
        }
        self.node_map.remove(&x);
    }
}

/// Every hypergraph morphism `pattern → host`, by exhaustive backtracking.
pub fn all_morphisms(pattern: &Hypergraph, host: &Hypergraph) -> Vec<Morphism> {
    let order: Vec<(EdgeId, Hyperedge)> = pattern
        .edges()
        .map(|(id, e)| (id.clone(), e.clone()))
        .collect();
    let mut search = MorphismSearch {
        pattern,
        host,
        node_map: BTreeMap::new(),
        edge_map: BTreeMap::new(),
        results: Vec::new(),
    };
    search.edges(&order, 0);
    search.results
}

// ---------------------------------------------------------------------------
// path enumeration — the oracle for convexity

/// All edge paths of an acyclic graph (panics if a path exceeds the edge
/// count, which would witness a cycle).
pub fn all_paths(g: &Hypergraph) -> Vec<Vec<EdgeId>> {
    let edges: Vec<(EdgeId, Hyperedge)> = g.edges().map(|(i, e)| (i.clone(), e.clone())).collect();
    let linked = |a: &Hyperedge, b: &Hyperedge| a.targets.iter().any(|t| b.sources.contains(t));
    let mut paths = Vec::new();
    let mut stack: Vec<Vec<usize>> = (0..edges.len()).map(|i| vec![i]).collect();
    while let Some(path) = stack.pop() {
        assert!(path.len() <= edges.len(), "cycle in path enumeration");
        paths.push(path.iter().map(|&i| edges[i].0.clone()).collect());
        let last = &edges[*path.last().unwrap()].1;
        for (i, (_, e)) in edges.iter().enumerate() {
            if linked(last, e) {
                let mut next = path.clone();
                next.push(i);
                stack.push(next);
            }
        }
    }
    paths
}

/// Convexity checked directly against the definition: for every pair of
/// image nodes and every path between them, every edge of the path is in
/// the image.
pub fn is_convex_by_paths(m: &Morphism) -> bool {
    if !m.is_mono() {
        return false;
    }
    let g = m.target();
    let image_nodes: Vec<NodeId> = m.node_map().values().cloned().collect();
    let image_edges: Vec<EdgeId> = m.edge_map().values().cloned().collect();
    for path in all_paths(g) {
        let first = g.edge(&path[0]).unwrap();
        let last = g.edge(path.last().unwrap()).unwrap();
        let starts_in_image = first.sources.iter().any(|v| image_nodes.contains(v));
        let ends_in_image = last.targets.iter().any(|v| image_nodes.contains(v));
        if starts_in_image && ends_in_image && path.iter().any(|e| !image_edges.contains(e)) {
            return false;
        }
    }
    true
}

// ---------------------------------------------------------------------------
// random generators

pub fn small_signature(rng: &mut StdRng) -> Signature {
    let mut sig = Signature::new();
    let count = rng.gen_range(2..=3);
    for (i, name) in ["f", "g", "h"].iter().take(count).enumerate() {
        // keep at least one composable 1->1 label so connected graphs exist
        let (arity, coarity) = if i == 0 {
            (1, 1)
        } else {
            (rng.gen_range(0..=2), rng.gen_range(0..=2))
        };
        sig.add(Label::from(*name), arity, coarity).unwrap();
    }
    sig
}

/// An arbitrary (not necessarily monogamous or acyclic) hypergraph.
pub fn random_graph(
    rng: &mut StdRng,
    sig: &Signature,
    max_nodes: usize,
    max_edges: usize,
) -> Hypergraph {
    let mut g = Hypergraph::new(sig.clone());
    let n = rng.gen_range(0..=max_nodes);
    for i in 0..n {
        g.add_node(NodeId::new(format!("n{i}"))).unwrap();
    }
    if n == 0 {
        return g;
    }
    let labels: Vec<Label> = sig.labels().cloned().collect();
    let nodes: Vec<NodeId> = g.nodes().cloned().collect();
    for k in 0..rng.gen_range(0..=max_edges) {
        let label = labels[rng.gen_range(0..labels.len())].clone();
        let (arity, coarity) = sig.profile(&label).unwrap();
        let pick = |rng: &mut StdRng| nodes[rng.gen_range(0..nodes.len())].clone();
        let sources = (0..arity).map(|_| pick(rng)).collect();
        let targets = (0..coarity).map(|_| pick(rng)).collect();
        g.add_edge(EdgeId::new(format!("e{k}")), label, sources, targets)
            .unwrap();
    }
    g
}

/// A monogamous acyclic hypergraph built forward: sources reuse free
/// outputs or create fresh input nodes, targets are always fresh.
pub fn random_ma_graph(rng: &mut StdRng, sig: &Signature, edges: usize) -> Hypergraph {
    let mut g = Hypergraph::new(sig.clone());
    let labels: Vec<Label> = sig.labels().cloned().collect();
    let mut free_outputs: Vec<NodeId> = Vec::new();
    let mut next = 0usize;
    let fresh = |g: &mut Hypergraph, next: &mut usize| {
        let id = NodeId::new(format!("n{next}"));
        *next += 1;
        g.add_node(id.clone()).unwrap();
        id
    };
    for k in 0..edges {
        let label = labels[rng.gen_range(0..labels.len())].clone();
        let (arity, coarity) = sig.profile(&label).unwrap();
        let mut sources = Vec::with_capacity(arity);
        for _ in 0..arity {
            if !free_outputs.is_empty() && rng.gen_bool(0.7) {
                let idx = rng.gen_range(0..free_outputs.len());
                sources.push(free_outputs.swap_remove(idx));
            } else {
                sources.push(fresh(&mut g, &mut next));
            }
        }
        let mut targets = Vec::with_capacity(coarity);
        for _ in 0..coarity {
            let t = fresh(&mut g, &mut next);
            free_outputs.push(t.clone());
            targets.push(t);
        }
        g.add_edge(EdgeId::new(format!("e{k}")), label, sources, targets)
            .unwrap();
    }
    debug_assert!(g.is_monogamous_acyclic());
    g
}

/// A valid left-connected rule with at most `max_edges` hyperedges on the
/// left. Falls back to `R = L` when no independently generated right side
/// matches the interface arities.
pub fn random_left_connected_rule(
    rng: &mut StdRng,
    sig: &Signature,
    max_edges: usize,
    name: &str,
) -> Option<RewriteRule> {
    for _ in 0..200 {
        let edge_count = rng.gen_range(1..=max_edges);
        let l = random_ma_graph(rng, sig, edge_count);
        if !l.is_strongly_connected() || l.edge_count() == 0 {
            continue;
        }
        let left = InterfacedHypergraph::with_natural_interface(l);
        let mut right = None;
        for _ in 0..50 {
            let r_edges = rng.gen_range(0..=3);
            let r = random_ma_graph(rng, sig, r_edges);
            if r.input_nodes().len() == left.inputs().len()
                && r.output_nodes().len() == left.outputs().len()
            {
                right = Some(InterfacedHypergraph::with_natural_interface(r));
                break;
            }
        }
        let right = right.unwrap_or_else(|| left.clone());
        let rule = RewriteRule {
            name: name.to_string(),
            left,
            right,
        };
        if validate_rule(&rule).is_empty() {
            return Some(rule);
        }
    }
    None
}

/// A valid left-connected system with one or two rules over a small random
/// signature, at most three hyperedges per left side.
pub fn random_system(rng: &mut StdRng) -> RewriteSystem {
    loop {
        let sig = small_signature(rng);
        let count = rng.gen_range(1..=2);
        let mut rules = Vec::new();
        for k in 0..count {
            if let Some(rule) = random_left_connected_rule(rng, &sig, 3, &format!("r{k}")) {
                rules.push(rule);
            }
        }
        if rules.len() == count {
            let sys = RewriteSystem::new(sig, rules).unwrap();
            assert!(sys.validate().is_empty());
            return sys;
        }
    }
}

/// The same interfaced graph with shuffled insertion order and fresh ids.
pub fn permuted_copy(rng: &mut StdRng, ih: &InterfacedHypergraph) -> InterfacedHypergraph {
    let g = ih.graph();
    let mut node_order: Vec<NodeId> = g.nodes().cloned().collect();
    let mut edge_order: Vec<EdgeId> = g.edges().map(|(i, _)| i.clone()).collect();
    shuffle(rng, &mut node_order);
    shuffle(rng, &mut edge_order);
    let rename: BTreeMap<NodeId, NodeId> = node_order
        .iter()
        .enumerate()
        .map(|(i, v)| (v.clone(), NodeId::new(format!("x{i}"))))
        .collect();
    let mut copy = Hypergraph::new(g.signature().clone());
    for v in &node_order {
        copy.add_node(rename[v].clone()).unwrap();
    }
    for (i, old) in edge_order.iter().enumerate() {
        let e = g.edge(old).unwrap();
        copy.add_edge(
            EdgeId::new(format!("y{i}")),
            e.label.clone(),
            e.sources.iter().map(|v| rename[v].clone()).collect(),
            e.targets.iter().map(|v| rename[v].clone()).collect(),
        )
        .unwrap();
    }
    InterfacedHypergraph::new(
        copy,
        ih.inputs().iter().map(|v| rename[v].clone()).collect(),
        ih.outputs().iter().map(|v| rename[v].clone()).collect(),
    )
    .unwrap()
}

pub fn shuffle<T>(rng: &mut StdRng, items: &mut [T]) {
    for i in (1..items.len()).rev() {
        items.swap(i, rng.gen_range(0..=i));
    }
}

// ---------------------------------------------------------------------------
// universal-property oracles

/// The mediating morphism through a jointly surjective family of legs is
/// forced pointwise. Build it from the leg/cocone pairs; `None` when the
/// forced assignment is inconsistent, partial, or not a morphism — i.e.
/// when no mediator exists. Uniqueness is automatic from joint surjectivity,
/// which the callers assert separately via `is_epi`/coverage checks.
fn forced_mediator(
    apex: &Hypergraph,
    z: &Hypergraph,
    legs: &[(&Morphism, &Morphism)],
) -> Option<Morphism> {
    let mut node_map: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut edge_map: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    for (leg, cocone) in legs {
        for (x, apex_img) in leg.node_map() {
            let want = cocone.node_map()[x].clone();
            if let Some(prev) = node_map.insert(apex_img.clone(), want.clone()) {
                if prev != want {
                    return None;
                }
            }
        }
        for (x, apex_img) in leg.edge_map() {
            let want = cocone.edge_map()[x].clone();
            if let Some(prev) = edge_map.insert(apex_img.clone(), want.clone()) {
                if prev != want {
                    return None;
                }
            }
        }
    }
    if node_map.len() != apex.node_count() || edge_map.len() != apex.edge_count() {
        return None;
    }
    Morphism::new(apex.clone(), z.clone(), node_map, edge_map).ok()
}

/// Check the coequalizer's universal property against every morphism into
/// each target: exactly the `h` with `f;h = g;h` factor through `ε`, each
/// via exactly one mediator (unique since `ε` is surjective).
pub fn check_coequalizer_universal(f: &Morphism, g: &Morphism, targets: &[Hypergraph]) {
    let (q, eps) = coequalizer(f, g).expect("coequalizer");
    assert_eq!(f.compose(&eps), g.compose(&eps), "ε must coequalize f and g");
    assert!(eps.is_epi(), "quotient map must be surjective");
    for z in targets {
        for h in all_morphisms(f.target(), z) {
            let mediator = forced_mediator(&q, z, &[(&eps, &h)]);
            if f.compose(&h) == g.compose(&h) {
                let u = mediator.expect("a commuting h must factor through ε");
                assert_eq!(eps.compose(&u), h, "the mediator must reproduce h");
            } else {
                assert!(
                    mediator.map_or(true, |u| eps.compose(&u) != h),
                    "a non-commuting h must not factor through ε"
                );
            }
        }
    }
}

/// Check the pushout's universal property for a span `B ←f− A −g→ C`
/// against every commuting cocone into each target.
pub fn check_pushout_universal(f: &Morphism, g: &Morphism, targets: &[Hypergraph]) {
    let (p, p1, p2) = pushout(f, g).expect("pushout");
    assert_eq!(f.compose(&p1), g.compose(&p2), "pushout square must commute");
    // the injections jointly cover P, so mediators are forced
    for z in targets {
        let h1s = all_morphisms(f.target(), z);
        let h2s = all_morphisms(g.target(), z);
        // pair cocone halves by their composite with the span legs
        let mut by_key: BTreeMap<String, Vec<&Morphism>> = BTreeMap::new();
        for h2 in &h2s {
            by_key.entry(morphism_key(&g.compose(h2))).or_default().push(h2);
        }
        for h1 in &h1s {
            let key = morphism_key(&f.compose(h1));
            for h2 in by_key.get(&key).into_iter().flatten() {
                let u = forced_mediator(&p, z, &[(&p1, h1), (&p2, h2)])
                    .expect("a commuting cocone must factor through the pushout");
                assert_eq!(&p1.compose(&u), h1);
                assert_eq!(&p2.compose(&u), *h2);
            }
        }
    }
}

fn morphism_key(m: &Morphism) -> String {
    let nodes: Vec<String> = m
        .node_map()
        .iter()
        .map(|(a, b)| format!("{a}>{b}"))
        .collect();
    let edges: Vec<String> = m
        .edge_map()
        .iter()
        .map(|(a, b)| format!("{a}>{b}"))
        .collect();
    format!("{}|{}", nodes.join(","), edges.join(","))
}

// ---------------------------------------------------------------------------
// brute-force pre-critical pair enumeration

/// All label-respecting partial matchings between the edges of two graphs.
fn edge_matchings(li: &Hypergraph, lj: &Hypergraph) -> Vec<Vec<(EdgeId, EdgeId)>> {
    let pairs: Vec<(EdgeId, EdgeId)> = li
        .edges()
        .flat_map(|(a, ea)| {
            lj.edges()
                .filter(move |(_, eb)| eb.label == ea.label)
                .map(move |(b, _)| (a.clone(), b.clone()))
        })
        .collect();
    let mut out = vec![Vec::new()];
    fn recurse(
        pairs: &[(EdgeId, EdgeId)],
        idx: usize,
        chosen: &mut Vec<(EdgeId, EdgeId)>,
        out: &mut Vec<Vec<(EdgeId, EdgeId)>>,
    ) {
        if idx == pairs.len() {
            return;
        }
        // skip
        recurse(pairs, idx + 1, chosen, out);
        // include, if endpoints unused
        let (a, b) = &pairs[idx];
        if chosen.iter().all(|(x, y)| x != a && y != b) {
            chosen.push(pairs[idx].clone());
            out.push(chosen.clone());
            recurse(pairs, idx + 1, chosen, out);
            chosen.pop();
        }
    }
    let mut chosen = Vec::new();
    recurse(&pairs, 0, &mut chosen, &mut out);
    out
}

/// Quotient `L_i + L_j` by the equivalence generated by the given edge and
/// node pairings; `None` when the result is not a pre-critical pair shape
/// (some coupling map fails to be mono, or the quotient is not ma).
fn quotient_candidate(
    sys: &RewriteSystem,
    i: usize,
    j: usize,
    edge_pairs: &[(EdgeId, EdgeId)],
    node_pairs: &[(NodeId, NodeId)],
) -> Option<CriticalPairCandidate> {
    let li = sys.rules()[i].left.graph();
    let lj = sys.rules()[j].left.graph();
    let (sum, inj1, inj2) = coproduct(li, lj).unwrap();

    // gluing scheme over the coproduct: one edge per edge pair plus one
    // isolated node per extra node pair
    let mut gamma = Hypergraph::new(sum.signature().clone());
    let mut map1: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut map2: BTreeMap<NodeId, NodeId> = BTreeMap::new();
    let mut emap1: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    let mut emap2: BTreeMap<EdgeId, EdgeId> = BTreeMap::new();
    let mut seen: BTreeMap<(NodeId, NodeId), NodeId> = BTreeMap::new();
    let mut add_pair = |a: &NodeId, b: &NodeId, gamma: &mut Hypergraph| -> NodeId {
        if let Some(id) = seen.get(&(a.clone(), b.clone())) {
            return id.clone();
        }
        let id = NodeId::new(format!("p{}", seen.len()));
        gamma.add_node(id.clone()).unwrap();
        map1.insert(id.clone(), inj1.node_image(a).clone());
        map2.insert(id.clone(), inj2.node_image(b).clone());
        seen.insert((a.clone(), b.clone()), id.clone());
        id
    };
    for (k, (a, b)) in edge_pairs.iter().enumerate() {
        let ea = li.edge(a).unwrap().clone();
        let eb = lj.edge(b).unwrap().clone();
        let sources: Vec<NodeId> = ea
            .sources
            .iter()
            .zip(&eb.sources)
            .map(|(x, y)| add_pair(x, y, &mut gamma))
            .collect();
        let targets: Vec<NodeId> = ea
            .targets
            .iter()
            .zip(&eb.targets)
            .map(|(x, y)| add_pair(x, y, &mut gamma))
            .collect();
        let gid = EdgeId::new(format!("ge{k}"));
        gamma.add_edge(gid.clone(), ea.label.clone(), sources, targets).unwrap();
        emap1.insert(gid.clone(), inj1.edge_image(a).clone());
        emap2.insert(gid, inj2.edge_image(b).clone());
    }
    for (a, b) in node_pairs {
        add_pair(a, b, &mut gamma);
    }
    let g1 = Morphism::new(gamma.clone(), sum.clone(), map1, emap1).unwrap();
    let g2 = Morphism::new(gamma, sum, map2, emap2).unwrap();
    let (s, eps) = coequalizer(&g1, &g2).ok()?;
    let match1 = inj1.compose(&eps);
    let match2 = inj2.compose(&eps);
    if !match1.is_mono() || !match2.is_mono() {
        return None;
    }
    let source = InterfacedHypergraph::with_natural_interface(s);
    if !source.is_ma_cospan() {
        return None;
    }
    Some(CriticalPairCandidate {
        rule_i: i,
        rule_j: j,
        hyperedge_scheme: sdcp_core::independent::IndependentEdgeSet::new(edge_pairs.to_vec()),
        node_scheme: sdcp_core::independent::IndependentEdgeSet::empty(),
        source,
        epi: eps,
        match1,
        match2,
    })
}

/// Every pre-critical pair of `(L_i, L_j)` by brute force: all cross-side
/// edge matchings, extended by all cross-side node matchings over pairs
/// whose raw degrees permit monogamy, pruned on the monotone failures
/// (non-mono coupling, monogamy, cyclicity).
pub fn brute_force_pre_critical_pairs(
    sys: &RewriteSystem,
    i: usize,
    j: usize,
) -> Vec<CriticalPairCandidate> {
    let li = sys.rules()[i].left.graph();
    let lj = sys.rules()[j].left.graph();
    let mut results = Vec::new();
    let eligible: Vec<(NodeId, NodeId)> = li
        .nodes()
        .flat_map(|a| lj.nodes().map(move |b| (a.clone(), b.clone())))
        .filter(|(a, b)| {
            let (ia, oa) = li.degrees(a).unwrap();
            let (ib, ob) = lj.degrees(b).unwrap();
            ia + ib <= 1 && oa + ob <= 1
        })
        .collect();
    for edge_pairs in edge_matchings(li, lj) {
        // base quotient must already satisfy the monotone conditions,
        // otherwise no node extension can recover
        if quotient_candidate(sys, i, j, &edge_pairs, &[]).is_none() {
            continue;
        }
        let mut chosen: Vec<(NodeId, NodeId)> = Vec::new();
        extend_nodes(sys, i, j, &edge_pairs, &eligible, 0, &mut chosen, &mut results);
    }
    results
}

#[allow(clippy::too_many_arguments)]
fn extend_nodes(
    sys: &RewriteSystem,
    i: usize,
    j: usize,
    edge_pairs: &[(EdgeId, EdgeId)],
    eligible: &[(NodeId, NodeId)],
    idx: usize,
    chosen: &mut Vec<(NodeId, NodeId)>,
    results: &mut Vec<CriticalPairCandidate>,
) {
    if idx == 0 {
        // the base state (possibly extended later) is itself a candidate
        if let Some(c) = quotient_candidate(sys, i, j, edge_pairs, chosen) {
            results.push(c);
        }
    }
    if idx == eligible.len() {
        return;
    }
    // skip this pair
    extend_nodes(sys, i, j, edge_pairs, eligible, idx + 1, chosen, results);
    // include this pair if endpoints unused
    let (a, b) = &eligible[idx];
    if chosen.iter().any(|(x, y)| x == a || y == b) {
        return;
    }
    chosen.push(eligible[idx].clone());
    if let Some(c) = quotient_candidate(sys, i, j, edge_pairs, chosen) {
        results.push(c);
        extend_nodes(sys, i, j, edge_pairs, eligible, idx + 1, chosen, results);
    }
    chosen.pop();
}

/// The parallel-pair condition checked against its definition: morphisms
/// `g1 : L_i → C_2` and `g2 : L_j → C_1` exist whose composites with the
/// context inclusions reproduce the two matches.
pub fn parallel_by_definition(sys: &RewriteSystem, c: &CriticalPairCandidate) -> bool {
    let rule_i = &sys.rules()[c.rule_i];
    let rule_j = &sys.rules()[c.rule_j];
    let (k2l_i, _) = rule_interface(rule_i).unwrap();
    let (k2l_j, _) = rule_interface(rule_j).unwrap();
    let Ok((c1, _, a1)) = pushout_complement(&k2l_i, &c.match1) else {
        return false;
    };
    let Ok((c2, _, a2)) = pushout_complement(&k2l_j, &c.match2) else {
        return false;
    };
    let g1_exists = all_morphisms(rule_i.left.graph(), &c2)
        .iter()
        .any(|g1| g1.compose(&a2) == c.match1);
    let g2_exists = all_morphisms(rule_j.left.graph(), &c1)
        .iter()
        .any(|g2| g2.compose(&a1) == c.match2);
    g1_exists && g2_exists
}
