//! Acyclicity classification: Berge, gamma, beta and alpha tests with
//! constructive witnesses (cycles, nest point elimination orders, running
//! intersection orderings), plus an exhaustive cycle-search oracle used for
//! cross-validation.

use std::collections::BTreeSet;

use crate::hypergraph::{Edge, Hypergraph, Node};

/// Which cycle notion a witness certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleKind {
    Berge,
    Gamma,
    Beta,
}

/// An alternating node/edge cycle `v1, e1, v2, e2, ..., vt, et, v1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleWitness {
    pub kind: CycleKind,
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Check the witness against the definition, directly.
    pub fn validate(&self, g: &Hypergraph) -> Result<(), String> {
        let t = self.nodes.len();
        if self.edges.len() != t {
            return Err("node and edge counts differ".into());
        }
        let min_t = match self.kind {
            CycleKind::Berge => 2,
            CycleKind::Gamma | CycleKind::Beta => 3,
        };
        if t < min_t {
            return Err(format!("cycle length {t} below minimum {min_t}"));
        }
        if self.nodes.iter().collect::<BTreeSet<_>>().len() != t {
            return Err("nodes are not distinct".into());
        }
        if self.edges.iter().collect::<BTreeSet<_>>().len() != t {
            return Err("edges are not distinct".into());
        }
        for e in &self.edges {
            if !g.has_edge(e) {
                return Err("edge not in hypergraph".into());
            }
        }
        // v_i, v_{i+1} in e_i for i < t, and v_1, v_t in e_t
        for i in 0..t {
            let a = self.nodes[i];
            let b = self.nodes[(i + 1) % t];
            if !self.edges[i].contains(a) || !self.edges[i].contains(b) {
                return Err(format!("edge {i} misses its endpoints"));
            }
        }
        // membership restrictions: v_i (i >= 2, 1-indexed) lies only in
        // e_{i-1}, e_i; for beta also v_1 lies only in e_1, e_t.
        let only_in = |v: Node, allowed: [usize; 2]| -> bool {
            self.edges
                .iter()
                .enumerate()
                .all(|(j, e)| allowed.contains(&j) || !e.contains(v))
        };
        match self.kind {
            CycleKind::Berge => {}
            CycleKind::Gamma | CycleKind::Beta => {
                for i in 1..t {
                    if !only_in(self.nodes[i], [i - 1, i]) {
                        return Err(format!("interior node {i} lies in an extra cycle edge"));
                    }
                }
                if self.kind == CycleKind::Beta && !only_in(self.nodes[0], [t - 1, 0]) {
                    return Err("closing node lies in an extra cycle edge".into());
                }
            }
        }
        Ok(())
    }
}

/// A running intersection ordering of the maximal edges: each entry after
/// the first carries a back-pointer `j(k) < k` with
/// `p_k ∩ (p_1 ∪ ... ∪ p_{k-1}) ⊆ p_{j(k)}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RipOrdering {
    pub edges: Vec<Edge>,
    /// `back[k]` is `j(k)` for `k >= 1`; `back[0]` is unused and stored as 0.
    pub back: Vec<usize>,
}

impl RipOrdering {
    pub fn validate(&self) -> Result<(), String> {
        let mut union: BTreeSet<Node> = BTreeSet::new();
        for (k, e) in self.edges.iter().enumerate() {
            if k > 0 {
                let j = self.back[k];
                if j >= k {
                    return Err(format!("back-pointer {j} not earlier than {k}"));
                }
                let overlap: Vec<Node> = e
                    .nodes()
                    .iter()
                    .copied()
                    .filter(|v| union.contains(v))
                    .collect();
                if !overlap.iter().all(|v| self.edges[j].contains(*v)) {
                    return Err(format!("running intersection fails at position {k}"));
                }
            }
            union.extend(e.nodes().iter().copied());
        }
        Ok(())
    }
}

/// Everything the classifier can certify, assembled per class.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ReportWitness {
    pub berge_cycle: Option<CycleWitness>,
    pub gamma_cycle: Option<CycleWitness>,
    pub beta_cycle: Option<CycleWitness>,
    pub nest_point_order: Option<Vec<Node>>,
    pub rip_ordering: Option<RipOrdering>,
    /// Maximal edges left alive when the GYO reduction got stuck (non-alpha
    /// case); not claimed to be a canonical cycle.
    pub gyo_residue: Option<Vec<Edge>>,
}

/// The four class flags plus the strongest available witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AcyclicityReport {
    pub berge: bool,
    pub gamma: bool,
    pub beta: bool,
    pub alpha: bool,
    pub witness: ReportWitness,
}

impl AcyclicityReport {
    /// Name of the strongest class the hypergraph belongs to.
    pub fn strongest_class(&self) -> &'static str {
        if self.berge {
            "berge-acyclic"
        } else if self.gamma {
            "gamma-acyclic (not berge)"
        } else if self.beta {
            "beta-acyclic (not gamma)"
        } else if self.alpha {
            "alpha-acyclic (not beta)"
        } else {
            "cyclic (not alpha-acyclic)"
        }
    }

    pub fn hierarchy_consistent(&self) -> bool {
        (!self.berge || self.gamma) && (!self.gamma || self.beta) && (!self.beta || self.alpha)
    }
}

/// Berge-acyclicity via the forest characterization of the incidence graph.
/// A cycle witness is recovered from one incidence-graph cycle.
pub fn is_berge_acyclic(g: &Hypergraph) -> (bool, Option<CycleWitness>) {
    match g.incidence_graph().forest_or_cycle() {
        Ok(()) => (true, None),
        Err(alt) => {
            let nodes: Vec<Node> = alt.iter().map(|&(v, _)| v).collect();
            let edges: Vec<Edge> = alt.iter().map(|&(_, e)| g.edges()[e].clone()).collect();
            let w = CycleWitness {
                kind: CycleKind::Berge,
                nodes,
                edges,
            };
            debug_assert_eq!(w.validate(g), Ok(()));
            (false, Some(w))
        }
    }
}

/// Gamma-acyclicity by definition-faithful backtracking search.
pub fn is_gamma_acyclic(g: &Hypergraph) -> (bool, Option<CycleWitness>) {
    match oracle_find_cycle(g, CycleKind::Gamma) {
        Some(w) => (false, Some(w)),
        None => (true, None),
    }
}

/// Beta-acyclicity by greedy nest point elimination. On success the full
/// elimination order is returned; on failure a beta-cycle found by the
/// oracle search.
pub fn is_beta_acyclic(g: &Hypergraph) -> (bool, Result<Vec<Node>, Box<CycleWitness>>) {
    match nest_point_elimination(g) {
        Some(order) => (true, Ok(order)),
        None => {
            let w = oracle_find_cycle(g, CycleKind::Beta)
                .expect("no nest point elimination order implies a beta-cycle");
            (false, Err(Box::new(w)))
        }
    }
}

/// Greedy nest point elimination over original node identities. Returns the
/// elimination order when every node can be removed.
fn nest_point_elimination(g: &Hypergraph) -> Option<Vec<Node>> {
    // Work on edge sets over the original indices; remove_node semantics
    // (drop remnants below size 2, collapse duplicates) are mirrored here.
    let mut alive: Vec<Node> = g.nodes().collect();
    let mut edges: BTreeSet<Vec<Node>> = g.edges().iter().map(|e| e.nodes().to_vec()).collect();
    let mut order = Vec::new();
    while !alive.is_empty() {
        let pick = alive.iter().copied().find(|&v| {
            let incident: Vec<&Vec<Node>> =
                edges.iter().filter(|e| e.binary_search(&v).is_ok()).collect();
            incident.iter().all(|e| {
                incident
                    .iter()
                    .all(|f| crate::hypergraph::subset_of(e, f) || crate::hypergraph::subset_of(f, e))
            })
        })?;
        order.push(pick);
        alive.retain(|&v| v != pick);
        edges = edges
            .into_iter()
            .map(|e| {
                e.into_iter().filter(|&v| v != pick).collect::<Vec<Node>>()
            })
            .filter(|e| e.len() >= 2)
            .collect();
    }
    Some(order)
}

/// Alpha-acyclicity by GYO-style ear removal on the reduction. On success
/// the reverse removal order is a running intersection ordering of the
/// maximal edges; on failure the stuck residue is returned.
pub fn is_alpha_acyclic(g: &Hypergraph) -> (bool, Result<RipOrdering, Vec<Edge>>) {
    let maximal: Vec<Edge> = g.reduction().edges().to_vec();
    // Note: the reduction preserves node indices because it keeps all nodes.
    let mut alive: Vec<usize> = (0..maximal.len()).collect();
    let mut removed: Vec<(usize, Option<usize>)> = Vec::new(); // (edge idx, container idx)
    loop {
        if alive.is_empty() {
            break;
        }
        if alive.len() == 1 {
            removed.push((alive[0], None));
            alive.clear();
            break;
        }
        // An ear: an edge whose nodes are each private to it or covered by
        // one single other alive edge.
        let mut found = None;
        'outer: for (ai, &ei) in alive.iter().enumerate() {
            let e = &maximal[ei];
            for &gi in alive.iter() {
                if gi == ei {
                    continue;
                }
                let container = &maximal[gi];
                let ok = e.nodes().iter().all(|&v| {
                    container.contains(v)
                        || alive
                            .iter()
                            .all(|&fi| fi == ei || !maximal[fi].contains(v))
                });
                if ok {
                    found = Some((ai, gi));
                    break 'outer;
                }
            }
        }
        match found {
            Some((ai, container)) => {
                let ei = alive.remove(ai);
                removed.push((ei, Some(container)));
            }
            None => {
                let residue: Vec<Edge> = alive.iter().map(|&i| maximal[i].clone()).collect();
                return (false, Err(residue));
            }
        }
    }
    // Reverse removal order: p_1 = last removed. Back-pointers map the
    // recorded container to its position in the ordering.
    let mut edges = Vec::with_capacity(removed.len());
    let mut back = Vec::with_capacity(removed.len());
    let pos_of = |edge_idx: usize, removed: &[(usize, Option<usize>)]| -> usize {
        let ridx = removed.iter().position(|&(e, _)| e == edge_idx).unwrap();
        removed.len() - 1 - ridx
    };
    for (k, &(ei, container)) in removed.iter().rev().enumerate() {
        edges.push(maximal[ei].clone());
        match container {
            None => back.push(0),
            Some(ci) => back.push(pos_of(ci, &removed)),
        }
        debug_assert!(k == 0 || back[k] < k);
    }
    let rip = RipOrdering { edges, back };
    debug_assert_eq!(rip.validate(), Ok(()));
    (true, Ok(rip))
}

/// Run all four tests and assemble the report.
pub fn classify(g: &Hypergraph) -> AcyclicityReport {
    let mut witness = ReportWitness::default();
    let (berge, bw) = is_berge_acyclic(g);
    witness.berge_cycle = bw;
    let (gamma, gw) = is_gamma_acyclic(g);
    witness.gamma_cycle = gw;
    let (beta, bres) = is_beta_acyclic(g);
    match bres {
        Ok(order) => witness.nest_point_order = Some(order),
        Err(w) => witness.beta_cycle = Some(*w),
    }
    let (alpha, ares) = is_alpha_acyclic(g);
    match ares {
        Ok(rip) => witness.rip_ordering = Some(rip),
        Err(residue) => witness.gyo_residue = Some(residue),
    }
    let report = AcyclicityReport {
        berge,
        gamma,
        beta,
        alpha,
        witness,
    };
    debug_assert!(report.hierarchy_consistent());
    report
}

/// Exhaustive backtracking search for a cycle of the given kind, directly
/// over the definition. Exponential worst case; intended for desk-scale
/// cross-validation.
pub fn oracle_find_cycle(g: &Hypergraph, kind: CycleKind) -> Option<CycleWitness> {
    let min_t = match kind {
        CycleKind::Berge => 2,
        CycleKind::Gamma | CycleKind::Beta => 3,
    };
    if g.edge_count() < min_t {
        return None;
    }
    let mut state = Search {
        g,
        kind,
        min_t,
        nodes: Vec::new(),
        edges: Vec::new(),
        node_used: vec![false; g.node_count()],
        edge_used: vec![false; g.edge_count()],
    };
    for v1 in g.nodes() {
        state.nodes.push(v1);
        state.node_used[v1 as usize] = true;
        if let Some(w) = state.extend_edge() {
            return Some(w);
        }
        state.node_used[v1 as usize] = false;
        state.nodes.pop();
    }
    None
}

struct Search<'a> {
    g: &'a Hypergraph,
    kind: CycleKind,
    min_t: usize,
    nodes: Vec<Node>,
    edges: Vec<usize>,
    node_used: Vec<bool>,
    edge_used: Vec<bool>,
}

impl<'a> Search<'a> {
    /// Interior-membership restriction for gamma/beta: each node with an
    /// index restriction may only lie in its two surrounding cycle edges.
    fn membership_ok(&self, new_edge: usize) -> bool {
        if self.kind == CycleKind::Berge {
            return true;
        }
        let e = &self.g.edges()[new_edge];
        let t = self.edges.len(); // position of the new edge (0-based)
        // nodes[i] for i >= 1 may lie only in edges i-1 and i
        for i in 1..self.nodes.len() {
            if i != t && i != t + 1 && e.contains(self.nodes[i]) {
                return false;
            }
        }
        // v_1 restriction for beta: only in e_1 (index 0) and the closing
        // edge (last position). A non-final edge must avoid v_1 unless it is
        // e_1; the final edge is allowed by construction.
        if self.kind == CycleKind::Beta && t != 0 && e.contains(self.nodes[0]) {
            // may only be the closing edge; the caller checks closure, here
            // we reject only when this edge cannot close (handled in
            // extend_node by trying closure first).
            return self.closes_now(new_edge);
        }
        true
    }

    fn closes_now(&self, new_edge: usize) -> bool {
        self.g.edges()[new_edge].contains(self.nodes[0]) && self.edges.len() + 1 >= self.min_t
    }

    fn extend_edge(&mut self) -> Option<CycleWitness> {
        let last = *self.nodes.last().unwrap();
        for ei in 0..self.g.edge_count() {
            if self.edge_used[ei] || !self.g.edges()[ei].contains(last) {
                continue;
            }
            if !self.membership_ok(ei) {
                continue;
            }
            self.edges.push(ei);
            self.edge_used[ei] = true;
            // close the cycle here?
            if self.edges.len() >= self.min_t && self.g.edges()[ei].contains(self.nodes[0]) {
                if let Some(w) = self.try_finish() {
                    return Some(w);
                }
            }
            if let Some(w) = self.extend_node() {
                return Some(w);
            }
            self.edge_used[ei] = false;
            self.edges.pop();
        }
        None
    }

    fn extend_node(&mut self) -> Option<CycleWitness> {
        let ei = *self.edges.last().unwrap();
        let edge_nodes: Vec<Node> = self.g.edges()[ei].nodes().to_vec();
        for v in edge_nodes {
            if self.node_used[v as usize] {
                continue;
            }
            // gamma/beta: an interior node may only lie in its surrounding
            // cycle edges; check against edges already chosen.
            if self.kind != CycleKind::Berge {
                let idx = self.nodes.len(); // position of the new node
                let bad = self
                    .edges
                    .iter()
                    .enumerate()
                    .any(|(j, &ej)| j != idx - 1 && j != idx && self.g.edges()[ej].contains(v));
                if bad {
                    continue;
                }
            }
            self.nodes.push(v);
            self.node_used[v as usize] = true;
            if let Some(w) = self.extend_edge() {
                return Some(w);
            }
            self.node_used[v as usize] = false;
            self.nodes.pop();
        }
        None
    }

    fn try_finish(&self) -> Option<CycleWitness> {
        let w = CycleWitness {
            kind: self.kind,
            nodes: self.nodes.clone(),
            edges: self.edges.iter().map(|&i| self.g.edges()[i].clone()).collect(),
        };
        w.validate(self.g).ok().map(|_| w)
    }
}

/// Replay a nest point order through `remove_node`, checking that each step
/// eliminates a nest point. Used by the verification suites.
pub fn validate_nest_order(g: &Hypergraph, order: &[Node]) -> Result<(), String> {
    if order.len() != g.node_count() {
        return Err(format!(
            "order length {} != node count {}",
            order.len(),
            g.node_count()
        ));
    }
    let mut cur = g.clone();
    let names: Vec<String> = order.iter().map(|&v| g.node_name(v).to_string()).collect();
    for name in &names {
        let v = cur
            .node_by_name(name)
            .ok_or_else(|| format!("node {name} already removed"))?;
        let incident = cur.incident_edges(v);
        let nested = incident.iter().all(|e| {
            incident
                .iter()
                .all(|f| e.is_subset_of(f) || f.is_subset_of(e))
        });
        if !nested {
            return Err(format!("node {name} is not a nest point at its turn"));
        }
        cur = cur.remove_node(v).map_err(|e| e.to_string())?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn berge_examples() {
        let g = Hypergraph::from_dense(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        assert!(is_berge_acyclic(&g).0);

        // two edges sharing two nodes form a t=2 Berge cycle
        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        let (ok, w) = is_berge_acyclic(&g);
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.validate(&g), Ok(()));
        assert_eq!(w.len(), 2);

        let g = Hypergraph::from_dense(3, &[&[1, 2, 3]]).unwrap();
        assert!(is_berge_acyclic(&g).0);
    }

    #[test]
    fn gamma_examples() {
        // fewer than 3 edges: gamma-acyclic regardless of Berge status
        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        assert!(is_gamma_acyclic(&g).0);
        assert!(!is_berge_acyclic(&g).0);

        // {12, 23, 123} has the gamma-cycle 2,{1,2},1,{1,2,3},3,{2,3}
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 2, 3]]).unwrap();
        let (ok, w) = is_gamma_acyclic(&g);
        assert!(!ok);
        let w = w.unwrap();
        assert_eq!(w.validate(&g), Ok(()));
        assert_eq!(w.len(), 3);

        let g = Hypergraph::from_dense(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        assert!(is_gamma_acyclic(&g).0);
    }

    #[test]
    fn beta_examples() {
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 2, 3]]).unwrap();
        let (ok, res) = is_beta_acyclic(&g);
        assert!(ok);
        let order = res.unwrap();
        assert_eq!(order[0], 0); // lowest-index nest point: node "1"
        assert_eq!(validate_nest_order(&g, &order), Ok(()));

        // the triangle is a beta-cycle
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        let (ok, res) = is_beta_acyclic(&g);
        assert!(!ok);
        let w = res.unwrap_err();
        assert_eq!(w.validate(&g), Ok(()));
        assert_eq!(w.len(), 3);

        let g = Hypergraph::from_dense(4, &[]).unwrap();
        let (ok, res) = is_beta_acyclic(&g);
        assert!(ok);
        assert_eq!(res.unwrap().len(), 4);
    }

    #[test]
    fn alpha_examples() {
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]).unwrap();
        let (ok, res) = is_alpha_acyclic(&g);
        assert!(ok);
        let rip = res.unwrap();
        assert_eq!(rip.edges.len(), 1); // single maximal edge
        assert_eq!(rip.validate(), Ok(()));

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        let (ok, res) = is_alpha_acyclic(&g);
        assert!(!ok);
        assert_eq!(res.unwrap_err().len(), 3);

        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        assert!(is_alpha_acyclic(&g).0);
    }

    #[test]
    fn alpha_agrees_on_reduction() {
        let g = Hypergraph::from_dense(4, &[&[1, 2], &[1, 2, 3], &[2, 3, 4], &[3, 4]]).unwrap();
        assert_eq!(is_alpha_acyclic(&g).0, is_alpha_acyclic(&g.reduction()).0);
    }

    #[test]
    fn classify_examples() {
        let g = Hypergraph::from_dense(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        let r = classify(&g);
        assert!(r.berge && r.gamma && r.beta && r.alpha);
        assert!(r.witness.nest_point_order.is_some());
        assert!(r.witness.rip_ordering.is_some());

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 2, 3]]).unwrap();
        let r = classify(&g);
        assert!(!r.berge && !r.gamma && r.beta && r.alpha);
        assert!(r.witness.berge_cycle.is_some());
        assert!(r.witness.gamma_cycle.is_some());
        assert_eq!(r.strongest_class(), "beta-acyclic (not gamma)");

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 3], &[1, 2, 3]]).unwrap();
        let r = classify(&g);
        assert!(!r.beta && r.alpha);
        assert_eq!(r.strongest_class(), "alpha-acyclic (not beta)");

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        let r = classify(&g);
        assert!(!r.alpha);
        assert!(r.witness.gyo_residue.is_some());
        assert_eq!(r.strongest_class(), "cyclic (not alpha-acyclic)");
    }

    #[test]
    fn oracle_examples() {
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        let w = oracle_find_cycle(&g, CycleKind::Beta).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.validate(&g), Ok(()));

        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        assert!(oracle_find_cycle(&g, CycleKind::Gamma).is_none());

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 2, 3]]).unwrap();
        let w = oracle_find_cycle(&g, CycleKind::Gamma).unwrap();
        assert_eq!(w.validate(&g), Ok(()));
    }

    #[test]
    fn oracle_agrees_with_classifiers_small() {
        // all hypergraphs on 3 nodes
        let all_edges: Vec<Vec<u32>> = vec![vec![1, 2], vec![1, 3], vec![2, 3], vec![1, 2, 3]];
        for mask in 0u32..16 {
            let edges: Vec<&[u32]> = all_edges
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.as_slice())
                .collect();
            let g = Hypergraph::from_dense(3, &edges).unwrap();
            assert_eq!(
                is_berge_acyclic(&g).0,
                oracle_find_cycle(&g, CycleKind::Berge).is_none()
            );
            assert_eq!(
                is_gamma_acyclic(&g).0,
                oracle_find_cycle(&g, CycleKind::Gamma).is_none()
            );
            assert_eq!(
                is_beta_acyclic(&g).0,
                oracle_find_cycle(&g, CycleKind::Beta).is_none()
            );
            assert!(classify(&g).hierarchy_consistent());
        }
    }
}
