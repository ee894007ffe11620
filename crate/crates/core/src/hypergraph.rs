//! Hypergraph representation and the structural operations shared by the
//! acyclicity tests, the relaxations and the extended formulations.
//!
//! Nodes are opaque strings mapped to dense indices; edges are kept in
//! sorted-index canonical form so set equality is well defined. All values
//! are immutable after construction and all operations are pure.

use std::collections::{BTreeMap, BTreeSet};

use crate::exactlp::Rational;

/// Dense node index, local to one hypergraph.
pub type Node = u32;

/// An edge: a sorted set of at least two node indices.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vec<Node>);

impl Edge {
    /// Canonicalize a node list into an edge. Fails on loops (|e| < 2 after
    /// deduplication is allowed to the caller only via `try_new`).
    pub fn try_new(mut nodes: Vec<Node>) -> Result<Edge, HgError> {
        nodes.sort_unstable();
        nodes.dedup();
        if nodes.len() < 2 {
            return Err(HgError::LoopEdge);
        }
        Ok(Edge(nodes))
    }

    pub fn nodes(&self) -> &[Node] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Node) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Edge) -> bool {
        subset_of(&self.0, &other.0)
    }

    pub fn intersection(&self, other: &Edge) -> Vec<Node> {
        self.0
            .iter()
            .copied()
            .filter(|v| other.contains(*v))
            .collect()
    }
}

pub(crate) fn subset_of(a: &[Node], b: &[Node]) -> bool {
    a.iter().all(|v| b.binary_search(v).is_ok())
}

/// Errors raised by hypergraph construction and operations.
#[derive(Debug, Clone, thiserror::Error)]
pub enum HgError {
    #[error("edges must have at least two nodes")]
    LoopEdge,
    #[error("parallel edge: {0:?} appears twice")]
    ParallelEdge(Vec<String>),
    #[error("edge references unknown node {0:?}")]
    UnknownNode(String),
    #[error("duplicate node name {0:?}")]
    DuplicateNode(String),
    #[error("node set is not a subset of the hypergraph nodes")]
    NotSubset,
    #[error("node {0} out of range")]
    NodeOutOfRange(Node),
    #[error("rank is undefined on an edgeless hypergraph")]
    EdgelessRank,
    #[error("edge {0:?} is not an edge of the hypergraph")]
    NoSuchEdge(Vec<String>),
    #[error("invalid node name {0:?} (must be nonempty, no comma)")]
    BadNodeName(String),
}

/// A hypergraph without loops or parallel edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    names: Vec<String>,
    edges: Vec<Edge>,
}

impl Hypergraph {
    /// Build from node names and edges given as name lists.
    pub fn new(names: Vec<String>, edges_by_name: &[Vec<String>]) -> Result<Hypergraph, HgError> {
        let mut index = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() || n.contains(',') {
                return Err(HgError::BadNodeName(n.clone()));
            }
            if index.insert(n.clone(), i as Node).is_some() {
                return Err(HgError::DuplicateNode(n.clone()));
            }
        }
        let mut edges = Vec::new();
        for e in edges_by_name {
            let mut ids = Vec::with_capacity(e.len());
            for n in e {
                match index.get(n) {
                    Some(&i) => ids.push(i),
                    None => return Err(HgError::UnknownNode(n.clone())),
                }
            }
            if ids.len() != ids.iter().collect::<BTreeSet<_>>().len() {
                return Err(HgError::LoopEdge);
            }
            edges.push(Edge::try_new(ids)?);
        }
        edges.sort();
        if edges.windows(2).any(|w| w[0] == w[1]) {
            let dup = edges
                .windows(2)
                .find(|w| w[0] == w[1])
                .map(|w| w[0].clone())
                .unwrap();
            let names_of = dup.nodes().iter().map(|&v| names[v as usize].clone()).collect();
            return Err(HgError::ParallelEdge(names_of));
        }
        Ok(Hypergraph { names, edges })
    }

    /// Build on nodes labeled `1..=n`, with edges given as 1-based labels.
    pub fn from_dense(n: u32, edges: &[&[u32]]) -> Result<Hypergraph, HgError> {
        let names = (1..=n).map(|i| i.to_string()).collect();
        let by_name: Vec<Vec<String>> = edges
            .iter()
            .map(|e| e.iter().map(|v| v.to_string()).collect())
            .collect();
        Hypergraph::new(names, &by_name)
    }

    /// Internal constructor from already-canonical parts.
    pub(crate) fn from_parts(names: Vec<String>, mut edges: Vec<Edge>) -> Hypergraph {
        edges.sort();
        edges.dedup();
        Hypergraph { names, edges }
    }

    pub fn node_count(&self) -> usize {
        self.names.len()
    }

    pub fn nodes(&self) -> impl Iterator<Item = Node> + '_ {
        (0..self.names.len() as Node).into_iter()
    }

    pub fn node_name(&self, v: Node) -> &str {
        &self.names[v as usize]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn node_by_name(&self, name: &str) -> Option<Node> {
        self.names.iter().position(|n| n == name).map(|i| i as Node)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, e: &Edge) -> bool {
        self.edges.binary_search(e).is_ok()
    }

    /// Edges containing node `v`, in canonical edge order.
    pub fn incident_edges(&self, v: Node) -> Vec<&Edge> {
        self.edges.iter().filter(|e| e.contains(v)).collect()
    }

    /// Render an edge as its sorted node-name list.
    pub fn edge_names(&self, e: &Edge) -> Vec<String> {
        e.nodes().iter().map(|&v| self.names[v as usize].clone()).collect()
    }

    /// Maximum edge cardinality. Undefined on edgeless hypergraphs.
    pub fn rank(&self) -> Result<usize, HgError> {
        self.edges
            .iter()
            .map(|e| e.len())
            .max()
            .ok_or(HgError::EdgelessRank)
    }

    /// The sub-hypergraph of maximal edges (edges not contained in another).
    pub fn reduction(&self) -> Hypergraph {
        let maximal: Vec<Edge> = self
            .edges
            .iter()
            .filter(|e| {
                !self
                    .edges
                    .iter()
                    .any(|f| f != *e && e.is_subset_of(f))
            })
            .cloned()
            .collect();
        Hypergraph::from_parts(self.names.clone(), maximal)
    }

    /// Section hypergraph induced by a node subset: keeps the nodes of `keep`
    /// and the edges fully contained in it.
    pub fn section(&self, keep: &BTreeSet<Node>) -> Result<Hypergraph, HgError> {
        if let Some(&v) = keep.iter().find(|&&v| v as usize >= self.names.len()) {
            return Err(HgError::NodeOutOfRange(v));
        }
        // old index -> new dense index, preserving order
        let kept: Vec<Node> = self.nodes().filter(|v| keep.contains(v)).collect();
        let remap: BTreeMap<Node, Node> = kept
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as Node))
            .collect();
        let names = kept.iter().map(|&v| self.names[v as usize].clone()).collect();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.nodes().iter().all(|v| keep.contains(v)))
            .map(|e| Edge(e.nodes().iter().map(|v| remap[v]).collect()))
            .collect();
        Ok(Hypergraph::from_parts(names, edges))
    }

    /// Remove a node: drop it from the node set, shrink its edges, discard
    /// remnants of size < 2 and collapse duplicates.
    pub fn remove_node(&self, v: Node) -> Result<Hypergraph, HgError> {
        if v as usize >= self.names.len() {
            return Err(HgError::NodeOutOfRange(v));
        }
        let kept: Vec<Node> = self.nodes().filter(|&u| u != v).collect();
        let remap: BTreeMap<Node, Node> = kept
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new as Node))
            .collect();
        let names = kept.iter().map(|&u| self.names[u as usize].clone()).collect();
        let mut edges = Vec::new();
        for e in &self.edges {
            let shrunk: Vec<Node> = e
                .nodes()
                .iter()
                .filter(|&&u| u != v)
                .map(|u| remap[u])
                .collect();
            if shrunk.len() >= 2 {
                edges.push(Edge(shrunk));
            }
        }
        Ok(Hypergraph::from_parts(names, edges))
    }

    /// Bipartite incidence structure: node-side vertices are the hypergraph
    /// nodes, edge-side vertices are the edges, adjacency is membership.
    pub fn incidence_graph(&self) -> IncidenceGraph {
        let adj = self
            .nodes()
            .map(|v| {
                self.edges
                    .iter()
                    .enumerate()
                    .filter(|(_, e)| e.contains(v))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        IncidenceGraph {
            node_count: self.node_count(),
            edge_count: self.edge_count(),
            node_to_edges: adj,
        }
    }

    /// Graph on the nodes with an edge wherever two nodes co-occur in a
    /// hyperedge; every hyperedge induces a clique.
    pub fn intersection_graph(&self) -> SimpleGraph {
        let mut adj = vec![BTreeSet::new(); self.node_count()];
        for e in &self.edges {
            let ns = e.nodes();
            for i in 0..ns.len() {
                for j in i + 1..ns.len() {
                    adj[ns[i] as usize].insert(ns[j]);
                    adj[ns[j] as usize].insert(ns[i]);
                }
            }
        }
        SimpleGraph { adj }
    }

    /// Edges adjacent to `e0`: distinct edges meeting it in at least one
    /// node. Edges fully contained in `e0` count as adjacent.
    pub fn adjacent_edges(&self, e0: &Edge) -> Result<Vec<&Edge>, HgError> {
        if !self.has_edge(e0) {
            return Err(HgError::NoSuchEdge(self.edge_names(e0)));
        }
        Ok(self
            .edges
            .iter()
            .filter(|e| *e != e0 && !e.intersection(e0).is_empty())
            .collect())
    }
}

/// Bipartite node–edge incidence graph.
pub struct IncidenceGraph {
    pub node_count: usize,
    pub edge_count: usize,
    /// For each hypergraph node, the indices of the edges containing it.
    pub node_to_edges: Vec<Vec<usize>>,
}

impl IncidenceGraph {
    pub fn vertex_count(&self) -> usize {
        self.node_count + self.edge_count
    }

    pub fn arc_count(&self) -> usize {
        self.node_to_edges.iter().map(|v| v.len()).sum()
    }

    /// Forest check. On failure returns one cycle as an alternating
    /// `(node, edge-index)` sequence `v1, e1, v2, e2, ..., vt, et` with
    /// `vi, v(i+1) ∈ ei` cyclically.
    pub fn forest_or_cycle(&self) -> Result<(), Vec<(Node, usize)>> {
        // DFS over the bipartite graph; vertices 0..n are nodes, n..n+m edges.
        let n = self.node_count;
        let m = self.edge_count;
        let mut edge_to_nodes: Vec<Vec<Node>> = vec![Vec::new(); m];
        for (v, es) in self.node_to_edges.iter().enumerate() {
            for &e in es {
                edge_to_nodes[e].push(v as Node);
            }
        }
        let total = n + m;
        let mut parent: Vec<Option<usize>> = vec![None; total];
        let mut seen = vec![false; total];
        for start in 0..total {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                let neighbors: Vec<usize> = if x < n {
                    self.node_to_edges[x].iter().map(|&e| n + e).collect()
                } else {
                    edge_to_nodes[x - n].iter().map(|&v| v as usize).collect()
                };
                for y in neighbors {
                    if Some(y) == parent[x] {
                        continue;
                    }
                    if seen[y] {
                        // Found a cycle through arc (x, y): walk both ancestor
                        // chains to their meeting point.
                        let path_to_root = |mut z: usize| {
                            let mut p = vec![z];
                            while let Some(w) = parent[z] {
                                p.push(w);
                                z = w;
                            }
                            p
                        };
                        let px = path_to_root(x);
                        let py = path_to_root(y);
                        let inx: std::collections::HashSet<usize> = px.iter().copied().collect();
                        let meet = *py.iter().find(|z| inx.contains(z)).unwrap();
                        let mut cycle: Vec<usize> =
                            px.iter().take_while(|&&z| z != meet).copied().collect();
                        cycle.push(meet);
                        let mut back: Vec<usize> =
                            py.iter().take_while(|&&z| z != meet).copied().collect();
                        back.reverse();
                        cycle.extend(back);
                        // cycle alternates node/edge vertices; rotate to start
                        // at a node and pair them up.
                        let rot = cycle.iter().position(|&z| z < n).unwrap();
                        cycle.rotate_left(rot);
                        let mut alt = Vec::new();
                        let t = cycle.len();
                        debug_assert!(t % 2 == 0 && t >= 4);
                        for i in (0..t).step_by(2) {
                            alt.push((cycle[i] as Node, cycle[i + 1] - n));
                        }
                        return Err(alt);
                    }
                    seen[y] = true;
                    parent[y] = Some(x);
                    stack.push(y);
                }
            }
        }
        Ok(())
    }
}

/// Undirected simple graph on dense vertex indices.
pub struct SimpleGraph {
    pub adj: Vec<BTreeSet<Node>>,
}

impl SimpleGraph {
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn has_arc(&self, u: Node, v: Node) -> bool {
        self.adj[u as usize].contains(&v)
    }

    pub fn arc_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }
}

/// A (BPO) problem: hypergraph plus rational costs on nodes and edges.
#[derive(Debug, Clone, PartialEq)]
pub struct Instance {
    hypergraph: Hypergraph,
    node_costs: Vec<Rational>,
    edge_costs: Vec<Rational>,
}

impl Instance {
    /// Costs are given densely: `node_costs[v]` and `edge_costs[i]` aligned
    /// with the canonical edge order. Edge costs must be nonzero.
    pub fn new(
        hypergraph: Hypergraph,
        node_costs: Vec<Rational>,
        edge_costs: Vec<Rational>,
    ) -> Result<Instance, String> {
        if node_costs.len() != hypergraph.node_count() {
            return Err(format!(
                "expected {} node costs, got {}",
                hypergraph.node_count(),
                node_costs.len()
            ));
        }
        if edge_costs.len() != hypergraph.edge_count() {
            return Err(format!(
                "expected {} edge costs, got {}",
                hypergraph.edge_count(),
                edge_costs.len()
            ));
        }
        if let Some(i) = edge_costs.iter().position(|c| c.is_zero()) {
            return Err(format!(
                "edge cost for {:?} is zero",
                hypergraph.edge_names(&hypergraph.edges()[i])
            ));
        }
        Ok(Instance {
            hypergraph,
            node_costs,
            edge_costs,
        })
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hypergraph
    }

    pub fn node_cost(&self, v: Node) -> &Rational {
        &self.node_costs[v as usize]
    }

    pub fn edge_cost(&self, i: usize) -> &Rational {
        &self.edge_costs[i]
    }

    pub fn node_costs(&self) -> &[Rational] {
        &self.node_costs
    }

    pub fn edge_costs(&self) -> &[Rational] {
        &self.edge_costs
    }
}

use num::Zero;

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[Node]) -> BTreeSet<Node> {
        v.iter().copied().collect()
    }

    #[test]
    fn rank_examples() {
        let g = Hypergraph::from_dense(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        assert_eq!(g.rank().unwrap(), 3);
        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        assert_eq!(g.rank().unwrap(), 2);
        let g = Hypergraph::from_dense(4, &[&[1, 2], &[1, 2, 3, 4]]).unwrap();
        assert_eq!(g.rank().unwrap(), 4);
        let g = Hypergraph::from_dense(3, &[]).unwrap();
        assert!(matches!(g.rank(), Err(HgError::EdgelessRank)));
    }

    #[test]
    fn construction_rejects_invalid() {
        assert!(Hypergraph::from_dense(3, &[&[1]]).is_err());
        assert!(Hypergraph::from_dense(3, &[&[1, 1]]).is_err());
        assert!(Hypergraph::from_dense(3, &[&[1, 2], &[2, 1]]).is_err());
        assert!(Hypergraph::from_dense(2, &[&[1, 3]]).is_err());
        let dup = Hypergraph::new(
            vec!["a".into(), "a".into()],
            &[],
        );
        assert!(matches!(dup, Err(HgError::DuplicateNode(_))));
    }

    #[test]
    fn reduction_examples() {
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[1, 2, 3]]).unwrap();
        let r = g.reduction();
        assert_eq!(r.edges().len(), 1);
        assert_eq!(r.edges()[0].nodes(), &[0, 1, 2]);

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3]]).unwrap();
        assert_eq!(g.reduction(), g);

        let g = Hypergraph::from_dense(4, &[&[1, 2], &[1, 2, 3], &[3, 4]]).unwrap();
        let r = g.reduction();
        assert_eq!(r.edge_count(), 2);
        assert!(r.has_edge(&Edge::try_new(vec![0, 1, 2]).unwrap()));
        assert!(r.has_edge(&Edge::try_new(vec![2, 3]).unwrap()));
    }

    #[test]
    fn section_examples() {
        let g = Hypergraph::from_dense(4, &[&[1, 2], &[3, 4], &[1, 2, 3, 4]]).unwrap();
        let s = g.section(&set(&[0, 1, 2])).unwrap();
        assert_eq!(s.node_count(), 3);
        assert_eq!(s.edge_count(), 1);
        assert_eq!(s.edges()[0].nodes(), &[0, 1]);

        let full = g.section(&g.nodes().collect()).unwrap();
        assert_eq!(full, g);

        let empty = g.section(&BTreeSet::new()).unwrap();
        assert_eq!(empty.node_count(), 0);
        assert_eq!(empty.edge_count(), 0);

        assert!(g.section(&set(&[0, 9])).is_err());
    }

    #[test]
    fn remove_node_examples() {
        // duplicates collapse
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[1, 2, 3]]).unwrap();
        let h = g.remove_node(2).unwrap(); // node "3" has index 2
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edge_names(&h.edges()[0]), vec!["1", "2"]);

        // size-1 remnant dropped
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3]]).unwrap();
        let h = g.remove_node(0).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edge_names(&h.edges()[0]), vec!["2", "3"]);

        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap();
        let h = g.remove_node(3).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert_eq!(h.edge_names(&h.edges()[0]), vec!["1", "2", "3"]);
        assert_eq!(h.edge_names(&h.edges()[1]), vec!["2", "3"]);

        assert!(g.remove_node(7).is_err());
    }

    #[test]
    fn incidence_graph_examples() {
        // two triangles sharing a node: a tree with 7 vertices and 6 arcs
        let g = Hypergraph::from_dense(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        let ig = g.incidence_graph();
        assert_eq!(ig.vertex_count(), 7);
        assert_eq!(ig.arc_count(), 6);
        assert!(ig.forest_or_cycle().is_ok());

        // single edge: path on 3 vertices
        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        let ig = g.incidence_graph();
        assert_eq!(ig.vertex_count(), 3);
        assert_eq!(ig.arc_count(), 2);

        // triangle graph: contains a cycle of length 6
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap();
        let ig = g.incidence_graph();
        let cycle = ig.forest_or_cycle().unwrap_err();
        assert_eq!(cycle.len(), 3); // 3 node/edge pairs = length-6 cycle
    }

    #[test]
    fn intersection_graph_examples() {
        let g = Hypergraph::from_dense(3, &[&[1, 2, 3]]).unwrap();
        let ig = g.intersection_graph();
        assert_eq!(ig.arc_count(), 3);

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3]]).unwrap();
        let ig = g.intersection_graph();
        assert_eq!(ig.arc_count(), 2);
        assert!(ig.has_arc(0, 1) && ig.has_arc(1, 2) && !ig.has_arc(0, 2));

        let g = Hypergraph::from_dense(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap();
        let ig = g.intersection_graph();
        assert_eq!(ig.arc_count(), 6);
    }

    #[test]
    fn adjacent_edges_examples() {
        let g =
            Hypergraph::from_dense(8, &[&[1, 2, 3, 4], &[1, 2, 5], &[3, 4, 6], &[7, 8]]).unwrap();
        let e0 = Edge::try_new(vec![0, 1, 2, 3]).unwrap();
        let adj = g.adjacent_edges(&e0).unwrap();
        assert_eq!(adj.len(), 2);

        let g = Hypergraph::from_dense(4, &[&[1, 2], &[3, 4]]).unwrap();
        let e0 = Edge::try_new(vec![0, 1]).unwrap();
        assert!(g.adjacent_edges(&e0).unwrap().is_empty());

        // containment counts as adjacency
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[1, 2, 3]]).unwrap();
        let e0 = Edge::try_new(vec![0, 1]).unwrap();
        let adj = g.adjacent_edges(&e0).unwrap();
        assert_eq!(adj.len(), 1);
        assert_eq!(adj[0].nodes(), &[0, 1, 2]);

        let missing = Edge::try_new(vec![0, 2]).unwrap();
        assert!(g.adjacent_edges(&missing).is_err());
    }

    // Random small hypergraph for the property tests.
    fn arb_hypergraph() -> impl Strategy<Value = Hypergraph> {
        (2u32..7, proptest::collection::vec(proptest::collection::vec(0u32..6, 2..5), 0..8))
            .prop_map(|(n, raw)| {
                let mut edges: Vec<Edge> = raw
                    .into_iter()
                    .filter_map(|e| {
                        let e: Vec<Node> = e.into_iter().map(|v| v % n).collect();
                        Edge::try_new(e).ok()
                    })
                    .collect();
                edges.sort();
                edges.dedup();
                Hypergraph::from_parts((1..=n).map(|i| i.to_string()).collect(), edges)
            })
    }

    proptest! {
        #[test]
        fn reduction_is_idempotent(g in arb_hypergraph()) {
            let r = g.reduction();
            prop_assert_eq!(r.reduction(), r);
        }

        #[test]
        fn section_composes(g in arb_hypergraph()) {
            let all: BTreeSet<Node> = g.nodes().collect();
            prop_assert_eq!(g.section(&all).unwrap(), g.clone());
            let a: BTreeSet<Node> = g.nodes().filter(|v| v % 2 == 0).collect();
            let b: BTreeSet<Node> = a.iter().copied().filter(|v| v % 3 != 1).collect();
            // section(section(G, A), B) = section(G, B) for B ⊆ A, modulo index remap
            let inner = g.section(&a).unwrap();
            let b_in_inner: BTreeSet<Node> = inner
                .nodes()
                .filter(|&v| {
                    let name = inner.node_name(v);
                    g.node_by_name(name).map(|orig| b.contains(&orig)).unwrap_or(false)
                })
                .collect();
            prop_assert_eq!(inner.section(&b_in_inner).unwrap(), g.section(&b).unwrap());
        }

        #[test]
        fn remove_node_monotone(g in arb_hypergraph()) {
            for v in g.nodes() {
                let h = g.remove_node(v).unwrap();
                prop_assert!(h.edge_count() <= g.edge_count());
                if let (Ok(rh), Ok(rg)) = (h.rank(), g.rank()) {
                    prop_assert!(rh <= rg);
                }
            }
        }

        #[test]
        fn intersection_graph_covered(g in arb_hypergraph()) {
            let ig = g.intersection_graph();
            // every hyperedge induces a clique
            for e in g.edges() {
                let ns = e.nodes();
                for i in 0..ns.len() {
                    for j in i + 1..ns.len() {
                        prop_assert!(ig.has_arc(ns[i], ns[j]));
                    }
                }
            }
            // conversely every arc is covered by some hyperedge
            for u in g.nodes() {
                for &v in &ig.adj[u as usize] {
                    prop_assert!(g.edges().iter().any(|e| e.contains(u) && e.contains(v)));
                }
            }
        }
    }
}
