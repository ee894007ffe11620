//! Extended formulations for the multilinear polytope: the complete
//! (lift-and-project) block, the alpha-acyclic construction glued along a
//! running intersection ordering, the junction construction over a tree
//! decomposition of the intersection graph, and the beta-acyclic
//! construction via nest point elimination with memoized chain blocks.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::{Mutex, OnceLock};

use num::Zero;

use crate::acyclicity::{is_alpha_acyclic, is_beta_acyclic};
use crate::exactlp::{
    hull_facets, rat, LinearConstraint, LpError, Point, PolyhedronH, Rational, Sense,
    SimplexSession, Var,
};
use crate::guards::{check, GuardError, Guards};
use crate::hypergraph::{Edge, Hypergraph, Node, SimpleGraph};
use crate::oracle::multilinear_polytope;
use crate::relaxations::{enumerate_s, LiftedSpace};

#[derive(Debug, Clone, thiserror::Error)]
pub enum ExtformError {
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// Which construction produced a formulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Alpha,
    Junction,
    Beta,
    Block,
}

impl Provenance {
    pub fn name(&self) -> &'static str {
        match self {
            Provenance::Alpha => "alpha",
            Provenance::Junction => "junction",
            Provenance::Beta => "beta",
            Provenance::Block => "block",
        }
    }
}

/// Ground set of one lambda block, needed to interpret its variables.
#[derive(Debug, Clone)]
pub struct BlockInfo {
    pub id: u32,
    pub ground: Vec<Node>,
}

/// A polyhedron over original-plus-auxiliary variables whose projection
/// onto the original variables is the multilinear polytope.
#[derive(Debug, Clone)]
pub struct ExtendedFormulation {
    pub polyhedron: PolyhedronH,
    pub original_vars: Vec<Var>,
    pub aux_vars: Vec<Var>,
    pub provenance: Provenance,
    pub blocks: Vec<BlockInfo>,
}

impl ExtendedFormulation {
    pub fn lambda_count(&self) -> usize {
        self.polyhedron
            .vars()
            .iter()
            .filter(|v| matches!(v, Var::Lambda(_, _)))
            .count()
    }

    pub fn var_count(&self) -> usize {
        self.polyhedron.dim()
    }

    pub fn constraint_count(&self) -> usize {
        self.polyhedron.constraints().len()
    }

    /// Do all coefficients and right-hand sides lie in {0, +1, -1}?
    pub fn unit_coefficients(&self) -> bool {
        let unit = |r: &Rational| r.is_zero() || r == &rat(1) || r == &rat(-1);
        self.polyhedron
            .constraints()
            .iter()
            .all(|c| unit(&c.rhs) && c.coeffs().values().all(unit))
    }
}

/// The constraints of one complete block: lambda variables over all subsets
/// of the ground set `f`, the simplex conditions, and linking equations for
/// the node variables and every linked monomial.
fn complete_block_system(
    block_id: u32,
    f: &[Node],
    linked: &[Vec<Node>],
) -> (Vec<Var>, Vec<LinearConstraint>) {
    let k = f.len();
    let masks = 1u64 << k;
    let lambdas: Vec<Var> = (0..masks).map(|m| Var::Lambda(block_id, m)).collect();
    let mut cons = Vec::new();
    cons.push(LinearConstraint::eq(
        lambdas.iter().map(|l| (l.clone(), rat(1))),
        rat(1),
    ));
    for l in &lambdas {
        cons.push(LinearConstraint::le([(l.clone(), rat(-1))], rat(0)));
    }
    for (i, &v) in f.iter().enumerate() {
        let mut coeffs = vec![(Var::Node(v), rat(1))];
        for m in 0..masks {
            if m & (1 << i) != 0 {
                coeffs.push((Var::Lambda(block_id, m), rat(-1)));
            }
        }
        cons.push(LinearConstraint::eq(coeffs, rat(0)));
    }
    for p in linked {
        let pmask: u64 = p
            .iter()
            .map(|v| 1u64 << f.iter().position(|x| x == v).expect("linked set inside f"))
            .fold(0, |a, b| a | b);
        let mut coeffs = vec![(Var::set(p.clone()), rat(1))];
        for m in 0..masks {
            if m & pmask == pmask {
                coeffs.push((Var::Lambda(block_id, m), rat(-1)));
            }
        }
        cons.push(LinearConstraint::eq(coeffs, rat(0)));
    }
    (lambdas, cons)
}

/// A standalone complete block as an extended formulation: the projection
/// onto the z variables is the multilinear polytope of the complete
/// structure on `f` restricted to the linked monomials.
pub fn complete_block(
    f: &[Node],
    linked: &[Vec<Node>],
    guards: &Guards,
) -> Result<ExtendedFormulation, ExtformError> {
    check("complete block ground set", f.len(), guards.block_cap)?;
    let mut fs = f.to_vec();
    fs.sort_unstable();
    fs.dedup();
    let mut linked: Vec<Vec<Node>> = linked
        .iter()
        .map(|p| {
            let mut p = p.clone();
            p.sort_unstable();
            p.dedup();
            p
        })
        .collect();
    linked.sort();
    linked.dedup();
    for p in &linked {
        if p.len() < 2 || !p.iter().all(|v| fs.contains(v)) {
            return Err(ExtformError::Precondition(format!(
                "linked set {p:?} is not a subset of the ground set of size >= 2"
            )));
        }
    }
    let (lambdas, cons) = complete_block_system(0, &fs, &linked);
    let mut original: Vec<Var> = fs.iter().map(|&v| Var::Node(v)).collect();
    original.extend(linked.iter().map(|p| Var::set(p.clone())));
    let mut vars = original.clone();
    vars.extend(lambdas.clone());
    let mut poly = PolyhedronH::new(vars);
    for c in cons {
        poly.push(c);
    }
    Ok(ExtendedFormulation {
        polyhedron: poly,
        original_vars: original,
        aux_vars: lambdas,
        provenance: Provenance::Block,
        blocks: vec![BlockInfo { id: 0, ground: fs }],
    })
}

/// Shared assembly for the alpha and junction constructions: one complete
/// block per covering set, glued along running intersections by linking all
/// subsets (size >= 2) of each intersection in both touching blocks.
fn rip_glued_ef(
    g: &Hypergraph,
    ordered: &[Vec<Node>],
    back: &[usize],
    singleton_blocks: &[Node],
    provenance: Provenance,
    guards: &Guards,
) -> Result<ExtendedFormulation, ExtformError> {
    for set in ordered {
        check("complete block ground set", set.len(), guards.block_cap)?;
    }
    for e in g.edges() {
        if !ordered
            .iter()
            .any(|s| e.nodes().iter().all(|v| s.contains(v)))
        {
            return Err(ExtformError::Internal(format!(
                "edge {:?} is not covered by any block",
                g.edge_names(e)
            )));
        }
    }

    // Gluing subsets per running intersection, linked in both blocks.
    let mut linked: Vec<BTreeSet<Vec<Node>>> = vec![BTreeSet::new(); ordered.len()];
    for k in 1..ordered.len() {
        let j = back[k];
        let inter: Vec<Node> = ordered[k]
            .iter()
            .copied()
            .filter(|v| ordered[j].contains(v))
            .collect();
        for mask in 1u64..(1 << inter.len()) {
            if mask.count_ones() < 2 {
                continue;
            }
            let subset: Vec<Node> = inter
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &v)| v)
                .collect();
            linked[k].insert(subset.clone());
            linked[j].insert(subset);
        }
    }
    for e in g.edges() {
        for (k, set) in ordered.iter().enumerate() {
            if e.nodes().iter().all(|v| set.contains(v)) {
                linked[k].insert(e.nodes().to_vec());
            }
        }
    }

    let mut aux_sets: BTreeSet<Vec<Node>> = BTreeSet::new();
    for l in &linked {
        for p in l {
            let as_edge = Edge::try_new(p.clone()).expect("linked sets have size >= 2");
            if !g.has_edge(&as_edge) {
                aux_sets.insert(p.clone());
            }
        }
    }

    let original = LiftedSpace::of(g).vars().to_vec();
    let mut aux: Vec<Var> = aux_sets.iter().map(|p| Var::set(p.clone())).collect();
    let mut vars = original.clone();
    vars.extend(aux.iter().cloned());
    let mut blocks = Vec::new();
    let mut all_cons = Vec::new();
    for (k, set) in ordered.iter().enumerate() {
        let l: Vec<Vec<Node>> = linked[k].iter().cloned().collect();
        let (lambdas, cons) = complete_block_system(k as u32, set, &l);
        vars.extend(lambdas.clone());
        aux.extend(lambdas);
        all_cons.extend(cons);
        blocks.push(BlockInfo {
            id: k as u32,
            ground: set.clone(),
        });
    }
    for (i, &v) in singleton_blocks.iter().enumerate() {
        let id = (ordered.len() + i) as u32;
        let (lambdas, cons) = complete_block_system(id, &[v], &[]);
        vars.extend(lambdas.clone());
        aux.extend(lambdas);
        all_cons.extend(cons);
        blocks.push(BlockInfo { id, ground: vec![v] });
    }
    let mut poly = PolyhedronH::new(vars);
    for c in all_cons {
        poly.push(c);
    }
    // Nodes covered by no block get plain box constraints.
    let covered: BTreeSet<Node> = ordered
        .iter()
        .flatten()
        .copied()
        .chain(singleton_blocks.iter().copied())
        .collect();
    for v in g.nodes() {
        if !covered.contains(&v) {
            poly.push(LinearConstraint::le([(Var::Node(v), rat(1))], rat(1)));
            poly.push(LinearConstraint::le([(Var::Node(v), rat(-1))], rat(0)));
        }
    }
    Ok(ExtendedFormulation {
        polyhedron: poly,
        original_vars: original,
        aux_vars: aux,
        provenance,
        blocks,
    })
}

/// Extended formulation for an alpha-acyclic hypergraph: one complete block
/// per maximal edge, in running intersection order, glued on shared subset
/// variables. All coefficients are 0 or +-1.
pub fn alpha_ef(g: &Hypergraph, guards: &Guards) -> Result<ExtendedFormulation, ExtformError> {
    let (alpha, res) = is_alpha_acyclic(g);
    let rip = match (alpha, res) {
        (true, Ok(rip)) => rip,
        _ => {
            return Err(ExtformError::Precondition(
                "hypergraph is not alpha-acyclic".into(),
            ))
        }
    };
    let ordered: Vec<Vec<Node>> = rip.edges.iter().map(|e| e.nodes().to_vec()).collect();
    rip_glued_ef(g, &ordered, &rip.back, &[], Provenance::Alpha, guards)
}

/// Min-fill elimination on a simple graph. Returns the elimination order
/// and the per-vertex bags ({v} plus its remaining neighborhood at
/// elimination time, with fill edges added as elimination proceeds).
pub fn min_fill_bags(graph: &SimpleGraph) -> (Vec<Node>, Vec<Vec<Node>>) {
    let n = graph.vertex_count();
    let mut adj: Vec<BTreeSet<Node>> = graph.adj.clone();
    let mut remaining: BTreeSet<Node> = (0..n as Node).collect();
    let mut order = Vec::new();
    let mut bags = Vec::new();
    while !remaining.is_empty() {
        let fill_of = |v: Node, adj: &Vec<BTreeSet<Node>>| -> usize {
            let nb: Vec<Node> = adj[v as usize].iter().copied().collect();
            let mut fill = 0;
            for i in 0..nb.len() {
                for j in i + 1..nb.len() {
                    if !adj[nb[i] as usize].contains(&nb[j]) {
                        fill += 1;
                    }
                }
            }
            fill
        };
        let &v = remaining
            .iter()
            .min_by_key(|&&v| (fill_of(v, &adj), v))
            .unwrap();
        let nb: Vec<Node> = adj[v as usize].iter().copied().collect();
        let mut bag = vec![v];
        bag.extend(nb.iter().copied());
        bag.sort_unstable();
        bags.push(bag);
        order.push(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                adj[nb[i] as usize].insert(nb[j]);
                adj[nb[j] as usize].insert(nb[i]);
            }
        }
        for &u in &nb {
            adj[u as usize].remove(&v);
        }
        adj[v as usize].clear();
        remaining.remove(&v);
    }
    (order, bags)
}

/// Heuristic treewidth of the intersection graph (min-fill bags).
pub fn min_fill_width(g: &Hypergraph) -> usize {
    let (_, bags) = min_fill_bags(&g.intersection_graph());
    bags.iter().map(|b| b.len()).max().unwrap_or(1) - 1
}

/// Extended formulation via a tree decomposition of the intersection graph
/// (min-fill heuristic): one complete block per maximal bag, glued exactly
/// like the alpha construction. Exact for any hypergraph whose heuristic
/// width fits the cap; width optimality only affects the size.
pub fn junction_ef(g: &Hypergraph, guards: &Guards) -> Result<ExtendedFormulation, ExtformError> {
    let (_, bags) = min_fill_bags(&g.intersection_graph());
    let mut maximal: Vec<Vec<Node>> = bags
        .iter()
        .filter(|b| {
            !bags
                .iter()
                .any(|c| c.len() > b.len() && b.iter().all(|v| c.contains(v)))
        })
        .cloned()
        .collect();
    maximal.sort();
    maximal.dedup();
    let width = maximal.iter().map(|b| b.len()).max().unwrap_or(1) - 1;
    check("tree decomposition width", width, guards.width_cap)?;

    let singletons: Vec<Node> = maximal
        .iter()
        .filter(|b| b.len() == 1)
        .map(|b| b[0])
        .collect();
    let big: Vec<Vec<Node>> = maximal.into_iter().filter(|b| b.len() >= 2).collect();

    // Running intersection ordering of the bags; the maximal cliques of a
    // chordal fill-in always admit one.
    let (ordered, back) = if big.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        let bag_hg = Hypergraph::from_parts(
            g.names().to_vec(),
            big.iter()
                .map(|b| Edge::try_new(b.clone()).expect("bag size >= 2"))
                .collect(),
        );
        let (alpha, res) = is_alpha_acyclic(&bag_hg);
        let rip = match (alpha, res) {
            (true, Ok(rip)) => rip,
            _ => {
                return Err(ExtformError::Internal(
                    "min-fill bags do not form an alpha-acyclic family".into(),
                ))
            }
        };
        (
            rip.edges.iter().map(|e| e.nodes().to_vec()).collect(),
            rip.back.clone(),
        )
    };
    rip_glued_ef(g, &ordered, &back, &singletons, Provenance::Junction, guards)
}

/// A nest point's incident edge chain: the apex node together with the
/// totally ordered edges containing it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainBlock {
    pub apex: Node,
    pub chain: Vec<Edge>,
}

impl ChainBlock {
    pub fn new(apex: Node, mut chain: Vec<Edge>) -> Result<ChainBlock, ExtformError> {
        if chain.is_empty() {
            return Err(ExtformError::Precondition("empty chain".into()));
        }
        chain.sort_by_key(|e| e.len());
        for e in &chain {
            if !e.contains(apex) {
                return Err(ExtformError::Precondition(
                    "chain edge misses the apex".into(),
                ));
            }
        }
        for w in chain.windows(2) {
            if !(w[0].is_subset_of(&w[1]) && w[0].len() < w[1].len()) {
                return Err(ExtformError::Precondition(
                    "chain is not strictly nested".into(),
                ));
            }
        }
        Ok(ChainBlock { apex, chain })
    }

    /// The largest chain edge f.
    pub fn top(&self) -> &Edge {
        self.chain.last().unwrap()
    }

    /// P: apex-free shadows of the chain edges of size >= 3.
    pub fn derived_p(&self) -> Vec<Vec<Node>> {
        self.chain
            .iter()
            .filter(|e| e.len() >= 3)
            .map(|e| {
                e.nodes()
                    .iter()
                    .copied()
                    .filter(|&v| v != self.apex)
                    .collect()
            })
            .collect()
    }

    fn signature(&self) -> Vec<usize> {
        self.chain.iter().map(|e| e.len()).collect()
    }

    /// Canonical-to-actual node map: apex first, then each chain layer.
    fn node_map(&self) -> Vec<Node> {
        let mut map = vec![self.apex];
        let mut prev: BTreeSet<Node> = [self.apex].into();
        for e in &self.chain {
            let fresh: Vec<Node> = e
                .nodes()
                .iter()
                .copied()
                .filter(|v| !prev.contains(v))
                .collect();
            map.extend(fresh.iter().copied());
            prev.extend(fresh);
        }
        map
    }
}

static CHAIN_MEMO: OnceLock<Mutex<BTreeMap<Vec<usize>, PolyhedronH>>> = OnceLock::new();

/// Minimal H-description of MP of the chain structure (f, F ∪ P), computed
/// by convex hull over the 2^|f| lifted binary points and memoized by the
/// chain's size signature.
pub fn chain_block_facets(cb: &ChainBlock, guards: &Guards) -> Result<PolyhedronH, ExtformError> {
    let f_size = cb.top().len();
    check("chain block top size", f_size, guards.chain_cap)?;
    let sig = cb.signature();
    let memo = CHAIN_MEMO.get_or_init(|| Mutex::new(BTreeMap::new()));
    let canonical = {
        let cache = memo.lock().unwrap();
        cache.get(&sig).cloned()
    };
    let canonical = match canonical {
        Some(p) => p,
        None => {
            let p = canonical_chain_hull(&sig, guards)?;
            memo.lock().unwrap().insert(sig.clone(), p.clone());
            p
        }
    };
    let map = cb.node_map();
    debug_assert_eq!(map.len(), f_size);
    Ok(canonical.rename(&|v: &Var| match v {
        Var::Node(i) => Var::Node(map[*i as usize]),
        Var::Set(s) => Var::set(s.iter().map(|&i| map[i as usize]).collect()),
        Var::Lambda(b, m) => Var::Lambda(*b, *m),
    }))
}

/// Hull of the canonical chain: node 0 is the apex, edge i is {0..s_i}.
fn canonical_chain_hull(sig: &[usize], guards: &Guards) -> Result<PolyhedronH, ExtformError> {
    let f = *sig.last().unwrap();
    let mut edges: Vec<Edge> = Vec::new();
    for &s in sig {
        edges.push(Edge::try_new((0..s as Node).collect()).expect("chain edge size >= 2"));
        if s >= 3 {
            edges.push(Edge::try_new((1..s as Node).collect()).expect("shadow size >= 2"));
        }
    }
    let g = Hypergraph::from_parts((1..=f).map(|i| i.to_string()).collect(), edges);
    let points = enumerate_s(&g, guards)?;
    Ok(hull_facets(&points, guards)?)
}

/// Extended formulation for a beta-acyclic hypergraph by nest point
/// elimination: one chain block per eliminated node with incident edges,
/// recursing on the node-removed hypergraph whose edge set absorbs the
/// apex-free shadows.
pub fn beta_ef(g: &Hypergraph, guards: &Guards) -> Result<ExtendedFormulation, ExtformError> {
    let (beta, res) = is_beta_acyclic(g);
    let order = match (beta, res) {
        (true, Ok(order)) => order,
        _ => {
            return Err(ExtformError::Precondition(
                "hypergraph is not beta-acyclic".into(),
            ))
        }
    };
    let mut working: BTreeSet<Vec<Node>> = g.edges().iter().map(|e| e.nodes().to_vec()).collect();
    let mut cons: Vec<LinearConstraint> = Vec::new();
    let mut seen_sets: BTreeSet<Vec<Node>> = working.iter().cloned().collect();
    for &u in &order {
        let incident: Vec<Vec<Node>> = working
            .iter()
            .filter(|e| e.binary_search(&u).is_ok())
            .cloned()
            .collect();
        if incident.is_empty() {
            continue;
        }
        let chain: Vec<Edge> = incident
            .iter()
            .map(|e| Edge::try_new(e.clone()).expect("working edges have size >= 2"))
            .collect();
        let cb = ChainBlock::new(u, chain).map_err(|e| {
            ExtformError::Internal(format!("nest point order produced a non-chain: {e}"))
        })?;
        let block = chain_block_facets(&cb, guards)?;
        cons.extend(block.constraints().iter().cloned());
        let p = cb.derived_p();
        seen_sets.extend(p.iter().cloned());
        working = working
            .into_iter()
            .filter(|e| e.binary_search(&u).is_err())
            .chain(p)
            .collect();
    }

    let original = LiftedSpace::of(g).vars().to_vec();
    let original_set: BTreeSet<Var> = original.iter().cloned().collect();
    let aux: Vec<Var> = seen_sets
        .iter()
        .map(|s| Var::set(s.clone()))
        .filter(|v| !original_set.contains(v))
        .collect();
    let mut vars = original.clone();
    vars.extend(aux.iter().cloned());
    let mut poly = PolyhedronH::new(vars);
    let mut used: BTreeSet<Var> = BTreeSet::new();
    for c in cons {
        used.extend(c.coeffs().keys().cloned());
        poly.push(c);
    }
    for v in g.nodes() {
        if !used.contains(&Var::Node(v)) {
            poly.push(LinearConstraint::le([(Var::Node(v), rat(1))], rat(1)));
            poly.push(LinearConstraint::le([(Var::Node(v), rat(-1))], rat(0)));
        }
    }
    poly.dedup_constraints();
    Ok(ExtendedFormulation {
        polyhedron: poly,
        original_vars: original,
        aux_vars: aux,
        provenance: Provenance::Beta,
        blocks: Vec::new(),
    })
}

/// Multilinear extension of a binary point of S(G) to every variable of the
/// formulation: subset variables take the product of their node values and
/// each block's lambda vector is the indicator of its induced subset.
pub fn extend_point(ef: &ExtendedFormulation, s: &Point) -> Point {
    let block_of: BTreeMap<u32, &BlockInfo> = ef.blocks.iter().map(|b| (b.id, b)).collect();
    let one = rat(1);
    let is_one = |u: Node| s.get(&Var::Node(u)).map(|x| x == &one).unwrap_or(false);
    let mut full = Point::new();
    for v in ef.polyhedron.vars() {
        let val = match v {
            Var::Node(u) => s.get(&Var::Node(*u)).cloned().unwrap_or_else(|| rat(0)),
            Var::Set(set) => {
                if set.iter().all(|&u| is_one(u)) {
                    rat(1)
                } else {
                    rat(0)
                }
            }
            Var::Lambda(b, mask) => {
                let info = block_of.get(b).expect("block metadata present");
                let ones: u64 = info
                    .ground
                    .iter()
                    .enumerate()
                    .filter(|(_, &u)| is_one(u))
                    .map(|(i, _)| 1u64 << i)
                    .fold(0, |a, b| a | b);
                if *mask == ones {
                    rat(1)
                } else {
                    rat(0)
                }
            }
        };
        full.set(v.clone(), val);
    }
    full
}

/// Verify that a formulation's projection onto the original variables is
/// exactly the multilinear polytope:
/// (a) every point of S(G) extends to a feasible point of the formulation
///     (so MP is contained in the projection), and
/// (b) every facet and equation of MP(G) is valid over the formulation
///     (so the projection is contained in MP), certified by exact LP probes.
pub fn ef_exactness_check(
    ef: &ExtendedFormulation,
    g: &Hypergraph,
    guards: &Guards,
) -> Result<bool, ExtformError> {
    let s_points = enumerate_s(g, guards)?;
    for s in &s_points {
        let full = extend_point(ef, s);
        if !ef.polyhedron.contains(&full) {
            return Ok(false);
        }
    }
    let mp = multilinear_polytope(g, guards)?;
    let mut session = SimplexSession::new(&ef.polyhedron)?;
    if !session.is_feasible() {
        return Ok(false);
    }
    for c in mp.constraints() {
        let obj: BTreeMap<Var, Rational> = c.coeffs().clone();
        match session.maximize_value(&obj)? {
            None => return Ok(false),
            Some(max) => {
                if max > c.rhs {
                    return Ok(false);
                }
            }
        }
        if c.sense == Sense::Eq {
            let neg: BTreeMap<Var, Rational> = c
                .coeffs()
                .iter()
                .map(|(v, x)| (v.clone(), -x.clone()))
                .collect();
            match session.maximize_value(&neg)? {
                None => return Ok(false),
                Some(max) => {
                    if max > -c.rhs.clone() {
                        return Ok(false);
                    }
                }
            }
        }
    }
    Ok(true)
}
