//! Ground-truth engines used in tests and verification: explicit multilinear
//! polytopes, polytope equality, decomposability checks and the exhaustive
//! small-hypergraph corpus.

use std::collections::{BTreeMap, BTreeSet};

use crate::acyclicity::{oracle_find_cycle, CycleKind};
use crate::exactlp::{
    hull_facets, LinearConstraint, LpError, PolyhedronH, Sense, SimplexSession, Var,
};
use crate::guards::{check, Guards};
use crate::hypergraph::{Edge, Hypergraph, Node};
use crate::relaxations::{enumerate_s, LiftedSpace};

/// The exact multilinear polytope MP(G): convex hull of the 2^|V| lifted
/// binary points, as an irredundant H-description.
pub fn multilinear_polytope(g: &Hypergraph, guards: &Guards) -> Result<PolyhedronH, LpError> {
    check("multilinear polytope node count", g.node_count(), guards.hull_nodes)?;
    let points = enumerate_s(g, guards)?;
    hull_facets(&points, guards)
}

/// Is `inner` contained in `outer`? Certified by maximizing every
/// constraint row of `outer` over `inner` with a warm-started simplex.
pub fn poly_subset(inner: &PolyhedronH, outer: &PolyhedronH) -> Result<bool, LpError> {
    let inner_vars: BTreeSet<&Var> = inner.vars().iter().collect();
    for c in outer.constraints() {
        if !c.coeffs().keys().all(|v| inner_vars.contains(v)) {
            return Err(LpError::BadInput(
                "outer constraint references a variable missing from inner".into(),
            ));
        }
    }
    let mut session = SimplexSession::new(inner)?;
    if !session.is_feasible() {
        return Ok(true); // empty set is contained in anything
    }
    for c in outer.constraints() {
        let obj: BTreeMap<Var, _> = c.coeffs().clone();
        match session.maximize_value(&obj)? {
            None => return Ok(false), // unbounded in a direction outer bounds
            Some(max) => {
                if max > c.rhs {
                    return Ok(false);
                }
            }
        }
        if c.sense == Sense::Eq {
            let neg: BTreeMap<Var, _> = c.coeffs().iter().map(|(v, x)| (v.clone(), -x.clone())).collect();
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

/// Exact polytope equality for bounded polyhedra over one variable space:
/// mutual inclusion, certified by LP probes of each description's rows over
/// the other polyhedron.
pub fn polytope_equal(p: &PolyhedronH, q: &PolyhedronH) -> Result<bool, LpError> {
    let pv: BTreeSet<&Var> = p.vars().iter().collect();
    let qv: BTreeSet<&Var> = q.vars().iter().collect();
    if pv != qv {
        return Err(LpError::BadInput("polyhedra on different variable spaces".into()));
    }
    // Empty/nonempty must agree.
    let p_feasible = SimplexSession::new(p)?.is_feasible();
    let q_feasible = SimplexSession::new(q)?.is_feasible();
    if p_feasible != q_feasible {
        return Ok(false);
    }
    if !p_feasible {
        return Ok(true);
    }
    Ok(poly_subset(p, q)? && poly_subset(q, p)?)
}

/// Map a hypergraph's lifted variables into another node indexing.
fn rename_into(poly: &PolyhedronH, node_map: &BTreeMap<Node, Node>) -> PolyhedronH {
    poly.rename(&|v: &Var| match v {
        Var::Node(u) => Var::Node(node_map[u]),
        Var::Set(s) => Var::set(s.iter().map(|u| node_map[u]).collect()),
        Var::Lambda(b, m) => Var::Lambda(*b, *m),
    })
}

/// Union of two hypergraphs glued by node names. Returns the union plus the
/// node maps from each part into it.
pub fn union_by_names(
    g1: &Hypergraph,
    g2: &Hypergraph,
) -> (Hypergraph, BTreeMap<Node, Node>, BTreeMap<Node, Node>) {
    let mut names: Vec<String> = g1.names().to_vec();
    let mut map2: BTreeMap<Node, Node> = BTreeMap::new();
    for v in g2.nodes() {
        let name = g2.node_name(v);
        match names.iter().position(|n| n == name) {
            Some(i) => {
                map2.insert(v, i as Node);
            }
            None => {
                names.push(name.to_string());
                map2.insert(v, (names.len() - 1) as Node);
            }
        }
    }
    let map1: BTreeMap<Node, Node> = g1.nodes().map(|v| (v, v)).collect();
    let mut edges: Vec<Vec<String>> = Vec::new();
    for e in g1.edges() {
        edges.push(g1.edge_names(e));
    }
    for e in g2.edges() {
        let names_of = g2.edge_names(e);
        if !edges.contains(&names_of) {
            edges.push(names_of);
        }
    }
    // Re-canonicalize shared edges: two name lists may describe one set.
    let mut canon: BTreeSet<Vec<String>> = BTreeSet::new();
    for mut e in edges {
        e.sort();
        canon.insert(e);
    }
    let union = Hypergraph::new(names, &canon.into_iter().collect::<Vec<_>>())
        .expect("parts are valid hypergraphs");
    (union, map1, map2)
}

/// Does concatenating exact descriptions of MP(G1) and MP(G2) describe
/// MP(G1 ∪ G2)? Checked by explicit hulls at desk scale.
pub fn decomposability_check(
    g1: &Hypergraph,
    g2: &Hypergraph,
    guards: &Guards,
) -> Result<bool, LpError> {
    let (union, map1, map2) = union_by_names(g1, g2);
    if g1.nodes().all(|v| !map2.values().any(|&u| u == map1[&v])) {
        return Err(LpError::BadInput("parts share no node".into()));
    }
    let mp1 = rename_into(&multilinear_polytope(g1, guards)?, &map1);
    let mp2 = rename_into(&multilinear_polytope(g2, guards)?, &map2);
    let mut conjunction = PolyhedronH::new(LiftedSpace::of(&union).vars().to_vec());
    for c in mp1.constraints().iter().chain(mp2.constraints()) {
        conjunction.push(c.clone());
    }
    let mp_union = multilinear_polytope(&union, guards)?;
    polytope_equal(&conjunction, &mp_union)
}

/// One corpus entry: a hypergraph with oracle-derived class flags.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub hypergraph: Hypergraph,
    pub berge: bool,
    pub gamma: bool,
    pub beta: bool,
    pub alpha: bool,
}

/// Brute-force running intersection property over the maximal edges: the
/// independent alpha oracle for tiny hypergraphs.
pub fn brute_force_rip(maximal: &[Edge]) -> bool {
    let m = maximal.len();
    if m <= 1 {
        return true;
    }
    let mut order: Vec<usize> = (0..m).collect();
    permutations_satisfy(&mut order, 0, &mut |perm| {
        let mut union: BTreeSet<Node> = BTreeSet::new();
        for (k, &ei) in perm.iter().enumerate() {
            if k > 0 {
                let overlap: Vec<Node> = maximal[ei]
                    .nodes()
                    .iter()
                    .copied()
                    .filter(|v| union.contains(v))
                    .collect();
                let ok = perm[..k]
                    .iter()
                    .any(|&j| overlap.iter().all(|v| maximal[j].contains(*v)));
                if !ok {
                    return false;
                }
            }
            union.extend(maximal[ei].nodes().iter().copied());
        }
        true
    })
}

fn permutations_satisfy(
    items: &mut Vec<usize>,
    k: usize,
    pred: &mut impl FnMut(&[usize]) -> bool,
) -> bool {
    if k == items.len() {
        return pred(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations_satisfy(items, k + 1, pred) {
            items.swap(k, i);
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Every hypergraph (up to node relabeling) on at most `max_nodes` nodes,
/// with class flags computed by the exhaustive cycle oracle and brute-force
/// RIP.
pub fn exhaustive_small_corpus(max_nodes: u32) -> Result<Vec<CorpusEntry>, String> {
    if max_nodes > 4 {
        return Err(format!("exhaustive corpus capped at 4 nodes, got {max_nodes}"));
    }
    let mut out = Vec::new();
    for n in 0..=max_nodes {
        // all candidate edges: subsets of {0..n} with size >= 2
        let mut cands: Vec<Vec<Node>> = Vec::new();
        for mask in 0u32..(1u32 << n) {
            if mask.count_ones() >= 2 {
                cands.push((0..n).filter(|v| mask & (1 << v) != 0).collect());
            }
        }
        cands.sort();
        let perms = all_permutations(n);
        let mut seen: BTreeSet<Vec<Vec<Node>>> = BTreeSet::new();
        for pick in 0u64..(1u64 << cands.len()) {
            let edges: Vec<Vec<Node>> = cands
                .iter()
                .enumerate()
                .filter(|(i, _)| pick & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            // canonical form under node relabeling
            let canon = perms
                .iter()
                .map(|p| {
                    let mut mapped: Vec<Vec<Node>> = edges
                        .iter()
                        .map(|e| {
                            let mut f: Vec<Node> = e.iter().map(|&v| p[v as usize]).collect();
                            f.sort_unstable();
                            f
                        })
                        .collect();
                    mapped.sort();
                    mapped
                })
                .min()
                .unwrap();
            if !seen.insert(canon.clone()) {
                continue;
            }
            let g = Hypergraph::from_parts(
                (1..=n).map(|i| i.to_string()).collect(),
                canon
                    .iter()
                    .map(|e| Edge::try_new(e.clone()).expect("size >= 2"))
                    .collect(),
            );
            let berge = oracle_find_cycle(&g, CycleKind::Berge).is_none();
            let gamma = oracle_find_cycle(&g, CycleKind::Gamma).is_none();
            let beta = oracle_find_cycle(&g, CycleKind::Beta).is_none();
            let alpha = brute_force_rip(g.reduction().edges());
            out.push(CorpusEntry {
                hypergraph: g,
                berge,
                gamma,
                beta,
                alpha,
            });
        }
    }
    Ok(out)
}

fn all_permutations(n: u32) -> Vec<Vec<Node>> {
    let mut base: Vec<Node> = (0..n).collect();
    let mut out = Vec::new();
    heap_permute(&mut base, n as usize, &mut out);
    out
}

fn heap_permute(items: &mut Vec<Node>, k: usize, out: &mut Vec<Vec<Node>>) {
    if k <= 1 {
        out.push(items.clone());
        return;
    }
    for i in 0..k {
        heap_permute(items, k - 1, out);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
}

/// Render a corpus as a manifest: one line per entry with the edge list
/// and the four class flags.
pub fn corpus_manifest(corpus: &[CorpusEntry]) -> String {
    let mut out = String::new();
    for (i, e) in corpus.iter().enumerate() {
        let g = &e.hypergraph;
        let edges: Vec<String> = g
            .edges()
            .iter()
            .map(|edge| format!("{{{}}}", g.edge_names(edge).join(",")))
            .collect();
        out.push_str(&format!(
            "{i}\tn={}\tedges=[{}]\tberge={} gamma={} beta={} alpha={}\n",
            g.node_count(),
            edges.join(" "),
            e.berge,
            e.gamma,
            e.beta,
            e.alpha
        ));
    }
    out
}

/// A sanity wrapper shared by tests: the unit-box polytope over a lifted
/// space, used when E is empty.
pub fn unit_box(vars: &[Var]) -> PolyhedronH {
    use crate::exactlp::rat;
    let mut p = PolyhedronH::new(vars.to_vec());
    for v in vars {
        p.push(LinearConstraint::le([(v.clone(), rat(1))], rat(1)));
        p.push(LinearConstraint::le([(v.clone(), rat(-1))], rat(0)));
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::acyclicity::classify;
    use crate::exactlp::{rat, ratio, vertices, Point};
    use crate::relaxations::{edge_var, standard_linearization};

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn mccormick_from_hull() {
        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        let mp = multilinear_polytope(&g, &guards()).unwrap();
        let (eqs, ineqs) = mp.census();
        assert_eq!(eqs, 0);
        assert_eq!(ineqs, 4); // the McCormick system is minimal
        assert!(polytope_equal(&mp, &standard_linearization(&g)).unwrap());
    }

    #[test]
    fn unit_cube_when_edgeless() {
        let g = Hypergraph::from_dense(3, &[]).unwrap();
        let mp = multilinear_polytope(&g, &guards()).unwrap();
        let cube = unit_box(&LiftedSpace::of(&g).vars().to_vec());
        assert!(polytope_equal(&mp, &cube).unwrap());
    }

    #[test]
    fn padberg_triangle_fractional_vertex() {
        // the half-point is a vertex of MP^LP(triangle) and not in MP
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap();
        let lp = standard_linearization(&g);
        let vs = vertices(&lp, &guards()).unwrap();
        let mut half = Point::new();
        for v in g.nodes() {
            half.set(Var::Node(v), ratio(1, 2));
        }
        for e in g.edges() {
            half.set(edge_var(e), rat(0));
        }
        assert!(vs.contains(&half));
        let s = enumerate_s(&g, &guards()).unwrap();
        assert!(!crate::exactlp::membership(&half, &s).unwrap());
        // and therefore MP^LP != MP
        let mp = multilinear_polytope(&g, &guards()).unwrap();
        assert!(!polytope_equal(&lp, &mp).unwrap());
    }

    #[test]
    fn acyclic_graph_equality() {
        // path graph: Berge-acyclic, so MP = MP^LP
        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3]]).unwrap();
        assert!(classify(&g).berge);
        let mp = multilinear_polytope(&g, &guards()).unwrap();
        assert!(polytope_equal(&mp, &standard_linearization(&g)).unwrap());
    }

    #[test]
    fn polytope_equal_is_reflexive_and_detects_difference() {
        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        let lp = standard_linearization(&g);
        assert!(polytope_equal(&lp, &lp).unwrap());
    }

    #[test]
    fn decomposability_examples() {
        // one shared node
        let g1 = Hypergraph::from_dense(3, &[&[1, 2, 3]]).unwrap();
        let g2 = Hypergraph::new(
            vec!["3".into(), "4".into(), "5".into()],
            &[vec!["3".into(), "4".into(), "5".into()]],
        )
        .unwrap();
        assert!(decomposability_check(&g1, &g2, &guards()).unwrap());

        // shared nodes {1,2} carrying the shared edge {1,2} in both parts
        let g1 = Hypergraph::from_dense(3, &[&[1, 2], &[1, 2, 3]]).unwrap();
        let g2 = Hypergraph::new(
            vec!["1".into(), "2".into(), "4".into()],
            &[
                vec!["1".into(), "2".into()],
                vec!["1".into(), "2".into(), "4".into()],
            ],
        )
        .unwrap();
        assert!(decomposability_check(&g1, &g2, &guards()).unwrap());

        // two 3-edges sharing two nodes without the connecting edge: the
        // shared section is not complete and gluing genuinely fails (the
        // conjunction misses the flower cut z_3 + z_{124} - z_{123} <= 1)
        let g1 = Hypergraph::from_dense(3, &[&[1, 2, 3]]).unwrap();
        let g2 = Hypergraph::new(
            vec!["1".into(), "2".into(), "4".into()],
            &[vec!["1".into(), "2".into(), "4".into()]],
        )
        .unwrap();
        assert!(!decomposability_check(&g1, &g2, &guards()).unwrap());
    }

    #[test]
    fn facet_growth_spot_check() {
        // crowns: a center edge over 2k nodes with k petals, each owning a
        // private pair of center nodes; every nonempty petal subset is an
        // admissible flower, so the facet count grows quickly with k while
        // the family stays gamma-acyclic
        let mut counts = Vec::new();
        for k in 1usize..=3 {
            let n = (3 * k) as u32;
            let mut edges: Vec<Vec<u32>> = vec![(1..=2 * k as u32).collect()];
            for i in 0..k as u32 {
                edges.push(vec![2 * i + 1, 2 * i + 2, 2 * k as u32 + i + 1]);
            }
            let refs: Vec<&[u32]> = edges.iter().map(|e| e.as_slice()).collect();
            let g = Hypergraph::from_dense(n, &refs).unwrap();
            assert!(crate::acyclicity::is_gamma_acyclic(&g).0);
            let mp = multilinear_polytope(&g, &guards()).unwrap();
            let (_, ineqs) = mp.census();
            counts.push(ineqs);
        }
        println!("crown facet counts (k = 1..3): {counts:?}");
        assert!(counts.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn corpus_manifest_lists_entries() {
        let corpus = exhaustive_small_corpus(2).unwrap();
        let manifest = corpus_manifest(&corpus);
        assert_eq!(manifest.lines().count(), corpus.len());
        assert!(manifest.contains("berge=true"));
    }

    #[test]
    fn corpus_enumeration() {
        let corpus = exhaustive_small_corpus(2).unwrap();
        // n=0 empty, n=1 single node, n=2 edgeless, n=2 single edge
        assert_eq!(corpus.len(), 4);
        let corpus = exhaustive_small_corpus(3).unwrap();
        assert!(corpus.len() > 8);
        for entry in &corpus {
            // hierarchy holds on every entry
            assert!(!entry.berge || entry.gamma);
            assert!(!entry.gamma || entry.beta);
            assert!(!entry.beta || entry.alpha);
        }
        // includes the beta-not-gamma example {12, 23, 123} up to relabeling
        assert!(corpus.iter().any(|e| !e.gamma && e.beta));
    }
}
