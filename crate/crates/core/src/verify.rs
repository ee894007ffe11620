//! The verification suites: theorem replication and soundness checks at
//! desk scale, with exact arithmetic throughout. Each suite prints one line
//! per case and a pass/fail summary; the acceptance test target asserts
//! them and the `verify` CLI subcommand runs them on demand.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::acyclicity::{
    classify, oracle_find_cycle, validate_nest_order, CycleKind,
};
use crate::exactlp::{membership, rat, ratio, vertices, Point, Rational, Var};
use crate::extform::{
    alpha_ef, beta_ef, chain_block_facets, ef_exactness_check, junction_ef, min_fill_width,
    ChainBlock,
};
use crate::guards::Guards;
use crate::hypergraph::{Edge, Hypergraph, Instance, Node};
use crate::io::{parse_instance, write_instance};
use crate::oracle::{
    brute_force_rip, decomposability_check, exhaustive_small_corpus, multilinear_polytope,
    polytope_equal,
};
use crate::pipeline::{gen_instance, generate, solve, GenClass, Strategy};
use crate::relaxations::{
    edge_var, enumerate_s, flower_inequalities, flower_relaxation, separate_flower,
    standard_linearization, FlowerInequality,
};

#[derive(Debug, Clone)]
pub struct CaseResult {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub title: &'static str,
    pub cases: Vec<CaseResult>,
}

impl SuiteReport {
    pub fn pass(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.pass)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let mark = if c.pass { "pass" } else { "FAIL" };
            if c.detail.is_empty() {
                let _ = writeln!(out, "  [{mark}] {}", c.name);
            } else {
                let _ = writeln!(out, "  [{mark}] {} — {}", c.name, c.detail);
            }
        }
        let _ = writeln!(
            out,
            "{}: {} — {}/{} cases pass",
            self.name,
            if self.pass() { "PASS" } else { "FAIL" },
            self.cases.iter().filter(|c| c.pass).count(),
            self.cases.len()
        );
        out
    }
}

struct Suite {
    name: &'static str,
    title: &'static str,
    cases: Vec<CaseResult>,
}

impl Suite {
    fn new(name: &'static str, title: &'static str) -> Suite {
        Suite {
            name,
            title,
            cases: Vec::new(),
        }
    }

    fn case(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.cases.push(CaseResult {
            name: name.into(),
            pass,
            detail: detail.into(),
        });
    }

    fn ok(&mut self, name: impl Into<String>, pass: bool) {
        self.case(name, pass, "");
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            title: self.title,
            cases: self.cases,
        }
    }
}

/// All graphs (rank-2 hypergraphs) on at most `max_nodes` nodes, up to
/// relabeling; polytope equality is label-invariant so one representative
/// per class suffices.
fn all_graphs_up_to_iso(max_nodes: u32) -> Vec<Hypergraph> {
    let mut out = Vec::new();
    for n in 0..=max_nodes {
        let mut pairs: Vec<Vec<Node>> = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                pairs.push(vec![a, b]);
            }
        }
        let mut perms: Vec<Vec<Node>> = Vec::new();
        permute((0..n).collect(), &mut perms);
        let mut seen: BTreeSet<Vec<Vec<Node>>> = BTreeSet::new();
        for mask in 0u32..(1 << pairs.len()) {
            let edges: Vec<Vec<Node>> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, e)| e.clone())
                .collect();
            let canon = perms
                .iter()
                .map(|p| {
                    let mut mapped: Vec<Vec<Node>> = edges
                        .iter()
                        .map(|e| {
                            let mut f: Vec<Node> =
                                e.iter().map(|&v| p[v as usize]).collect();
                            f.sort_unstable();
                            f
                        })
                        .collect();
                    mapped.sort();
                    mapped
                })
                .min()
                .unwrap();
            if seen.insert(canon.clone()) {
                out.push(Hypergraph::from_parts(
                    (1..=n).map(|i| i.to_string()).collect(),
                    canon
                        .into_iter()
                        .map(|e| Edge::try_new(e).unwrap())
                        .collect(),
                ));
            }
        }
    }
    out
}

fn permute(items: Vec<Node>, out: &mut Vec<Vec<Node>>) {
    let mut items = items;
    let n = items.len();
    fn heap(items: &mut Vec<Node>, k: usize, out: &mut Vec<Vec<Node>>) {
        if k <= 1 {
            out.push(items.clone());
            return;
        }
        for i in 0..k {
            heap(items, k - 1, out);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    heap(&mut items, n, out);
}

/// Deterministic stream of random hypergraphs with bounded size.
fn random_hypergraphs(
    count: usize,
    max_n: usize,
    max_m: usize,
    max_r: usize,
    seed: u64,
) -> Vec<Hypergraph> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    let mut attempt_seed = seed;
    while out.len() < count {
        let n = rng.random_range(2..=max_n);
        let r = rng.random_range(2..=max_r.min(n));
        let max_edges: usize = (2..=r)
            .map(|k| binomial(n, k))
            .sum::<usize>()
            .min(max_m);
        if max_edges == 0 {
            continue;
        }
        let m = rng.random_range(1..=max_edges);
        attempt_seed = attempt_seed.wrapping_mul(0x5851_f42d_4c95_7f2d).wrapping_add(1);
        if let Ok(g) = generate(GenClass::General, n, m, r, attempt_seed) {
            out.push(g);
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut c = 1usize;
    for i in 0..k {
        c = c.saturating_mul(n - i) / (i + 1);
    }
    c
}

/// Criterion 1: MP = MP^LP exactly for Berge-acyclic hypergraphs, on all
/// graphs with up to 5 nodes and 200 random hypergraphs.
pub fn criterion_1(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("berge", "standard linearization tight iff Berge-acyclic");
    let mut graphs_pass = 0;
    let mut graphs_total = 0;
    for g in all_graphs_up_to_iso(5) {
        graphs_total += 1;
        if thm_equality_case(&g, guards, EqualityKind::Std) == Some(true) {
            graphs_pass += 1;
        }
    }
    suite.case(
        "all graphs with |V| <= 5 (up to relabeling)",
        graphs_pass == graphs_total,
        format!("{graphs_pass}/{graphs_total} agree"),
    );
    let mut rnd_pass = 0;
    let corpus = random_hypergraphs(200, 8, 8, 4, 101);
    for g in &corpus {
        if thm_equality_case(g, guards, EqualityKind::Std) == Some(true) {
            rnd_pass += 1;
        }
    }
    suite.case(
        "200 random hypergraphs (|V| <= 8, |E| <= 8, rank <= 4)",
        rnd_pass == corpus.len(),
        format!("{rnd_pass}/{} agree", corpus.len()),
    );
    suite.finish()
}

enum EqualityKind {
    Std,
    Flower,
}

/// Does "relaxation equals MP" match the class predicate? None on engine
/// errors (counted as failures by the callers).
fn thm_equality_case(g: &Hypergraph, guards: &Guards, kind: EqualityKind) -> Option<bool> {
    let relax = match kind {
        EqualityKind::Std => standard_linearization(g),
        EqualityKind::Flower => flower_relaxation(g, guards).ok()?,
    };
    let mp = multilinear_polytope(g, guards).ok()?;
    let equal = polytope_equal(&relax, &mp).ok()?;
    let class = match kind {
        EqualityKind::Std => crate::acyclicity::is_berge_acyclic(g).0,
        EqualityKind::Flower => crate::acyclicity::is_gamma_acyclic(g).0,
    };
    Some(equal == class)
}

/// Criterion 2: MP = MP^F exactly for gamma-acyclic hypergraphs.
pub fn criterion_2(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("gamma", "flower relaxation tight iff gamma-acyclic");
    let corpus = random_hypergraphs(200, 8, 8, 4, 202);
    let mut pass = 0;
    let mut gamma_seen = 0;
    let mut non_gamma_seen = 0;
    for g in &corpus {
        if crate::acyclicity::is_gamma_acyclic(g).0 {
            gamma_seen += 1;
        } else {
            non_gamma_seen += 1;
        }
        if thm_equality_case(g, guards, EqualityKind::Flower) == Some(true) {
            pass += 1;
        }
    }
    suite.case(
        "200 random hypergraphs (|V| <= 8, |E| <= 8, rank <= 4)",
        pass == corpus.len(),
        format!(
            "{pass}/{} agree ({gamma_seen} gamma-acyclic, {non_gamma_seen} not)",
            corpus.len()
        ),
    );
    suite.finish()
}

/// Criterion 3: the beta extended formulation is exact: LP optimum equals
/// brute force on 100 generated instances, with the size bounds honored,
/// and the full projection check passes on the small subset.
pub fn criterion_3(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("beta", "beta extended formulation exactness and size bounds");
    let mut lp_ok = 0;
    let mut size_ok = 0;
    let mut proj_ok = 0;
    let mut proj_total = 0;
    let mut total = 0;
    for i in 0..100usize {
        let n = 4 + (i % 17); // 4..=20
        let r = 3 + (i % 3); // 3..=5
        let m = (n - 2 + (i % 5)).min(2 * n);
        let Some(inst) = gen_with_retries(GenClass::Beta, n, m, r, 3000 + i as u64) else {
            suite.case(format!("generate beta n={n} m={m} r={r}"), false, "generation failed");
            continue;
        };
        total += 1;
        let g = inst.hypergraph();
        let ef = match beta_ef(g, guards) {
            Ok(ef) => ef,
            Err(e) => {
                suite.case(format!("beta_ef n={n} m={m}"), false, e.to_string());
                continue;
            }
        };
        // LP over the formulation equals brute force exactly.
        let solved = solve(&inst, Strategy::Beta, 0, guards);
        let brute = crate::relaxations::brute_force_opt(&inst, guards);
        match (&solved, &brute) {
            (Ok(s), Ok((bv, _))) if &s.value == bv => lp_ok += 1,
            _ => {}
        }
        let rank = g.rank().unwrap_or(2);
        let ineq_bound = (3 * rank).saturating_sub(4) * g.node_count() + 4 * g.edge_count();
        let var_bound = (rank - 1) * g.node_count() + g.edge_count();
        if ef.constraint_count() <= ineq_bound && ef.var_count() <= var_bound {
            size_ok += 1;
        }
        if g.node_count() <= 10 {
            proj_total += 1;
            if ef_exactness_check(&ef, g, guards).unwrap_or(false) {
                proj_ok += 1;
            }
        }
    }
    suite.case(
        "lp over beta_ef equals brute force (100 instances, |V| <= 20, rank <= 5)",
        lp_ok == total && total == 100,
        format!("{lp_ok}/{total} equal"),
    );
    suite.case(
        "inequality count <= (3r-4)|V| + 4|E| and variables <= (r-1)|V| + |E|",
        size_ok == total,
        format!("{size_ok}/{total} within bounds"),
    );
    suite.case(
        "projection equals MP on the |V| <= 10 subset",
        proj_ok == proj_total && proj_total > 0,
        format!("{proj_ok}/{proj_total} exact"),
    );
    suite.finish()
}

fn gen_with_retries(class: GenClass, n: usize, m: usize, r: usize, seed: u64) -> Option<Instance> {
    for k in 0..20u64 {
        if let Ok(inst) = gen_instance(class, n, m, r, seed + 7919 * k) {
            return Some(inst);
        }
    }
    None
}

/// Criterion 4: the alpha extended formulation is exact with lambda count
/// within the 2^r min(|V|, |F|) bound and all coefficients 0/±1.
pub fn criterion_4(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("alpha", "alpha extended formulation exactness and size bound");
    let mut proj_ok = 0;
    let mut size_ok = 0;
    let mut unit_ok = 0;
    let mut total = 0;
    for i in 0..50usize {
        let n = 4 + (i % 9); // 4..=12
        let r = 3 + (i % 2); // 3..=4
        let m = (2 + (i % 5)).min(n / 2 + 2);
        let Some(inst) = gen_with_retries(GenClass::Alpha, n, m, r, 4000 + i as u64) else {
            suite.case(format!("generate alpha n={n} m={m} r={r}"), false, "generation failed");
            continue;
        };
        total += 1;
        let g = inst.hypergraph();
        let ef = match alpha_ef(g, guards) {
            Ok(ef) => ef,
            Err(e) => {
                suite.case(format!("alpha_ef n={n} m={m}"), false, e.to_string());
                continue;
            }
        };
        if ef_exactness_check(&ef, g, guards).unwrap_or(false) {
            proj_ok += 1;
        }
        let rank = g.rank().unwrap_or(2);
        let f_count = g.reduction().edge_count();
        if ef.lambda_count() <= (1 << rank) * g.node_count().min(f_count) {
            size_ok += 1;
        }
        if ef.unit_coefficients() {
            unit_ok += 1;
        }
    }
    suite.case(
        "projection equals MP (50 instances, rank <= 4, |V| <= 12)",
        proj_ok == total && total == 50,
        format!("{proj_ok}/{total} exact"),
    );
    suite.case(
        "lambda count <= 2^r min(|V|, |F|)",
        size_ok == total,
        format!("{size_ok}/{total} within bound"),
    );
    suite.case(
        "all coefficients and right-hand sides in {0, +1, -1}",
        unit_ok == total,
        format!("{unit_ok}/{total} unit"),
    );
    suite.finish()
}

/// Criterion 5: the junction formulation is exact on random hypergraphs of
/// any class with heuristic width within the cap.
pub fn criterion_5(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("junction", "junction formulation exactness (min-fill width <= 6)");
    let corpus: Vec<Hypergraph> = random_hypergraphs(120, 10, 8, 4, 505)
        .into_iter()
        .filter(|g| min_fill_width(g) <= 6)
        .take(50)
        .collect();
    let mut ok = 0;
    for g in &corpus {
        let pass = junction_ef(g, guards)
            .map_err(|_| ())
            .and_then(|ef| ef_exactness_check(&ef, g, guards).map_err(|_| ()))
            .unwrap_or(false);
        if pass {
            ok += 1;
        }
    }
    suite.case(
        "projection equals MP (50 random hypergraphs, |V| <= 10)",
        ok == corpus.len() && corpus.len() == 50,
        format!("{ok}/{} exact", corpus.len()),
    );
    suite.finish()
}

/// Criterion 6: chain block census: for every chain signature with top size
/// 2..=6 the facet count stays within 5|f| + 2 and the block's solution set
/// is exactly MP of the chain structure, by vertex comparison.
pub fn criterion_6(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("chain", "chain block census and exactness");
    for f in 2usize..=6 {
        // signatures: any strictly increasing size sequence ending at f
        let inner: Vec<usize> = (2..f).collect();
        for mask in 0u32..(1 << inner.len()) {
            let mut sig: Vec<usize> = inner
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &s)| s)
                .collect();
            sig.push(f);
            // canonical chain on nodes 0..f with apex 0
            let chain: Vec<Edge> = sig
                .iter()
                .map(|&s| Edge::try_new((0..s as Node).collect()).unwrap())
                .collect();
            let cb = ChainBlock::new(0, chain).expect("canonical chain is valid");
            let name = format!("signature {sig:?}");
            let facets = match chain_block_facets(&cb, guards) {
                Ok(p) => p,
                Err(e) => {
                    suite.case(name, false, e.to_string());
                    continue;
                }
            };
            let (_, ineqs) = facets.census();
            let bound = 5 * f + 2;
            // vertex comparison against the multilinear set of the chain
            // structure
            let mut edges: Vec<Edge> = Vec::new();
            for &s in &sig {
                edges.push(Edge::try_new((0..s as Node).collect()).unwrap());
                if s >= 3 {
                    edges.push(Edge::try_new((1..s as Node).collect()).unwrap());
                }
            }
            let gbar = Hypergraph::from_parts((1..=f).map(|i| i.to_string()).collect(), edges);
            let pass = match (vertices(&facets, guards), enumerate_s(&gbar, guards)) {
                (Ok(mut vs), Ok(mut s)) => {
                    let key = |p: &Point| -> Vec<(Var, Rational)> {
                        p.0.iter().map(|(v, x)| (v.clone(), x.clone())).collect()
                    };
                    vs.sort_by_key(&key);
                    s.sort_by_key(&key);
                    ineqs <= bound && vs == s
                }
                _ => false,
            };
            suite.case(name, pass, format!("{ineqs} facets <= {bound}"));
        }
    }
    suite.finish()
}

/// The exhaustive reference for flower separation: scan every center and
/// every admissible petal set, track the most violated under the
/// deterministic tie-break.
fn exhaustive_most_violated(
    g: &Hypergraph,
    x: &Point,
) -> Option<(FlowerInequality, Rational)> {
    let mut best: Option<(Rational, usize, FlowerInequality)> = None;
    for (ci, e0) in g.edges().iter().enumerate() {
        for mut f in flower_inequalities(g, e0).unwrap_or_default() {
            f.petals.sort();
            let c = f.constraint();
            let violation = c.eval(x) - c.rhs.clone();
            if violation <= rat(0) {
                continue;
            }
            let better = match &best {
                None => true,
                Some((bv, bci, bf)) => {
                    violation > *bv
                        || (violation == *bv && (ci < *bci || (ci == *bci && f.petals < bf.petals)))
                }
            };
            if better {
                best = Some((violation, ci, f));
            }
        }
    }
    best.map(|(v, _, f)| (f, v))
}

/// Criterion 7: the pattern-grouped separation routine agrees with
/// exhaustive flower enumeration on vertices of MP^LP, including the
/// tie-break.
pub fn criterion_7(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new(
        "separation",
        "flower separation agrees with exhaustive enumeration",
    );
    let corpus = random_hypergraphs(40, 6, 9, 4, 707);
    let mut points: Vec<(Hypergraph, Point)> = Vec::new();
    'outer: for g in corpus {
        if g.edge_count() == 0 {
            continue;
        }
        let lp = standard_linearization(&g);
        let Ok(vs) = vertices(&lp, guards) else {
            continue;
        };
        for v in vs {
            points.push((g.clone(), v));
            if points.len() >= 100 {
                break 'outer;
            }
        }
    }
    let mut agree = 0;
    let mut violated_found = 0;
    for (g, x) in &points {
        let fast = separate_flower(g, x, guards).ok().flatten();
        let slow = exhaustive_most_violated(g, x);
        let same = match (&fast, &slow) {
            (None, None) => true,
            (Some((ff, fv)), Some((sf, sv))) => {
                let mut ffs = ff.clone();
                ffs.petals.sort();
                fv == sv && ffs.center == sf.center && ffs.petals == sf.petals
            }
            _ => false,
        };
        if slow.is_some() {
            violated_found += 1;
        }
        if same {
            agree += 1;
        }
    }
    suite.case(
        "100 MP^LP vertices of random rank <= 4 hypergraphs",
        agree == points.len() && points.len() == 100,
        format!(
            "{agree}/{} agree ({violated_found} with violated flowers)",
            points.len()
        ),
    );
    suite.finish()
}

/// Criterion 8: classifier soundness against the exhaustive oracle corpus
/// and 500 random hypergraphs, with the hierarchy and witnesses validated.
pub fn criterion_8(_guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("exhaustive", "classifier flags agree with oracle ground truth");
    let corpus = exhaustive_small_corpus(4).expect("max_nodes 4 is within the cap");
    let mut agree = 0;
    for entry in &corpus {
        let r = classify(&entry.hypergraph);
        if r.berge == entry.berge
            && r.gamma == entry.gamma
            && r.beta == entry.beta
            && r.alpha == entry.alpha
            && r.hierarchy_consistent()
        {
            agree += 1;
        }
    }
    suite.case(
        format!("exhaustive corpus on <= 4 nodes ({} hypergraphs)", corpus.len()),
        agree == corpus.len(),
        format!("{agree}/{} agree", corpus.len()),
    );

    let rnd = random_hypergraphs(500, 8, 8, 4, 808);
    let mut agree = 0;
    let mut witness_ok = 0;
    for g in &rnd {
        let r = classify(g);
        let oracle_berge = oracle_find_cycle(g, CycleKind::Berge).is_none();
        let oracle_gamma = oracle_find_cycle(g, CycleKind::Gamma).is_none();
        let oracle_beta = oracle_find_cycle(g, CycleKind::Beta).is_none();
        let oracle_alpha = brute_force_rip(g.reduction().edges());
        if r.berge == oracle_berge
            && r.gamma == oracle_gamma
            && r.beta == oracle_beta
            && r.alpha == oracle_alpha
            && r.hierarchy_consistent()
        {
            agree += 1;
        }
        let mut w_ok = true;
        if let Some(w) = &r.witness.berge_cycle {
            w_ok &= w.validate(g).is_ok();
        }
        if let Some(w) = &r.witness.gamma_cycle {
            w_ok &= w.validate(g).is_ok();
        }
        if let Some(w) = &r.witness.beta_cycle {
            w_ok &= w.validate(g).is_ok();
        }
        if let Some(order) = &r.witness.nest_point_order {
            w_ok &= validate_nest_order(g, order).is_ok();
        }
        if let Some(rip) = &r.witness.rip_ordering {
            w_ok &= rip.validate().is_ok();
        }
        if w_ok {
            witness_ok += 1;
        }
    }
    suite.case(
        "500 random hypergraphs (|V| <= 8)",
        agree == rnd.len(),
        format!("{agree}/{} agree", rnd.len()),
    );
    suite.case(
        "witnesses validate (cycles, nest orders, RIP orderings)",
        witness_ok == rnd.len(),
        format!("{witness_ok}/{} valid", rnd.len()),
    );
    suite.finish()
}

/// Criterion 9: the Padberg fractional witness on the triangle.
pub fn criterion_9(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("padberg", "triangle fractional vertex and acyclic equality");
    let g = Hypergraph::from_dense(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap();
    let lp = standard_linearization(&g);
    let mut half = Point::new();
    for v in g.nodes() {
        half.set(Var::Node(v), ratio(1, 2));
    }
    for e in g.edges() {
        half.set(edge_var(e), rat(0));
    }
    match vertices(&lp, guards) {
        Ok(vs) => suite.ok(
            "(1/2,1/2,1/2,0,0,0) is a vertex of MP^LP(triangle)",
            vs.contains(&half),
        ),
        Err(e) => suite.case("vertex enumeration of MP^LP(triangle)", false, e.to_string()),
    }
    match enumerate_s(&g, guards) {
        Ok(s) => match membership(&half, &s) {
            Ok(inside) => suite.ok("the half-point lies outside conv(S(triangle))", !inside),
            Err(e) => suite.case("membership test", false, e.to_string()),
        },
        Err(e) => suite.case("enumerate S(triangle)", false, e.to_string()),
    }
    // acyclic-graph equality cases: paths and stars up to 4 nodes
    for (name, n, edges) in [
        ("path on 3 nodes", 3u32, vec![vec![1u32, 2], vec![2, 3]]),
        ("path on 4 nodes", 4, vec![vec![1, 2], vec![2, 3], vec![3, 4]]),
        ("star on 4 nodes", 4, vec![vec![1, 2], vec![1, 3], vec![1, 4]]),
    ] {
        let refs: Vec<&[u32]> = edges.iter().map(|e| e.as_slice()).collect();
        let g = Hypergraph::from_dense(n, &refs).unwrap();
        let pass = multilinear_polytope(&g, guards)
            .and_then(|mp| polytope_equal(&standard_linearization(&g), &mp))
            .unwrap_or(false);
        suite.ok(format!("BQP = MP^LP for the {name}"), pass);
    }
    suite.finish()
}

/// Criterion 10: decomposability holds for complete-intersection pairs and
/// all one-shared-node pairs in the corpus.
pub fn criterion_10(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("decomposition", "gluing rule on complete intersections");
    let mut rng = StdRng::seed_from_u64(1010);
    let mut pass = 0;
    let mut total = 0;
    while total < 20 {
        // shared set of size 2 (carrying its edge in both parts) or size 3
        let shared = rng.random_range(2..=3usize);
        let extra1 = rng.random_range(1..=2usize);
        let extra2 = rng.random_range(1..=2usize);
        if shared + extra1 + extra2 > 7 {
            continue;
        }
        let (g1, g2) = match complete_intersection_pair(shared, extra1, extra2, &mut rng) {
            Some(pair) => pair,
            None => continue,
        };
        total += 1;
        if decomposability_check(&g1, &g2, guards).unwrap_or(false) {
            pass += 1;
        }
    }
    suite.case(
        "20 random pairs with complete shared sections",
        pass == total,
        format!("{pass}/{total} decompose"),
    );

    let mut pass = 0;
    let mut total = 0;
    for s1 in 2..=4usize {
        for s2 in 2..=4usize {
            // single edges of sizes s1 and s2 sharing exactly one node
            let g1 = Hypergraph::from_dense(s1 as u32, &[&(1..=s1 as u32).collect::<Vec<_>>()])
                .unwrap();
            let names2: Vec<String> = std::iter::once("1".to_string())
                .chain((1..s2).map(|i| format!("b{i}")))
                .collect();
            let edge2: Vec<String> = names2.clone();
            let g2 = Hypergraph::new(names2, &[edge2]).unwrap();
            total += 1;
            if decomposability_check(&g1, &g2, guards).unwrap_or(false) {
                pass += 1;
            }
        }
    }
    suite.case(
        "all one-shared-node single-edge pairs (sizes 2..4)",
        pass == total,
        format!("{pass}/{total} decompose"),
    );
    suite.finish()
}

/// A pair of hypergraphs sharing exactly `shared` nodes, both containing
/// the complete hypergraph on the shared set, plus private random edges.
fn complete_intersection_pair(
    shared: usize,
    extra1: usize,
    extra2: usize,
    rng: &mut StdRng,
) -> Option<(Hypergraph, Hypergraph)> {
    let shared_names: Vec<String> = (1..=shared).map(|i| format!("s{i}")).collect();
    let build = |prefix: &str, extra: usize, rng: &mut StdRng| -> Option<Hypergraph> {
        let mut names = shared_names.clone();
        names.extend((1..=extra).map(|i| format!("{prefix}{i}")));
        let mut edges: BTreeSet<Vec<String>> = BTreeSet::new();
        // complete hypergraph on the shared set
        for mask in 1u32..(1 << shared) {
            if mask.count_ones() >= 2 {
                let e: Vec<String> = (0..shared)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| shared_names[i].clone())
                    .collect();
                edges.insert(e);
            }
        }
        // a few private edges mixing shared and private nodes
        for _ in 0..extra {
            let mut e: Vec<String> = vec![names[shared + rng.random_range(0..extra)].clone()];
            let more = rng.random_range(1..=2usize);
            for _ in 0..more {
                e.push(names[rng.random_range(0..names.len())].clone());
            }
            e.sort();
            e.dedup();
            if e.len() >= 2 {
                edges.insert(e);
            }
        }
        Hypergraph::new(names, &edges.into_iter().collect::<Vec<_>>()).ok()
    };
    let g1 = build("a", extra1, rng)?;
    let g2 = build("b", extra2, rng)?;
    Some((g1, g2))
}

/// Criterion 11: determinism and round-trips: byte-stable generation,
/// parse-write identity, repeated solves agree.
pub fn criterion_11(guards: &Guards) -> SuiteReport {
    let mut suite = Suite::new("determinism", "seeded determinism and file round-trips");
    let specs = [
        (GenClass::Berge, 8, 5, 3, 11u64),
        (GenClass::Gamma, 8, 5, 3, 12),
        (GenClass::Beta, 10, 8, 4, 13),
        (GenClass::Alpha, 9, 5, 4, 14),
        (GenClass::General, 7, 7, 4, 15),
    ];
    let mut stable = 0;
    let mut round_trip = 0;
    let mut solve_agree = 0;
    let mut total = 0;
    for (class, n, m, r, seed) in specs {
        let (Ok(a), Ok(b)) = (
            gen_instance(class, n, m, r, seed),
            gen_instance(class, n, m, r, seed),
        ) else {
            suite.case(format!("generate {class:?}"), false, "generation failed");
            continue;
        };
        total += 1;
        if write_instance(&a) == write_instance(&b) {
            stable += 1;
        }
        match parse_instance(&write_instance(&a)) {
            Ok(parsed) if parsed == a => round_trip += 1,
            _ => {}
        }
        let s1 = solve(&a, Strategy::Auto, 8, guards);
        let s2 = solve(&a, Strategy::Auto, 8, guards);
        if let (Ok(x), Ok(y)) = (s1, s2) {
            if x.value == y.value
                && x.solution == y.solution
                && x.certificate == y.certificate
                && x.formulation == y.formulation
            {
                solve_agree += 1;
            }
        }
    }
    suite.case(
        "same seed produces byte-identical instance files",
        stable == total && total == specs.len(),
        format!("{stable}/{total} stable"),
    );
    suite.case(
        "parse of write is the identity",
        round_trip == total,
        format!("{round_trip}/{total} identical"),
    );
    suite.case(
        "repeated solves agree (modulo wall time)",
        solve_agree == total,
        format!("{solve_agree}/{total} agree"),
    );
    suite.finish()
}

/// Suites runnable from the command line.
pub const SUITE_NAMES: &[&str] = &[
    "padberg",
    "berge",
    "gamma",
    "beta",
    "alpha",
    "separation",
    "decomposition",
    "exhaustive",
];

pub fn run_named_suite(name: &str, guards: &Guards) -> Option<SuiteReport> {
    Some(match name {
        "padberg" => criterion_9(guards),
        "berge" => criterion_1(guards),
        "gamma" => criterion_2(guards),
        "beta" => criterion_3(guards),
        "alpha" => criterion_4(guards),
        "separation" => criterion_7(guards),
        "decomposition" => criterion_10(guards),
        "exhaustive" => criterion_8(guards),
        _ => return None,
    })
}
