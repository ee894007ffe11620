//! The multilinear set S(G), the standard linearization, flower
//! inequalities, the flower relaxation and the flower separation routine.

use std::collections::BTreeMap;

use num::{One, Signed, Zero};

use crate::exactlp::{rat, LinearConstraint, Point, PolyhedronH, Rational, Var};
use crate::guards::{check, GuardError, Guards};
use crate::hypergraph::{Edge, HgError, Hypergraph, Instance, Node};

#[derive(Debug, Clone, thiserror::Error)]
pub enum RelaxError {
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error(transparent)]
    Hg(#[from] HgError),
    #[error("bad input: {0}")]
    BadInput(String),
}

/// The lifted variable space of a hypergraph: one z variable per node, one
/// per edge, in deterministic order (nodes by index, edges canonical).
pub struct LiftedSpace {
    vars: Vec<Var>,
}

impl LiftedSpace {
    pub fn of(g: &Hypergraph) -> LiftedSpace {
        let mut vars: Vec<Var> = g.nodes().map(Var::Node).collect();
        vars.extend(g.edges().iter().map(edge_var));
        LiftedSpace { vars }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }
}

pub fn edge_var(e: &Edge) -> Var {
    Var::Set(e.nodes().to_vec())
}

/// All 2^|V| lifted binary points of the multilinear set.
pub fn enumerate_s(g: &Hypergraph, guards: &Guards) -> Result<Vec<Point>, GuardError> {
    let n = g.node_count();
    check("multilinear set node count", n, guards.enum_nodes)?;
    let edge_masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|e| e.nodes().iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();
    let mut out = Vec::with_capacity(1usize << n);
    for mask in 0u32..(1u32 << n) {
        let mut p = Point::new();
        for v in g.nodes() {
            p.set(Var::Node(v), if mask & (1 << v) != 0 { rat(1) } else { rat(0) });
        }
        for (e, &em) in g.edges().iter().zip(&edge_masks) {
            p.set(edge_var(e), if mask & em == em { rat(1) } else { rat(0) });
        }
        out.push(p);
    }
    Ok(out)
}

/// The standard linearization MP^LP(G): `z_v <= 1`, `z_e >= 0`,
/// `z_e >= sum z_v - |e| + 1` and `z_e <= z_v` per incidence, plus `z_v >= 0`
/// for isolated nodes only (covered nodes inherit nonnegativity).
pub fn standard_linearization(g: &Hypergraph) -> PolyhedronH {
    let space = LiftedSpace::of(g);
    let mut p = PolyhedronH::new(space.vars().to_vec());
    for v in g.nodes() {
        p.push(LinearConstraint::le([(Var::Node(v), rat(1))], rat(1)));
        if g.incident_edges(v).is_empty() {
            p.push(LinearConstraint::le([(Var::Node(v), rat(-1))], rat(0)));
        }
    }
    for e in g.edges() {
        let ze = edge_var(e);
        p.push(LinearConstraint::le([(ze.clone(), rat(-1))], rat(0)));
        // z_e >= sum z_v - |e| + 1
        let mut coeffs: Vec<(Var, Rational)> =
            e.nodes().iter().map(|&v| (Var::Node(v), rat(1))).collect();
        coeffs.push((ze.clone(), rat(-1)));
        p.push(LinearConstraint::le(coeffs, rat(e.len() as i64 - 1)));
        for &v in e.nodes() {
            p.push(LinearConstraint::le(
                [(ze.clone(), rat(1)), (Var::Node(v), rat(-1))],
                rat(0),
            ));
        }
    }
    p
}

/// Number of inequalities in the textbook display of MP^LP (excludes the
/// isolated-node lower bounds): |V| + sum over edges of (|e| + 2).
pub fn paper_inequality_count(g: &Hypergraph) -> usize {
    g.node_count() + g.edges().iter().map(|e| e.len() + 2).sum::<usize>()
}

/// A flower: a center edge and a petal set of adjacent edges, each petal
/// owning at least two private overlap nodes inside the center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowerInequality {
    pub center: Edge,
    pub petals: Vec<Edge>,
}

impl FlowerInequality {
    /// Nodes of the center not covered by any petal.
    pub fn uncovered(&self) -> Vec<Node> {
        self.center
            .nodes()
            .iter()
            .copied()
            .filter(|&v| !self.petals.iter().any(|p| p.contains(v)))
            .collect()
    }

    /// The inequality: sum of uncovered z_v + sum of petal z_e - z_center
    /// <= |uncovered| + |T| - 1.
    pub fn constraint(&self) -> LinearConstraint {
        let uncovered = self.uncovered();
        let mut coeffs: Vec<(Var, Rational)> = uncovered
            .iter()
            .map(|&v| (Var::Node(v), rat(1)))
            .collect();
        for p in &self.petals {
            coeffs.push((edge_var(p), rat(1)));
        }
        coeffs.push((edge_var(&self.center), rat(-1)));
        let rhs = rat(uncovered.len() as i64 + self.petals.len() as i64 - 1);
        LinearConstraint::le(coeffs, rhs)
    }

    /// The two-private-nodes condition on the overlap patterns.
    fn patterns_admissible(patterns: &[&Vec<Node>]) -> bool {
        patterns.iter().enumerate().all(|(i, pi)| {
            let private = pi
                .iter()
                .filter(|v| {
                    patterns
                        .iter()
                        .enumerate()
                        .all(|(j, pj)| j == i || !pj.contains(v))
                })
                .count();
            private >= 2
        })
    }
}

/// All flower inequalities centered at `e0`: every nonempty petal set of
/// adjacent edges satisfying the private-node condition. Petal sets are
/// enumerated in canonical order; sizes beyond |e0|/2 cannot be admissible.
pub fn flower_inequalities(
    g: &Hypergraph,
    e0: &Edge,
) -> Result<Vec<FlowerInequality>, RelaxError> {
    let adjacent = g.adjacent_edges(e0)?;
    let candidates: Vec<(&Edge, Vec<Node>)> = adjacent
        .into_iter()
        .map(|e| (e, e.intersection(e0)))
        .filter(|(_, ov)| ov.len() >= 2)
        .collect();
    let cap = e0.len() / 2;
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    enumerate_petal_sets(&candidates, cap, 0, &mut chosen, &mut |set| {
        out.push(FlowerInequality {
            center: e0.clone(),
            petals: set.iter().map(|&i| candidates[i].0.clone()).collect(),
        });
    });
    Ok(out)
}

fn enumerate_petal_sets(
    candidates: &[(&Edge, Vec<Node>)],
    cap: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize]),
) {
    if chosen.len() == cap {
        return;
    }
    for i in from..candidates.len() {
        chosen.push(i);
        let patterns: Vec<&Vec<Node>> = chosen.iter().map(|&k| &candidates[k].1).collect();
        // adding petals only shrinks private sets, so pruning here is safe
        if FlowerInequality::patterns_admissible(&patterns) {
            emit(chosen);
            enumerate_petal_sets(candidates, cap, i + 1, chosen, emit);
        }
        chosen.pop();
    }
}

/// MP^LP plus every flower inequality centered at every edge.
pub fn flower_relaxation(g: &Hypergraph, guards: &Guards) -> Result<PolyhedronH, RelaxError> {
    if let Ok(r) = g.rank() {
        check("flower relaxation rank", r, guards.rank_cap)?;
    }
    let mut p = standard_linearization(g);
    for e0 in g.edges() {
        for f in flower_inequalities(g, e0)? {
            p.push(f.constraint());
        }
    }
    Ok(p)
}

/// A most-violated flower inequality at `x`, or `None` when all hold.
///
/// Per center, adjacent edges are grouped by their overlap pattern inside
/// the center; only a best representative per pattern (max z value,
/// lexicographically smallest edge on ties) can appear in a most-violated
/// flower, so the enumeration is over distinct patterns. Ties between
/// equally violated flowers break lexicographically on (center, petal set).
pub fn separate_flower(
    g: &Hypergraph,
    x: &Point,
    guards: &Guards,
) -> Result<Option<(FlowerInequality, Rational)>, RelaxError> {
    if let Ok(r) = g.rank() {
        check("flower separation rank", r, guards.rank_cap)?;
    }
    let val = |v: &Var| -> Result<Rational, RelaxError> {
        x.get(v)
            .cloned()
            .ok_or_else(|| RelaxError::BadInput(format!("point misses variable {v:?}")))
    };
    let mut best: Option<(Rational, usize, FlowerInequality)> = None;
    for (ci, e0) in g.edges().iter().enumerate() {
        // group adjacent edges by overlap pattern, keep the best representative
        let mut by_pattern: BTreeMap<Vec<Node>, &Edge> = BTreeMap::new();
        for e in g.adjacent_edges(e0)? {
            let ov = e.intersection(e0);
            if ov.len() < 2 {
                continue;
            }
            let z = val(&edge_var(e))?;
            match by_pattern.get(&ov) {
                None => {
                    by_pattern.insert(ov, e);
                }
                Some(cur) => {
                    let zc = val(&edge_var(cur))?;
                    if z > zc || (z == zc && e < *cur) {
                        by_pattern.insert(ov, e);
                    }
                }
            }
        }
        let candidates: Vec<(&Edge, Vec<Node>)> = by_pattern
            .into_iter()
            .map(|(ov, e)| (e, ov))
            .collect();
        let ze0 = val(&edge_var(e0))?;
        let cap = e0.len() / 2;
        let mut chosen: Vec<usize> = Vec::new();
        let mut fail: Option<RelaxError> = None;
        enumerate_petal_sets(&candidates, cap, 0, &mut chosen, &mut |set| {
            if fail.is_some() {
                return;
            }
            let mut flower = FlowerInequality {
                center: e0.clone(),
                petals: set.iter().map(|&i| candidates[i].0.clone()).collect(),
            };
            flower.petals.sort();
            let uncovered = flower.uncovered();
            let mut lhs = -ze0.clone();
            for &v in &uncovered {
                match val(&Var::Node(v)) {
                    Ok(z) => lhs += z,
                    Err(e) => {
                        fail = Some(e);
                        return;
                    }
                }
            }
            for p in &flower.petals {
                match val(&edge_var(p)) {
                    Ok(z) => lhs += z,
                    Err(e) => {
                        fail = Some(e);
                        return;
                    }
                }
            }
            let rhs = rat(uncovered.len() as i64 + flower.petals.len() as i64 - 1);
            let violation = lhs - rhs;
            if !violation.is_positive() {
                return;
            }
            let better = match &best {
                None => true,
                Some((bv, bci, bf)) => {
                    violation > *bv
                        || (violation == *bv
                            && (ci < *bci || (ci == *bci && flower.petals < bf.petals)))
                }
            };
            if better {
                best = Some((violation, ci, flower));
            }
        });
        if let Some(e) = fail {
            return Err(e);
        }
    }
    Ok(best.map(|(v, _, f)| (f, v)))
}

/// Exact maximum of the instance objective over the multilinear set, by
/// streaming enumeration of the 2^|V| binary points.
pub fn brute_force_opt(inst: &Instance, guards: &Guards) -> Result<(Rational, Point), RelaxError> {
    let g = inst.hypergraph();
    let n = g.node_count();
    check("brute force node count", n, guards.enum_nodes)?;

    // Scale all costs to integers once.
    let mut lcm = num::BigInt::one();
    for c in inst.node_costs().iter().chain(inst.edge_costs()) {
        lcm = num::integer::lcm(lcm, c.denom().clone());
    }
    let scaled = |c: &Rational| -> num::BigInt { c.numer() * (&lcm / c.denom()) };
    let node_c: Vec<num::BigInt> = inst.node_costs().iter().map(scaled).collect();
    let edge_c: Vec<num::BigInt> = inst.edge_costs().iter().map(scaled).collect();

    let as_i128: Option<(Vec<i128>, Vec<i128>)> = (|| {
        let mut total: i128 = 0;
        let mut nc = Vec::with_capacity(node_c.len());
        let mut ec = Vec::with_capacity(edge_c.len());
        for c in &node_c {
            let v = i128::try_from(c).ok()?;
            total = total.checked_add(v.checked_abs()?)?;
            nc.push(v);
        }
        for c in &edge_c {
            let v = i128::try_from(c).ok()?;
            total = total.checked_add(v.checked_abs()?)?;
            ec.push(v);
        }
        Some((nc, ec))
    })();

    let edge_masks: Vec<u32> = g
        .edges()
        .iter()
        .map(|e| e.nodes().iter().fold(0u32, |m, &v| m | (1 << v)))
        .collect();

    let best_mask = match &as_i128 {
        Some((nc, ec)) => {
            let mut best: Option<(i128, u32)> = None;
            for mask in 0u32..(1u32 << n) {
                let mut val: i128 = 0;
                for v in 0..n {
                    if mask & (1 << v) != 0 {
                        val += nc[v];
                    }
                }
                for (i, &em) in edge_masks.iter().enumerate() {
                    if mask & em == em {
                        val += ec[i];
                    }
                }
                if best.as_ref().map(|(b, _)| val > *b).unwrap_or(true) {
                    best = Some((val, mask));
                }
            }
            best.unwrap().1
        }
        None => {
            let mut best: Option<(num::BigInt, u32)> = None;
            for mask in 0u32..(1u32 << n) {
                let mut val = num::BigInt::zero();
                for v in 0..n {
                    if mask & (1 << v) != 0 {
                        val += &node_c[v];
                    }
                }
                for (i, &em) in edge_masks.iter().enumerate() {
                    if mask & em == em {
                        val += &edge_c[i];
                    }
                }
                if best.as_ref().map(|(b, _)| val > *b).unwrap_or(true) {
                    best = Some((val, mask));
                }
            }
            best.unwrap().1
        }
    };

    let mut p = Point::new();
    for v in g.nodes() {
        p.set(
            Var::Node(v),
            if best_mask & (1 << v) != 0 { rat(1) } else { rat(0) },
        );
    }
    for (e, &em) in g.edges().iter().zip(&edge_masks) {
        p.set(
            edge_var(e),
            if best_mask & em == em { rat(1) } else { rat(0) },
        );
    }
    let value: Rational = g
        .nodes()
        .map(|v| inst.node_cost(v) * p.get(&Var::Node(v)).unwrap())
        .chain(
            g.edges()
                .iter()
                .enumerate()
                .map(|(i, e)| inst.edge_cost(i) * p.get(&edge_var(e)).unwrap()),
        )
        .sum();
    Ok((value, p))
}

/// Objective of an instance over the lifted space.
pub fn objective_of(inst: &Instance) -> BTreeMap<Var, Rational> {
    let g = inst.hypergraph();
    let mut obj = BTreeMap::new();
    for v in g.nodes() {
        if !inst.node_cost(v).is_zero() {
            obj.insert(Var::Node(v), inst.node_cost(v).clone());
        }
    }
    for (i, e) in g.edges().iter().enumerate() {
        obj.insert(edge_var(e), inst.edge_cost(i).clone());
    }
    obj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::{lp_max, ratio, LpStatus};

    fn guards() -> Guards {
        Guards::default()
    }

    #[test]
    fn enumerate_s_examples() {
        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        let s = enumerate_s(&g, &guards()).unwrap();
        assert_eq!(s.len(), 4);
        let e = edge_var(&g.edges()[0]);
        let ones = s
            .iter()
            .filter(|p| p.get(&e).unwrap() == &rat(1))
            .collect::<Vec<_>>();
        assert_eq!(ones.len(), 1);
        assert_eq!(ones[0].get(&Var::Node(0)).unwrap(), &rat(1));
        assert_eq!(ones[0].get(&Var::Node(1)).unwrap(), &rat(1));

        let g = Hypergraph::from_dense(2, &[]).unwrap();
        assert_eq!(enumerate_s(&g, &guards()).unwrap().len(), 4);

        let g = Hypergraph::from_dense(3, &[&[1, 2, 3]]).unwrap();
        let s = enumerate_s(&g, &guards()).unwrap();
        assert_eq!(s.len(), 8);
        let e = edge_var(&g.edges()[0]);
        assert_eq!(s.iter().filter(|p| p.get(&e).unwrap() == &rat(1)).count(), 1);
    }

    #[test]
    fn standard_linearization_census() {
        let g = Hypergraph::from_dense(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(paper_inequality_count(&g), 8); // 3 + (3 + 2) * 1
        let p = standard_linearization(&g);
        assert_eq!(p.constraints().len(), 8); // no isolated nodes

        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        let p = standard_linearization(&g);
        // McCormick: z1 <= 1, z2 <= 1, z12 >= 0, z12 >= z1 + z2 - 1, z12 <= z1, z12 <= z2
        assert_eq!(p.constraints().len(), 6);

        let g = Hypergraph::from_dense(2, &[]).unwrap();
        let p = standard_linearization(&g);
        assert_eq!(p.constraints().len(), 4); // box only
    }

    #[test]
    fn validity_of_standard_linearization() {
        let g = Hypergraph::from_dense(4, &[&[1, 2], &[2, 3, 4], &[1, 2, 3, 4]]).unwrap();
        let p = standard_linearization(&g);
        for s in enumerate_s(&g, &guards()).unwrap() {
            assert!(p.contains(&s));
        }
    }

    #[test]
    fn single_edge_lp_bound_tight() {
        // MP^LP of a single 2-edge with costs (1, 1, -3): optimum 1
        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        let p = standard_linearization(&g);
        let obj = [
            (Var::Node(0), rat(1)),
            (Var::Node(1), rat(1)),
            (edge_var(&g.edges()[0]), rat(-3)),
        ]
        .into_iter()
        .collect();
        let out = lp_max(&p, &obj).unwrap();
        assert_eq!(out.status, LpStatus::Optimal);
        assert_eq!(out.value.unwrap(), rat(1));
    }

    #[test]
    fn flower_enumeration_examples() {
        // center {1,2,3,4} with neighbors {1,2,5} and {3,4,6}: three flowers
        let g = Hypergraph::from_dense(6, &[&[1, 2, 3, 4], &[1, 2, 5], &[3, 4, 6]]).unwrap();
        let e0 = Edge::try_new(vec![0, 1, 2, 3]).unwrap();
        let flowers = flower_inequalities(&g, &e0).unwrap();
        assert_eq!(flowers.len(), 3);
        // the {A, B} flower covers the center entirely: z_A + z_B - z_e0 <= 1
        let both = flowers.iter().find(|f| f.petals.len() == 2).unwrap();
        assert!(both.uncovered().is_empty());
        let c = both.constraint();
        assert_eq!(c.rhs, rat(1));

        // overlap of size 1 admits no flower
        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[3, 4]]).unwrap();
        let e0 = Edge::try_new(vec![0, 1, 2]).unwrap();
        assert!(flower_inequalities(&g, &e0).unwrap().is_empty());

        // center {1,2,3}, neighbor {1,2,4}: z_3 + z_{124} - z_{123} <= 1
        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        let e0 = Edge::try_new(vec![0, 1, 2]).unwrap();
        let flowers = flower_inequalities(&g, &e0).unwrap();
        assert_eq!(flowers.len(), 1);
        let c = flowers[0].constraint();
        assert_eq!(c.rhs, rat(1));
        assert_eq!(c.coeffs().len(), 3);
    }

    #[test]
    fn flower_validity_on_s() {
        let g = Hypergraph::from_dense(6, &[&[1, 2, 3, 4], &[1, 2, 5], &[3, 4, 6]]).unwrap();
        let relax = flower_relaxation(&g, &guards()).unwrap();
        for s in enumerate_s(&g, &guards()).unwrap() {
            assert!(relax.contains(&s));
        }
    }

    #[test]
    fn separation_finds_no_cut_on_s_points() {
        let g = Hypergraph::from_dense(6, &[&[1, 2, 3, 4], &[1, 2, 5], &[3, 4, 6]]).unwrap();
        for s in enumerate_s(&g, &guards()).unwrap() {
            assert!(separate_flower(&g, &s, &guards()).unwrap().is_none());
        }
    }

    #[test]
    fn separation_all_zero_point() {
        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        let mut x = Point::new();
        for v in g.nodes() {
            x.set(Var::Node(v), rat(0));
        }
        for e in g.edges() {
            x.set(edge_var(e), rat(0));
        }
        assert!(separate_flower(&g, &x, &guards()).unwrap().is_none());
    }

    #[test]
    fn separation_finds_violation() {
        // center {1,2,3}, petal {1,2,4}: at z_3 = 1, z_{124} = 1, z_{123} = 0
        // the flower z_3 + z_{124} - z_{123} <= 1 is violated by 1.
        let g = Hypergraph::from_dense(4, &[&[1, 2, 3], &[1, 2, 4]]).unwrap();
        let mut x = Point::new();
        for v in g.nodes() {
            x.set(Var::Node(v), rat(1));
        }
        x.set(edge_var(&g.edges()[0]), rat(0));
        x.set(edge_var(&g.edges()[1]), rat(1));
        let (flower, violation) = separate_flower(&g, &x, &guards()).unwrap().unwrap();
        assert_eq!(violation, rat(1));
        assert_eq!(flower.petals.len(), 1);
        // exhaustive check agrees: no flower more violated
        for e0 in g.edges() {
            for f in flower_inequalities(&g, e0).unwrap() {
                let c = f.constraint();
                let excess = c.eval(&x) - c.rhs;
                assert!(excess <= violation);
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let g = Hypergraph::from_dense(2, &[&[1, 2]]).unwrap();
        let inst = Instance::new(g, vec![rat(1), rat(1)], vec![rat(-3)]).unwrap();
        let (v, p) = brute_force_opt(&inst, &guards()).unwrap();
        assert_eq!(v, rat(1));
        // argmax is a binary point of S
        for x in p.0.values() {
            assert!(x == &rat(0) || x == &rat(1));
        }

        let g = Hypergraph::from_dense(3, &[&[1, 2], &[2, 3]]).unwrap();
        let inst = Instance::new(g, vec![rat(1), rat(2), rat(3)], vec![rat(4), rat(5)]).unwrap();
        let (v, p2) = brute_force_opt(&inst, &guards()).unwrap();
        assert_eq!(v, rat(15)); // all ones
        for x in p2.0.values() {
            assert_eq!(x, &rat(1));
        }

        let g = Hypergraph::from_dense(2, &[]).unwrap();
        let inst = Instance::new(g, vec![rat(2), ratio(-1, 2)], vec![]).unwrap();
        let (v, _) = brute_force_opt(&inst, &guards()).unwrap();
        assert_eq!(v, rat(2));
    }
}
