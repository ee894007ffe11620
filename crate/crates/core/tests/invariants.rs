//! Cross-cutting invariants: the LP engine against the vertex enumerator,
//! vertex purification, the literal vertex form of the tightness theorems,
//! and the sparsity census of flower inequalities.

use std::collections::BTreeMap;

use proptest::prelude::*;

use multilin::acyclicity::is_berge_acyclic;
use multilin::exactlp::{
    lp_max, rat, vertices, LinearConstraint, LpStatus, Point, PolyhedronH, Rational, Var,
};
use multilin::guards::Guards;
use multilin::hypergraph::Hypergraph;
use multilin::relaxations::{enumerate_s, flower_inequalities, standard_linearization};

fn guards() -> Guards {
    Guards::default()
}

fn var(i: u32) -> Var {
    Var::Node(i)
}

/// A random bounded polytope: the unit box plus a few random halfplanes.
fn arb_polytope() -> impl Strategy<Value = PolyhedronH> {
    let halfplane = (
        proptest::collection::vec(-3i64..=3, 2..=3),
        0i64..=4,
    );
    (2usize..=3, proptest::collection::vec(halfplane, 0..4)).prop_map(|(dim, planes)| {
        let vars: Vec<Var> = (0..dim as u32).map(var).collect();
        let mut p = PolyhedronH::new(vars.clone());
        for v in &vars {
            p.push(LinearConstraint::le([(v.clone(), rat(1))], rat(1)));
            p.push(LinearConstraint::le([(v.clone(), rat(-1))], rat(0)));
        }
        for (coeffs, rhs) in planes {
            let row: Vec<(Var, Rational)> = coeffs
                .iter()
                .take(dim)
                .enumerate()
                .map(|(i, &c)| (var(i as u32), rat(c)))
                .collect();
            p.push(LinearConstraint::le(row, rat(rhs)));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// lp_max agrees with brute maximization over the vertex set, the
    /// argmax satisfies every constraint exactly, and it is itself a vertex.
    #[test]
    fn lp_value_equals_vertex_maximum(
        p in arb_polytope(),
        obj_coeffs in proptest::collection::vec(-3i64..=3, 3),
    ) {
        let obj: BTreeMap<Var, Rational> = p
            .vars()
            .iter()
            .cloned()
            .zip(obj_coeffs.iter().map(|&c| rat(c)))
            .collect();
        let verts = vertices(&p, &guards()).unwrap();
        let out = lp_max(&p, &obj).unwrap();
        if verts.is_empty() {
            prop_assert_eq!(out.status, LpStatus::Infeasible);
            return Ok(());
        }
        prop_assert_eq!(out.status, LpStatus::Optimal);
        let value = out.value.unwrap();
        let best: Rational = verts
            .iter()
            .map(|v| {
                obj.iter()
                    .map(|(x, c)| c * v.get(x).unwrap())
                    .sum::<Rational>()
            })
            .max()
            .unwrap();
        prop_assert_eq!(&value, &best);
        let argmax = out.point.unwrap();
        prop_assert!(p.contains(&argmax), "argmax violates a constraint");
        prop_assert!(verts.contains(&argmax), "argmax is not a vertex");
    }
}

/// The literal vertex form of the tightness theorem: the vertex set of the
/// standard linearization equals S(G) exactly when G is Berge-acyclic.
#[test]
fn standard_linearization_vertex_sets() {
    let cases: Vec<(Hypergraph, bool)> = vec![
        (Hypergraph::from_dense(2, &[&[1, 2]]).unwrap(), true),
        (Hypergraph::from_dense(3, &[&[1, 2], &[2, 3]]).unwrap(), true),
        (Hypergraph::from_dense(5, &[&[1, 2, 3], &[3, 4, 5]]).unwrap(), true),
        (Hypergraph::from_dense(3, &[&[1, 2], &[1, 3], &[2, 3]]).unwrap(), false),
        (Hypergraph::from_dense(4, &[&[1, 2, 3], &[2, 3, 4]]).unwrap(), false),
    ];
    for (g, expect_berge) in cases {
        assert_eq!(is_berge_acyclic(&g).0, expect_berge);
        let lp = standard_linearization(&g);
        let mut vs = vertices(&lp, &guards()).unwrap();
        let mut s = enumerate_s(&g, &guards()).unwrap();
        let key = |p: &Point| -> Vec<(Var, Rational)> {
            p.0.iter().map(|(v, x)| (v.clone(), x.clone())).collect()
        };
        vs.sort_by_key(&key);
        s.sort_by_key(&key);
        assert_eq!(
            vs == s,
            expect_berge,
            "vertex set comparison disagrees with Berge status"
        );
    }
}

/// Sparsity census: every flower inequality carries at most
/// floor(r/2) + r + 1 nonzero coefficients (petals + uncovered nodes +
/// center).
#[test]
fn flower_sparsity_census() {
    let graphs = [
        Hypergraph::from_dense(6, &[&[1, 2, 3, 4], &[1, 2, 5], &[3, 4, 6]]).unwrap(),
        Hypergraph::from_dense(5, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5], &[2, 3, 4, 5]]).unwrap(),
        Hypergraph::from_dense(4, &[&[1, 2, 3], &[1, 2, 4], &[1, 2, 3, 4]]).unwrap(),
    ];
    let mut max_nonzeros = 0usize;
    let mut max_petals = 0usize;
    for g in &graphs {
        let r = g.rank().unwrap();
        let bound = r / 2 + r + 1;
        for e0 in g.edges() {
            for f in flower_inequalities(g, e0).unwrap() {
                let c = f.constraint();
                assert!(
                    c.coeffs().len() <= bound,
                    "flower with {} nonzeros exceeds {bound}",
                    c.coeffs().len()
                );
                max_nonzeros = max_nonzeros.max(c.coeffs().len());
                max_petals = max_petals.max(f.petals.len());
                assert!(f.petals.len() <= r / 2);
            }
        }
    }
    // census recorded for comparison with the advertised petal bound
    println!("flower census: max nonzeros {max_nonzeros}, max petals {max_petals}");
    assert!(max_nonzeros >= 3);
}
