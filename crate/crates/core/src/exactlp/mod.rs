//! Exact rational linear algebra and polyhedral computation: simplex LP,
//! double-description vertex enumeration, convex hulls, membership and
//! projections. All arithmetic is exact; there is no floating-point path.

mod dd;
mod hull;
mod linalg;
mod simplex;

pub use hull::{hull_facets, membership, project_vertices, vertices};
pub use simplex::{lp_max, LpOutcome, LpStatus, SimplexSession};

use std::collections::{BTreeMap, HashMap};

use num::{BigInt, One, Signed, Zero};

use crate::guards::GuardError;
use crate::hypergraph::Node;

/// Exact rational scalar: arbitrary-precision, canonical reduced form with
/// positive denominator (maintained by the `num` crate).
pub type Rational = num::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// A variable of a polyhedron. Node and subset variables are canonical by
/// sorted node indices so independently built systems agree on shared
/// variables; lambda variables are local to one extended-formulation block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    /// z_v for a hypergraph node.
    Node(Node),
    /// z_S for a node subset of size >= 2 (original edge or auxiliary).
    Set(Vec<Node>),
    /// Multiplier variable of block `.0`, indexed by a subset bitmask over
    /// the block's ground set.
    Lambda(u32, u64),
}

impl Var {
    pub fn set(mut nodes: Vec<Node>) -> Var {
        nodes.sort_unstable();
        nodes.dedup();
        Var::Set(nodes)
    }
}

/// A rational point, total on the variables it is used with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point(pub BTreeMap<Var, Rational>);

impl Point {
    pub fn new() -> Point {
        Point(BTreeMap::new())
    }

    pub fn get(&self, v: &Var) -> Option<&Rational> {
        self.0.get(v)
    }

    pub fn set(&mut self, v: Var, x: Rational) {
        self.0.insert(v, x);
    }

    /// Restriction to a variable subset.
    pub fn restrict(&self, keep: &[Var]) -> Point {
        Point(
            keep.iter()
                .filter_map(|v| self.0.get(v).map(|x| (v.clone(), x.clone())))
                .collect(),
        )
    }
}

impl Default for Point {
    fn default() -> Self {
        Point::new()
    }
}

impl FromIterator<(Var, Rational)> for Point {
    fn from_iter<T: IntoIterator<Item = (Var, Rational)>>(iter: T) -> Self {
        Point(iter.into_iter().collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sense {
    Le,
    Eq,
}

/// A linear constraint with exact rational coefficients. Zero coefficients
/// are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearConstraint {
    coeffs: BTreeMap<Var, Rational>,
    pub sense: Sense,
    pub rhs: Rational,
}

impl LinearConstraint {
    pub fn new(coeffs: impl IntoIterator<Item = (Var, Rational)>, sense: Sense, rhs: Rational) -> Self {
        let coeffs = coeffs.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        LinearConstraint { coeffs, sense, rhs }
    }

    pub fn le(coeffs: impl IntoIterator<Item = (Var, Rational)>, rhs: Rational) -> Self {
        Self::new(coeffs, Sense::Le, rhs)
    }

    pub fn eq(coeffs: impl IntoIterator<Item = (Var, Rational)>, rhs: Rational) -> Self {
        Self::new(coeffs, Sense::Eq, rhs)
    }

    pub fn coeffs(&self) -> &BTreeMap<Var, Rational> {
        &self.coeffs
    }

    pub fn eval(&self, p: &Point) -> Rational {
        self.coeffs
            .iter()
            .map(|(v, c)| c * p.get(v).cloned().unwrap_or_else(Rational::zero))
            .sum()
    }

    /// Exact satisfaction at a point.
    pub fn satisfied_by(&self, p: &Point) -> bool {
        let lhs = self.eval(p);
        match self.sense {
            Sense::Le => lhs <= self.rhs,
            Sense::Eq => lhs == self.rhs,
        }
    }

    /// Rename variables; used to instantiate memoized blocks.
    pub fn rename(&self, f: &impl Fn(&Var) -> Var) -> LinearConstraint {
        LinearConstraint {
            coeffs: self.coeffs.iter().map(|(v, c)| (f(v), c.clone())).collect(),
            sense: self.sense,
            rhs: self.rhs.clone(),
        }
    }
}

/// A polyhedron in H-description: an ordered variable list plus linear
/// constraints referencing only declared variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyhedronH {
    vars: Vec<Var>,
    index: HashMap<Var, usize>,
    constraints: Vec<LinearConstraint>,
}

impl PolyhedronH {
    pub fn new(vars: Vec<Var>) -> PolyhedronH {
        let index = vars.iter().cloned().enumerate().map(|(i, v)| (v, i)).collect();
        let p = PolyhedronH {
            vars,
            index,
            constraints: Vec::new(),
        };
        debug_assert_eq!(p.vars.len(), p.index.len(), "duplicate variable");
        p
    }

    pub fn push(&mut self, c: LinearConstraint) {
        debug_assert!(
            c.coeffs.keys().all(|v| self.index.contains_key(v)),
            "constraint references undeclared variable"
        );
        self.constraints.push(c);
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn var_index(&self, v: &Var) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn constraints(&self) -> &[LinearConstraint] {
        &self.constraints
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    /// Drop exact duplicate constraints, preserving first occurrences.
    pub fn dedup_constraints(&mut self) {
        let mut seen = std::collections::HashSet::new();
        self.constraints.retain(|c| {
            let key = (
                c.coeffs
                    .iter()
                    .map(|(v, r)| (v.clone(), r.clone()))
                    .collect::<Vec<_>>(),
                c.sense,
                c.rhs.clone(),
            );
            seen.insert(format!("{key:?}"))
        });
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.constraints.iter().all(|c| c.satisfied_by(p))
    }

    /// Counts (equations, inequalities).
    pub fn census(&self) -> (usize, usize) {
        let eqs = self.constraints.iter().filter(|c| c.sense == Sense::Eq).count();
        (eqs, self.constraints.len() - eqs)
    }

    /// Max number of nonzero coefficients over all constraints.
    pub fn max_nonzeros(&self) -> usize {
        self.constraints.iter().map(|c| c.coeffs.len()).max().unwrap_or(0)
    }

    /// Rename all variables (bijectively) into a new polyhedron.
    pub fn rename(&self, f: &impl Fn(&Var) -> Var) -> PolyhedronH {
        let mut p = PolyhedronH::new(self.vars.iter().map(|v| f(v)).collect());
        for c in &self.constraints {
            p.push(c.rename(f));
        }
        p
    }
}

/// Errors from the exact-LP engine.
#[derive(Debug, Clone, thiserror::Error)]
pub enum LpError {
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error(transparent)]
    Guard(#[from] GuardError),
    #[error("bad input: {0}")]
    BadInput(String),
}

/// Clear denominators of a rational row; returns integers scaled by the
/// positive lcm of the denominators.
pub(crate) fn integerize_row(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for r in row {
        lcm = num::integer::lcm(lcm, r.denom().clone());
    }
    row.iter().map(|r| r.numer() * (&lcm / r.denom())).collect()
}

/// Divide out the gcd of all entries; keeps the sign pattern.
pub(crate) fn normalize_content(row: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in row.iter() {
        g = num::integer::gcd(g, x.abs());
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in row.iter_mut() {
        *x = &*x / &g;
    }
}
