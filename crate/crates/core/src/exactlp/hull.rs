//! Vertex enumeration, convex hull (facet) computation, membership tests
//! and vertex projections, all exact.

use std::collections::BTreeSet;

use num::{BigInt, Signed, Zero};

use crate::guards::{check, Guards};

use super::linalg;
use super::{
    dd, integerize_row, LinearConstraint, LpError, Point, PolyhedronH, Rational, Sense,
    SimplexSession, Var,
};

/// Exact vertex set of a polyhedron. Empty polyhedra yield an empty list;
/// unbounded ones are an error.
pub fn vertices(poly: &PolyhedronH, guards: &Guards) -> Result<Vec<Point>, LpError> {
    let n = poly.dim();
    check("vertex enumeration dimension", n, guards.hull_dim)?;

    // Homogenize: {(x, t) : a.x <= b t for each row, t >= 0}.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for c in poly.constraints() {
        let mut row = vec![Rational::zero(); n + 1];
        for (v, coef) in c.coeffs() {
            row[poly.var_index(v).unwrap()] = coef.clone();
        }
        row[n] = -c.rhs.clone();
        let int = integerize_row(&row);
        if c.sense == Sense::Eq {
            rows.push(int.iter().map(|x| -x).collect());
        }
        rows.push(int);
    }
    let mut t_row = vec![BigInt::zero(); n + 1];
    t_row[n] = BigInt::from(-1);
    rows.push(t_row);

    let rat_rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    if linalg::rank(&rat_rows) < n + 1 {
        // The homogenization has a lineality direction: either the
        // polyhedron is empty (with an unbounded constraint system) or it
        // contains a line.
        let feasible = SimplexSession::new(poly)?.is_feasible();
        return if feasible {
            Err(LpError::Unbounded)
        } else {
            Ok(Vec::new())
        };
    }

    let rays = dd::extreme_rays(&rows, n + 1).map_err(|_| LpError::Unbounded)?;
    let mut verts: Vec<Vec<Rational>> = Vec::new();
    let mut recession = false;
    for ray in rays {
        let t = &ray[n];
        debug_assert!(!t.is_negative());
        if t.is_zero() {
            recession = true;
        } else {
            verts.push(
                ray[..n]
                    .iter()
                    .map(|x| Rational::new(x.clone(), t.clone()))
                    .collect(),
            );
        }
    }
    if recession {
        return if SimplexSession::new(poly)?.is_feasible() {
            Err(LpError::Unbounded)
        } else {
            Ok(Vec::new())
        };
    }
    verts.sort();
    verts.dedup();
    Ok(verts
        .into_iter()
        .map(|v| {
            poly.vars()
                .iter()
                .cloned()
                .zip(v)
                .collect::<Point>()
        })
        .collect())
}

/// Minimal H-description of the convex hull of a point list: affine-hull
/// equations plus one inequality per facet (relative to the affine hull).
pub fn hull_facets(points: &[Point], guards: &Guards) -> Result<PolyhedronH, LpError> {
    if points.is_empty() {
        return Err(LpError::BadInput("hull of an empty point list".into()));
    }
    let vars: Vec<Var> = points[0].0.keys().cloned().collect();
    for p in points {
        if p.0.len() != vars.len() || !p.0.keys().eq(vars.iter()) {
            return Err(LpError::BadInput(
                "points do not share one variable space".into(),
            ));
        }
    }
    let n = vars.len();
    check("hull dimension", n, guards.hull_dim)?;
    check("hull point count", points.len(), guards.hull_points)?;

    let mut dense: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| vars.iter().map(|v| p.get(v).unwrap().clone()).collect())
        .collect();
    dense.sort();
    dense.dedup();

    let mut poly = PolyhedronH::new(vars.clone());

    // Affine hull: normals are the null space of the difference matrix.
    let p0 = dense[0].clone();
    let diffs: Vec<Vec<Rational>> = dense[1..]
        .iter()
        .map(|p| p.iter().zip(&p0).map(|(a, b)| a - b).collect())
        .collect();
    let normals = linalg::nullspace_basis(&diffs, n);
    for a in &normals {
        let prim = linalg::to_primitive_integers(a);
        let arat: Vec<Rational> = prim.iter().map(|x| Rational::from_integer(x.clone())).collect();
        let rhs = linalg::dot(&arat, &p0);
        poly.push(LinearConstraint::eq(
            vars.iter().cloned().zip(arat.iter().cloned()),
            rhs,
        ));
    }

    // Pivot coordinates parametrize the affine hull.
    let mut rref_mat = diffs.clone();
    let pivots = linalg::rref(&mut rref_mat);
    let k = pivots.len();
    debug_assert_eq!(k + normals.len(), n);
    if k == 0 {
        return Ok(poly); // single point: equations only
    }

    // Facets of the full-dimensional projection onto the pivot coordinates,
    // via the polar cone {(a, b) : a.u_i + b <= 0 for all points}.
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for p in &dense {
        let mut row: Vec<Rational> = pivots.iter().map(|&c| p[c].clone()).collect();
        row.push(Rational::from_integer(BigInt::from(1)));
        rows.push(integerize_row(&row));
    }
    let rays = dd::extreme_rays(&rows, k + 1)
        .unwrap_or_else(|_| unreachable!("polar cone of a full-dimensional hull is pointed"));
    for ray in rays {
        // a.u <= -beta
        let rhs = Rational::from_integer(-ray[k].clone());
        let coeffs = pivots
            .iter()
            .zip(&ray[..k])
            .map(|(&c, a)| (vars[c].clone(), Rational::from_integer(a.clone())));
        poly.push(LinearConstraint::le(coeffs, rhs));
    }
    Ok(poly)
}

/// Is `x` a convex combination of `generators`? Exact LP feasibility.
pub fn membership(x: &Point, generators: &[Point]) -> Result<bool, LpError> {
    if generators.is_empty() {
        return Ok(false);
    }
    let vars: Vec<Var> = x.0.keys().cloned().collect();
    for g in generators {
        if !g.0.keys().eq(vars.iter()) {
            return Err(LpError::BadInput(
                "generators do not share the point's variable space".into(),
            ));
        }
    }
    let lambda: Vec<Var> = (0..generators.len())
        .map(|i| Var::Lambda(u32::MAX, i as u64))
        .collect();
    let mut poly = PolyhedronH::new(lambda.clone());
    for v in &vars {
        poly.push(LinearConstraint::eq(
            lambda
                .iter()
                .cloned()
                .zip(generators.iter().map(|g| g.get(v).unwrap().clone())),
            x.get(v).unwrap().clone(),
        ));
    }
    poly.push(LinearConstraint::eq(
        lambda.iter().cloned().map(|l| (l, Rational::from_integer(BigInt::from(1)))),
        Rational::from_integer(BigInt::from(1)),
    ));
    for l in &lambda {
        poly.push(LinearConstraint::le(
            [(l.clone(), Rational::from_integer(BigInt::from(-1)))],
            Rational::zero(),
        ));
    }
    Ok(SimplexSession::new(&poly)?.is_feasible())
}

/// Vertex set of `poly` restricted to `keep` and deduplicated: a
/// V-representation of the projection.
pub fn project_vertices(
    poly: &PolyhedronH,
    keep: &[Var],
    guards: &Guards,
) -> Result<Vec<Point>, LpError> {
    for v in keep {
        if poly.var_index(v).is_none() {
            return Err(LpError::BadInput(format!("unknown variable {v:?}")));
        }
    }
    let verts = vertices(poly, guards)?;
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for v in verts {
        let r = v.restrict(keep);
        let key: Vec<(Var, Rational)> = r.0.iter().map(|(k, x)| (k.clone(), x.clone())).collect();
        if seen.insert(key) {
            out.push(r);
        }
    }
    Ok(out)
}
