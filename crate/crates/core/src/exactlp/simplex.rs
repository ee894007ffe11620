//! Exact primal simplex with integer (fraction-free) pivoting and Bland's
//! anti-cycling rule.
//!
//! The tableau is kept as an integer matrix `M` together with a positive
//! scalar `d` so that the true tableau is `M / d`; each pivot divides by the
//! previous pivot element, which is exact (Edmonds pivoting). A session can
//! be re-optimized with many objectives over the same feasible basis, which
//! the polytope-inclusion probes rely on.

use std::collections::BTreeMap;

use num::{BigInt, One, Signed, Zero};

use super::linalg;
use super::{integerize_row, LinearConstraint, LpError, Point, PolyhedronH, Rational, Sense, Var};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Unbounded,
    Infeasible,
}

#[derive(Debug, Clone)]
pub struct LpOutcome {
    pub status: LpStatus,
    pub value: Option<Rational>,
    pub point: Option<Point>,
}

impl LpOutcome {
    fn infeasible() -> Self {
        LpOutcome {
            status: LpStatus::Infeasible,
            value: None,
            point: None,
        }
    }

    fn unbounded() -> Self {
        LpOutcome {
            status: LpStatus::Unbounded,
            value: None,
            point: None,
        }
    }
}

/// A factor-free simplex tableau over the standard form of one polyhedron,
/// reusable across objectives.
pub struct SimplexSession {
    vars: Vec<Var>,
    /// Column of the nonnegative part of each variable.
    pos_col: Vec<usize>,
    /// Column of the negated part for variables not known nonnegative.
    neg_col: Vec<Option<usize>>,
    /// Number of structural + slack columns (artificials are gone after
    /// construction).
    ncols: usize,
    /// `m x (ncols + 1)` integer matrix; the last column is the rhs.
    rows: Vec<Vec<BigInt>>,
    basis: Vec<usize>,
    /// Positive common denominator: true tableau entries are `rows / d`.
    d: BigInt,
    feasible: bool,
}

impl SimplexSession {
    /// Build the standard form and run phase 1.
    pub fn new(poly: &PolyhedronH) -> Result<SimplexSession, LpError> {
        let n = poly.dim();
        // Dense rational rows.
        let mut dense: Vec<(Vec<Rational>, Sense, Rational)> = Vec::new();
        for c in poly.constraints() {
            let mut row = vec![Rational::zero(); n];
            for (v, coef) in c.coeffs() {
                let j = poly
                    .var_index(v)
                    .ok_or_else(|| LpError::BadInput(format!("undeclared variable {v:?}")))?;
                row[j] = coef.clone();
            }
            dense.push((row, c.sense, c.rhs.clone()));
        }

        // Detect explicit nonnegativity: a "a*x_j <= b" row with a < 0 and
        // b <= 0 proves x_j >= b/a >= 0. Rows stating exactly x_j >= 0 are
        // absorbed into the column bound.
        let mut nonneg = vec![false; n];
        let mut keep = vec![true; dense.len()];
        for (i, (row, sense, rhs)) in dense.iter().enumerate() {
            if *sense != Sense::Le {
                continue;
            }
            let nz: Vec<usize> = (0..n).filter(|&j| !row[j].is_zero()).collect();
            if nz.len() == 1 && row[nz[0]].is_negative() && !rhs.is_positive() {
                nonneg[nz[0]] = true;
                if rhs.is_zero() {
                    keep[i] = false;
                }
            }
        }

        let mut pos_col = vec![0usize; n];
        let mut neg_col = vec![None; n];
        let mut next = 0;
        for j in 0..n {
            pos_col[j] = next;
            next += 1;
        }
        for j in 0..n {
            if !nonneg[j] {
                neg_col[j] = Some(next);
                next += 1;
            }
        }
        let n_struct = next;
        let kept: Vec<(Vec<Rational>, Sense, Rational)> = dense
            .into_iter()
            .zip(keep)
            .filter(|(_, k)| *k)
            .map(|(r, _)| r)
            .collect();
        let n_slack = kept.iter().filter(|(_, s, _)| *s == Sense::Le).count();
        let ncols = n_struct + n_slack;

        // Integerize and lay out [struct | slack | artificial | rhs].
        let mut raw: Vec<(Vec<BigInt>, bool)> = Vec::new(); // (row, negated)
        let mut slack_i = 0;
        for (row, sense, rhs) in &kept {
            let mut full: Vec<Rational> = row.clone();
            full.push(rhs.clone());
            let ints = integerize_row(&full);
            let mut irow = vec![BigInt::zero(); ncols + 1];
            for j in 0..n {
                if ints[j].is_zero() {
                    continue;
                }
                irow[pos_col[j]] = ints[j].clone();
                if let Some(ncj) = neg_col[j] {
                    irow[ncj] = -ints[j].clone();
                }
            }
            let mut rhs_i = ints[n].clone();
            if *sense == Sense::Le {
                irow[n_struct + slack_i] = BigInt::one();
                slack_i += 1;
            }
            let negated = rhs_i.is_negative();
            if negated {
                for x in irow.iter_mut() {
                    *x = -x.clone();
                }
                rhs_i = -rhs_i;
            }
            irow[ncols] = rhs_i;
            raw.push((irow, negated));
        }

        // Rows whose slack survived with +1 start basic; the rest get
        // artificials.
        let mut art_rows = Vec::new();
        let mut basis = Vec::new();
        let mut slack_i = 0;
        for (i, (_, negated)) in raw.iter().enumerate() {
            let is_le = kept[i].1 == Sense::Le;
            if is_le {
                let col = n_struct + slack_i;
                slack_i += 1;
                if !*negated {
                    basis.push(col);
                    continue;
                }
            }
            basis.push(usize::MAX); // patched below
            art_rows.push(i);
        }
        let n_art = art_rows.len();
        let total = ncols + n_art;
        let mut rows: Vec<Vec<BigInt>> = raw
            .into_iter()
            .map(|(mut r, _)| {
                let rhs = r.pop().unwrap();
                r.resize(total, BigInt::zero());
                r.push(rhs);
                r
            })
            .collect();
        for (k, &i) in art_rows.iter().enumerate() {
            rows[i][ncols + k] = BigInt::one();
            basis[i] = ncols + k;
        }

        let mut s = SimplexSession {
            vars: poly.vars().to_vec(),
            pos_col,
            neg_col,
            ncols,
            rows,
            basis,
            d: BigInt::one(),
            feasible: false,
        };
        s.phase1(n_art)?;
        Ok(s)
    }

    pub fn is_feasible(&self) -> bool {
        self.feasible
    }

    fn m(&self) -> usize {
        self.rows.len()
    }

    fn rhs_col(&self) -> usize {
        self.rows.first().map(|r| r.len() - 1).unwrap_or(0)
    }

    fn phase1(&mut self, n_art: usize) -> Result<(), LpError> {
        if n_art == 0 {
            self.feasible = true;
            return Ok(());
        }
        // max -(sum of artificials); every column may enter so the final
        // reduced costs certify true phase-1 optimality.
        let width = self.ncols + n_art;
        let mut c = vec![BigInt::zero(); width];
        for j in self.ncols..width {
            c[j] = -BigInt::one();
        }
        let status = self.pivot_loop(&c, width);
        debug_assert!(status == LpStatus::Optimal, "phase 1 cannot be unbounded");
        // Feasible iff every artificial sits at value zero.
        let rhs_col = self.rhs_col();
        let infeasible = (0..self.m())
            .any(|i| self.basis[i] >= self.ncols && !self.rows[i][rhs_col].is_zero());
        if infeasible {
            self.feasible = false;
            // leave artificial columns in place; session unusable
            return Ok(());
        }
        // Drive zero-level artificials out of the basis.
        let mut i = 0;
        while i < self.m() {
            if self.basis[i] >= self.ncols {
                match (0..self.ncols).find(|&j| !self.rows[i][j].is_zero()) {
                    Some(q) => {
                        if self.rows[i][q].is_negative() {
                            // rhs is zero on this row, so flipping it keeps
                            // the basic solution and makes the pivot positive.
                            debug_assert!(self.rows[i][rhs_col].is_zero());
                            for x in self.rows[i].iter_mut() {
                                *x = -x.clone();
                            }
                        }
                        self.pivot(i, q);
                        i += 1;
                    }
                    None => {
                        // Redundant row.
                        self.rows.remove(i);
                        self.basis.remove(i);
                    }
                }
            } else {
                i += 1;
            }
        }
        // Drop artificial columns (they sit between ncols and rhs).
        for row in self.rows.iter_mut() {
            let rhs = row.pop().unwrap();
            row.truncate(self.ncols);
            row.push(rhs);
        }
        self.feasible = true;
        Ok(())
    }

    /// Reduced-cost row for integer objective `c` (one entry per column):
    /// `R_j = d*c_j - sum_i c[basis[i]] * M[i][j]`; true reduced cost is
    /// `R_j / (d * scale)`.
    fn reduced_costs(&self, c: &[BigInt]) -> Vec<BigInt> {
        let width = c.len();
        let mut r: Vec<BigInt> = c.iter().map(|cj| cj * &self.d).collect();
        for (i, row) in self.rows.iter().enumerate() {
            let cb = &c[self.basis[i]];
            if cb.is_zero() {
                continue;
            }
            for j in 0..width {
                if !row[j].is_zero() {
                    r[j] -= cb * &row[j];
                }
            }
        }
        r
    }

    /// Bland's rule loop, maximizing. `enter_limit` restricts entering
    /// candidates to columns `< enter_limit`.
    fn pivot_loop(&mut self, c: &[BigInt], enter_limit: usize) -> LpStatus {
        loop {
            let red = self.reduced_costs(c);
            let entering = (0..enter_limit)
                .find(|&j| !self.basis.contains(&j) && red[j].is_positive());
            let Some(q) = entering else {
                return LpStatus::Optimal;
            };
            let rhs_col = self.rhs_col();
            // min ratio rhs_i / M[i][q] over M[i][q] > 0; Bland tie-break on
            // the smallest basic column.
            let mut leave: Option<usize> = None;
            for i in 0..self.m() {
                if !self.rows[i][q].is_positive() {
                    continue;
                }
                leave = Some(match leave {
                    None => i,
                    Some(k) => {
                        let lhs = &self.rows[i][rhs_col] * &self.rows[k][q];
                        let rhs = &self.rows[k][rhs_col] * &self.rows[i][q];
                        match lhs.cmp(&rhs) {
                            std::cmp::Ordering::Less => i,
                            std::cmp::Ordering::Greater => k,
                            std::cmp::Ordering::Equal => {
                                if self.basis[i] < self.basis[k] {
                                    i
                                } else {
                                    k
                                }
                            }
                        }
                    }
                });
            }
            let Some(p) = leave else {
                return LpStatus::Unbounded;
            };
            self.pivot(p, q);
        }
    }

    fn pivot(&mut self, p: usize, q: usize) {
        let piv = self.rows[p][q].clone();
        debug_assert!(piv.is_positive());
        let width = self.rows[p].len();
        let pivot_row = self.rows[p].clone();
        for i in 0..self.m() {
            if i == p {
                continue;
            }
            let factor = self.rows[i][q].clone();
            if factor.is_zero() {
                // entries only rescale by piv/d
                for j in 0..width {
                    if !self.rows[i][j].is_zero() {
                        let num = &piv * &self.rows[i][j];
                        debug_assert!((&num % &self.d).is_zero());
                        self.rows[i][j] = num / &self.d;
                    }
                }
            } else {
                for j in 0..width {
                    let num = &piv * &self.rows[i][j] - &factor * &pivot_row[j];
                    if num.is_zero() {
                        self.rows[i][j] = BigInt::zero();
                    } else {
                        debug_assert!((&num % &self.d).is_zero());
                        self.rows[i][j] = num / &self.d;
                    }
                }
            }
        }
        self.basis[p] = q;
        self.d = piv;
    }

    /// Current basic solution mapped back to the polyhedron variables.
    fn current_point(&self) -> Point {
        let rhs_col = self.rhs_col();
        let mut colval: BTreeMap<usize, Rational> = BTreeMap::new();
        for i in 0..self.m() {
            let v = Rational::new(self.rows[i][rhs_col].clone(), self.d.clone());
            colval.insert(self.basis[i], v);
        }
        let mut p = Point::new();
        for (j, var) in self.vars.iter().enumerate() {
            let up = colval.get(&self.pos_col[j]).cloned().unwrap_or_else(Rational::zero);
            let vn = self.neg_col[j]
                .and_then(|cj| colval.get(&cj).cloned())
                .unwrap_or_else(Rational::zero);
            p.set(var.clone(), up - vn);
        }
        p
    }

    /// Maximize a rational objective over the session's polyhedron. The
    /// returned point is an optimal basic solution (not necessarily a
    /// vertex of the original polyhedron; see [`lp_max`]).
    pub fn maximize(&mut self, objective: &BTreeMap<Var, Rational>) -> Result<LpOutcome, LpError> {
        if !self.feasible {
            return Ok(LpOutcome::infeasible());
        }
        let mut cr = vec![Rational::zero(); self.ncols];
        for (v, coef) in objective {
            let Some(j) = self.vars.iter().position(|w| w == v) else {
                return Err(LpError::BadInput(format!(
                    "objective references undeclared variable {v:?}"
                )));
            };
            cr[self.pos_col[j]] = coef.clone();
            if let Some(cj) = self.neg_col[j] {
                cr[cj] = -coef.clone();
            }
        }
        let c = integerize_row(&cr);
        match self.pivot_loop(&c, self.ncols) {
            LpStatus::Unbounded => Ok(LpOutcome::unbounded()),
            _ => {
                let point = self.current_point();
                let value = objective
                    .iter()
                    .map(|(v, coef)| coef * point.get(v).unwrap())
                    .sum();
                Ok(LpOutcome {
                    status: LpStatus::Optimal,
                    value: Some(value),
                    point: Some(point),
                })
            }
        }
    }

    /// Maximize and return just the optimal value (`None` when unbounded).
    pub fn maximize_value(
        &mut self,
        objective: &BTreeMap<Var, Rational>,
    ) -> Result<Option<Rational>, LpError> {
        Ok(self.maximize(objective)?.value)
    }
}

/// Exact LP maximization. When the optimum is attained the reported argmax
/// is purified to a vertex of the polyhedron (for bounded feasible sets).
pub fn lp_max(
    poly: &PolyhedronH,
    objective: &BTreeMap<Var, Rational>,
) -> Result<LpOutcome, LpError> {
    let mut session = SimplexSession::new(poly)?;
    let mut out = session.maximize(objective)?;
    if out.status == LpStatus::Optimal {
        let x = out.point.take().unwrap();
        out.point = Some(purify_to_vertex(poly, x, objective));
    }
    Ok(out)
}

/// Walk from an optimal point to a vertex of the same optimal face by
/// repeatedly moving along a null direction of the active constraints until
/// a new constraint becomes tight.
fn purify_to_vertex(poly: &PolyhedronH, mut x: Point, objective: &BTreeMap<Var, Rational>) -> Point {
    let n = poly.dim();
    let dense_row = |c: &LinearConstraint| -> Vec<Rational> {
        let mut row = vec![Rational::zero(); n];
        for (v, coef) in c.coeffs() {
            row[poly.var_index(v).unwrap()] = coef.clone();
        }
        row
    };
    let rows: Vec<(Vec<Rational>, Sense, Rational)> = poly
        .constraints()
        .iter()
        .map(|c| (dense_row(c), c.sense, c.rhs.clone()))
        .collect();
    let mut obj = vec![Rational::zero(); n];
    for (v, coef) in objective {
        obj[poly.var_index(v).unwrap()] = coef.clone();
    }

    loop {
        let xv: Vec<Rational> = poly
            .vars()
            .iter()
            .map(|v| x.get(v).cloned().unwrap_or_else(Rational::zero))
            .collect();
        let mut active: Vec<Vec<Rational>> = Vec::new();
        let mut slacks: Vec<(usize, Rational)> = Vec::new(); // row idx, slack
        for (i, (row, sense, rhs)) in rows.iter().enumerate() {
            let lhs = linalg::dot(row, &xv);
            match sense {
                Sense::Eq => active.push(row.clone()),
                Sense::Le => {
                    if &lhs == rhs {
                        active.push(row.clone());
                    } else {
                        slacks.push((i, rhs - lhs));
                    }
                }
            }
        }
        let Some(dir) = linalg::nullspace_vector(&active, n) else {
            return x; // active constraints have full rank: a vertex
        };
        // A two-sided feasible direction at an optimum is orthogonal to the
        // objective.
        debug_assert!(linalg::dot(&obj, &dir).is_zero());
        let step = |d: &[Rational]| -> Option<Rational> {
            slacks
                .iter()
                .filter_map(|(i, slack)| {
                    let ad = linalg::dot(&rows[*i].0, d);
                    ad.is_positive().then(|| slack / ad)
                })
                .min()
        };
        let (dir, t) = match step(&dir) {
            Some(t) => (dir, t),
            None => {
                let neg: Vec<Rational> = dir.iter().map(|v| -v.clone()).collect();
                match step(&neg) {
                    Some(t) => (neg, t),
                    None => return x, // unbounded optimal face
                }
            }
        };
        for (j, var) in poly.vars().iter().enumerate() {
            if !dir[j].is_zero() {
                let cur = x.get(var).cloned().unwrap_or_else(Rational::zero);
                x.set(var.clone(), cur + &t * &dir[j]);
            }
        }
    }
}
