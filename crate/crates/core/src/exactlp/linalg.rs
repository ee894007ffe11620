//! Small dense exact-rational linear algebra shared by the simplex,
//! the double-description initialization and the affine-hull computation.

use num::{One, Zero};

use super::Rational;

/// Reduced row echelon form in place. Returns the pivot column indices in
/// order; rows beyond the rank are zeroed.
pub(crate) fn rref(mat: &mut [Vec<Rational>]) -> Vec<usize> {
    let m = mat.len();
    if m == 0 {
        return Vec::new();
    }
    let n = mat[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, p);
        let inv = mat[r][c].clone();
        for x in mat[r].iter_mut() {
            *x = &*x / &inv;
        }
        for i in 0..m {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in 0..n {
                    let sub = &f * &mat[r][j];
                    mat[i][j] = &mat[i][j] - sub;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// One nonzero vector in the null space of `rows` (each of length `n`),
/// or `None` when the rows have full column rank.
pub(crate) fn nullspace_vector(rows: &[Vec<Rational>], n: usize) -> Option<Vec<Rational>> {
    let mut mat: Vec<Vec<Rational>> = rows.to_vec();
    let pivots = rref(&mut mat);
    let free = (0..n).find(|c| !pivots.contains(c))?;
    let mut v = vec![Rational::zero(); n];
    v[free] = Rational::one();
    for (i, &pc) in pivots.iter().enumerate() {
        // pivot row i: x_pc + sum over free cols of coeff * x_free = 0
        v[pc] = -mat[i][free].clone();
    }
    Some(v)
}

/// Basis of the null space of `rows`.
pub(crate) fn nullspace_basis(rows: &[Vec<Rational>], n: usize) -> Vec<Vec<Rational>> {
    let mut mat: Vec<Vec<Rational>> = rows.to_vec();
    let pivots = rref(&mut mat);
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -mat[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub(crate) fn rank(rows: &[Vec<Rational>]) -> usize {
    let mut mat: Vec<Vec<Rational>> = rows.to_vec();
    rref(&mut mat).len()
}

/// Solve the square system `B x = rhs` exactly. `None` if singular.
pub(crate) fn solve_square(b: &[Vec<Rational>], rhs: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = b.len();
    let k = rhs.len(); // number of right-hand sides (each of length n)
    let mut aug: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = b[i].clone();
            for r in rhs {
                row.push(r[i].clone());
            }
            row
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().any(|&c| c >= n) {
        return None;
    }
    // pivots are exactly columns 0..n in order
    let mut out = vec![vec![Rational::zero(); n]; k];
    for (row, &pc) in pivots.iter().enumerate() {
        for (s, sol) in out.iter_mut().enumerate() {
            sol[pc] = aug[row][n + s].clone();
        }
    }
    Some(out)
}

pub(crate) fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    let mut acc = Rational::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            acc += x * y;
        }
    }
    acc
}

/// Scale a rational vector to a primitive integer vector (same direction).
pub(crate) fn to_primitive_integers(v: &[Rational]) -> Vec<num::BigInt> {
    let mut int = super::integerize_row(v);
    super::normalize_content(&mut int);
    int
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlp::rat;

    #[test]
    fn rref_and_nullspace() {
        // x + y + z = 0 has a 2-dimensional null space
        let rows = vec![vec![rat(1), rat(1), rat(1)]];
        let basis = nullspace_basis(&rows, 3);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            assert!(dot(&rows[0], v).is_zero());
        }
        assert_eq!(rank(&rows), 1);

        let full = vec![
            vec![rat(1), rat(0)],
            vec![rat(1), rat(1)],
        ];
        assert!(nullspace_vector(&full, 2).is_none());
        assert_eq!(rank(&full), 2);
    }

    #[test]
    fn solve_square_works() {
        // [[2, 0], [1, 1]] x = e1, e2
        let b = vec![vec![rat(2), rat(0)], vec![rat(1), rat(1)]];
        let rhs = vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]];
        let sols = solve_square(&b, &rhs).unwrap();
        assert_eq!(sols[0], vec![ratio(1, 2), ratio(-1, 2)]);
        assert_eq!(sols[1], vec![rat(0), rat(1)]);
    }

    use crate::exactlp::ratio;
}
