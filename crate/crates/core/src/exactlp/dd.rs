//! Double description method for pointed cones `{y : M y <= 0}`.
//!
//! Rays are primitive integer vectors. The hot loop runs over `i128` with
//! checked arithmetic and escalates to `BigInt` on overflow, which at desk
//! scale essentially never happens but keeps the result exact regardless.

use std::collections::HashSet;

use num::{BigInt, Integer, Signed, Zero};

use super::linalg;
use super::Rational;

#[derive(Debug, Clone, thiserror::Error)]
pub(crate) enum DdError {
    #[error("cone is not pointed")]
    NotPointed,
}

/// Integer arithmetic abstraction so the same algorithm runs over `i128`
/// (fast path) and `BigInt` (exact fallback).
trait Ring: Sized + Clone + Ord + std::hash::Hash {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_positive(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn checked_add(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Self;
    fn from_bigint(b: &BigInt) -> Option<Self>;
    fn to_bigint(&self) -> BigInt;
}

impl Ring for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_positive(&self) -> bool {
        *self > 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        i128::checked_add(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.unsigned_abs(), o.unsigned_abs());
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as i128
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn from_bigint(b: &BigInt) -> Option<Self> {
        i128::try_from(b).ok()
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_positive(&self) -> bool {
        Signed::is_positive(self)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn div_exact(&self, o: &Self) -> Self {
        self / o
    }
    fn from_bigint(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

struct Overflow;

/// Fixed-width bitset over processed-row positions.
#[derive(Clone, PartialEq, Eq)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(words: usize) -> Bits {
        Bits(vec![0; words])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
    fn is_superset_of(&self, o: &Bits) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & b == *b)
    }
}

struct Ray<I> {
    v: Vec<I>,
    zero: Bits,
}

fn dot<I: Ring>(a: &[I], b: &[I]) -> Result<I, Overflow> {
    let mut acc = I::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            let p = x.checked_mul(y).ok_or(Overflow)?;
            acc = acc.checked_add(&p).ok_or(Overflow)?;
        }
    }
    Ok(acc)
}

fn normalize<I: Ring>(v: &mut [I]) {
    let mut g = I::zero();
    for x in v.iter() {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g);
    }
}

/// Extreme rays of the pointed cone `{y in Q^dim : row . y <= 0}`.
/// Fails with `NotPointed` when the rows do not have full column rank.
pub(crate) fn extreme_rays(rows: &[Vec<BigInt>], dim: usize) -> Result<Vec<Vec<BigInt>>, DdError> {
    // Initial basis: a maximal independent row subset, greedily in order.
    let rat_rows: Vec<Vec<Rational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| Rational::from_integer(x.clone())).collect())
        .collect();
    let mut chosen: Vec<usize> = Vec::new();
    let mut acc: Vec<Vec<Rational>> = Vec::new();
    for (i, r) in rat_rows.iter().enumerate() {
        acc.push(r.clone());
        if linalg::rank(&acc) == acc.len() {
            chosen.push(i);
            if chosen.len() == dim {
                break;
            }
        } else {
            acc.pop();
        }
    }
    if chosen.len() < dim {
        return Err(DdError::NotPointed);
    }
    // Initial rays: columns of -B^{-1}, as primitive integer vectors.
    let b: Vec<Vec<Rational>> = chosen.iter().map(|&i| rat_rows[i].clone()).collect();
    let neg_identity: Vec<Vec<Rational>> = (0..dim)
        .map(|j| {
            let mut e = vec![Rational::zero(); dim];
            e[j] = -Rational::from_integer(BigInt::from(1));
            e
        })
        .collect();
    let sols = linalg::solve_square(&b, &neg_identity).expect("basis is nonsingular");
    let init: Vec<Vec<BigInt>> = sols.iter().map(|s| linalg::to_primitive_integers(s)).collect();

    match run::<i128>(rows, dim, &chosen, &init) {
        Ok(rays) => Ok(rays),
        Err(Overflow) => Ok(run::<BigInt>(rows, dim, &chosen, &init).unwrap_or_else(|_| {
            unreachable!("BigInt arithmetic cannot overflow")
        })),
    }
}

fn run<I: Ring>(
    rows: &[Vec<BigInt>],
    _dim: usize,
    chosen: &[usize],
    init: &[Vec<BigInt>],
) -> Result<Vec<Vec<BigInt>>, Overflow> {
    let irows: Vec<Vec<I>> = rows
        .iter()
        .map(|r| r.iter().map(|x| I::from_bigint(x).ok_or(Overflow)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let words = rows.len().div_ceil(64);
    let dim = init[0].len();

    // Zero-sets are indexed by position in the processed-row list.
    let mut processed: Vec<usize> = chosen.to_vec();
    let mut rays: Vec<Ray<I>> = Vec::new();
    for r in init {
        let v: Vec<I> = r.iter().map(|x| I::from_bigint(x).ok_or(Overflow)).collect::<Result<_, _>>()?;
        let mut zero = Bits::new(words);
        for (pos, &ri) in processed.iter().enumerate() {
            let d = dot(&irows[ri], &v)?;
            debug_assert!(!d.is_positive(), "initial ray infeasible");
            if d.is_zero() {
                zero.set(pos);
            }
        }
        rays.push(Ray { v, zero });
    }

    let in_chosen: HashSet<usize> = chosen.iter().copied().collect();
    for ri in 0..rows.len() {
        if in_chosen.contains(&ri) {
            continue;
        }
        let row = &irows[ri];
        let pos = processed.len();
        let vals: Vec<I> = rays
            .iter()
            .map(|r| dot(row, &r.v))
            .collect::<Result<_, _>>()?;
        let infeasible: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        if infeasible.is_empty() {
            for (r, val) in rays.iter_mut().zip(&vals) {
                if val.is_zero() {
                    r.zero.set(pos);
                }
            }
            processed.push(ri);
            continue;
        }
        let feasible_strict: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();

        let mut fresh: Vec<Ray<I>> = Vec::new();
        let mut seen: HashSet<Vec<I>> = HashSet::new();
        for &p in &infeasible {
            for &nidx in &feasible_strict {
                let common = rays[p].zero.and(&rays[nidx].zero);
                if common.count() + 2 < dim {
                    continue;
                }
                // combinatorial adjacency: no third ray's zero set contains
                // the common zero set
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != nidx && r.zero.is_superset_of(&common));
                if blocked {
                    continue;
                }
                // new ray = val_p * ray_n - val_n * ray_p (positive combination)
                let mut v = Vec::with_capacity(dim);
                for k in 0..dim {
                    let a = vals[p].checked_mul(&rays[nidx].v[k]).ok_or(Overflow)?;
                    let b = vals[nidx].checked_mul(&rays[p].v[k]).ok_or(Overflow)?;
                    v.push(a.checked_sub(&b).ok_or(Overflow)?);
                }
                normalize(&mut v);
                if !seen.insert(v.clone()) {
                    continue;
                }
                let mut zero = Bits::new(words);
                for (q, &rj) in processed.iter().enumerate() {
                    if dot(&irows[rj], &v)?.is_zero() {
                        zero.set(q);
                    }
                }
                zero.set(pos);
                fresh.push(Ray { v, zero });
            }
        }

        let mut kept: Vec<Ray<I>> = Vec::new();
        for (i, r) in rays.into_iter().enumerate() {
            if vals[i].is_positive() {
                continue;
            }
            let mut r = r;
            if vals[i].is_zero() {
                r.zero.set(pos);
            }
            kept.push(r);
        }
        kept.extend(fresh);
        rays = kept;
        processed.push(ri);
    }

    let mut out: Vec<Vec<BigInt>> = rays
        .into_iter()
        .map(|r| r.v.iter().map(|x| x.to_bigint()).collect())
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn negative_orthant_rays() {
        // {y : y_i <= 0} has extreme rays -e_i
        let rows = vec![bi(&[1, 0]), bi(&[0, 1])];
        let rays = extreme_rays(&rows, 2).unwrap();
        assert_eq!(rays.len(), 2);
        assert!(rays.contains(&bi(&[-1, 0])));
        assert!(rays.contains(&bi(&[0, -1])));
    }

    #[test]
    fn square_homogenization() {
        // unit square homogenized: {(x, y, t) : 0 <= x <= t, 0 <= y <= t, t >= 0}
        // as rows of M y <= 0
        let rows = vec![
            bi(&[-1, 0, 0]),
            bi(&[1, 0, -1]),
            bi(&[0, -1, 0]),
            bi(&[0, 1, -1]),
            bi(&[0, 0, -1]),
        ];
        let rays = extreme_rays(&rows, 3).unwrap();
        assert_eq!(rays.len(), 4);
        for corner in [[0, 0, 1], [1, 0, 1], [0, 1, 1], [1, 1, 1]] {
            assert!(rays.contains(&bi(&corner.map(i64::from))));
        }
    }

    #[test]
    fn not_pointed_detected() {
        // single constraint in 2d leaves a line
        let rows = vec![bi(&[1, 0])];
        assert!(matches!(extreme_rays(&rows, 2), Err(DdError::NotPointed)));
    }

    #[test]
    fn redundant_rows_are_harmless() {
        let rows = vec![
            bi(&[1, 0]),
            bi(&[0, 1]),
            bi(&[2, 0]),
            bi(&[1, 1]),
        ];
        let rays = extreme_rays(&rows, 2).unwrap();
        assert_eq!(rays.len(), 2);
    }
}
