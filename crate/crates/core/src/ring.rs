//! Determinants over commutative rings.

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::{One, Zero};

/// The operations a determinant needs from its entries.
///
/// `zero_like`/`one_like` exist because some rings (truncated symmetric
/// functions) carry per-value metadata that the identity elements must inherit.
pub trait RingElement: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
}

/// Laplace expansion along rows with minors memoized by column set.
///
/// `unit` supplies the identity of the ring for the empty matrix. Matrices up to
/// 63 columns are supported; in practice sizes stay below ten.
pub fn laplace_det<T: RingElement>(matrix: &[Vec<T>], unit: &T) -> T {
    let n = matrix.len();
    assert!(matrix.iter().all(|row| row.len() == n), "matrix must be square");
    assert!(n < 64);
    let mut memo: HashMap<u64, T> = HashMap::new();
    let full = if n == 0 { 0 } else { (1u64 << n) - 1 };
    minor(matrix, 0, full, unit, &mut memo)
}

fn minor<T: RingElement>(m: &[Vec<T>], row: usize, cols: u64, unit: &T, memo: &mut HashMap<u64, T>) -> T {
    if row == m.len() {
        return unit.one_like();
    }
    if let Some(v) = memo.get(&cols) {
        return v.clone();
    }
    let mut acc = unit.zero_like();
    let mut sign_positive = true;
    for c in 0..m.len() {
        if cols & (1 << c) == 0 {
            continue;
        }
        let entry = &m[row][c];
        if !entry.is_zero() {
            let sub = minor(m, row + 1, cols & !(1 << c), unit, memo);
            if !sub.is_zero() {
                let term = entry.mul_ref(&sub);
                acc = if sign_positive { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
        }
        sign_positive = !sign_positive;
    }
    memo.insert(cols, acc.clone());
    acc
}

/// Determinant of a rational matrix by Gaussian elimination.
pub fn rational_det(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    let mut a: Vec<Vec<BigRational>> = matrix.to_vec();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if p != col {
            a.swap(p, col);
            det = -det;
        }
        let pivot = a[col][col].clone();
        det *= &pivot;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &pivot;
            let (top, rest) = a.split_at_mut(r);
            for (x, y) in rest[0][col..].iter_mut().zip(&top[col][col..]) {
                *x -= &f * y;
            }
        }
    }
    det
}

/// Determinant of a small integer matrix by fraction-free (Bareiss) elimination.
///
/// Panics on overflow; entries here are binomial coefficients of small arguments.
pub fn integer_det(matrix: &[Vec<i128>]) -> i128 {
    let n = matrix.len();
    let mut a: Vec<Vec<i128>> = matrix.to_vec();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&r| a[r][k] != 0) else {
                return 0;
            };
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[i][j]
                    .checked_mul(a[k][k])
                    .and_then(|x| x.checked_sub(a[i][k].checked_mul(a[k][j])?))
                    .expect("integer determinant overflow");
                a[i][j] = num / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    if n == 0 {
        1
    } else {
        sign * a[n - 1][n - 1]
    }
}
