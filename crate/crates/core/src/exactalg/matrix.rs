//! Dense matrices over a [`Ring`], stored row-major as nested vectors.

use super::{Field, Ring};

pub type Matrix<T> = Vec<Vec<T>>;

pub fn zeros<T: Ring>(rows: usize, cols: usize) -> Matrix<T> {
    vec![vec![T::zero(); cols]; rows]
}

pub fn identity<T: Ring>(n: usize) -> Matrix<T> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { T::one() } else { T::zero() })
                .collect()
        })
        .collect()
}

pub fn transpose<T: Ring>(a: &Matrix<T>) -> Matrix<T> {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols)
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn mul<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let m = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..m)
                .map(|j| {
                    row.iter().zip(b).fold(T::zero(), |acc, (x, brow)| {
                        if x.is_zero() || brow[j].is_zero() {
                            acc
                        } else {
                            acc + &(x.clone() * &brow[j])
                        }
                    })
                })
                .collect()
        })
        .collect()
}

pub fn mul_vec<T: Ring>(a: &Matrix<T>, v: &[T]) -> Vec<T> {
    a.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (x, y)| acc + &(x.clone() * y))
        })
        .collect()
}

pub fn add<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    a.iter()
        .zip(b)
        .map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.clone() + y).collect())
        .collect()
}

pub fn sub<T: Ring>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    a.iter()
        .zip(b)
        .map(|(r, s)| {
            r.iter()
                .zip(s)
                .map(|(x, y)| x.clone() - y.clone())
                .collect()
        })
        .collect()
}

pub fn map<T, U>(a: &Matrix<T>, f: impl Fn(&T) -> U) -> Matrix<U> {
    a.iter().map(|r| r.iter().map(&f).collect()).collect()
}

/// Submatrix on the given row and column index ranges.
pub fn block<T: Clone>(
    a: &Matrix<T>,
    rows: std::ops::Range<usize>,
    cols: std::ops::Range<usize>,
) -> Matrix<T> {
    a[rows].iter().map(|r| r[cols.clone()].to_vec()).collect()
}

/// Inverse by Gauss-Jordan elimination; `None` if singular.
pub fn inverse<T: Field>(a: &Matrix<T>) -> Option<Matrix<T>> {
    let n = a.len();
    let mut m: Matrix<T> = a.clone();
    let mut inv = identity::<T>(n);
    for col in 0..n {
        let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        inv.swap(col, piv);
        let s = m[col][col].try_inv()?;
        for j in 0..n {
            m[col][j] = m[col][j].clone() * &s;
            inv[col][j] = inv[col][j].clone() * &s;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let f = m[r][col].clone();
            for j in 0..n {
                let (x, y) = (m[col][j].clone() * &f, inv[col][j].clone() * &f);
                m[r][j] = m[r][j].clone() - x;
                inv[r][j] = inv[r][j].clone() - y;
            }
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::{rat, Rational};

    #[test]
    fn inverse_round_trip() {
        let a: Matrix<Rational> = vec![
            vec![rat(0), rat(2), rat(1)],
            vec![rat(1), rat(1), rat(0)],
            vec![rat(3), rat(0), rat(1)],
        ];
        let b = inverse(&a).unwrap();
        assert_eq!(mul(&a, &b), identity(3));
        assert!(inverse(&vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]).is_none());
    }
}
