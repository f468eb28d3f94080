//! Small square matrices over a prime field.

use crate::error::{Error, Result};

pub(crate) fn check_prime(p: u32) -> Result<()> {
    if p < 2
        || (2..p)
            .take_while(|d| d * d <= p)
            .any(|d| p.is_multiple_of(d))
    {
        return Err(Error::UnsupportedGroup(format!("{p} is not a prime")));
    }
    Ok(())
}

/// `n x n` matrix over `F_p`, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    pub n: usize,
    pub p: u32,
    pub e: Vec<u32>,
}

impl FpMatrix {
    pub fn zero(n: usize, p: u32) -> Self {
        FpMatrix {
            n,
            p,
            e: vec![0; n * n],
        }
    }

    pub fn identity(n: usize, p: u32) -> Self {
        let mut m = Self::zero(n, p);
        for i in 0..n {
            m.e[i * n + i] = 1;
        }
        m
    }

    pub fn unit(n: usize, p: u32, r: usize, c: usize) -> Self {
        let mut m = Self::zero(n, p);
        m.e[r * n + c] = 1;
        m
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.e[r * self.n + c]
    }

    pub fn add(&self, o: &Self) -> Self {
        FpMatrix {
            n: self.n,
            p: self.p,
            e: self
                .e
                .iter()
                .zip(&o.e)
                .map(|(a, b)| (a + b) % self.p)
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        FpMatrix {
            n: self.n,
            p: self.p,
            e: self
                .e
                .iter()
                .zip(&o.e)
                .map(|(a, b)| (a + self.p - b) % self.p)
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut e = vec![0u32; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.e[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    e[i * n + j] = (e[i * n + j] + a * o.e[k * n + j]) % self.p;
                }
            }
        }
        FpMatrix { n, p: self.p, e }
    }

    pub fn trace(&self) -> u32 {
        (0..self.n).map(|i| self.get(i, i)).sum::<u32>() % self.p
    }

    pub fn det(&self) -> u32 {
        det_slice(&self.e, self.n, self.p)
    }

    pub fn rank(&self) -> usize {
        row_reduce(self.e.chunks(self.n).map(<[u32]>::to_vec).collect(), self.p).len()
    }

    /// Jordan type of a unipotent matrix, or `None` if it is not unipotent.
    pub fn jordan_type(&self) -> Option<Vec<usize>> {
        let n = self.n;
        let nil = self.sub(&Self::identity(n, self.p));
        // ranks[k] = rank of nil^k
        let mut ranks = vec![n];
        let mut pw = Self::identity(n, self.p);
        for _ in 0..n {
            pw = pw.mul(&nil);
            ranks.push(pw.rank());
        }
        if ranks[n] != 0 {
            return None;
        }
        // number of parts >= k is ranks[k-1] - ranks[k]
        let conj: Vec<usize> = (1..=n)
            .map(|k| ranks[k - 1] - ranks[k])
            .filter(|&x| x > 0)
            .collect();
        Some(crate::combinat::conjugate(&conj))
    }
}

pub(crate) fn det_slice(e: &[u32], n: usize, p: u32) -> u32 {
    let p64 = p as i64;
    let v = |r: usize, c: usize| e[r * n + c] as i64;
    let d = match n {
        0 => 1,
        1 => v(0, 0),
        2 => v(0, 0) * v(1, 1) - v(0, 1) * v(1, 0),
        3 => {
            v(0, 0) * (v(1, 1) * v(2, 2) - v(1, 2) * v(2, 1))
                - v(0, 1) * (v(1, 0) * v(2, 2) - v(1, 2) * v(2, 0))
                + v(0, 2) * (v(1, 0) * v(2, 1) - v(1, 1) * v(2, 0))
        }
        _ => {
            let mut rows: Vec<Vec<u32>> = e.chunks(n).map(<[u32]>::to_vec).collect();
            return det_gauss(&mut rows, p);
        }
    };
    d.rem_euclid(p64) as u32
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime, a != 0
    let mut r = 1u64;
    let (mut b, mut e) = (a as u64, (p - 2) as u64);
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        e >>= 1;
    }
    r as u32
}

fn det_gauss(rows: &mut [Vec<u32>], p: u32) -> u32 {
    let n = rows.len();
    let mut det = 1u64;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| rows[r][c] != 0) else {
            return 0;
        };
        if piv != c {
            rows.swap(piv, c);
            det = (p as u64 - det) % p as u64;
        }
        det = det * rows[c][c] as u64 % p as u64;
        let inv = inv_mod(rows[c][c], p);
        for r in c + 1..n {
            let f = rows[r][c] as u64 * inv as u64 % p as u64;
            if f == 0 {
                continue;
            }
            for k in c..n {
                rows[r][k] =
                    ((rows[r][k] as u64 + (p as u64 - f) * rows[c][k] as u64) % p as u64) as u32;
            }
        }
    }
    det as u32
}

/// Nonzero rows of the reduced row echelon form.
pub(crate) fn row_reduce(mut rows: Vec<Vec<u32>>, p: u32) -> Vec<Vec<u32>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else {
            continue;
        };
        rows.swap(piv, r);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = (*x as u64 * inv as u64 % p as u64) as u32;
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let f = rows[i][c] as u64;
                for k in 0..cols {
                    rows[i][k] = ((rows[i][k] as u64 + (p as u64 - f) * rows[r][k] as u64)
                        % p as u64) as u32;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Basis of the null space of the linear map with the given matrix
/// (`rows x cols`), as vectors of length `cols`.
pub(crate) fn null_space(rows: Vec<Vec<u32>>, cols: usize, p: u32) -> Vec<Vec<u32>> {
    let rref = row_reduce(rows, p);
    let pivots: Vec<usize> = rref
        .iter()
        .map(|r| r.iter().position(|&x| x != 0).expect("nonzero row"))
        .collect();
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u32; cols];
            v[free] = 1;
            for (row, &pc) in rref.iter().zip(&pivots) {
                v[pc] = (p - row[free]) % p;
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinants_agree() {
        let m = FpMatrix {
            n: 3,
            p: 5,
            e: vec![1, 2, 3, 0, 4, 1, 2, 2, 2],
        };
        let mut rows: Vec<Vec<u32>> = m.e.chunks(3).map(<[u32]>::to_vec).collect();
        assert_eq!(m.det(), det_gauss(&mut rows, 5));
    }

    #[test]
    fn jordan_types() {
        let mut u = FpMatrix::identity(3, 2);
        assert_eq!(u.jordan_type(), Some(vec![1, 1, 1]));
        u.e[1] = 1;
        assert_eq!(u.jordan_type(), Some(vec![2, 1]));
        u.e[5] = 1;
        assert_eq!(u.jordan_type(), Some(vec![3]));
        assert_eq!(FpMatrix::zero(2, 3).jordan_type(), None);
    }

    #[test]
    fn null_space_of_commutator() {
        // 2x2 Jordan block over F_3: centralizer is {a + bN}
        let mut u = FpMatrix::identity(2, 3);
        u.e[1] = 1;
        let basis = super::super::unipotent::centralizer_basis(&u);
        assert_eq!(basis.len(), 2);
    }
}
