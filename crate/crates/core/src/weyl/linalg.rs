//! Small integer matrices for reflection representations.

pub type IntMatrix = Vec<Vec<i64>>;

pub fn identity(n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let k = b.len();
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum())
                .collect()
        })
        .collect()
}

pub fn trace(a: &IntMatrix) -> i64 {
    (0..a.len()).map(|i| a[i][i]).sum()
}

pub fn block_diag(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0; n + m]; n + m];
    for i in 0..n {
        out[i][..n].copy_from_slice(&a[i]);
    }
    for i in 0..m {
        out[n + i][n..].copy_from_slice(&b[i]);
    }
    out
}

/// Coefficients of `det(t I - A)`, constant term first, by the
/// Faddeev-LeVerrier recursion.
pub fn char_poly(a: &IntMatrix) -> Vec<i64> {
    let n = a.len();
    let mut c = vec![0i128; n + 1];
    c[n] = 1;
    let a128: Vec<Vec<i128>> = a
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let mut m = vec![vec![0i128; n]; n];
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = vec![vec![0i128; n]; n];
        for i in 0..n {
            for j in 0..n {
                next[i][j] = (0..n).map(|t| a128[i][t] * m[t][j]).sum::<i128>();
            }
            next[i][i] += c[n - k + 1];
        }
        m = next;
        let tr: i128 = (0..n)
            .map(|i| (0..n).map(|t| a128[i][t] * m[t][i]).sum::<i128>())
            .sum();
        debug_assert_eq!(tr % k as i128, 0);
        c[n - k] = -tr / k as i128;
    }
    c.into_iter().map(|x| x as i64).collect()
}

pub fn determinant(a: &IntMatrix) -> i64 {
    let c = char_poly(a);
    if a.len().is_multiple_of(2) {
        c[0]
    } else {
        -c[0]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn char_poly_of_rotation() {
        // order-3 rotation in the A2 root basis
        let a = vec![vec![0, -1], vec![1, -1]];
        assert_eq!(char_poly(&a), vec![1, 1, 1]);
        assert_eq!(determinant(&a), 1);
        assert_eq!(char_poly(&identity(0)), vec![1]);
        assert_eq!(char_poly(&vec![vec![-1]]), vec![1, 1]);
    }
}
