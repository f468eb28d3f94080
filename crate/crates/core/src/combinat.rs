//! Partitions, bipartitions and the statistics used on them.

use crate::error::{Error, Result};

/// Weakly decreasing list of positive parts.
pub type Partition = Vec<usize>;

/// All partitions of `n` in lexicographically increasing order, so `1^n`
/// comes first and `(n)` last.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for p in (1..=n.min(max)).rev() {
            prefix.push(p);
            rec(n - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out.reverse();
    out
}

pub fn conjugate(lambda: &[usize]) -> Partition {
    let len = lambda.first().copied().unwrap_or(0);
    (1..=len)
        .map(|j| lambda.iter().filter(|&&p| p >= j).count())
        .collect()
}

/// `n(lambda) = sum_i (i - 1) lambda_i`.
pub fn n_statistic(lambda: &[usize]) -> usize {
    lambda.iter().enumerate().map(|(i, &p)| i * p).sum()
}

/// `sum_j (lambda'_j)^2`, the dimension of the centralizer of a unipotent
/// element of Jordan type `lambda` in `GL_n`.
pub fn conjugate_square_sum(lambda: &[usize]) -> usize {
    conjugate(lambda).iter().map(|&c| c * c).sum()
}

/// Dominance order: `lambda >= mu`.
pub fn dominates(lambda: &[usize], mu: &[usize]) -> bool {
    let (mut a, mut b) = (0usize, 0usize);
    for i in 0..lambda.len().max(mu.len()) {
        a += lambda.get(i).copied().unwrap_or(0);
        b += mu.get(i).copied().unwrap_or(0);
        if a < b {
            return false;
        }
    }
    true
}

pub fn size(lambda: &[usize]) -> usize {
    lambda.iter().sum()
}

/// Multiplicities `m_k` of each part `k >= 1`, indexed by `k`.
pub fn multiplicities(lambda: &[usize]) -> Vec<usize> {
    let mut m = vec![0; lambda.first().copied().unwrap_or(0) + 1];
    for &p in lambda {
        m[p] += 1;
    }
    m
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Order of the centralizer in `S_n` of a permutation of cycle type `mu`.
pub fn z_symmetric(mu: &[usize]) -> u64 {
    multiplicities(mu)
        .iter()
        .enumerate()
        .skip(1)
        .map(|(k, &m)| (k as u64).pow(m as u32) * factorial(m))
        .product()
}

/// Order of the centralizer in the hyperoctahedral group of an element with
/// positive cycles `alpha` and negative cycles `beta`.
pub fn z_hyperoctahedral(alpha: &[usize], beta: &[usize]) -> u64 {
    let f = |p: &[usize]| -> u64 {
        multiplicities(p)
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &m)| (2 * k as u64).pow(m as u32) * factorial(m))
            .product()
    };
    f(alpha) * f(beta)
}

/// Number of standard tableaux of shape `lambda` (hook length formula).
pub fn num_standard_tableaux(lambda: &[usize]) -> u64 {
    let conj = conjugate(lambda);
    let n = size(lambda);
    let mut hooks: u128 = 1;
    for (i, &row) in lambda.iter().enumerate() {
        for (j, &col) in conj.iter().enumerate().take(row) {
            hooks *= ((row - j - 1) + (col - i - 1) + 1) as u128;
        }
    }
    ((1..=n as u128).product::<u128>() / hooks) as u64
}

/// All partitions obtained from `lambda` by removing a rim hook of length
/// `r`, each with the sign `(-1)^(height)`.
pub fn remove_rim_hooks(lambda: &[usize], r: usize) -> Vec<(Partition, i64)> {
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i)
        .collect();
    let mut out = Vec::new();
    for (idx, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let target = b - r;
        let between = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[idx] = target;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let mu: Partition = nb
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (l - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        out.push((mu, if between % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// `"3+1"`; the empty partition is `"-"`.
pub fn partition_label(lambda: &[usize]) -> String {
    if lambda.is_empty() {
        return "-".into();
    }
    lambda
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join("+")
}

pub fn parse_partition(s: &str) -> Result<Partition> {
    parse_parts(s, '+')
}

fn parse_parts(s: &str, sep: char) -> Result<Partition> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut parts = s
        .split(sep)
        .map(|t| t.trim().parse::<usize>().ok().filter(|&p| p > 0))
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| Error::Malformed(format!("bad partition {s:?}")))?;
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Ok(parts)
}

/// `"(2|1.1)"`; an empty side is written `-`.
pub fn bipartition_label(a: &[usize], b: &[usize]) -> String {
    let side = |p: &[usize]| {
        if p.is_empty() {
            "-".to_string()
        } else {
            p.iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(".")
        }
    };
    format!("({}|{})", side(a), side(b))
}

pub fn parse_bipartition(s: &str) -> Result<(Partition, Partition)> {
    let inner = s
        .trim()
        .strip_prefix('(')
        .and_then(|t| t.strip_suffix(')'))
        .ok_or_else(|| Error::Malformed(format!("bad bipartition {s:?}")))?;
    let (a, b) = inner
        .split_once('|')
        .ok_or_else(|| Error::Malformed(format!("bad bipartition {s:?}")))?;
    Ok((parse_parts(a, '.')?, parse_parts(b, '.')?))
}

/// Compositions of `n` into positive parts.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(3), vec![vec![1, 1, 1], vec![2, 1], vec![3]]);
    }

    #[test]
    fn statistics() {
        assert_eq!(conjugate(&[3, 1]), vec![2, 1, 1]);
        assert_eq!(n_statistic(&[2, 1]), 1);
        assert_eq!(n_statistic(&[1, 1, 1]), 3);
        assert_eq!(conjugate_square_sum(&[2]), 2);
        assert_eq!(z_symmetric(&[2, 1, 1]), 4);
        assert_eq!(z_hyperoctahedral(&[1], &[1]), 4);
        assert_eq!(num_standard_tableaux(&[3, 2]), 5);
        assert!(dominates(&[3, 1], &[2, 2]));
        assert!(!dominates(&[3, 3], &[4, 1, 1]) && !dominates(&[4, 1, 1], &[3, 3]));
    }

    #[test]
    fn rim_hooks() {
        let h = remove_rim_hooks(&[3, 1], 2);
        assert_eq!(h, vec![(vec![1, 1], 1)]);
        assert_eq!(remove_rim_hooks(&[2, 2], 3), vec![(vec![1], -1)]);
    }

    #[test]
    fn labels() {
        assert_eq!(partition_label(&[3, 1]), "3+1");
        assert_eq!(parse_partition("1+3").unwrap(), vec![3, 1]);
        assert_eq!(bipartition_label(&[2], &[1, 1]), "(2|1.1)");
        assert_eq!(parse_bipartition("(-|2.1)").unwrap(), (vec![], vec![2, 1]));
        assert!(parse_partition("3+0").is_err());
    }
}
