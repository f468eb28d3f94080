//! Semistandard tableaux and the charge statistic.

use crate::combinat::Partition;
use crate::exactalg::{rat, LaurentPoly};

/// Tableau as rows of entries, entries starting at 1.
pub type Tableau = Vec<Vec<usize>>;

/// All semistandard tableaux of shape `lambda` and content `mu`.
pub fn ssyt(lambda: &[usize], mu: &[usize]) -> Vec<Tableau> {
    if lambda.iter().sum::<usize>() != mu.iter().sum::<usize>() {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut t: Tableau = vec![Vec::new(); lambda.len()];
    fill(lambda, mu, 0, &mut t, &mut out);
    out
}

/// Adds the entries `v + 1` as a horizontal strip, row by row.
fn fill(lambda: &[usize], mu: &[usize], v: usize, t: &mut Tableau, out: &mut Vec<Tableau>) {
    if v == mu.len() {
        out.push(t.clone());
        return;
    }
    let old: Vec<usize> = t.iter().map(Vec::len).collect();
    strip(lambda, mu, v, &old, 0, mu[v], t, out);
}

#[allow(clippy::too_many_arguments)]
fn strip(
    lambda: &[usize],
    mu: &[usize],
    v: usize,
    old: &[usize],
    row: usize,
    left: usize,
    t: &mut Tableau,
    out: &mut Vec<Tableau>,
) {
    if left == 0 {
        fill(lambda, mu, v + 1, t, out);
        return;
    }
    if row == lambda.len() {
        return;
    }
    let cap = if row == 0 {
        lambda[0]
    } else {
        lambda[row].min(old[row - 1])
    };
    let room = cap.saturating_sub(old[row]).min(left);
    for a in (0..=room).rev() {
        t[row].extend(std::iter::repeat_n(v + 1, a));
        strip(lambda, mu, v, old, row + 1, left - a, t, out);
        let l = t[row].len();
        t[row].truncate(l - a);
    }
}

/// Rows from bottom to top, each read left to right.
pub fn reading_word(t: &Tableau) -> Vec<usize> {
    t.iter().rev().flatten().copied().collect()
}

/// Charge of a word whose content is a partition.
pub fn charge(word: &[usize]) -> usize {
    let mut w: Vec<Option<usize>> = word.iter().map(|&x| Some(x)).collect();
    let mut total = 0;
    while w.iter().any(Option::is_some) {
        // extract one standard subword, reading leftwards cyclically
        let len = w.len();
        let mut pos = len;
        let mut index = 0;
        let mut letter = 1;
        loop {
            let found = (0..len)
                .map(|k| (pos + len - 1 - k) % len)
                .find(|&i| w[i] == Some(letter));
            let Some(i) = found else { break };
            if letter > 1 && i > pos {
                index += 1;
            }
            total += index;
            w[i] = None;
            pos = i;
            letter += 1;
        }
    }
    total
}

/// `K_{lambda mu}(t) = sum_T t^{charge(T)}`, returned as a polynomial in `q`.
pub fn kostka_foulkes(lambda: &[usize], mu: &[usize]) -> LaurentPoly {
    ssyt(lambda, mu)
        .iter()
        .fold(LaurentPoly::from_terms([]), |acc, t| {
            &acc + &LaurentPoly::from_terms([(charge(&reading_word(t)) as i64, rat(1))])
        })
}

/// Kostka numbers `K_{lambda mu}` for all partitions of `n`, indexed as
/// `partitions(n)`.
pub fn kostka_matrix(parts: &[Partition]) -> Vec<Vec<i64>> {
    parts
        .iter()
        .map(|l| parts.iter().map(|m| ssyt(l, m).len() as i64).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::lp;

    #[test]
    fn two_boxes() {
        assert_eq!(kostka_foulkes(&[2], &[1, 1]), lp(&[(1, 1)]));
        assert_eq!(kostka_foulkes(&[1, 1], &[1, 1]), lp(&[(0, 1)]));
    }

    #[test]
    fn three_and_four_boxes() {
        assert_eq!(kostka_foulkes(&[3], &[1, 1, 1]), lp(&[(3, 1)]));
        assert_eq!(kostka_foulkes(&[2, 1], &[1, 1, 1]), lp(&[(1, 1), (2, 1)]));
        assert_eq!(kostka_foulkes(&[3, 1], &[2, 1, 1]), lp(&[(1, 1), (2, 1)]));
        assert_eq!(kostka_foulkes(&[2, 2], &[2, 1, 1]), lp(&[(1, 1)]));
        assert_eq!(kostka_foulkes(&[4], &[2, 2]), lp(&[(2, 1)]));
        assert_eq!(ssyt(&[3, 2], &[2, 2, 1]).len(), 2);
    }
}
