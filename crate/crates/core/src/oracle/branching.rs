//! Restriction of symmetric group characters to Young subgroups, from
//! permutation characters on tabloids.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::kostka::kostka_matrix;
use crate::combinat::{partitions, z_symmetric, Partition};
use crate::error::{Error, Result};
use crate::exactalg::{ratio, Rational};

/// Partition index and character table of one symmetric factor.
type LocalTable = (BTreeMap<Partition, usize>, Vec<Vec<i64>>);

/// Number of row-tabloids of shape `mu` fixed by a permutation of cycle
/// type `rho`.
pub fn fixed_tabloids(mu: &[usize], rho: &[usize]) -> u64 {
    fn rec(cycles: &[usize], room: &mut [usize]) -> u64 {
        let Some((&c, rest)) = cycles.split_first() else {
            return room.iter().all(|&r| r == 0) as u64;
        };
        let mut total = 0;
        for i in 0..room.len() {
            if room[i] >= c {
                room[i] -= c;
                total += rec(rest, room);
                room[i] += c;
            }
        }
        total
    }
    rec(rho, &mut mu.to_vec())
}

/// Irreducible characters of `S_n`: `table[λ][ρ]`, both indexed as
/// `partitions(n)`.
pub fn symmetric_characters(n: usize) -> Vec<Vec<i64>> {
    let parts = partitions(n);
    let k = kostka_matrix(&parts);
    let m = parts.len();
    let mut chi = vec![vec![0i64; m]; m];
    for (r, rho) in parts.iter().enumerate() {
        // π^μ = Σ_{λ >= μ} K_{λμ} χ^λ, solved from the largest μ down
        for mu in (0..m).rev() {
            let rest: i64 = (mu + 1..m).map(|l| k[l][mu] * chi[l][r]).sum();
            chi[mu][r] = fixed_tabloids(&parts[mu], rho) as i64 - rest;
        }
    }
    chi
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchingEntry {
    pub lambda: Partition,
    pub factors: Vec<Partition>,
    pub multiplicity: i64,
}

fn tuples(alpha: &[usize]) -> Vec<Vec<Partition>> {
    alpha.iter().fold(vec![Vec::new()], |acc, &a| {
        acc.iter()
            .flat_map(|t| {
                partitions(a).into_iter().map(move |p| {
                    let mut t = t.clone();
                    t.push(p);
                    t
                })
            })
            .collect()
    })
}

/// `⟨Res χ^λ, χ^{ν_1} ⊠ ... ⊠ χ^{ν_k}⟩` over `S_{α_1} x ... x S_{α_k}`, for
/// every `λ` and every tuple `ν`, by summing over the classes of the Young
/// subgroup.
pub fn branching_bruteforce(alpha: &[usize]) -> Result<Vec<BranchingEntry>> {
    if alpha.is_empty() || alpha.contains(&0) {
        return Err(Error::BadComposition(format!("{alpha:?}")));
    }
    let n: usize = alpha.iter().sum();
    let parts = partitions(n);
    let chi = symmetric_characters(n);
    let index: BTreeMap<Partition, usize> = parts
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let local: Vec<LocalTable> = alpha
        .iter()
        .map(|&a| {
            (
                partitions(a)
                    .into_iter()
                    .enumerate()
                    .map(|(i, p)| (p, i))
                    .collect(),
                symmetric_characters(a),
            )
        })
        .collect();
    let classes = tuples(alpha);
    let mut out = Vec::new();
    for lambda in &parts {
        for nu in &classes {
            let mut sum = Rational::zero();
            for rho in &classes {
                let mut merged: Partition = rho.iter().flatten().copied().collect();
                merged.sort_unstable_by(|a, b| b.cmp(a));
                let mut term = chi[index[lambda]][index[&merged]];
                let mut z = 1i64;
                for (i, (idx, table)) in local.iter().enumerate() {
                    term *= table[idx[&nu[i]]][idx[&rho[i]]];
                    z *= z_symmetric(&rho[i]) as i64;
                }
                sum += ratio(term, z);
            }
            if !sum.is_integer() {
                return Err(Error::invariant("branching", "non-integral multiplicity"));
            }
            let multiplicity = i64::try_from(sum.to_integer()).expect("small multiplicity");
            out.push(BranchingEntry {
                lambda: lambda.clone(),
                factors: nu.clone(),
                multiplicity,
            });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_characters() {
        // rows 1^3, 21, 3; columns the same cycle types
        assert_eq!(
            symmetric_characters(3),
            vec![vec![1, -1, 1], vec![2, 0, -1], vec![1, 1, 1]]
        );
    }

    fn mult(e: &[BranchingEntry], l: &[usize], f: &[&[usize]]) -> i64 {
        e.iter()
            .find(|x| x.lambda == l && x.factors.iter().map(Vec::as_slice).eq(f.iter().copied()))
            .unwrap()
            .multiplicity
    }

    #[test]
    fn s3_to_s2() {
        let e = branching_bruteforce(&[2, 1]).unwrap();
        assert_eq!(mult(&e, &[2, 1], &[&[2], &[1]]), 1);
        assert_eq!(mult(&e, &[2, 1], &[&[1, 1], &[1]]), 1);
        assert_eq!(mult(&e, &[3], &[&[1, 1], &[1]]), 0);
    }

    #[test]
    fn s4_to_s2_s2() {
        let e = branching_bruteforce(&[2, 2]).unwrap();
        assert_eq!(mult(&e, &[2, 2], &[&[2], &[2]]), 1);
        assert_eq!(mult(&e, &[2, 2], &[&[2], &[1, 1]]), 0);
        assert_eq!(mult(&e, &[3, 1], &[&[2], &[1, 1]]), 1);
        assert_eq!(mult(&e, &[3, 1], &[&[2], &[2]]), 1);
    }
}
