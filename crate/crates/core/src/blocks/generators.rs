use num_integer::Integer;

use super::{BlockDescriptor, Dims, RawBlock, RawPair, RawYTable};
use crate::combinat::{
    conjugate, conjugate_square_sum, dominates, partition_label, partitions, Partition,
};
use crate::error::{Error, Result};
use crate::exactalg::{ExactScalar, Rational};

/// Largest `n` for which `GL_n` and `SL_n` blocks are generated.
pub const MAX_BLOCK_N: usize = 8;

fn half(twice: i64) -> Rational {
    Rational::new(twice.into(), 2.into())
}

/// Covering relations of the dominance order on `parts`, as index pairs.
fn dominance_covers(parts: &[Partition]) -> Vec<(usize, usize)> {
    let lt = |a: usize, b: usize| a != b && dominates(&parts[b], &parts[a]);
    let mut out = Vec::new();
    for a in 0..parts.len() {
        for b in 0..parts.len() {
            if lt(a, b) && !(0..parts.len()).any(|m| lt(a, m) && lt(m, b)) {
                out.push((a, b));
            }
        }
    }
    out
}

/// Default total order: decreasing `c` (increasing class dimension), then
/// the support partition ascending.
fn total_order<K: Ord>(keys: &[(i64, K)]) -> Vec<usize> {
    let mut idx: Vec<usize> = (0..keys.len()).collect();
    idx.sort_by(|&a, &b| {
        keys[b]
            .0
            .cmp(&keys[a].0)
            .then_with(|| keys[a].1.cmp(&keys[b].1))
    });
    idx
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_BLOCK_N {
        return Err(Error::RankBound(format!(
            "n = {n} outside 1..={MAX_BLOCK_N}"
        )));
    }
    Ok(())
}

/// Principal block of `GL_n`: pairs are partitions of `n` with trivial local
/// systems, `(n)` carries the trivial character and `(1^n)` the sign.
pub fn gl_principal_block(n: usize) -> Result<BlockDescriptor> {
    check_n(n)?;
    let parts = partitions(n);
    let twice_c: Vec<i64> = parts
        .iter()
        .map(|p| conjugate_square_sum(p) as i64 - n as i64)
        .collect();
    let labels: Vec<String> = parts.iter().map(|p| partition_label(p)).collect();
    let pairs = parts
        .iter()
        .enumerate()
        .map(|(i, p)| RawPair {
            id: labels[i].clone(),
            support: labels[i].clone(),
            phi: labels[i].clone(),
            c: half(twice_c[i]),
            a: 1,
            dual: partition_label(&conjugate(p)),
            eps: 1,
        })
        .collect();
    let order = total_order(
        &twice_c
            .iter()
            .copied()
            .zip(parts.iter().cloned())
            .collect::<Vec<_>>(),
    );
    let y_table = labels
        .iter()
        .map(|l| RawYTable {
            support: l.clone(),
            classes: vec!["1".into()],
            rows: vec![(l.clone(), vec![ExactScalar::int(1)])],
        })
        .collect();
    BlockDescriptor::from_raw(&RawBlock {
        name: format!("GL{n}"),
        coxeter: format!("A{}", n - 1),
        pairs,
        closure_order: dominance_covers(&parts)
            .into_iter()
            .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
            .collect(),
        total_order: order.into_iter().map(|i| labels[i].clone()).collect(),
        dims: Dims {
            l: n - 1,
            dim_zl: n,
            central_rank: 1,
            rank: n,
        },
        y_table,
    })
}

fn sl_raw(n: usize, d: usize) -> Result<(RawBlock, Vec<Partition>)> {
    check_n(n)?;
    if d == 0 || !n.is_multiple_of(d) {
        return Err(Error::Divisibility(format!(
            "d = {d} does not divide n = {n}"
        )));
    }
    let m = n / d;
    let mus = partitions(m);
    let lambdas: Vec<Partition> = mus
        .iter()
        .map(|mu| mu.iter().map(|x| x * d).collect())
        .collect();
    let twice_c: Vec<i64> = lambdas
        .iter()
        .map(|l| conjugate_square_sum(l) as i64 - m as i64)
        .collect();
    let labels: Vec<String> = lambdas.iter().map(|l| partition_label(l)).collect();
    let pairs = mus
        .iter()
        .enumerate()
        .map(|(i, mu)| {
            let g = lambdas[i].iter().fold(0, |g, &x| g.gcd(&x));
            let dual: Partition = conjugate(mu).iter().map(|x| x * d).collect();
            RawPair {
                id: labels[i].clone(),
                support: labels[i].clone(),
                phi: partition_label(mu),
                c: half(twice_c[i]),
                a: g as u64,
                dual: partition_label(&dual),
                eps: 1,
            }
        })
        .collect();
    let order = total_order(
        &twice_c
            .iter()
            .copied()
            .zip(lambdas.iter().cloned())
            .collect::<Vec<_>>(),
    );
    let raw = RawBlock {
        name: format!("SL{n}[d={d}]"),
        coxeter: format!("A{}", m - 1),
        pairs,
        closure_order: dominance_covers(&lambdas)
            .into_iter()
            .map(|(a, b)| (labels[a].clone(), labels[b].clone()))
            .collect(),
        total_order: order.into_iter().map(|i| labels[i].clone()).collect(),
        dims: Dims {
            l: m - 1,
            dim_zl: m - 1,
            central_rank: 0,
            rank: n - 1,
        },
        y_table: Vec::new(),
    };
    Ok((raw, lambdas))
}

/// Block of `SL_n` attached to central characters of order `d`: pairs are
/// partitions of `n` whose parts are all divisible by `d`, with
/// `W_G(L) = S_{n/d}` and `lambda -> lambda / d` fixing the characters.
pub fn sl_block(n: usize, d: usize) -> Result<BlockDescriptor> {
    BlockDescriptor::from_raw(&sl_raw(n, d)?.0)
}

/// [`sl_block`] together with the `A(u)`-character table of the block of the
/// central character `z -> zeta_d^{j z}`, `gcd(j, d) = 1`. The classes
/// `u_a` of `C_lambda^F` are indexed by `a` in `Z / gcd(lambda)`.
pub fn sl_block_with_y(n: usize, d: usize, j: usize) -> Result<BlockDescriptor> {
    let (mut raw, lambdas) = sl_raw(n, d)?;
    if j.gcd(&d) != 1 {
        return Err(Error::Divisibility(format!(
            "j = {j} is not prime to d = {d}"
        )));
    }
    raw.name = format!("SL{n}[d={d},j={j}]");
    raw.y_table = raw
        .pairs
        .iter()
        .zip(&lambdas)
        .map(|(p, l)| {
            let g = l.iter().fold(0, |g, &x| g.gcd(&x));
            RawYTable {
                support: p.support.clone(),
                classes: (0..g).map(|a| a.to_string()).collect(),
                rows: vec![(
                    p.id.clone(),
                    (0..g)
                        .map(|a| ExactScalar::zeta(d as u32, (j * a) as i64))
                        .collect(),
                )],
            }
        })
        .collect();
    BlockDescriptor::from_raw(&raw)
}

const SEP: &str = " x ";

/// Outer product of blocks (a block of a product of groups, e.g. a Levi
/// subgroup of `GL_n`).
pub fn product_block(factors: &[BlockDescriptor]) -> Result<BlockDescriptor> {
    if factors.is_empty() {
        return Err(Error::BadComposition("empty product".into()));
    }
    if factors.len() == 1 {
        return Ok(factors[0].clone());
    }
    let raws: Vec<RawBlock> = factors.iter().map(|b| b.to_raw()).collect();
    let coxeter = raws
        .iter()
        .map(|r| r.coxeter.as_str())
        .collect::<Vec<_>>()
        .join("x");
    // tuples of pair indices, in each factor's total order
    let mut tuples: Vec<Vec<usize>> = vec![vec![]];
    for f in factors {
        tuples = tuples
            .into_iter()
            .flat_map(|t| (0..f.num_pairs()).map(move |i| [t.clone(), vec![i]].concat()))
            .collect();
    }
    let join = |parts: Vec<&str>| parts.join(SEP);
    let id = |t: &[usize]| {
        join(
            t.iter()
                .zip(factors)
                .map(|(&i, f)| f.pair(i).id.as_str())
                .collect(),
        )
    };
    let support = |t: &[usize]| {
        join(
            t.iter()
                .zip(factors)
                .map(|(&i, f)| f.pair(i).support.as_str())
                .collect(),
        )
    };
    let group = crate::weyl::WeylGroup::build(&coxeter.parse()?)?;
    let pairs: Vec<RawPair> = tuples
        .iter()
        .map(|t| {
            let keys: Vec<_> = t
                .iter()
                .zip(factors)
                .flat_map(|(&i, f)| f.group().characters()[f.pair(i).phi].keys.clone())
                .collect();
            let phi = group.char_by_keys(&keys).expect("product character");
            let dual: Vec<usize> = t
                .iter()
                .zip(factors)
                .map(|(&i, f)| f.pair(i).dual)
                .collect();
            RawPair {
                id: id(t),
                support: support(t),
                phi: group.characters()[phi].label.clone(),
                c: half(t.iter().zip(factors).map(|(&i, f)| f.pair(i).twice_c).sum()),
                a: t.iter().zip(factors).map(|(&i, f)| f.pair(i).a).product(),
                dual: id(&dual),
                eps: t.iter().zip(factors).map(|(&i, f)| f.pair(i).eps).product(),
            }
        })
        .collect();
    // supports as tuples of factor support indices
    let stuples: Vec<Vec<usize>> = {
        let mut s: Vec<Vec<usize>> = vec![vec![]];
        for f in factors {
            s = s
                .into_iter()
                .flat_map(|t| (0..f.supports().len()).map(move |i| [t.clone(), vec![i]].concat()))
                .collect();
        }
        s
    };
    let slabel = |t: &[usize]| {
        join(
            t.iter()
                .zip(factors)
                .map(|(&i, f)| f.supports()[i].as_str())
                .collect(),
        )
    };
    let mut closure = Vec::new();
    for t in &stuples {
        for (k, f) in factors.iter().enumerate() {
            for (lo, hi) in f.closure_order() {
                if f.supports()[t[k]] == *lo {
                    let mut u = t.clone();
                    u[k] = f.supports().iter().position(|s| s == hi).unwrap();
                    closure.push((slabel(t), slabel(&u)));
                }
            }
        }
    }
    let keys: Vec<(i64, Vec<usize>)> = tuples
        .iter()
        .map(|t| {
            let twice: i64 = t.iter().zip(factors).map(|(&i, f)| f.pair(i).twice_c).sum();
            let sup: Vec<usize> = t
                .iter()
                .zip(factors)
                .map(|(&i, f)| f.support_index(i))
                .collect();
            (twice, [sup, t.clone()].concat())
        })
        .collect();
    let order = total_order(&keys);
    let dims = factors.iter().fold(
        Dims {
            l: 0,
            dim_zl: 0,
            central_rank: 0,
            rank: 0,
        },
        |d, f| {
            let e = f.dims();
            Dims {
                l: d.l + e.l,
                dim_zl: d.dim_zl + e.dim_zl,
                central_rank: d.central_rank + e.central_rank,
                rank: d.rank + e.rank,
            }
        },
    );
    let y_table = product_y_tables(factors, &stuples, &slabel, &id);
    BlockDescriptor::from_raw(&RawBlock {
        name: raws
            .iter()
            .map(|r| r.name.as_str())
            .collect::<Vec<_>>()
            .join(SEP),
        coxeter,
        pairs,
        closure_order: closure,
        total_order: order.into_iter().map(|i| id(&tuples[i])).collect(),
        dims,
        y_table,
    })
}

fn product_y_tables(
    factors: &[BlockDescriptor],
    stuples: &[Vec<usize>],
    slabel: &dyn Fn(&[usize]) -> String,
    id: &dyn Fn(&[usize]) -> String,
) -> Vec<RawYTable> {
    let mut out = Vec::new();
    'support: for t in stuples {
        let mut tables = Vec::new();
        for (k, f) in factors.iter().enumerate() {
            match f.y_table(&f.supports()[t[k]]) {
                Some(y) => tables.push(y),
                None => continue 'support,
            }
        }
        let mut classes: Vec<(Vec<String>, Vec<usize>)> = vec![(vec![], vec![])];
        for y in &tables {
            classes = classes
                .into_iter()
                .flat_map(|(l, ix)| {
                    y.classes.iter().enumerate().map(move |(a, c)| {
                        (
                            [l.clone(), vec![c.clone()]].concat(),
                            [ix.clone(), vec![a]].concat(),
                        )
                    })
                })
                .collect();
        }
        let mut rows: Vec<(Vec<usize>, Vec<ExactScalar>)> =
            vec![(vec![], vec![ExactScalar::int(1); classes.len()])];
        for y in &tables {
            let depth = rows[0].0.len();
            rows = rows
                .into_iter()
                .flat_map(|(p, vals)| {
                    let classes = &classes;
                    y.rows.iter().map(move |(i, v)| {
                        let nv = vals
                            .iter()
                            .zip(classes)
                            .map(|(x, (_, ix))| x.clone() * &v[ix[depth]])
                            .collect();
                        ([p.clone(), vec![*i]].concat(), nv)
                    })
                })
                .collect();
        }
        out.push(RawYTable {
            support: slabel(t),
            classes: classes.into_iter().map(|(l, _)| l.join(",")).collect(),
            rows: rows.into_iter().map(|(p, v)| (id(&p), v)).collect(),
        });
    }
    out
}

/// Block of the Levi subgroup `GL_{n_1} x ... x GL_{n_r}` of `GL_n`: the
/// product of the principal blocks.
pub fn gl_levi_block(composition: &[usize]) -> Result<BlockDescriptor> {
    if composition.is_empty() || composition.contains(&0) {
        return Err(Error::BadComposition(format!("{composition:?}")));
    }
    let factors = composition
        .iter()
        .map(|&m| gl_principal_block(m))
        .collect::<Result<Vec<_>>>()?;
    product_block(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(b: &BlockDescriptor) -> Vec<(String, Rational)> {
        b.pairs().iter().map(|p| (p.id.clone(), p.c())).collect()
    }

    #[test]
    fn gl3_c_values() {
        let b = gl_principal_block(3).unwrap();
        let r = |k: i64| Rational::from_integer(k.into());
        assert_eq!(
            cs(&b),
            vec![
                ("1+1+1".into(), r(3)),
                ("2+1".into(), r(1)),
                ("3".into(), r(0))
            ]
        );
    }

    #[test]
    fn sl_blocks() {
        let b = sl_block(4, 2).unwrap();
        let ids: Vec<_> = b.pairs().iter().map(|p| p.id.clone()).collect();
        assert_eq!(ids, ["2+2", "4"]);
        assert_eq!(b.group().order(), 2);
        let b = sl_block(2, 2).unwrap();
        assert_eq!(b.num_pairs(), 1);
        assert_eq!(b.pair(0).c(), Rational::new(1.into(), 2.into()));
        assert!(sl_block(6, 4).is_err());
        let y = sl_block_with_y(4, 4, 1).unwrap();
        assert_eq!(y.y_table("4").unwrap().classes.len(), 4);
    }

    #[test]
    fn levi_block() {
        let b = gl_levi_block(&[2, 1]).unwrap();
        assert_eq!(b.num_pairs(), 2);
        assert_eq!(b.group().descriptor().to_string(), "A1xA0");
        assert_eq!(b.dims().central_rank, 2);
        let ids: Vec<_> = b.pairs().iter().map(|p| p.id.clone()).collect();
        assert_eq!(ids, ["1+1 x 1", "2 x 1"]);
        assert!(b.y_table("2 x 1").is_some());
    }
}
