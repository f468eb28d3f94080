//! Acceptance gate: one line per criterion, nonzero exit if any fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use greenfn::blocks::{gl_principal_block, sl_block, sl_block_with_y};
use greenfn::combinat::{compositions, n_statistic, parse_partition, partition_label, partitions};
use greenfn::exactalg::matrix::{self, inverse};
use greenfn::exactalg::{lp, rat, ExactScalar, LaurentPoly, RationalFunction};
use greenfn::ggg::{
    allorth, check_order_star, check_z_star, gamma_tilde, ggg_orthogonality_u, GroupSpec,
    LinearGroup, LinearKind, UnipotentRef,
};
use greenfn::lusztig::{duality, factorize, green_norm_formula, scalar_product_green, GreenTable};
use greenfn::oracle::{enumerate_unipotent, induced_ggg, kostka_foulkes, FiniteMatrixGroup};
use greenfn::restriction::{
    is_indicator, r_matrix, restrict_direct, restrict_ggg, restrict_green, restrict_via_r,
    subregular_restriction, LeviEmbedding,
};
use greenfn::weyl::{build_group, ClassFunction, CoxeterDescriptor, CoxeterFactor, Family};
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn gl(n: usize) -> Result<GreenTable, String> {
    factorize(&gl_principal_block(n).map_err(err)?).map_err(err)
}

fn ex(p: &LaurentPoly) -> LaurentPoly<ExactScalar> {
    p.map_coeffs(|c| ExactScalar::rational(c.clone()))
}

fn at(p: &LaurentPoly<ExactScalar>, q: u32) -> Result<ExactScalar, String> {
    p.evaluate(&ExactScalar::int(q as i64)).map_err(err)
}

fn sl_tables(n: usize) -> Result<Vec<GreenTable>, String> {
    let mut out = Vec::new();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        for j in (1..=d).filter(|j| j.gcd(&d) == 1) {
            out.push(factorize(&sl_block_with_y(n, d, j).map_err(err)?).map_err(err)?);
        }
    }
    Ok(out)
}

fn linear_group(kind: LinearKind, n: usize) -> Result<LinearGroup, String> {
    let tables = match kind {
        LinearKind::Gl => vec![gl(n)?],
        LinearKind::Sl => sl_tables(n)?,
    };
    Ok(LinearGroup { kind, n, tables })
}

fn green_value(
    t: &GreenTable,
    w: usize,
    support: &str,
) -> Result<LaurentPoly<ExactScalar>, String> {
    let g = t.green_function(w).map_err(err)?;
    let vals = t.evaluate_y(&g.coefficients).map_err(err)?;
    vals.into_iter()
        .find(|v| v.support == support)
        .map(|v| v.values[0].clone())
        .ok_or_else(|| format!("no class {support}"))
}

fn factorization() -> Check {
    for n in 1..=6 {
        gl(n)?.verify().map_err(|e| format!("GL{n}: {e}"))?;
    }
    for n in 1..=8 {
        for d in (1..=n).filter(|d| n % d == 0) {
            factorize(&sl_block(n, d).map_err(err)?)
                .map_err(err)?
                .verify()
                .map_err(|e| format!("SL{n} d={d}: {e}"))?;
        }
    }
    Ok(())
}

fn sl_part_division() -> Check {
    for n in 1..=8 {
        for d in (1..=n).filter(|d| n % d == 0) {
            let s = factorize(&sl_block(n, d).map_err(err)?).map_err(err)?;
            let g = gl(n / d)?;
            ensure(s.num_pairs() == g.num_pairs(), || {
                format!("SL{n} d={d}: pair count")
            })?;
            let mut to_gl = Vec::new();
            for p in s.block().pairs() {
                let divided: Vec<usize> = parse_partition(&p.id)
                    .map_err(err)?
                    .iter()
                    .map(|x| x / d)
                    .collect();
                to_gl.push(
                    g.block()
                        .pair_by_id(&partition_label(&divided))
                        .ok_or("missing GL pair")?,
                );
            }
            for k in 0..s.num_pairs() {
                for i in 0..s.num_pairs() {
                    ensure(s.ptilde()[k][i] == g.ptilde()[to_gl[k]][to_gl[i]], || {
                        format!("SL{n} d={d} ({k},{i})")
                    })?;
                }
            }
        }
    }
    Ok(())
}

fn kostka_concordance() -> Check {
    for n in 1..=5 {
        let t = gl(n)?;
        let p = t.p_matrix().map_err(err)?;
        for lambda in partitions(n) {
            for mu in partitions(n) {
                let i = t
                    .block()
                    .pair_by_id(&partition_label(&lambda))
                    .ok_or("pair")?;
                let k = t.block().pair_by_id(&partition_label(&mu)).ok_or("pair")?;
                let shift = n_statistic(&mu) as i64 - n_statistic(&lambda) as i64;
                let expected = kostka_foulkes(&lambda, &mu).star().shift(shift);
                ensure(p[k][i] == expected, || {
                    format!("GL{n} P[{mu:?}][{lambda:?}] = {} vs {expected}", p[k][i])
                })?;
            }
        }
    }
    Ok(())
}

fn classical_green_values() -> Check {
    for n in 1..=4 {
        let t = gl(n)?;
        let mut expected = LaurentPoly::one();
        for i in 1..=n as i64 {
            expected = &expected * &LaurentPoly::from_terms((0..i).map(|e| (e, rat(1))));
        }
        let one = partition_label(&vec![1; n]);
        let w1 = t
            .block()
            .group()
            .classes()
            .iter()
            .position(|c| c.label == one)
            .ok_or("identity class")?;
        ensure(green_value(&t, w1, &one)? == ex(&expected), || {
            format!("GL{n} Q_1(1)")
        })?;
    }
    for n in 1..=5 {
        let t = gl(n)?;
        for w in 0..t.block().group().num_classes() {
            ensure(green_value(&t, w, &n.to_string())?.is_one(), || {
                format!("GL{n} Q_w(reg), w = {w}")
            })?;
        }
    }
    Ok(())
}

fn orthogonality() -> Check {
    for n in 1..=5 {
        let t = gl(n)?;
        let k = t.block().group().num_classes();
        for w in 0..k {
            for v in 0..k {
                let s = scalar_product_green(&t, w, v).map_err(err)?;
                let expected = if w == v {
                    green_norm_formula(&t, w).map_err(err)?
                } else {
                    RationalFunction::zero()
                };
                ensure(s == expected, || format!("GL{n} ⟨Q_{w}, Q_{v}⟩"))?;
            }
        }
        let gram = matrix::map(&t.qtilde_gram(), |x| RationalFunction::from_poly(x.clone()));
        ensure(Some(gram) == inverse(t.lambda()), || {
            format!("GL{n} Q̃ Gram")
        })?;
    }
    let classes = |kind: LinearKind, n: usize| -> Vec<UnipotentRef> {
        partitions(n)
            .iter()
            .flat_map(|l| {
                let g = if kind == LinearKind::Gl {
                    1
                } else {
                    l.iter().fold(0, |g, &x| g.gcd(&x))
                };
                (0..g).map(move |a| UnipotentRef::new(partition_label(l), a))
            })
            .collect()
    };
    for n in 1..=4 {
        let g = linear_group(LinearKind::Gl, n)?;
        for u in classes(LinearKind::Gl, n) {
            for v in classes(LinearKind::Gl, n) {
                let r = allorth(&g, &u, &v).map_err(err)?;
                ensure(r.equal, || format!("GL{n} allorth {u:?} {v:?}"))?;
            }
        }
    }
    for (kind, n, q) in [
        (LinearKind::Gl, 2, 2),
        (LinearKind::Gl, 2, 3),
        (LinearKind::Gl, 2, 5),
        (LinearKind::Gl, 3, 2),
        (LinearKind::Gl, 3, 3),
        (LinearKind::Gl, 3, 5),
        (LinearKind::Sl, 2, 3),
        (LinearKind::Sl, 2, 5),
    ] {
        numeric_allorth(kind, n, q)?;
    }
    Ok(())
}

fn numeric_allorth(kind: LinearKind, n: usize, q: u32) -> Check {
    let g = linear_group(kind, n)?;
    let fg = FiniteMatrixGroup::new(kind, n, q).map_err(err)?;
    let cls: Vec<(UnipotentRef, u64)> = enumerate_unipotent(&fg)
        .into_iter()
        .flat_map(|c| {
            (0..c.classes as usize).map(move |a| {
                (
                    UnipotentRef::new(partition_label(&c.jordan_type), a),
                    c.centralizer,
                )
            })
        })
        .collect();
    for (u, cu) in &cls {
        for (v, _) in &cls {
            let lhs = at(&allorth(&g, u, v).map_err(err)?.lhs, q)?;
            let expected = ExactScalar::int(if u == v { *cu as i64 } else { 0 });
            ensure(lhs == expected, || {
                format!("{kind:?}{n}({q}) allorth {u:?} {v:?}: {lhs}")
            })?;
        }
    }
    Ok(())
}

fn duality_checks() -> Check {
    for n in 1..=5 {
        let t = gl(n)?;
        let g = t.block().group().clone();
        let sgn = g.sign_values();
        for c in 0..g.num_classes() {
            let x: Vec<LaurentPoly> = t
                .block()
                .pairs()
                .iter()
                .map(|p| LaurentPoly::constant(rat(g.characters()[p.phi].values[c])))
                .collect();
            let dx = duality(&t, &x, 1);
            ensure(duality(&t, &dx, 1) == x, || format!("GL{n} D∘D"))?;
            let expected: Vec<LaurentPoly> = t
                .green_function(c)
                .map_err(err)?
                .coefficients
                .iter()
                .map(|v| v.scale(&rat(sgn[c])))
                .collect();
            ensure(matrix::mul_vec(t.ptilde(), &dx) == expected, || {
                format!("GL{n} D(Q_w), class {c}")
            })?;
        }
        for (i, p) in t.block().pairs().iter().enumerate() {
            let mut e = vec![LaurentPoly::zero(); t.num_pairs()];
            e[i] = LaurentPoly::one();
            let d = duality(&t, &e, 1);
            ensure(p.eps == 1 && d[p.dual].is_one(), || {
                format!("GL{n} D(X̃_{})", p.id)
            })?;
            // the dual pair carries φ ⊗ sgn
            let dual_phi = &g.characters()[t.block().pair(p.dual).phi].values;
            let twisted: Vec<i64> = g.characters()[p.phi]
                .values
                .iter()
                .zip(&sgn)
                .map(|(a, s)| a * s)
                .collect();
            ensure(dual_phi == &twisted, || format!("GL{n} dual of {}", p.id))?;
        }
    }
    Ok(())
}

fn restriction_commutation() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=5 {
        for comp in compositions(n) {
            let e = LeviEmbedding::gl(&comp).map_err(err)?;
            let tg = factorize(e.ambient()).map_err(err)?;
            let tm = factorize(e.sub()).map_err(err)?;
            let d = r_matrix(&e, &tg, &tm).map_err(err)?;
            let g = e.ambient().group().clone();
            for _ in 0..20 {
                let vals = (0..g.num_classes())
                    .map(|_| {
                        lp(&(0..rng.gen_range(0..4))
                            .map(|_| (rng.gen_range(-2..=3), rng.gen_range(-5..=5)))
                            .collect::<Vec<_>>())
                    })
                    .collect();
                let theta = ClassFunction::new(g.clone(), vals).map_err(err)?;
                let a = restrict_direct(&e, &tm, &theta).map_err(err)?;
                ensure(
                    a == restrict_via_r(&tg, &tm, &d, &theta).map_err(err)?,
                    || format!("{comp:?}"),
                )?;
            }
            for v in 0..g.num_classes() {
                let r = restrict_green(&e, &tg, &tm, &d, v).map_err(err)?;
                ensure(r.terms.is_empty() == r.y.iter().all(Zero::is_zero), || {
                    format!("{comp:?} class {v}")
                })?;
            }
        }
    }
    Ok(())
}

fn regular_case() -> Check {
    for n in 1..=6 {
        for comp in compositions(n) {
            let e = LeviEmbedding::gl(&comp).map_err(err)?;
            let tg = factorize(e.ambient()).map_err(err)?;
            let tm = factorize(e.sub()).map_err(err)?;
            let d = r_matrix(&e, &tg, &tm).map_err(err)?;
            let rho = e.ambient().regular_pair().ok_or("regular pair")?;
            let rho_m = e.sub().regular_pair().ok_or("regular pair")?;
            ensure(is_indicator(&restrict_ggg(&e, &d, rho), rho_m), || {
                format!("{comp:?}")
            })?;
        }
    }
    Ok(())
}

fn subregular() -> Check {
    for n in 2..=6 {
        let tg = gl(n)?;
        let sigma = tg
            .block()
            .pair_by_id(&format!("{}+1", n - 1))
            .ok_or("subregular pair")?;
        for a in 1..n {
            let e = LeviEmbedding::gl(&[a, n - a]).map_err(err)?;
            let tm = factorize(e.sub()).map_err(err)?;
            let d = r_matrix(&e, &tg, &tm).map_err(err)?;
            let s = subregular_restriction(&e, sigma).map_err(err)?;
            ensure(d.r[sigma][s.rho_m] == s.coefficient, || {
                format!("GL{n} -> ({a},{})", n - a)
            })?;
            ensure(d.r[sigma] == s.qtilde, || {
                format!("GL{n} -> ({a},{}) row", n - a)
            })?;
        }
    }
    Ok(())
}

fn gelfand_graev() -> Check {
    for (n, q) in [(2, 2), (2, 3), (3, 2)] {
        let t = gl(n)?;
        let g = FiniteMatrixGroup::new(LinearKind::Gl, n, q).map_err(err)?;
        for lambda in partitions(n) {
            let i = t
                .block()
                .pair_by_id(&partition_label(&lambda))
                .ok_or("pair")?;
            let symbolic = t
                .evaluate_y(&gamma_tilde(&t, i).map_err(err)?.y)
                .map_err(err)?;
            for (mu, value) in induced_ggg(&g, &lambda, 1).map_err(err)? {
                let s = symbolic
                    .iter()
                    .find(|v| v.support == partition_label(&mu))
                    .ok_or("class")?;
                let got = at(&s.values[0], q)?;
                ensure(value.is_rational() && got == value, || {
                    format!("GL{n}({q}) Γ_{lambda:?}({mu:?}): {got} vs {value}")
                })?;
            }
        }
    }
    for n in 1..=3 {
        let g = linear_group(LinearKind::Gl, n)?;
        let cls: Vec<UnipotentRef> = partitions(n)
            .iter()
            .map(|l| UnipotentRef::new(partition_label(l), 0))
            .collect();
        for u in &cls {
            for v in &cls {
                let r = ggg_orthogonality_u(&g, u, v).map_err(err)?;
                ensure(r.equal, || format!("GL{n} ⟨Γ_u, DΓ_v⟩ {u:?} {v:?}"))?;
                {
                    for q in [2u32, 3] {
                        let fg = FiniteMatrixGroup::new(LinearKind::Gl, n, q).map_err(err)?;
                        let lambda = parse_partition(&u.support).map_err(err)?;
                        let c = enumerate_unipotent(&fg)
                            .into_iter()
                            .find(|c| c.jordan_type == lambda)
                            .ok_or("class")?
                            .centralizer;
                        let mut qp = c;
                        while qp % q as u64 == 0 {
                            qp /= q as u64;
                        }
                        let got = at(&r.lhs, q)?;
                        let ok = if u == v {
                            got == ExactScalar::int(qp as i64)
                                || got == ExactScalar::int(-(qp as i64))
                        } else {
                            got.is_zero()
                        };
                        ensure(ok, || format!("GL{n}({q}) ⟨Γ_u, DΓ_v⟩ {u:?} {v:?} = {got}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn star_identities() -> Check {
    for n in 1..=4 {
        check_order_star(&GroupSpec::Gl(n)).map_err(err)?;
        for mu in partitions(n) {
            check_order_star(&GroupSpec::GlTorus(mu)).map_err(err)?;
        }
    }
    for r in 1..=8 {
        let mut fams = vec![Family::A, Family::B, Family::C];
        if r >= 2 {
            fams.push(Family::D);
        }
        if r == 2 {
            fams.extend([Family::I2(2), Family::I2(3), Family::I2(4), Family::I2(6)]);
        }
        for f in fams {
            let w = build_group(&CoxeterDescriptor::new(vec![
                CoxeterFactor::new(f, r).map_err(err)?
            ]))
            .map_err(err)?;
            check_z_star(&w, r).map_err(|e| format!("{f:?}{r}: {e}"))?;
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("factorization identity", factorization),
        ("SL_n blocks by part division", sl_part_division),
        ("Kostka-Foulkes concordance", kostka_concordance),
        ("classical Green values", classical_green_values),
        ("orthogonality suite", orthogonality),
        ("duality", duality_checks),
        ("restriction commutation", restriction_commutation),
        ("regular case", regular_case),
        ("subregular closed form", subregular),
        ("Gelfand-Graev ground truth", gelfand_graev),
        ("star identities", star_identities),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2} PASS  {name} ({secs:.1}s)", k + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name} ({secs:.1}s): {e}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
