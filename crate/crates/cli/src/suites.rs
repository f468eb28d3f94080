use clap::ValueEnum;
use greenfn::blocks::{gl_principal_block, sl_block, sl_block_with_y};
use greenfn::combinat::{compositions, parse_partition, partition_label, partitions};
use greenfn::exactalg::matrix::{self, inverse};
use greenfn::exactalg::{rat, ExactScalar, LaurentPoly, RationalFunction};
use greenfn::ggg::{
    allorth, centralizer_order, gamma_tilde, ggg_orthogonality_u, LinearGroup, LinearKind,
    UnipotentRef,
};
use greenfn::lusztig::{duality, factorize, green_norm_formula, scalar_product_green, GreenTable};
use greenfn::oracle::{
    cached_induced_ggg, cached_unipotent, CacheStatus, FiniteMatrixGroup, OracleCache,
};
use greenfn::restriction::{r_matrix, restrict_ggg, subregular_restriction, LeviEmbedding};
use num_integer::Integer;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::report::{Report, Table};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Factorization,
    Sln,
    Orthogonality,
    Duality,
    Ggg,
    Subregular,
    Oracle,
}

impl Suite {
    fn default_n(self) -> usize {
        match self {
            Suite::Factorization | Suite::Subregular => 6,
            Suite::Sln => 8,
            Suite::Orthogonality => 4,
            Suite::Duality => 5,
            Suite::Ggg | Suite::Oracle => 3,
        }
    }

    fn name(self) -> String {
        self.to_possible_value()
            .map_or_else(String::new, |v| v.get_name().to_string())
    }
}

type Outcome = Result<(), String>;

struct Run {
    /// Locus, outcome and an optional note shown on success.
    checks: Vec<(String, Outcome, Option<String>)>,
    cache: Vec<CacheStatus>,
}

impl Run {
    fn check(&mut self, locus: impl Into<String>, f: impl FnOnce() -> Outcome) {
        self.checks.push((locus.into(), f(), None));
    }

    fn check_noted(
        &mut self,
        locus: impl Into<String>,
        f: impl FnOnce() -> Result<String, String>,
    ) {
        let (o, note) = match f() {
            Ok(n) => (Ok(()), Some(n)),
            Err(m) => (Err(m), None),
        };
        self.checks.push((locus.into(), o, note));
    }
}

fn e<E: std::fmt::Display>(x: E) -> String {
    x.to_string()
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn gl(n: usize) -> Result<GreenTable, String> {
    factorize(&gl_principal_block(n).map_err(e)?).map_err(e)
}

fn linear_group(kind: LinearKind, n: usize) -> Result<LinearGroup, String> {
    let tables = match kind {
        LinearKind::Gl => vec![gl(n)?],
        LinearKind::Sl => {
            let mut v = Vec::new();
            for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
                for j in (1..=d).filter(|j| j.gcd(&d) == 1) {
                    v.push(factorize(&sl_block_with_y(n, d, j).map_err(e)?).map_err(e)?);
                }
            }
            v
        }
    };
    Ok(LinearGroup { kind, n, tables })
}

fn unipotent_refs(kind: LinearKind, n: usize) -> Vec<UnipotentRef> {
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
}

fn factorization(run: &mut Run, n: usize) {
    for k in 1..=n {
        run.check(format!("GL{k}"), || gl(k)?.verify().map_err(e));
        for d in (1..=k).filter(|d| k % d == 0) {
            run.check(format!("SL{k} d={d}"), || {
                factorize(&sl_block(k, d).map_err(e)?)
                    .map_err(e)?
                    .verify()
                    .map_err(e)
            });
        }
    }
}

fn sln(run: &mut Run, n: usize) {
    for k in 1..=n {
        for d in (1..=k).filter(|d| k % d == 0) {
            run.check(format!("SL{k} d={d} vs GL{}", k / d), || {
                let s = factorize(&sl_block(k, d).map_err(e)?).map_err(e)?;
                let g = gl(k / d)?;
                let mut to_gl = Vec::new();
                for p in s.block().pairs() {
                    let divided: Vec<usize> = parse_partition(&p.id)
                        .map_err(e)?
                        .iter()
                        .map(|x| x / d)
                        .collect();
                    to_gl.push(
                        g.block()
                            .pair_by_id(&partition_label(&divided))
                            .ok_or("no matching GL pair")?,
                    );
                }
                expect(to_gl.len() == g.num_pairs(), || "pair counts differ".into())?;
                for (a, &ga) in to_gl.iter().enumerate() {
                    for (b, &gb) in to_gl.iter().enumerate() {
                        expect(s.ptilde()[a][b] == g.ptilde()[ga][gb], || {
                            format!("P~[{}][{}]", s.block().pair(a).id, s.block().pair(b).id)
                        })?;
                    }
                }
                Ok(())
            });
        }
    }
}

fn orthogonality(run: &mut Run, n: usize) {
    for k in 1..=n {
        run.check(format!("GL{k} Green function scalar products"), || {
            let t = gl(k)?;
            let c = t.block().group().num_classes();
            for w in 0..c {
                for v in 0..c {
                    let s = scalar_product_green(&t, w, v).map_err(e)?;
                    let want = if w == v {
                        green_norm_formula(&t, w).map_err(e)?
                    } else {
                        RationalFunction::zero()
                    };
                    expect(s == want, || format!("classes ({w}, {v})"))?;
                }
            }
            Ok(())
        });
        run.check(format!("GL{k} Q~ Gram inverts Lambda"), || {
            let t = gl(k)?;
            let gram = matrix::map(&t.qtilde_gram(), |x| RationalFunction::from_poly(x.clone()));
            expect(Some(gram) == inverse(t.lambda()), || {
                "Gram matrix mismatch".into()
            })
        });
    }
    for (kind, top) in [(LinearKind::Gl, n), (LinearKind::Sl, n.min(4))] {
        for k in 1..=top {
            run.check(format!("{}{k} allorth", kname(kind)), || {
                let g = linear_group(kind, k)?;
                for u in unipotent_refs(kind, k) {
                    for v in unipotent_refs(kind, k) {
                        let r = allorth(&g, &u, &v).map_err(e)?;
                        expect(r.equal, || {
                            format!("({}, {}): {} vs {}", label(&u), label(&v), r.lhs, r.rhs)
                        })?;
                    }
                }
                Ok(())
            });
        }
    }
}

fn kname(k: LinearKind) -> &'static str {
    match k {
        LinearKind::Gl => "GL",
        LinearKind::Sl => "SL",
    }
}

fn label(u: &UnipotentRef) -> String {
    format!("{}#{}", u.support, u.class)
}

fn duality_suite(run: &mut Run, n: usize) {
    for k in 1..=n {
        run.check(format!("GL{k}"), || {
            let t = gl(k)?;
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
                expect(duality(&t, &dx, 1) == x, || {
                    format!("D∘D at class {}", g.classes()[c].label)
                })?;
                let want: Vec<LaurentPoly> = t
                    .green_function(c)
                    .map_err(e)?
                    .coefficients
                    .iter()
                    .map(|v| v.scale(&rat(sgn[c])))
                    .collect();
                expect(matrix::mul_vec(t.ptilde(), &dx) == want, || {
                    format!("D(Q_w) at w = {}", g.classes()[c].label)
                })?;
            }
            Ok(())
        });
    }
}

fn ggg_suite(run: &mut Run, n: usize) {
    for k in 1..=n {
        run.check(format!("GL{k} Gamma~ expansions"), || {
            let t = gl(k)?;
            for i in 0..t.num_pairs() {
                let g = gamma_tilde(&t, i).map_err(e)?;
                expect(matrix::mul_vec(t.ptilde(), &g.x) == g.y, || {
                    format!("pair {}", t.block().pair(i).id)
                })?;
            }
            Ok(())
        });
    }
    for (kind, top) in [(LinearKind::Gl, n), (LinearKind::Sl, n.min(3))] {
        for k in 1..=top {
            run.check(format!("{}{k} <Gamma_u, D Gamma_v>", kname(kind)), || {
                let g = linear_group(kind, k)?;
                for u in unipotent_refs(kind, k) {
                    for v in unipotent_refs(kind, k) {
                        let r = ggg_orthogonality_u(&g, &u, &v).map_err(e)?;
                        expect(r.equal, || {
                            format!("({}, {}): {} vs {}", label(&u), label(&v), r.lhs, r.rhs)
                        })?;
                    }
                }
                Ok(())
            });
        }
    }
}

fn subregular_suite(run: &mut Run, n: usize) {
    for k in 2..=n {
        for comp in compositions(k).into_iter().filter(|c| c.len() == 2) {
            run.check_noted(format!("GL{k} -> {comp:?}"), || {
                let tg = gl(k)?;
                let sigma = tg
                    .block()
                    .pair_by_id(&format!("{}+1", k - 1))
                    .ok_or("no subregular pair")?;
                let l = LeviEmbedding::gl(&comp).map_err(e)?;
                let tm = factorize(l.sub()).map_err(e)?;
                let d = r_matrix(&l, &tg, &tm).map_err(e)?;
                let s = subregular_restriction(&l, sigma).map_err(e)?;
                let pipeline = &d.r[sigma][s.rho_m];
                expect(&s.coefficient == pipeline, || {
                    format!("closed form {} vs pipeline {pipeline}", s.coefficient)
                })?;
                expect(s.qtilde == d.r[sigma], || "Res Q~ row differs".into())?;
                expect(s.gamma == restrict_ggg(&l, &d, sigma), || {
                    "Gamma side differs".into()
                })?;
                Ok(format!(
                    "closed form = pipeline = {} (k = {})",
                    s.coefficient, s.k
                ))
            });
        }
    }
}

fn oracle_suite(run: &mut Run, n: usize, q: u32, cache: &OracleCache) {
    let mut kinds = vec![LinearKind::Gl];
    if q > 2 {
        kinds.push(LinearKind::Sl);
    }
    for k in 1..=n.min(3) {
        for &kind in &kinds {
            // SL centralizer orders are generated for q ≡ 1 mod k
            if kind == LinearKind::Sl && (k < 2 || !(q as usize - 1).is_multiple_of(k)) {
                continue;
            }
            let fg = match FiniteMatrixGroup::new(kind, k, q) {
                Ok(g) => g,
                Err(err) => {
                    run.check(format!("{}{k}({q})", kname(kind)), || Err(e(err)));
                    continue;
                }
            };
            let mut statuses = Vec::new();
            run.check(
                format!("{}{k}({q}) centralizers and allorth", kname(kind)),
                || {
                    let (info, st) = cached_unipotent(cache, &fg).map_err(e)?;
                    statuses.push(st);
                    let g = linear_group(kind, k)?;
                    for c in &info {
                        let f = centralizer_order(kind, &c.jordan_type)
                            .evaluate(&rat(q as i64))
                            .map_err(e)?;
                        expect(f == rat(c.centralizer as i64), || {
                            format!("|C({:?})| = {} vs {f}", c.jordan_type, c.centralizer)
                        })?;
                    }
                    let refs: Vec<(UnipotentRef, u64)> = info
                        .iter()
                        .flat_map(|c| {
                            (0..c.classes as usize).map(move |a| {
                                (
                                    UnipotentRef::new(partition_label(&c.jordan_type), a),
                                    c.centralizer,
                                )
                            })
                        })
                        .collect();
                    for (u, cu) in &refs {
                        for (v, _) in &refs {
                            let lhs = allorth(&g, u, v)
                                .map_err(e)?
                                .lhs
                                .evaluate(&ExactScalar::int(q as i64))
                                .map_err(e)?;
                            let want = ExactScalar::int(if u == v { *cu as i64 } else { 0 });
                            expect(lhs == want, || {
                                format!("allorth ({}, {}) = {lhs}", label(u), label(v))
                            })?;
                        }
                    }
                    Ok(())
                },
            );
            if kind == LinearKind::Gl {
                run.check(format!("GL{k}({q}) Gamma~ vs induced characters"), || {
                    let t = gl(k)?;
                    for lambda in partitions(k) {
                        let i = t
                            .block()
                            .pair_by_id(&partition_label(&lambda))
                            .ok_or("pair")?;
                        let sym = t.evaluate_y(&gamma_tilde(&t, i).map_err(e)?.y).map_err(e)?;
                        let (vals, st) = cached_induced_ggg(cache, &fg, &lambda, 1).map_err(e)?;
                        statuses.push(st);
                        for (mu, v) in vals {
                            let s = sym
                                .iter()
                                .find(|x| x.support == partition_label(&mu))
                                .ok_or("class")?;
                            let got = s.values[0]
                                .evaluate(&ExactScalar::int(q as i64))
                                .map_err(e)?;
                            expect(got == v, || {
                                format!("Gamma_{lambda:?}({mu:?}) = {got}, oracle {v}")
                            })?;
                        }
                    }
                    Ok(())
                });
            }
            run.cache.extend(statuses);
        }
    }
}

pub fn cmd_verify(suite: Suite, n: Option<usize>, q: u32, cache: &OracleCache) -> (Report, bool) {
    let n = n.unwrap_or(suite.default_n());
    let mut run = Run {
        checks: Vec::new(),
        cache: Vec::new(),
    };
    match suite {
        Suite::Factorization => factorization(&mut run, n),
        Suite::Sln => sln(&mut run, n),
        Suite::Orthogonality => orthogonality(&mut run, n),
        Suite::Duality => duality_suite(&mut run, n),
        Suite::Ggg => ggg_suite(&mut run, n),
        Suite::Subregular => subregular_suite(&mut run, n),
        Suite::Oracle => oracle_suite(&mut run, n, q, cache),
    }
    let passed = run.checks.iter().all(|(_, o, _)| o.is_ok());
    let mut r = Report::new("verify");
    r.set("suite", json!(suite.name()));
    let mut params = json!({ "n": n });
    if suite == Suite::Oracle {
        params["q"] = json!(q);
        let count = |s: CacheStatus| run.cache.iter().filter(|&&x| x == s).count();
        r.set(
            "cache",
            json!({
                "dir": cache.dir().map(|d| d.display().to_string()),
                "hits": count(CacheStatus::Hit),
                "misses": count(CacheStatus::Miss),
            }),
        );
    }
    r.set("params", params);
    r.set("passed", json!(passed));
    let checks: Vec<Value> = run
        .checks
        .iter()
        .map(|(l, o, note)| match o {
            Ok(()) => match note {
                Some(n) => json!({ "locus": l, "passed": true, "detail": n }),
                None => json!({ "locus": l, "passed": true }),
            },
            Err(m) => json!({ "locus": l, "passed": false, "detail": m }),
        })
        .collect();
    r.set("checks", Value::Array(checks));
    r.set(
        "failures",
        json!(run
            .checks
            .iter()
            .filter(|(_, o, _)| o.is_err())
            .map(|(l, _, _)| l)
            .collect::<Vec<_>>()),
    );
    r.tables.push(Table {
        title: format!("suite {} (n = {n})", suite.name()),
        header: vec!["check".into(), "status".into(), "detail".into()],
        rows: run
            .checks
            .iter()
            .map(|(l, o, note)| {
                let detail = o.clone().err().or_else(|| note.clone()).unwrap_or_default();
                vec![
                    l.clone(),
                    if o.is_ok() { "pass" } else { "FAIL" }.into(),
                    detail,
                ]
            })
            .collect(),
    });
    (r, passed)
}
