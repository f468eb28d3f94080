use greenfn::blocks::{gl_principal_block, sl_block, sl_block_with_y};
use greenfn::combinat::{partition_label, partitions};
use greenfn::exactalg::{matrix, ExactScalar, LaurentPoly};
use greenfn::ggg::{
    allorth, check_order_star, check_z_star, gamma_tilde, gamma_u_projection, gamma_u_tilde,
    gamma_u_tilde_direct, ggg_gram, ggg_orthogonality_u, is_unit_vector, order_polynomial,
    GroupSpec, LinearGroup, LinearKind, SignData, UnipotentRef,
};
use greenfn::lusztig::{factorize, GreenTable};
use greenfn::weyl::{build_group, CoxeterDescriptor, CoxeterFactor, Family};
use num_integer::Integer;
use num_traits::Zero;

fn gl(n: usize) -> GreenTable {
    factorize(&gl_principal_block(n).unwrap()).unwrap()
}

fn gl_group(n: usize) -> LinearGroup {
    LinearGroup {
        kind: LinearKind::Gl,
        n,
        tables: vec![gl(n)],
    }
}

fn sl_group(n: usize) -> LinearGroup {
    let mut tables = Vec::new();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        for j in (1..=d).filter(|j| j.gcd(&d) == 1) {
            tables.push(factorize(&sl_block_with_y(n, d, j).unwrap()).unwrap());
        }
    }
    LinearGroup {
        kind: LinearKind::Sl,
        n,
        tables,
    }
}

/// Rational unipotent classes of `SL_n` for `q ≡ 1 mod n`.
fn sl_classes(n: usize) -> Vec<UnipotentRef> {
    partitions(n)
        .iter()
        .flat_map(|l| {
            let g = l.iter().fold(0, |g, &x| g.gcd(&x));
            (0..g).map(move |a| UnipotentRef::new(partition_label(l), a))
        })
        .collect()
}

fn gl_classes(n: usize) -> Vec<UnipotentRef> {
    partitions(n)
        .iter()
        .map(|l| UnipotentRef::new(partition_label(l), 0))
        .collect()
}

#[test]
fn expansions_are_related_by_ptilde() {
    for n in 1..=4 {
        let t = gl(n);
        for i in 0..t.num_pairs() {
            let g = gamma_tilde(&t, i).unwrap();
            assert_eq!(matrix::mul_vec(t.ptilde(), &g.x), g.y);
        }
    }
}

#[test]
fn regular_gamma_at_identity_is_index_of_u() {
    // Γ̃_ρ(1) = |G^F| / q^{dim U}
    for n in 1..=4 {
        let t = gl(n);
        let rho = t.block().regular_pair().unwrap();
        let vals = t.evaluate_y(&gamma_tilde(&t, rho).unwrap().y).unwrap();
        let one = "1+".repeat(n - 1) + "1";
        let at_one = vals.iter().find(|v| v.support == one).unwrap().values[0].clone();
        let expected = order_polynomial(&GroupSpec::Gl(n))
            .unwrap()
            .shift(-((n * (n - 1) / 2) as i64));
        assert_eq!(
            at_one,
            expected.map_coeffs(|c| ExactScalar::rational(c.clone())),
            "GL{n}"
        );
    }
}

#[test]
fn ggg_gram_two_routes() {
    for n in 1..=4 {
        let t = gl(n);
        for i in 0..t.num_pairs() {
            for k in 0..t.num_pairs() {
                let v = ggg_gram(&t, i, k).unwrap();
                if !t.block().same_support(i, k) {
                    assert!(v.is_zero());
                }
            }
        }
    }
    for n in 1..=6 {
        for d in (1..=n).filter(|d| n % d == 0) {
            let t = factorize(&sl_block(n, d).unwrap()).unwrap();
            for i in 0..t.num_pairs() {
                for k in 0..t.num_pairs() {
                    ggg_gram(&t, i, k).unwrap();
                }
            }
        }
    }
}

#[test]
fn gamma_u_routes_agree() {
    for n in 1..=3 {
        let t = gl(n);
        let s = SignData::of_block(t.block());
        for u in gl_classes(n) {
            assert_eq!(
                gamma_u_tilde(&t, &u).unwrap().y,
                gamma_u_tilde_direct(&t, &u).unwrap()
            );
            let i = t.block().pair_by_id(&u.support).unwrap();
            assert_eq!(gamma_u_tilde(&t, &u).unwrap().c, t.block().pair(i).c());
            assert!(is_unit_vector(&gamma_u_projection(&t, &u, &s).unwrap(), i));
        }
    }
    let t = sl_group(4);
    for b in &t.tables {
        for u in sl_classes(4) {
            assert_eq!(
                gamma_u_tilde(b, &u).unwrap().y,
                gamma_u_tilde_direct(b, &u).unwrap(),
                "{} {u:?}",
                b.block().name()
            );
        }
    }
}

#[test]
fn allorth_gl_and_sl() {
    for n in 1..=4 {
        let g = gl_group(n);
        for u in gl_classes(n) {
            for v in gl_classes(n) {
                let r = allorth(&g, &u, &v).unwrap();
                assert!(r.equal, "GL{n} {u:?} {v:?}: {} vs {}", r.lhs, r.rhs);
            }
        }
    }
    for n in 2..=4 {
        let g = sl_group(n);
        for u in sl_classes(n) {
            for v in sl_classes(n) {
                let r = allorth(&g, &u, &v).unwrap();
                assert!(r.equal, "SL{n} {u:?} {v:?}: {} vs {}", r.lhs, r.rhs);
            }
        }
    }
}

#[test]
fn gamma_orthogonality_gl_and_sl() {
    for n in 1..=3 {
        let g = gl_group(n);
        for u in gl_classes(n) {
            for v in gl_classes(n) {
                let r = ggg_orthogonality_u(&g, &u, &v).unwrap();
                assert!(r.equal, "GL{n} {u:?} {v:?}: {} vs {}", r.lhs, r.rhs);
            }
        }
    }
    for n in 2..=3 {
        let g = sl_group(n);
        for u in sl_classes(n) {
            for v in sl_classes(n) {
                let r = ggg_orthogonality_u(&g, &u, &v).unwrap();
                assert!(r.equal, "SL{n} {u:?} {v:?}: {} vs {}", r.lhs, r.rhs);
            }
        }
    }
}

#[test]
fn order_star_identities() {
    for n in 1..=4 {
        check_order_star(&GroupSpec::Gl(n)).unwrap();
        check_order_star(&GroupSpec::Sl(n)).unwrap();
        for mu in partitions(n) {
            check_order_star(&GroupSpec::GlTorus(mu)).unwrap();
        }
    }
}

#[test]
fn torus_orders_are_characteristic_polynomials() {
    // det(q - w) on the permutation module is (q - 1) det(q - w) on the reflection module
    for n in 1..=5 {
        let w = build_group(&CoxeterDescriptor::symmetric(n).unwrap()).unwrap();
        let z = greenfn::weyl::torus_order_function(&w, n).unwrap();
        for (c, cls) in w.classes().iter().enumerate() {
            let mu = greenfn::combinat::parse_partition(&cls.label).unwrap();
            assert_eq!(
                z.value(c),
                &order_polynomial(&GroupSpec::GlTorus(mu)).unwrap()
            );
        }
    }
}

#[test]
fn z_star_identity_every_group() {
    let mut families = vec![];
    for r in 1..=8 {
        families.push((Family::A, r));
        families.push((Family::B, r));
        families.push((Family::C, r));
        if r >= 2 {
            families.push((Family::D, r));
        }
    }
    for m in [2, 3, 4, 6] {
        families.push((Family::I2(m), 2));
    }
    for (f, r) in families {
        let w = build_group(&CoxeterDescriptor::new(vec![
            CoxeterFactor::new(f, r).unwrap()
        ]))
        .unwrap();
        check_z_star(&w, r).unwrap();
        check_z_star(&w, r + 1).unwrap();
    }
}

#[test]
fn gl2_identity_orthogonality_value() {
    let r = ggg_orthogonality_u(
        &gl_group(2),
        &UnipotentRef::new("1+1", 0),
        &UnipotentRef::new("1+1", 0),
    )
    .unwrap();
    let expected = greenfn::exactalg::lp(&[(3, 1), (2, -1), (1, -1), (0, 1)]);
    assert_eq!(
        r.rhs,
        expected.map_coeffs(|c| ExactScalar::rational(c.clone()))
    );
    let _ = LaurentPoly::<ExactScalar>::zero();
}
