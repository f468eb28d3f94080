use greenfn::combinat::compositions;
use greenfn::exactalg::{lp, rat, LaurentPoly};
use greenfn::lusztig::{factorize, GreenTable};
use greenfn::restriction::{
    is_indicator, r_matrix, restrict_direct, restrict_ggg, restrict_green, restrict_via_r,
    subregular_restriction, LeviEmbedding, RestrictionData,
};
use greenfn::weyl::ClassFunction;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn setup(comp: &[usize]) -> (LeviEmbedding, GreenTable, GreenTable, RestrictionData) {
    let e = LeviEmbedding::gl(comp).unwrap();
    let tg = factorize(e.ambient()).unwrap();
    let tm = factorize(e.sub()).unwrap();
    let d = r_matrix(&e, &tg, &tm).unwrap();
    (e, tg, tm, d)
}

fn random_poly(rng: &mut ChaCha8Rng) -> LaurentPoly {
    let terms: Vec<(i64, i64)> = (0..rng.gen_range(0..4))
        .map(|_| (rng.gen_range(-2..=3), rng.gen_range(-5..=5)))
        .collect();
    lp(&terms)
}

#[test]
fn restriction_commutes_with_transport() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=5 {
        for comp in compositions(n) {
            let (e, tg, tm, d) = setup(&comp);
            let g = e.ambient().group().clone();
            for _ in 0..20 {
                let theta = ClassFunction::new(
                    g.clone(),
                    (0..g.num_classes())
                        .map(|_| random_poly(&mut rng))
                        .collect(),
                )
                .unwrap();
                assert_eq!(
                    restrict_direct(&e, &tm, &theta).unwrap(),
                    restrict_via_r(&tg, &tm, &d, &theta).unwrap(),
                    "{comp:?}"
                );
            }
        }
    }
}

#[test]
fn counting_formula_on_every_class() {
    for n in 1..=5 {
        for comp in compositions(n) {
            let (e, tg, tm, d) = setup(&comp);
            for v in 0..e.ambient().group().num_classes() {
                let r = restrict_green(&e, &tg, &tm, &d, v).unwrap();
                // a class meets W_M exactly when its cycle type refines the composition
                assert_eq!(
                    r.terms.is_empty(),
                    r.y.iter().all(Zero::is_zero),
                    "{comp:?} class {v}"
                );
            }
        }
    }
}

#[test]
fn sign_character_restricts_to_sign() {
    for comp in [vec![2, 1], vec![1, 3], vec![2, 2], vec![1, 1, 2]] {
        let e = LeviEmbedding::gl(&comp).unwrap();
        let g = e.ambient().group();
        let m = e.sub().group();
        let sgn = ClassFunction::new(g.clone(), g.sign_values().iter().map(|&s| rat(s)).collect())
            .unwrap();
        let res = e.restrict(&sgn).unwrap();
        assert_eq!(
            res.values(),
            &m.sign_values().iter().map(|&s| rat(s)).collect::<Vec<_>>()[..]
        );
    }
}

#[test]
fn regular_pair_restricts_to_regular_pair() {
    for n in 1..=6 {
        for comp in compositions(n) {
            let (e, _, _, d) = setup(&comp);
            let rho = e.ambient().regular_pair().unwrap();
            let rho_m = e.sub().regular_pair().unwrap();
            assert!(is_indicator(&restrict_ggg(&e, &d, rho), rho_m), "{comp:?}");
        }
    }
}

#[test]
fn subregular_closed_form_matches_r() {
    for n in 2..=6 {
        let tg = factorize(&greenfn::blocks::gl_principal_block(n).unwrap()).unwrap();
        let sigma = tg.block().pair_by_id(&format!("{}+1", n - 1)).unwrap();
        for a in 1..n {
            let comp = [a, n - a];
            let e = LeviEmbedding::gl(&comp).unwrap();
            let tm = factorize(e.sub()).unwrap();
            let d = r_matrix(&e, &tg, &tm).unwrap();
            let s = subregular_restriction(&e, sigma).unwrap();
            assert_eq!(d.r[sigma], s.qtilde, "{comp:?}");
            assert_eq!(d.r[sigma][s.rho_m], s.coefficient, "{comp:?}");
            assert_eq!(restrict_ggg(&e, &d, sigma), s.gamma, "{comp:?}");
        }
    }
}
