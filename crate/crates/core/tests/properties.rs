use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use verlinde_core::fusion::{affine_fold, ell_char_value, fusion_kacwalton, fusion_verlinde, weyl_character_at};
use verlinde_core::gusrep::ade_quiver;
use verlinde_core::intlat::{hnf, lattice_quotient, snf, IntMatrix};
use verlinde_core::lie::weyl_dimension;
use verlinde_core::rootspace::RootSpace;
use verlinde_core::{Family, FusionRing, LevelData, LieAlgebra, UsRep};

fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..4).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-6i64..7, n), n..n + 2))
}

fn algebras() -> impl Strategy<Value = (Family, usize)> {
    prop::sample::select(vec![
        (Family::A, 1),
        (Family::A, 2),
        (Family::A, 3),
        (Family::B, 2),
        (Family::C, 3),
        (Family::D, 4),
        (Family::G, 2),
    ])
}

fn is_unimodular(u: &IntMatrix) -> bool {
    let d = u.det().unwrap();
    d == BigInt::one() || d == -BigInt::one()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn hnf_is_left_multiple(rows in small_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let (h, u) = hnf(&m);
        prop_assert!(is_unimodular(&u));
        prop_assert_eq!(u.mul(&m).unwrap(), h);
    }

    #[test]
    fn snf_is_diagonal_chain(rows in small_matrix()) {
        let m = IntMatrix::from_rows(&rows);
        let (s, u, v) = snf(&m);
        prop_assert!(is_unimodular(&u) && is_unimodular(&v));
        prop_assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), s.clone());
        let diag: Vec<BigInt> = (0..s.rows().min(s.cols())).map(|i| s.get(i, i).clone()).collect();
        for i in 0..s.rows() {
            for j in 0..s.cols() {
                prop_assert!(i == j || s.get(i, j).is_zero());
            }
        }
        for w in diag.windows(2) {
            prop_assert!(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()));
        }
    }

    #[test]
    fn quotient_coordinates_are_additive(
        (fam, n) in algebras(),
        x in prop::collection::vec(-20i64..20, 4),
        y in prop::collection::vec(-20i64..20, 4),
    ) {
        let alg = LieAlgebra::new(fam, n).unwrap();
        let g = lattice_quotient(n, &alg.cartan_matrix()).unwrap();
        let orders: Vec<i64> = g.cyclic_orders().iter().map(|d| i64::try_from(d).unwrap()).collect();
        let (x, y) = (&x[..n], &y[..n]);
        let sum: Vec<i64> = x.iter().zip(y).map(|(a, b)| a + b).collect();
        let (cx, cy, cs) = (g.to_coords_i64(x), g.to_coords_i64(y), g.to_coords_i64(&sum));
        for i in 0..orders.len() {
            prop_assert_eq!((cx[i] + cy[i]).rem_euclid(orders[i]), cs[i].rem_euclid(orders[i]));
        }
    }

    #[test]
    fn weyl_dimension_matches_weight_system((fam, n) in algebras(), lambda in prop::collection::vec(0i64..3, 4)) {
        let alg = LieAlgebra::new(fam, n).unwrap();
        let ws = alg.weight_system(&lambda[..n], 1_000_000).unwrap();
        prop_assert_eq!(BigInt::from(ws.dimension()), weyl_dimension(&alg, &lambda[..n]));
    }

    #[test]
    fn characters_are_alternating((fam, n) in algebras(), l in 0u64..3, k in prop::collection::vec(1i64..5, 4), seed in any::<u64>()) {
        let alg = LieAlgebra::new(fam, n).unwrap();
        let level = LevelData::new(&alg, l).unwrap();
        let k = &k[..n];
        let weyl = level.weyl();
        let theta = &weyl[(seed as usize) % weyl.len()];
        let h = &level.torus()[(seed as usize / 7) % level.torus_order()];
        let base = ell_char_value(&level, k, h);
        let moved_k = ell_char_value(&level, &theta.apply(k), h);
        let moved_h = ell_char_value(&level, k, &level.weyl_act(theta, h));
        prop_assert!((moved_k - base * theta.sign as f64).norm() < 1e-9);
        prop_assert!((moved_h - base * theta.sign as f64).norm() < 1e-9);
    }

    #[test]
    fn weyl_characters_are_invariant((fam, n) in algebras(), l in 0u64..3, lambda in prop::collection::vec(0i64..3, 4), seed in any::<u64>()) {
        let alg = LieAlgebra::new(fam, n).unwrap();
        let level = LevelData::new(&alg, l).unwrap();
        let free = level.t_l0();
        let h = &level.torus()[free[(seed as usize) % free.len()]];
        let theta = &level.weyl()[(seed as usize / 3) % level.weyl().len()];
        let a = weyl_character_at(&level, &lambda[..n], h).unwrap();
        let b = weyl_character_at(&level, &lambda[..n], &level.weyl_act(theta, h)).unwrap();
        prop_assert!((a - b).norm() < 1e-9);
    }

    #[test]
    fn folding_is_sign_consistent((fam, n) in algebras(), l in 0u64..3, x in prop::collection::vec(-8i64..9, 4), seed in any::<u64>()) {
        let alg = LieAlgebra::new(fam, n).unwrap();
        let level = LevelData::new(&alg, l).unwrap();
        let x = &x[..n];
        let theta = &level.weyl()[(seed as usize) % level.weyl().len()];
        let a = affine_fold(&level, x);
        let b = affine_fold(&level, &theta.apply(x));
        match (a, b) {
            (None, None) => {}
            (Some((ka, sa)), Some((kb, sb))) => {
                prop_assert_eq!(ka, kb);
                prop_assert_eq!(sa * theta.sign, sb);
            }
            other => prop_assert!(false, "inconsistent folds {:?}", other),
        }
    }

    #[test]
    fn verlinde_matches_kac_walton((fam, n) in algebras(), l in 0u64..3, seed in any::<(u16, u16, u16)>()) {
        let alg = LieAlgebra::new(fam, n).unwrap();
        let level = LevelData::new(&alg, l).unwrap();
        let c = level.alcove();
        let pick = |s: u16| &c[s as usize % c.len()];
        let (k, j, s) = (pick(seed.0), pick(seed.1), pick(seed.2));
        let v = fusion_verlinde(&level, k, j, s).unwrap();
        prop_assert!(v >= 0);
        prop_assert_eq!(v, fusion_kacwalton(&level, k, j, s).unwrap());
    }
}

fn ade_rep(f: Family, n: usize) -> UsRep {
    let q = ade_quiver(f, n).unwrap();
    let alg = LieAlgebra::new(Family::A, 1).unwrap();
    let ring = Arc::new(FusionRing::new(LevelData::new(&alg, q.level).unwrap()).unwrap());
    q.to_usrep(ring).unwrap()
}

fn root_set(space: &RootSpace<'_>) -> Vec<Vec<i64>> {
    let d = space.rep().dim();
    let mut out: Vec<Vec<i64>> = (0..space.points().len())
        .flat_map(|k| {
            (0..d).map(move |b| {
                let mut e = vec![0; d];
                e[b] = 1;
                space.project_delta(k, &e)
            })
        })
        .collect();
    out.sort();
    out
}

#[test]
fn translations_form_an_action() {
    let rep = ade_rep(Family::A, 3);
    let space = RootSpace::new(&rep).unwrap();
    let n = space.ambient_dim();
    let f: Vec<i64> = (0..n as i64).collect();
    let zero = space.position(&[0]);
    assert_eq!(space.translate(zero, &f), f);
    for j in 0..space.points().len() {
        for k in 0..space.points().len() {
            let jk = space.position(&[space.points()[j][0] + space.points()[k][0]]);
            assert_eq!(space.translate(j, &space.translate(k, &f)), space.translate(jk, &f));
        }
    }
}

#[test]
fn root_spheres_are_translation_invariant() {
    let cases = [ade_rep(Family::A, 3), ade_rep(Family::D, 4), ade_rep(Family::E, 6)];
    for rep in &cases {
        let space = RootSpace::new(rep).unwrap();
        let all = root_set(&space);
        let mut neutral: Vec<Vec<i64>> = space.quantum_root_system().unwrap().into_iter().map(|r| r.coeffs).collect();
        neutral.sort();
        for j in 0..space.points().len() {
            let mut moved: Vec<Vec<i64>> = all.iter().map(|f| space.translate(j, f)).collect();
            moved.sort();
            assert_eq!(moved, all);
        }
        // The neutral system is preserved by translations in the root lattice.
        for j in (0..space.points().len()).filter(|&j| space.points()[j][0] % 2 == 0) {
            let mut moved: Vec<Vec<i64>> = neutral.iter().map(|f| space.translate(j, f)).collect();
            moved.sort();
            assert_eq!(moved, neutral);
        }
    }
}

#[test]
fn coxeter_translation_permutes_a3_roots() {
    let rep = ade_rep(Family::A, 3);
    let space = RootSpace::new(&rep).unwrap();
    let mut roots: Vec<Vec<i64>> = space.quantum_root_system().unwrap().into_iter().map(|r| r.coeffs).collect();
    roots.sort();
    assert_eq!(roots.len(), 12);
    let r_plus = space.position(&[2]);
    let mut moved: Vec<Vec<i64>> = roots.iter().map(|f| space.translate(r_plus, f)).collect();
    moved.sort();
    assert_eq!(moved, roots);
}

#[test]
fn sl2_root_gram_entries_are_small() {
    for rep in [ade_rep(Family::A, 3), ade_rep(Family::D, 4)] {
        let space = RootSpace::new(&rep).unwrap();
        let roots = space.quantum_root_system().unwrap();
        for a in &roots {
            for b in &roots {
                let g = a.inner(b);
                assert!(g.is_integer() && g.to_integer().abs() <= 2, "{g}");
            }
        }
    }
}
