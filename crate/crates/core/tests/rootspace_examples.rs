use std::sync::Arc;

use verlinde_core::gusrep::ade_quiver;
use verlinde_core::rootspace::{build_root_space, coxeter_exponent, exponent_multiplicities, multiplicity_ma};
use verlinde_core::{Error, Family, FusionRing, LevelData, LieAlgebra, Limits, UsRep};

fn ring(f: Family, n: usize, l: u64) -> Arc<FusionRing> {
    Arc::new(FusionRing::new(LevelData::new(&LieAlgebra::new(f, n).unwrap(), l).unwrap()).unwrap())
}

fn ade_rep(f: Family, n: usize) -> UsRep {
    let q = ade_quiver(f, n).unwrap();
    q.to_usrep(ring(Family::A, 1, q.level)).unwrap()
}

#[test]
fn kernel_dimensions() {
    let rep = ade_rep(Family::E, 6);
    let data = build_root_space(&rep).unwrap();
    assert_eq!(data.dim(), 12);
    assert_eq!(data.neutral_dim(), Some(6));
    let reg = UsRep::regular(ring(Family::A, 1, 1));
    assert_eq!(build_root_space(&reg).unwrap().dim(), 4);
}

#[test]
fn full_shift_sum_over_rl() {
    let rep = ade_rep(Family::A, 3);
    let level = rep.ring().level();
    let table = rep.spectrum().unwrap();
    let rl = level.rl_basis().to_i64_rows().unwrap();
    for &h in &table.indices {
        assert_eq!(multiplicity_ma(level, &table, &rl, h).unwrap(), 6);
    }
    let not_intermediate = multiplicity_ma(level, &table, &[vec![3]], table.indices[0]);
    assert_eq!(not_intermediate, Err(Error::NotIntermediate));
}

#[test]
fn sl2_exponent_is_t() {
    let level = LevelData::new(&LieAlgebra::new(Family::A, 1).unwrap(), 5).unwrap();
    for h in level.spec_elements() {
        let t = h.num[0] * 2 * level.nc() / h.den;
        assert_eq!(coxeter_exponent(&level, &h, &[2]).unwrap(), t % level.nc());
    }
}

#[test]
fn sl3_exponents_cover_nonzero_residues() {
    let level = LevelData::new(&LieAlgebra::new(Family::A, 2).unwrap(), 1).unwrap();
    let r_plus = level.algebra().highest_root().clone();
    // Φ(e^H, r_+) depends on the representative of the Weyl orbit, so the
    // check runs over every free element of the torus.
    let mut seen: Vec<i64> = level
        .t_l0()
        .iter()
        .map(|&i| coxeter_exponent(&level, &level.torus()[i], &r_plus).unwrap())
        .collect();
    seen.sort();
    seen.dedup();
    assert_eq!(seen, vec![1, 2, 3]);
}

#[test]
fn exponent_is_weyl_equivariant() {
    let level = LevelData::new(&LieAlgebra::new(Family::A, 2).unwrap(), 2).unwrap();
    let r = level.algebra().highest_root().clone();
    for h in level.spec_elements() {
        for theta in level.weyl() {
            let lhs = coxeter_exponent(&level, &h, &theta.apply(&r)).unwrap();
            let inv = level.weyl().iter().find(|x| x.apply(&theta.apply(&[1, 0])) == [1, 0]
                && x.apply(&theta.apply(&[0, 1])) == [0, 1]).unwrap();
            let rhs = coxeter_exponent(&level, &level.weyl_act(inv, &h), &r).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn b2_exponents_differ_from_spectrum() {
    let rep = UsRep::regular(ring(Family::B, 2, 1));
    let table = exponent_multiplicities(&rep).unwrap();
    assert!(table.rows.iter().any(|r| r.m_phi != r.m_pi));
    let data = build_root_space(&rep).unwrap();
    let level = rep.ring().level();
    let ra = level.ra_basis().to_i64_rows().unwrap();
    let hs: Vec<usize> = table.rows.iter().map(|r| level.locate(&r.point).unwrap()).collect();
    let oracle = data.eigenspace_dims(&ra, false, &hs).unwrap();
    let closed: Vec<i64> = table.rows.iter().map(|r| r.m_phi).collect();
    assert_eq!(oracle, closed);
}

#[test]
fn root_space_cap() {
    let q = ade_quiver(Family::E, 8).unwrap();
    let limits = Limits { rootspace_cap: 100, ..Limits::default() };
    let alg = LieAlgebra::new(Family::A, 1).unwrap();
    let ring = Arc::new(FusionRing::new(LevelData::with_limits(&alg, q.level, &limits).unwrap()).unwrap());
    let rep = q.to_usrep(ring).unwrap();
    assert!(matches!(build_root_space(&rep), Err(Error::CapExceeded { .. })));
}
