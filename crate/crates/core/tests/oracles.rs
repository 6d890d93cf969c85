//! Floating-point oracles built on nalgebra, independent of the exact code paths.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use verlinde_core::fusion::{ell_char_value, weyl_character_at};
use verlinde_core::gusrep::ade_quiver;
use verlinde_core::rootspace::{build_root_space, RootSpace};
use verlinde_core::{Family, FusionRing, LevelData, LieAlgebra, UsRep};

const TOL: f64 = 1e-9;

fn level(f: Family, n: usize, l: u64) -> LevelData {
    LevelData::new(&LieAlgebra::new(f, n).unwrap(), l).unwrap()
}

fn ring(f: Family, n: usize, l: u64) -> Arc<FusionRing> {
    Arc::new(FusionRing::new(level(f, n, l)).unwrap())
}

fn ade_rep(f: Family, n: usize) -> UsRep {
    let q = ade_quiver(f, n).unwrap();
    q.to_usrep(ring(Family::A, 1, q.level)).unwrap()
}

fn real(m: &[Vec<i64>]) -> DMatrix<f64> {
    DMatrix::from_fn(m.len(), m.len(), |i, j| m[i][j] as f64)
}

/// `Δ_w` on `L²(𝒲_ℓ)` from the weight multiset of `w`.
fn difference_operator(space: &RootSpace<'_>, w: usize) -> DMatrix<f64> {
    let alg = space.level().algebra();
    let mut e = vec![0; alg.rank()];
    e[w] = 1;
    let ws = alg.weight_system(&e, 1_000_000).unwrap();
    let n = space.points().len();
    let mut m = DMatrix::zeros(n, n);
    for j in 0..n {
        for (s, &mult) in &ws.entries {
            let x: Vec<i64> = space.points()[j].iter().zip(s).map(|(a, b)| a - b).collect();
            m[(j, space.position(&x))] += mult as f64;
        }
    }
    m
}

#[test]
fn fourier_diagonalizes_difference_operators() {
    for rep in [UsRep::regular(ring(Family::A, 1, 2)), UsRep::regular(ring(Family::A, 2, 1))] {
        let space = RootSpace::new(&rep).unwrap();
        let level = space.level();
        let n = space.points().len();
        assert_eq!(n, level.torus_order());
        // (F f)(H) = Σ_k f(k) e^{2πi⟨k,H⟩}
        let f = DMatrix::from_fn(n, n, |h, k| level.roots().get(level.torus()[h].pairing_num(&space.points()[k])));
        let f_inv = f.adjoint() / Complex64::new(n as f64, 0.0);
        assert!((&f * &f_inv - DMatrix::identity(n, n)).norm() < TOL);
        for w in 0..level.algebra().rank() {
            let delta = difference_operator(&space, w).map(|x| Complex64::new(x, 0.0));
            let conj = &f * delta * &f_inv;
            let mut e = vec![0; level.algebra().rank()];
            e[w] = 1;
            for h in 0..n {
                for k in 0..n {
                    let want = if h == k {
                        weyl_character_sum(level, &e, h)
                    } else {
                        Complex64::new(0.0, 0.0)
                    };
                    assert!((conj[(h, k)] - want).norm() < TOL, "w={w} ({h},{k})");
                }
            }
        }
    }
}

/// `Σ_s m_w(s) e^{2πi⟨s,H⟩}` over the full weight multiset, valid on mirrors too.
fn weyl_character_sum(level: &LevelData, w: &[i64], h: usize) -> Complex64 {
    let ws = level.algebra().weight_system(w, 1_000_000).unwrap();
    let t = &level.torus()[h];
    ws.entries.iter().map(|(s, &m)| level.roots().get(t.pairing_num(s)) * m as f64).sum()
}

#[test]
fn kernel_satisfies_projector_laws() {
    for rep in [ade_rep(Family::A, 3), UsRep::regular(ring(Family::A, 2, 1))] {
        let data = build_root_space(&rep).unwrap();
        let space = &data.space;
        let d = rep.dim();
        let n = space.ambient_dim();
        let k = DMatrix::from_fn(n, data.dim(), |r, c| data.kernel[c][r] as f64);
        let p = &k * (k.transpose() * &k).try_inverse().unwrap() * k.transpose();
        assert!((&p * &p - &p).norm() < TOL);
        assert!((&p - p.transpose()).norm() < TOL);
        let w_order = space.level().algebra().weyl_order() as usize;
        assert_eq!(data.dim(), w_order * d);
        for w in 0..space.level().algebra().rank() {
            let delta = difference_operator(space, w);
            let pi = real(&rep.fundamentals()[w].to_rows());
            let lhs = delta.kronecker(&DMatrix::identity(d, d)) * &p;
            let rhs = DMatrix::<f64>::identity(space.points().len(), space.points().len()).kronecker(&pi) * &p;
            assert!((lhs - rhs).norm() < TOL);
        }
        // The closed-form projection agrees with the numerical projector.
        let order = space.points().len() as f64;
        for j in 0..space.points().len() {
            for b in 0..d {
                let mut v = vec![0; d];
                v[b] = 1;
                let formula = DVector::from_iterator(n, space.project_delta(j, &v).iter().map(|&x| x as f64 / order));
                let direct = p.column(j * d + b).into_owned();
                assert!((formula - direct).norm() < TOL);
            }
        }
    }
}

#[test]
fn adjacency_eigenvalues_are_character_values() {
    for rep in [ade_rep(Family::E, 6), ade_rep(Family::D, 5), UsRep::regular(ring(Family::A, 2, 2))] {
        let level = rep.ring().level();
        let table = rep.spectrum().unwrap();
        for w in 0..level.algebra().rank() {
            let mut e = vec![0; level.algebra().rank()];
            e[w] = 1;
            let mut expected: Vec<Complex64> = Vec::new();
            for (p, &m) in table.multiplicities.iter().enumerate() {
                let v = weyl_character_at(level, &e, &table.points[p]).unwrap();
                expected.extend(std::iter::repeat_n(v, m as usize));
            }
            let actual: Vec<Complex64> = real(&rep.fundamentals()[w].to_rows()).complex_eigenvalues().iter().copied().collect();
            assert_eq!(actual.len(), expected.len());
            let mut used = vec![false; actual.len()];
            for x in &expected {
                let hit = (0..actual.len()).find(|&i| !used[i] && (actual[i] - x).norm() < 1e-7);
                used[hit.expect("eigenvalue not found")] = true;
            }
        }
    }
}

#[test]
fn character_gram_matrix() {
    for (f, n, l) in [(Family::A, 1, 6), (Family::A, 2, 3), (Family::B, 2, 2), (Family::G, 2, 1)] {
        let level = level(f, n, l);
        let c = level.alcove();
        let t = level.torus();
        let x = DMatrix::from_fn(c.len(), t.len(), |i, h| ell_char_value(&level, &c[i], &t[h]));
        let gram = &x * x.adjoint() / Complex64::new(t.len() as f64, 0.0);
        let w = level.algebra().weyl_order() as f64;
        let target = DMatrix::<Complex64>::identity(c.len(), c.len()) * Complex64::new(w, 0.0);
        assert!((gram - target).norm() < TOL);
    }
}
