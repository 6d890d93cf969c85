//! Level characters and the graded fusion ring they span.
//!
//! Alcove labels are ρ-shifted throughout: the basis element `χ̃_k` is
//! indexed by `k ∈ C_ℓ`, so the unit is `χ̃_ρ` and the classical module
//! underlying `χ̃_k` has highest weight `k − ρ`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::lie::{classical_fusion, dominant_fold, Weight, WeightSystem};
use crate::phase::round_complex;
use crate::torus::{LevelData, TorusElement};
use crate::{Error, Result};

/// `Σ_θ ε(θ) e^{2πi⟨θ(k), H⟩}` at the torus element with numerators `h`.
pub(crate) fn char_num(level: &LevelData, k: &[i64], h: &[i64]) -> Complex64 {
    let den = level.den();
    let n = k.len();
    let table = level.roots();
    let mut acc = Complex64::new(0.0, 0.0);
    // ⟨θk, H⟩ = Σ_j k_j (θᵀh)_j
    for theta in level.weyl() {
        let mut s: i64 = 0;
        for i in 0..n {
            if h[i] == 0 {
                continue;
            }
            let mut x: i64 = 0;
            for j in 0..n {
                x += theta.action[i * n + j] * k[j];
            }
            s = (s + x.rem_euclid(den) * h[i]) % den;
        }
        let z = table.get(s);
        if theta.sign > 0 {
            acc += z;
        } else {
            acc -= z;
        }
    }
    acc
}

/// `(k, j, s, kac_walton, verlinde)` for a disagreeing coefficient.
pub type Mismatch = (usize, usize, usize, i64, i64);

/// The anti-symmetric character `χ̂_k(e^H)`.
pub fn ell_char_value(level: &LevelData, k: &[i64], h: &TorusElement) -> Complex64 {
    let scaled = rescale(level, h);
    char_num(level, k, &scaled)
}

fn rescale(level: &LevelData, h: &TorusElement) -> Vec<i64> {
    if h.den == level.den() {
        h.num.clone()
    } else {
        let f = level.den() / h.den;
        h.num.iter().map(|x| x * f).collect()
    }
}

/// Weyl denominator by the product formula
/// `e^{2πi⟨ρ,H⟩} Π_{r>0} (1 − e^{−2πi⟨r,H⟩})`.
pub fn weyl_denominator(level: &LevelData, h: &TorusElement) -> Complex64 {
    let alg = level.algebra();
    let mut z = crate::phase::unit_root(h.pairing_num(alg.rho()), h.den);
    for r in alg.positive_roots() {
        let p = h.pairing_num(r);
        if p == 0 {
            return Complex64::new(0.0, 0.0);
        }
        z *= Complex64::new(1.0, 0.0) - crate::phase::unit_root(-p, h.den);
    }
    z
}

/// Weyl character `χ_k(e^H) = χ̂_{k+ρ}(e^H) / χ̂_ρ(e^H)` for dominant `k`.
pub fn weyl_character_at(level: &LevelData, k: &[i64], h: &TorusElement) -> Result<Complex64> {
    if h.num.iter().len() != k.len() {
        return Err(Error::DimensionMismatch { expected: h.num.len(), found: k.len() });
    }
    let den = weyl_denominator(level, h);
    if den.norm() == 0.0 {
        return Err(Error::MirrorElement);
    }
    let shifted: Weight = k.iter().map(|x| x + 1).collect();
    Ok(ell_char_value(level, &shifted, h) / den)
}

/// Folds a ρ-shifted label into the open alcove by the affine Weyl group
/// at level `n_c`. Returns `None` on a wall, otherwise the alcove label and
/// the sign of the folding element.
pub fn affine_fold(level: &LevelData, x: &[i64]) -> Option<(Weight, i64)> {
    let alg = level.algebra();
    let nc = level.nc();
    let theta = alg.highest_root();
    let mut x = x.to_vec();
    let mut sign = 1;
    loop {
        if let Some(i) = x.iter().position(|&v| v < 0) {
            alg.reflect(&mut x, i);
            sign = -sign;
            continue;
        }
        if x.contains(&0) {
            return None;
        }
        let p = alg.level_pairing(&x);
        if p == nc {
            return None;
        }
        if p < nc {
            return Some((x, sign));
        }
        for (xi, t) in x.iter_mut().zip(theta) {
            *xi -= (p - nc) * t;
        }
        sign = -sign;
    }
}

/// `Ñ_{k,j}^s` by the Verlinde sum over `T_{ℓ,0}`.
pub fn fusion_verlinde(level: &LevelData, k: &[i64], j: &[i64], s: &[i64]) -> Result<i64> {
    for x in [k, j, s] {
        level.alcove_position(x).ok_or(Error::NotInAlcove)?;
    }
    let rho = level.algebra().rho().clone();
    let mut acc = Complex64::new(0.0, 0.0);
    for &i in level.t_l0() {
        let h = &level.torus()[i].num;
        let ck = char_num(level, k, h);
        let cj = char_num(level, j, h);
        let cs = char_num(level, s, h);
        let cr = char_num(level, &rho, h);
        acc += ck * cj * cs.conj() / cr;
    }
    let norm = (level.weyl().len() * level.torus_order()) as f64;
    round_complex(acc / norm, level.limits().tolerance, "Verlinde fusion coefficient")
}

/// Folds a classical decomposition into alcove coefficients.
fn fold_decomposition(level: &LevelData, decomposition: &BTreeMap<Weight, u64>) -> Vec<i64> {
    let mut out = vec![0i64; level.alcove().len()];
    for (s, &m) in decomposition {
        let shifted: Weight = s.iter().map(|x| x + 1).collect();
        if let Some((a, sign)) = affine_fold(level, &shifted) {
            let idx = level.alcove_position(&a).expect("fold lands in the alcove");
            out[idx] += sign * m as i64;
        }
    }
    out
}

/// `Ñ_{k,j}^s` by Kac–Walton folding of the classical tensor product.
pub fn fusion_kacwalton(level: &LevelData, k: &[i64], j: &[i64], s: &[i64]) -> Result<i64> {
    level.alcove_position(k).ok_or(Error::NotInAlcove)?;
    level.alcove_position(j).ok_or(Error::NotInAlcove)?;
    let si = level.alcove_position(s).ok_or(Error::NotInAlcove)?;
    let km: Weight = k.iter().map(|x| x - 1).collect();
    let jm: Weight = j.iter().map(|x| x - 1).collect();
    let classical = classical_fusion(level.algebra(), &km, &jm, level.limits().weight_cap)?;
    Ok(fold_decomposition(level, &classical)[si])
}

/// `k* = Ω(−k)`, computed as the dominant representative of `−k`.
pub fn involution(level: &LevelData, k: &[i64]) -> Weight {
    let neg: Weight = k.iter().map(|x| -x).collect();
    dominant_fold(level.algebra(), &neg).dominant
}

/// Grading of `χ̃_k`: the class of `k − ρ` in `Z(g)`.
pub fn grading(level: &LevelData, k: &[i64]) -> Vec<i64> {
    let shifted: Weight = k.iter().map(|x| x - 1).collect();
    level.algebra().center().to_coords_i64(&shifted)
}

/// Outcome of the fusion-ring axiom checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub unit: bool,
    pub duality: bool,
    pub conjugation: bool,
    pub commutativity: bool,
    pub grading: bool,
    pub associativity: bool,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.unit && self.duality && self.conjugation && self.commutativity && self.grading && self.associativity
    }
}

/// The `Z(g)`-graded fusion ring with basis `{χ̃_k : k ∈ C_ℓ}`.
#[derive(Clone, Debug)]
pub struct FusionRing {
    level: LevelData,
    /// `Ñ_{k,j}^s` at `[(k·m + j)·m + s]`.
    coefficients: Vec<i64>,
    star: Vec<usize>,
    grading: Vec<Vec<i64>>,
    /// Fold of `w_i + ρ` for each fundamental weight.
    generator_folds: Vec<Option<(usize, i64)>>,
    /// Coefficients of `χ̃_{w_i+ρ} ⋆ χ̃_j`, indexed `[i][j][s]`.
    generator_products: Vec<Vec<Vec<i64>>>,
    /// `χ̃_k` at the spectrum representatives, indexed `[k][p]`.
    spec_chars: Vec<Vec<Complex64>>,
}

impl FusionRing {
    pub fn new(level: LevelData) -> Result<Self> {
        let alg = level.algebra().clone();
        let n = alg.rank();
        let m = level.alcove().len();
        let cap = level.limits().weight_cap;
        let alcove: Vec<Weight> = level.alcove().to_vec();
        let classical: Vec<WeightSystem> = alcove
            .iter()
            .map(|k| alg.weight_system(&k.iter().map(|x| x - 1).collect::<Vec<_>>(), cap))
            .collect::<Result<_>>()?;

        let mut coefficients = vec![0i64; m * m * m];
        for a in 0..m {
            for b in a..m {
                let row = racah_speiser(&level, &alcove[b], &classical[a]);
                for (s, c) in row.iter().enumerate() {
                    coefficients[(a * m + b) * m + s] = *c;
                    coefficients[(b * m + a) * m + s] = *c;
                }
            }
        }

        let star: Vec<usize> = alcove
            .iter()
            .map(|k| level.alcove_position(&involution(&level, k)).ok_or(Error::NotInAlcove))
            .collect::<Result<_>>()?;
        let grading_v: Vec<Vec<i64>> = alcove.iter().map(|k| grading(&level, k)).collect();

        let mut generator_folds = Vec::with_capacity(n);
        let mut generator_products = Vec::with_capacity(n);
        for i in 0..n {
            let mut w = vec![0i64; n];
            w[i] = 1;
            let shifted: Weight = w.iter().map(|x| x + 1).collect();
            generator_folds.push(
                affine_fold(&level, &shifted).map(|(a, s)| (level.alcove_position(&a).unwrap(), s)),
            );
            let ws = alg.weight_system(&w, cap)?;
            generator_products.push(alcove.iter().map(|j| racah_speiser(&level, j, &ws)).collect());
        }

        let spec_chars = alcove
            .iter()
            .map(|k| level.spec().iter().map(|&p| char_num(&level, k, &level.torus()[p].num)).collect())
            .collect();

        let ring = FusionRing {
            level,
            coefficients,
            star,
            grading: grading_v,
            generator_folds,
            generator_products,
            spec_chars,
        };
        ring.spot_check()?;
        Ok(ring)
    }

    /// Cross-checks one row of the tensor against the Verlinde sum.
    fn spot_check(&self) -> Result<()> {
        let m = self.rank();
        let k = if m > 1 { 1 } else { 0 };
        for j in 0..m {
            for s in 0..m {
                let v = self.verlinde_coefficient(k, j, s)?;
                if v != self.coefficient(k, j, s) {
                    return Err(Error::NonIntegral(format!(
                        "Kac-Walton and Verlinde disagree at ({k},{j},{s}): {} vs {v}",
                        self.coefficient(k, j, s)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn level(&self) -> &LevelData {
        &self.level
    }

    /// Number of basis elements, `|C_ℓ|`.
    pub fn rank(&self) -> usize {
        self.level.alcove().len()
    }

    pub fn basis(&self) -> &[Weight] {
        self.level.alcove()
    }

    /// `Ñ_{k,j}^s` by alcove positions.
    #[inline]
    pub fn coefficient(&self, k: usize, j: usize, s: usize) -> i64 {
        let m = self.rank();
        self.coefficients[(k * m + j) * m + s]
    }

    /// `χ̃_k ⋆ χ̃_j` as coefficients over the alcove.
    pub fn product(&self, k: usize, j: usize) -> &[i64] {
        let m = self.rank();
        &self.coefficients[(k * m + j) * m..(k * m + j + 1) * m]
    }

    pub fn star(&self, k: usize) -> usize {
        self.star[k]
    }

    pub fn grading(&self, k: usize) -> &[i64] {
        &self.grading[k]
    }

    /// Position of `w_i + ρ` after affine folding, with sign; `None` on a wall.
    pub fn generator_fold(&self, i: usize) -> Option<(usize, i64)> {
        self.generator_folds[i]
    }

    /// Coefficients of `χ̃_{w_i+ρ} ⋆ χ̃_j` over the alcove.
    pub fn generator_product(&self, i: usize, j: usize) -> &[i64] {
        &self.generator_products[i][j]
    }

    /// `χ̃_k` at spectrum representative `p`.
    pub fn spec_char(&self, k: usize, p: usize) -> Complex64 {
        self.spec_chars[k][p]
    }

    /// `Ñ_{k,j}^s` by the Verlinde sum over spectrum representatives.
    pub fn verlinde_coefficient(&self, k: usize, j: usize, s: usize) -> Result<i64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for p in 0..self.level.spec().len() {
            acc += self.spec_chars[k][p] * self.spec_chars[j][p] * self.spec_chars[s][p].conj()
                / self.spec_chars[0][p];
        }
        acc /= self.level.torus_order() as f64;
        round_complex(acc, self.level.limits().tolerance, "Verlinde fusion coefficient")
    }

    /// Positions where the two algorithms differ.
    pub fn verlinde_mismatches(&self) -> Result<Vec<Mismatch>> {
        let m = self.rank();
        let mut out = Vec::new();
        for k in 0..m {
            for j in 0..m {
                for s in 0..m {
                    let v = self.verlinde_coefficient(k, j, s)?;
                    if v != self.coefficient(k, j, s) {
                        out.push((k, j, s, self.coefficient(k, j, s), v));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn check_axioms(&self) -> AxiomReport {
        let m = self.rank();
        let c = |k, j, s| self.coefficient(k, j, s);
        let all3 = |f: &dyn Fn(usize, usize, usize) -> bool| {
            (0..m).all(|k| (0..m).all(|j| (0..m).all(|s| f(k, j, s))))
        };
        let unit = all3(&|_, j, s| c(0, j, s) == (j == s) as i64);
        let duality = (0..m).all(|k| (0..m).all(|j| c(k, j, 0) == (j == self.star[k]) as i64));
        let conjugation = all3(&|k, j, s| c(k, j, s) == c(self.star[k], self.star[j], self.star[s]));
        let commutativity = all3(&|k, j, s| c(k, j, s) == c(j, k, s));
        let center = self.level.algebra().center();
        let orders: Vec<i64> = center.cyclic_orders().iter().map(|d| i64::try_from(d).unwrap()).collect();
        let add = |a: &[i64], b: &[i64]| -> Vec<i64> {
            a.iter().zip(b).zip(&orders).map(|((x, y), d)| (x + y).rem_euclid(*d)).collect()
        };
        let grading = all3(&|k, j, s| c(k, j, s) == 0 || add(&self.grading[k], &self.grading[j]) == self.grading[s]);
        let associativity = (0..m).all(|k| {
            (0..m).all(|j| {
                (0..m).all(|l| {
                    (0..m).all(|s| {
                        let lhs: i64 = (0..m).map(|t| c(k, j, t) * c(t, l, s)).sum();
                        let rhs: i64 = (0..m).map(|t| c(j, l, t) * c(k, t, s)).sum();
                        lhs == rhs
                    })
                })
            })
        });
        AxiomReport { unit, duality, conjugation, commutativity, grading, associativity }
    }
}

/// Kac–Walton product of `χ̃_j` with the module whose weights are `ws`.
fn racah_speiser(level: &LevelData, j: &[i64], ws: &WeightSystem) -> Vec<i64> {
    let mut out = vec![0i64; level.alcove().len()];
    for (mu, &m) in &ws.entries {
        let x: Weight = j.iter().zip(mu).map(|(a, b)| a + b).collect();
        if let Some((a, sign)) = affine_fold(level, &x) {
            out[level.alcove_position(&a).expect("fold lands in the alcove")] += sign * m as i64;
        }
    }
    out
}
