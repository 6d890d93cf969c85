//! Unital *-representations of the level-ℓ Verlinde algebra by integer
//! matrices, their extension from fundamental generators, validation and
//! spectra.

mod matrix;
mod quiver;

use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::fusion::FusionRing;
use crate::phase::round_checked;
use crate::torus::TorusElement;
use crate::{Error, Result};

pub use matrix::IntMat;
pub use quiver::{
    ade_quiver, check_quantum_dynkin, dynkin_graph_type, DynkinCertificate, GradedQuiver,
    QuiverEdge, QuiverVertex,
};

/// A representation given by the images `Π_w = Π(χ̃_{w+ρ})` of the
/// fundamental generators, extended to the whole alcove basis.
#[derive(Clone, Debug)]
pub struct UsRep {
    ring: Arc<FusionRing>,
    dim: usize,
    fundamentals: Vec<IntMat>,
    grading: Option<Vec<Vec<i64>>>,
    extended: Result<Vec<IntMat>>,
}

/// Pass/fail entries for every defining condition.
#[derive(Clone, Debug, PartialEq)]
pub struct ValidationReport {
    pub dimension: usize,
    /// Extension of the generators to the full basis; fails on a
    /// non-integral entry.
    pub extension: core::result::Result<(), Error>,
    /// `Π_w` agrees with the folded image of `w + ρ` when that label lies
    /// outside the alcove or on a wall.
    pub generators: bool,
    pub unit: bool,
    pub star: bool,
    pub homomorphism: bool,
    pub grading: Option<bool>,
    pub natural: bool,
    pub failures: Vec<String>,
}

impl ValidationReport {
    pub fn all_pass(&self) -> bool {
        self.extension.is_ok()
            && self.generators
            && self.unit
            && self.star
            && self.homomorphism
            && self.grading != Some(false)
    }
}

/// Multiplicities `m_Π(e^H)` over the spectrum representatives.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumTable {
    /// Torus indices of the spectrum representatives.
    pub indices: Vec<usize>,
    pub points: Vec<TorusElement>,
    pub multiplicities: Vec<i64>,
}

impl SpectrumTable {
    pub fn total(&self) -> i64 {
        self.multiplicities.iter().sum()
    }
}

impl UsRep {
    pub fn new(
        ring: Arc<FusionRing>,
        fundamentals: Vec<IntMat>,
        grading: Option<Vec<Vec<i64>>>,
    ) -> Result<Self> {
        let rank = ring.level().algebra().rank();
        if fundamentals.len() != rank {
            return Err(Error::DimensionMismatch { expected: rank, found: fundamentals.len() });
        }
        let dim = fundamentals.first().map_or(0, IntMat::dim);
        if let Some(m) = fundamentals.iter().find(|m| m.dim() != dim) {
            return Err(Error::DimensionMismatch { expected: dim, found: m.dim() });
        }
        if let Some(g) = &grading {
            if g.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.len() });
            }
        }
        let mut rep = UsRep { ring, dim, fundamentals, grading, extended: Ok(Vec::new()) };
        rep.extended = rep.extend(false);
        Ok(rep)
    }

    /// The regular representation `Π(χ̃_k)_{s,j} = Ñ_{k,j}^s`, graded by the ring.
    pub fn regular(ring: Arc<FusionRing>) -> Self {
        let m = ring.rank();
        let rank = ring.level().algebra().rank();
        let fundamentals = (0..rank)
            .map(|w| {
                let mut x = IntMat::zeros(m);
                for j in 0..m {
                    for (s, c) in ring.generator_product(w, j).iter().enumerate() {
                        x.set(s, j, *c);
                    }
                }
                x
            })
            .collect();
        let grading = Some((0..m).map(|k| ring.grading(k).to_vec()).collect());
        UsRep::new(ring, fundamentals, grading).expect("regular representation is well formed")
    }

    pub fn ring(&self) -> &Arc<FusionRing> {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn fundamentals(&self) -> &[IntMat] {
        &self.fundamentals
    }

    pub fn grading(&self) -> Option<&[Vec<i64>]> {
        self.grading.as_deref()
    }

    fn label(&self, k: usize) -> String {
        format!("{:?}", self.ring.basis()[k])
    }

    /// Solves for `Π(χ̃_k)` along `χ̃_{w+ρ} ⋆ χ̃_j = Σ_s c_s χ̃_s`, visiting
    /// alcove labels by level; `reversed` flips the choice order of `(j, w)`.
    pub fn extend(&self, reversed: bool) -> Result<Vec<IntMat>> {
        let ring = &self.ring;
        let m = ring.rank();
        let rank = self.fundamentals.len();
        let mut known: Vec<Option<IntMat>> = alloc::vec![None; m];
        known[0] = Some(IntMat::identity(self.dim));
        let mut remaining = m - 1;
        let mut js: Vec<usize> = (0..m).collect();
        let mut ws: Vec<usize> = (0..rank).collect();
        if reversed {
            js.reverse();
            ws.reverse();
        }
        while remaining > 0 {
            let mut progress = false;
            for k in 0..m {
                if known[k].is_some() {
                    continue;
                }
                let choice = js.iter().filter(|&&j| known[j].is_some()).find_map(|&j| {
                    ws.iter().find_map(|&w| {
                        let c = ring.generator_product(w, j);
                        let ok = c[k] != 0
                            && c.iter().enumerate().all(|(s, &cs)| s == k || cs == 0 || known[s].is_some());
                        ok.then_some((j, w))
                    })
                });
                let Some((j, w)) = choice else { continue };
                let c = ring.generator_product(w, j);
                let mut x = self.fundamentals[w].mul(known[j].as_ref().unwrap())?;
                for (s, &cs) in c.iter().enumerate() {
                    if s != k && cs != 0 {
                        x.add_scaled(-cs, known[s].as_ref().unwrap())?;
                    }
                }
                let ck = c[k];
                if x.entries().iter().any(|v| v % ck != 0) {
                    return Err(Error::NonIntegerEntry { label: self.label(k) });
                }
                let mut y = IntMat::zeros(self.dim);
                for a in 0..self.dim {
                    for b in 0..self.dim {
                        y.set(a, b, x.get(a, b) / ck);
                    }
                }
                known[k] = Some(y);
                remaining -= 1;
                progress = true;
            }
            if !progress {
                let k = known.iter().position(Option::is_none).unwrap();
                return Err(Error::Unreachable { label: self.label(k) });
            }
        }
        Ok(known.into_iter().map(Option::unwrap).collect())
    }

    /// Images `Π(χ̃_k)` for every alcove label, in alcove order.
    pub fn extended(&self) -> Result<&[IntMat]> {
        self.extended.as_deref().map_err(Clone::clone)
    }

    pub fn matrix(&self, k: usize) -> Result<&IntMat> {
        Ok(&self.extended()?[k])
    }

    /// `Π(χ̃_x)` for an arbitrary ρ-shifted label, via affine folding.
    /// Returns `None` for labels on a wall, where `χ̃_x = 0`.
    pub fn matrix_of_label(&self, x: &[i64]) -> Result<Option<(i64, &IntMat)>> {
        let level = self.ring.level();
        match crate::fusion::affine_fold(level, x) {
            None => Ok(None),
            Some((a, sign)) => {
                let k = level.alcove_position(&a).expect("fold lands in the alcove");
                Ok(Some((sign, self.matrix(k)?)))
            }
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport {
            dimension: self.dim,
            extension: Ok(()),
            generators: false,
            unit: false,
            star: false,
            homomorphism: false,
            grading: self.grading.as_ref().map(|_| false),
            natural: false,
            failures: Vec::new(),
        };
        let ext = match self.extended() {
            Ok(e) => e,
            Err(e) => {
                report.failures.push(format!("extension: {e}"));
                report.extension = Err(e);
                return report;
            }
        };
        let ring = &self.ring;
        let m = ring.rank();

        report.generators = (0..self.fundamentals.len()).all(|w| {
            let expect = match ring.generator_fold(w) {
                None => IntMat::zeros(self.dim),
                Some((k, sign)) => match ext[k].scaled(sign) {
                    Ok(x) => x,
                    Err(_) => return false,
                },
            };
            let ok = expect == self.fundamentals[w];
            if !ok {
                report.failures.push(format!("generator w_{} disagrees with its folded label", w + 1));
            }
            ok
        });
        report.unit = ext[0] == IntMat::identity(self.dim);
        report.star = (0..m).all(|k| ext[k].transpose() == ext[ring.star(k)]);
        if !report.star {
            report.failures.push("adjoint condition fails".into());
        }
        report.homomorphism = self.check_homomorphism(ext, &mut report.failures);
        report.natural = ext.iter().all(IntMat::is_nonnegative);
        if let Some(g) = &self.grading {
            let orders: Vec<i64> = ring
                .level()
                .algebra()
                .center()
                .cyclic_orders()
                .iter()
                .map(|d| d.to_i64().unwrap())
                .collect();
            let ok = (0..m).all(|k| {
                let gk = ring.grading(k);
                (0..self.dim).all(|a| {
                    (0..self.dim).all(|b| {
                        ext[k].get(a, b) == 0
                            || (0..orders.len())
                                .all(|i| (g[b][i] + gk[i] - g[a][i]).rem_euclid(orders[i]) == 0)
                    })
                })
            });
            if !ok {
                report.failures.push("grading condition fails".into());
            }
            report.grading = Some(ok);
        }
        report
    }

    fn check_homomorphism(&self, ext: &[IntMat], failures: &mut Vec<String>) -> bool {
        let ring = &self.ring;
        let m = ring.rank();
        for k in 0..m {
            for j in k..m {
                let lhs = match ext[k].mul(&ext[j]) {
                    Ok(x) => x,
                    Err(e) => {
                        failures.push(format!("homomorphism: {e}"));
                        return false;
                    }
                };
                let mut rhs = IntMat::zeros(self.dim);
                for (s, &c) in ring.product(k, j).iter().enumerate() {
                    if rhs.add_scaled(c, &ext[s]).is_err() {
                        failures.push("homomorphism: overflow".into());
                        return false;
                    }
                }
                if lhs != rhs {
                    failures.push(format!(
                        "homomorphism fails at ({:?}, {:?})",
                        ring.basis()[k],
                        ring.basis()[j]
                    ));
                    return false;
                }
            }
        }
        true
    }

    /// `m_Π(e^H) = tr Π(q_H)` with the minimal idempotent
    /// `q_H = (χ̃_ρ(H)/|T_ℓ|) Σ_k conj(χ̃_k(H)) χ̃_k`.
    pub fn spectrum(&self) -> Result<SpectrumTable> {
        let ext = self.extended()?;
        let ring = &self.ring;
        let level = ring.level();
        let traces: Vec<f64> = ext.iter().map(|x| x.trace() as f64).collect();
        let order = level.torus_order() as f64;
        let tol = level.limits().tolerance;
        let mut multiplicities = Vec::with_capacity(level.spec().len());
        for p in 0..level.spec().len() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, t) in traces.iter().enumerate() {
                acc += ring.spec_char(k, p).conj() * *t;
            }
            let v = acc * ring.spec_char(0, p) / order;
            if libm::fabs(v.im) > tol {
                return Err(Error::RoundingFailure { what: "spectrum multiplicity", value: v.im, tolerance: tol });
            }
            multiplicities.push(round_checked(v.re, tol, "spectrum multiplicity")?);
        }
        Ok(SpectrumTable {
            indices: level.spec().to_vec(),
            points: level.spec_elements(),
            multiplicities,
        })
    }

    /// `m_Π(e^{H}) = m_Π(e^{H−H'})` for every `e^{H'} ∈ T_ℛ`.
    pub fn grading_shift_check(&self) -> Result<bool> {
        if self.grading.is_none() {
            return Err(Error::NotGraded);
        }
        let table = self.spectrum()?;
        let level = self.ring.level();
        let roots = level.algebra().simple_roots().to_vec();
        let t_r = level.subgroup_dual(&roots)?;
        for (p, &i) in table.indices.iter().enumerate() {
            for &h in &t_r {
                let shifted = level.add(i, level.neg(h));
                let m = level.spec_class(shifted).map_or(0, |c| table.multiplicities[c]);
                if m != table.multiplicities[p] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// `m_Π` at an arbitrary torus index (zero on mirrors).
pub fn multiplicity_at(table: &SpectrumTable, level: &crate::torus::LevelData, i: usize) -> i64 {
    level.spec_class(i).map_or(0, |c| table.multiplicities[c])
}
