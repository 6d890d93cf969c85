//! Quantum root spaces, quantum root systems and quantum Coxeter exponents.
//!
//! Functions on `𝒲_ℓ ⊗ ℂ^d` are stored flat with index `k·d + b`, where `k`
//! is the position of a canonical representative in
//! [`LevelData::weight_torus_elements`] and `b` a basis vector of the
//! representation. The difference operator of a fundamental weight `w` acts
//! by `(Δ_w f)(j) = Σ_s m_w(s) f(j − s)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, ToPrimitive, Zero};

use crate::gusrep::{dynkin_graph_type, multiplicity_at, IntMat, SpectrumTable, UsRep};
use crate::intlat::{echelon_contains, hnf, kernel_basis, IntMatrix};
use crate::lie::{Family, Weight};
use crate::phase::round_complex;
use crate::torus::{LevelData, TorusElement};
use crate::{Error, Result};

type Q = Ratio<BigInt>;

/// Index bookkeeping for `L²(𝒲_ℓ) ⊗ ℂ^d` together with the matrices
/// `S_x = Σ_θ ε(θ) Π(χ̃_{x+θ(ρ)})` for every `x ∈ 𝒲_ℓ`.
#[derive(Clone, Debug)]
pub struct RootSpace<'a> {
    rep: &'a UsRep,
    points: Vec<Weight>,
    index: BTreeMap<Weight, usize>,
    /// Diagonal-dominant Hermite basis of `R_ℓ` in `i64`.
    basis: Vec<Vec<i64>>,
    sums: Vec<IntMat>,
}

impl<'a> RootSpace<'a> {
    pub fn new(rep: &'a UsRep) -> Result<Self> {
        let level = rep.ring().level();
        let points = level.weight_torus_elements();
        let cap = level.limits().rootspace_cap;
        let size = (points.len() * rep.dim()) as u64;
        if size > cap {
            return Err(Error::CapExceeded { what: "root space dimension |W_l|·d", cap });
        }
        let index = points.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let basis = level.weight_torus().hnf_basis().to_i64_rows()?;
        let alg = level.algebra();
        let theta_rho: Vec<(Weight, i64)> =
            level.weyl().iter().map(|t| (t.apply(alg.rho()), t.sign)).collect();
        let d = rep.dim();
        let mut sums = Vec::with_capacity(points.len());
        for x in &points {
            let mut s = IntMat::zeros(d);
            for (tr, eps) in &theta_rho {
                let label: Weight = x.iter().zip(tr).map(|(a, b)| a + b).collect();
                if let Some((sign, m)) = rep.matrix_of_label(&label)? {
                    s.add_scaled(eps * sign, m)?;
                }
            }
            sums.push(s);
        }
        Ok(RootSpace { rep, points, index, basis, sums })
    }

    pub fn rep(&self) -> &UsRep {
        self.rep
    }

    pub fn level(&self) -> &LevelData {
        self.rep.ring().level()
    }

    /// Canonical representatives of `𝒲_ℓ`.
    pub fn points(&self) -> &[Weight] {
        &self.points
    }

    /// Total dimension `|𝒲_ℓ| · d` of the ambient space.
    pub fn ambient_dim(&self) -> usize {
        self.points.len() * self.rep.dim()
    }

    pub fn reduce(&self, x: &[i64]) -> usize {
        let mut x = x.to_vec();
        for (i, row) in self.basis.iter().enumerate() {
            let q = Integer::div_floor(&x[i], &row[i]);
            if q != 0 {
                for (xj, r) in x.iter_mut().zip(row).skip(i) {
                    *xj -= q * r;
                }
            }
        }
        self.index[&x]
    }

    pub fn position(&self, x: &[i64]) -> usize {
        self.reduce(x)
    }

    fn diff(&self, j: usize, k: usize) -> usize {
        let x: Weight = self.points[j].iter().zip(&self.points[k]).map(|(a, b)| a - b).collect();
        self.reduce(&x)
    }

    /// `|T_ℓ| · P(δ_j ⊗ v)`, an integer vector.
    pub fn project_delta(&self, j: usize, v: &[i64]) -> Vec<i64> {
        let d = self.rep.dim();
        let mut out = vec![0i64; self.ambient_dim()];
        for k in 0..self.points.len() {
            let y = self.sums[self.diff(j, k)].apply(v);
            out[k * d..(k + 1) * d].copy_from_slice(&y);
        }
        out
    }

    /// `⟨P(δ_k ⊗ v1), P(δ_j ⊗ v2)⟩ = (1/|T_ℓ|) Σ_θ ε(θ) ⟨v1, Π(χ̃_{j−k+θ(ρ)}) v2⟩`.
    pub fn root_inner(&self, k: usize, v1: &[i64], j: usize, v2: &[i64]) -> Ratio<i64> {
        let y = self.sums[self.diff(j, k)].apply(v2);
        let s: i64 = v1.iter().zip(&y).map(|(a, b)| a * b).sum();
        Ratio::new(s, self.points.len() as i64)
    }

    /// `ϑ_j(δ_k) = δ_{k−j}`, i.e. `(ϑ_j f)(m) = f(m + j)`.
    pub fn translate<T: Clone>(&self, j: usize, f: &[T]) -> Vec<T> {
        let d = self.rep.dim();
        let mut out = f.to_vec();
        for m in 0..self.points.len() {
            let x: Weight = self.points[m].iter().zip(&self.points[j]).map(|(a, b)| a + b).collect();
            let src = self.reduce(&x);
            out[m * d..(m + 1) * d].clone_from_slice(&f[src * d..(src + 1) * d]);
        }
        out
    }

    /// Grade class in `Z(g)` of each point of `𝒲_ℓ`.
    fn point_grades(&self) -> Vec<Vec<i64>> {
        let center = self.level().algebra().center();
        self.points.iter().map(|p| center.to_coords_i64(p)).collect()
    }

    /// Whether `(k, b)` lies in the neutral support: `ε(b) = −k` in `Z(g)`.
    pub fn neutral_mask(&self) -> Result<Vec<bool>> {
        let grading = self.rep.grading().ok_or(Error::NotGraded)?;
        let orders = center_orders(self.level());
        let pg = self.point_grades();
        let d = self.rep.dim();
        let mut mask = vec![false; self.ambient_dim()];
        for k in 0..self.points.len() {
            for b in 0..d {
                mask[k * d + b] = (0..orders.len()).all(|i| (pg[k][i] + grading[b][i]).rem_euclid(orders[i]) == 0);
            }
        }
        Ok(mask)
    }

    /// The quantum root system `S_{B,0}`: `√|T_ℓ| · P(δ_k ⊗ e_b)` for
    /// every `k` and every basis vector `e_b` of grade `−k`.
    pub fn quantum_root_system(&self) -> Result<Vec<QuantumRoot>> {
        let mask = self.neutral_mask()?;
        let d = self.rep.dim();
        let order = self.points.len() as i64;
        let mut out = Vec::new();
        for k in 0..self.points.len() {
            for b in 0..d {
                if mask[k * d + b] {
                    let mut e = vec![0i64; d];
                    e[b] = 1;
                    out.push(QuantumRoot { point: k, basis: b, coeffs: self.project_delta(k, &e), order });
                }
            }
        }
        Ok(out)
    }
}

fn center_orders(level: &LevelData) -> Vec<i64> {
    level.algebra().center().cyclic_orders().iter().map(|d| d.to_i64().unwrap()).collect()
}

/// A quantum root `coeffs / √|T_ℓ|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuantumRoot {
    pub point: usize,
    pub basis: usize,
    pub coeffs: Vec<i64>,
    pub order: i64,
}

impl QuantumRoot {
    pub fn inner(&self, other: &QuantumRoot) -> Ratio<i64> {
        let s: i64 = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a * b).sum();
        Ratio::new(s, self.order)
    }

    pub fn norm2(&self) -> Ratio<i64> {
        self.inner(self)
    }
}

/// Checks that `a_gens` spans a lattice containing `R_ℓ` and returns the
/// Hermite form of the span.
fn intermediate(level: &LevelData, a_gens: &[Weight]) -> Result<IntMatrix> {
    if a_gens.is_empty() {
        return Err(Error::NotIntermediate);
    }
    let (h, _) = hnf(&IntMatrix::from_rows(a_gens));
    let rl = level.rl_basis();
    for i in 0..rl.rows() {
        if !echelon_contains(&h, rl.row(i)) {
            return Err(Error::NotIntermediate);
        }
    }
    Ok(h)
}

/// `m_A(e^H) = Σ_{e^{H'} ∈ T_A} m_Π(e^{H+H'})` at torus index `h`.
pub fn multiplicity_ma(level: &LevelData, table: &SpectrumTable, a_gens: &[Weight], h: usize) -> Result<i64> {
    let t_a = level.subgroup_dual(a_gens)?;
    Ok(t_a.iter().map(|&x| multiplicity_at(table, level, level.add(h, x))).sum())
}

/// `m_{A,0} = m_A / n_z` for `R_ℓ ⊆ A ⊆ ℛ`.
pub fn multiplicity_ma0(level: &LevelData, table: &SpectrumTable, a_gens: &[Weight], h: usize) -> Result<i64> {
    let alg = level.algebra();
    let (r, _) = hnf(&alg.cartan_matrix());
    for g in a_gens {
        let big: Vec<BigInt> = g.iter().map(|&x| BigInt::from(x)).collect();
        if !echelon_contains(&r, &big) {
            return Err(Error::NotIntermediate);
        }
    }
    let m = multiplicity_ma(level, table, a_gens, h)?;
    let nz = alg.center_order() as i64;
    if m % nz != 0 {
        return Err(Error::NonIntegral(format!("m_A = {m} is not divisible by n_z = {nz}")));
    }
    Ok(m / nz)
}

/// `Φ(e^H, r) = n_c · ⟨r, H⟩ mod n_c` for `r` in the Weyl orbit of `r_+`.
pub fn coxeter_exponent(level: &LevelData, h: &TorusElement, r: &[i64]) -> Result<i64> {
    if !level.algebra().is_long(r) {
        return Err(Error::NonIntegral(format!("{r:?} is not in the orbit of the highest root")));
    }
    let p = h.pairing_num(r) as i128 * level.nc() as i128;
    let den = h.den as i128;
    if p % den != 0 {
        return Err(Error::NonIntegral(format!("n_c·<{r:?}, H> is not an integer")));
    }
    Ok(((p / den) as i64).rem_euclid(level.nc()))
}

/// One spectrum point of an [`ExponentTable`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentRow {
    pub point: TorusElement,
    pub m_pi: i64,
    pub m_phi: i64,
    pub m_phi0: Option<i64>,
    /// `Φ(e^H, r_+)`.
    pub exponent: i64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentTable {
    pub rows: Vec<ExponentRow>,
    /// For simply-laced algebras with a graded representation: whether
    /// `m_{Φ,0} = m_Π` at every point.
    pub ade_equality: Option<bool>,
}

/// `m_Φ = m_{R_a}` and, when graded, `m_{Φ,0} = m_{R_a}/n_z` over the spectrum.
pub fn exponent_multiplicities(rep: &UsRep) -> Result<ExponentTable> {
    let level = rep.ring().level();
    let table = rep.spectrum()?;
    let alg = level.algebra();
    let ra: Vec<Weight> = level.ra_basis().to_i64_rows()?;
    let t_ra = level.subgroup_dual(&ra)?;
    let nz = alg.center_order() as i64;
    let mut rows = Vec::with_capacity(table.indices.len());
    for (p, &i) in table.indices.iter().enumerate() {
        let m_phi: i64 = t_ra.iter().map(|&x| multiplicity_at(&table, level, level.add(i, x))).sum();
        let m_phi0 = match rep.grading() {
            Some(_) if m_phi % nz == 0 => Some(m_phi / nz),
            Some(_) => return Err(Error::NonIntegral(format!("m_Phi = {m_phi} not divisible by n_z"))),
            None => None,
        };
        rows.push(ExponentRow {
            point: table.points[p].clone(),
            m_pi: table.multiplicities[p],
            m_phi,
            m_phi0,
            exponent: coxeter_exponent(level, &table.points[p], alg.highest_root())?,
        });
    }
    let ade_equality = (alg.family().is_simply_laced() && rep.grading().is_some())
        .then(|| rows.iter().all(|r| r.m_phi0 == Some(r.m_pi)));
    Ok(ExponentTable { rows, ade_equality })
}

/// Exact kernel of the coupled difference operators, the brute-force
/// model of the quantum root space.
#[derive(Clone, Debug)]
pub struct RootSpaceData<'a> {
    pub space: RootSpace<'a>,
    /// Integer basis of `H_π`, one vector per entry.
    pub kernel: Vec<Vec<i64>>,
    /// Integer basis of `H_{π,0}` when the representation is graded.
    pub neutral: Option<Vec<Vec<i64>>>,
}

fn to_i64_vec(col: Vec<BigInt>) -> Result<Vec<i64>> {
    col.into_iter().map(|x| x.to_i64().ok_or(Error::Overflow("kernel basis"))).collect()
}

/// Builds the explicit kernel of `{Δ_w ⊗ I − I ⊗ Π_w}`.
pub fn build_root_space(rep: &UsRep) -> Result<RootSpaceData<'_>> {
    let space = RootSpace::new(rep)?;
    let level = space.level();
    let alg = level.algebra();
    let n = alg.rank();
    let d = rep.dim();
    let npts = space.points.len();
    let total = npts * d;
    let mut m = IntMatrix::zeros(n * total, total);
    for w in 0..n {
        let mut e = vec![0i64; n];
        e[w] = 1;
        let ws = alg.weight_system(&e, level.limits().weight_cap)?;
        let pw = &rep.fundamentals()[w];
        for j in 0..npts {
            for (s, &mult) in &ws.entries {
                let x: Weight = space.points[j].iter().zip(s).map(|(a, b)| a - b).collect();
                let k = space.reduce(&x);
                for b in 0..d {
                    let (r, c) = (w * total + j * d + b, k * d + b);
                    let v = m.get(r, c) + BigInt::from(mult);
                    m.set(r, c, v);
                }
            }
            for a in 0..d {
                for b in 0..d {
                    let (r, c) = (w * total + j * d + a, j * d + b);
                    let v = m.get(r, c) - BigInt::from(pw.get(a, b));
                    m.set(r, c, v);
                }
            }
        }
    }
    let kernel = columns(&kernel_basis(&m))?;
    let neutral = match rep.grading() {
        None => None,
        Some(_) => {
            let mask = space.neutral_mask()?;
            let cols: Vec<usize> = (0..total).filter(|&c| mask[c]).collect();
            let mut sub = IntMatrix::zeros(m.rows(), cols.len());
            for r in 0..m.rows() {
                for (ci, &c) in cols.iter().enumerate() {
                    if !m.get(r, c).is_zero() {
                        sub.set(r, ci, m.get(r, c).clone());
                    }
                }
            }
            let k = columns(&kernel_basis(&sub))?;
            Some(
                k.into_iter()
                    .map(|v| {
                        let mut full = vec![0i64; total];
                        for (ci, &c) in cols.iter().enumerate() {
                            full[c] = v[ci];
                        }
                        full
                    })
                    .collect(),
            )
        }
    };
    Ok(RootSpaceData { space, kernel, neutral })
}

fn columns(k: &IntMatrix) -> Result<Vec<Vec<i64>>> {
    (0..k.cols()).map(|c| to_i64_vec(k.column(c))).collect()
}

fn q(x: i64) -> Q {
    Ratio::from_integer(BigInt::from(x))
}

/// Exact inverse of a Gram matrix.
fn inverse(mut a: Vec<Vec<Q>>) -> Result<Vec<Vec<Q>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Q>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Q::one() } else { Q::zero() }).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero()).ok_or(Error::NonIntegral("singular Gram matrix".into()))?;
        a.swap(c, p);
        inv.swap(c, p);
        let pv = a[c][c].clone();
        for j in 0..n {
            a[c][j] = &a[c][j] / &pv;
            inv[c][j] = &inv[c][j] / &pv;
        }
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for j in 0..n {
                    let (x, y) = (&f * &a[c][j], &f * &inv[c][j]);
                    a[r][j] -= x;
                    inv[r][j] -= y;
                }
            }
        }
    }
    Ok(inv)
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(x, y)| *x as i128 * *y as i128).sum()
}

/// A subspace spanned by integer vectors with its exact inverse Gram matrix.
#[derive(Clone, Debug)]
pub struct ExactSubspace {
    pub basis: Vec<Vec<i64>>,
    gram_inv: Vec<Vec<Q>>,
}

impl ExactSubspace {
    pub fn new(basis: Vec<Vec<i64>>) -> Result<Self> {
        let g = basis
            .iter()
            .map(|x| basis.iter().map(|y| Ratio::from_integer(BigInt::from(dot(x, y)))).collect())
            .collect();
        Ok(ExactSubspace { gram_inv: inverse(g)?, basis })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// `⟨P x, P y⟩ = xᵀ K G⁻¹ Kᵀ y` for the orthogonal projector `P`.
    pub fn projected_inner(&self, x: &[i64], y: &[i64]) -> Q {
        let kx: Vec<BigInt> = self.basis.iter().map(|b| BigInt::from(dot(b, x))).collect();
        let ky: Vec<BigInt> = self.basis.iter().map(|b| BigInt::from(dot(b, y))).collect();
        let mut acc = Q::zero();
        for i in 0..kx.len() {
            if kx[i].is_zero() {
                continue;
            }
            for j in 0..ky.len() {
                if !ky[j].is_zero() {
                    acc += &self.gram_inv[i][j] * Ratio::from_integer(&kx[i] * &ky[j]);
                }
            }
        }
        acc
    }

    /// Orthogonal projection of `x` onto the subspace, exactly.
    pub fn project(&self, x: &[i64]) -> Vec<Q> {
        let kx: Vec<Q> = self.basis.iter().map(|b| q(dot(b, x) as i64)).collect();
        let coeffs: Vec<Q> = (0..self.dim())
            .map(|i| (0..self.dim()).fold(Q::zero(), |acc, j| acc + &self.gram_inv[i][j] * &kx[j]))
            .collect();
        let len = x.len();
        (0..len)
            .map(|r| coeffs.iter().zip(&self.basis).fold(Q::zero(), |acc, (c, b)| acc + c * q(b[r])))
            .collect()
    }

    /// Trace of a linear map `f ↦ g` that preserves the subspace, given its
    /// action on basis vectors.
    pub fn trace_of(&self, images: &[Vec<i64>]) -> Result<i64> {
        let mut acc = Q::zero();
        for i in 0..self.dim() {
            for j in 0..self.dim() {
                // (G⁻¹ Kᵀ A K)_{ii} = Σ_j G⁻¹_{ij} ⟨k_j, A k_i⟩
                let x = dot(&self.basis[j], &images[i]);
                if x != 0 {
                    acc += &self.gram_inv[i][j] * Ratio::from_integer(BigInt::from(x));
                }
            }
        }
        if !acc.is_integer() {
            return Err(Error::NonIntegral("trace on the root space".into()));
        }
        acc.to_integer().to_i64().ok_or(Error::Overflow("trace"))
    }
}

impl<'a> RootSpaceData<'a> {
    pub fn dim(&self) -> usize {
        self.kernel.len()
    }

    pub fn neutral_dim(&self) -> Option<usize> {
        self.neutral.as_ref().map(Vec::len)
    }

    pub fn subspace(&self, neutral: bool) -> Result<ExactSubspace> {
        let basis = if neutral { self.neutral.clone().ok_or(Error::NotGraded)? } else { self.kernel.clone() };
        ExactSubspace::new(basis)
    }

    /// Elements of `A/R_ℓ` as positions in `𝒲_ℓ`.
    pub fn subgroup_points(&self, a_gens: &[Weight]) -> Result<Vec<usize>> {
        let level = self.space.level();
        let h = intermediate(level, a_gens)?;
        Ok((0..self.space.points.len())
            .filter(|&i| {
                let big: Vec<BigInt> = self.space.points[i].iter().map(|&x| BigInt::from(x)).collect();
                echelon_contains(&h, &big)
            })
            .collect())
    }

    /// Dimension of `{f : ϑ_a f = e^{−2πi⟨a,H⟩} f for all a ∈ A}` inside
    /// `H_π` (or `H_{π,0}`), for each torus index `h` requested.
    pub fn eigenspace_dims(&self, a_gens: &[Weight], neutral: bool, hs: &[usize]) -> Result<Vec<i64>> {
        let level = self.space.level();
        let sub = self.subspace(neutral)?;
        let elems = self.subgroup_points(a_gens)?;
        let traces: Vec<(usize, i64)> = elems
            .iter()
            .map(|&a| {
                let images: Vec<Vec<i64>> = sub.basis.iter().map(|f| self.space.translate(a, f)).collect();
                Ok((a, sub.trace_of(&images)?))
            })
            .collect::<Result<_>>()?;
        let count = elems.len() as f64;
        hs.iter()
            .map(|&h| {
                let t = &level.torus()[h];
                let mut acc = Complex64::new(0.0, 0.0);
                for &(a, tr) in &traces {
                    acc += level.roots().get(t.pairing_num(&self.space.points[a])) * tr as f64;
                }
                round_complex(acc / count, level.limits().tolerance, "root space eigenspace dimension")
            })
            .collect()
    }
}

/// The Auslander–Reiten quiver of an ADE diagram viewed as an `sl_2`
/// representation, and the additivity check on the neutral root space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArQuiver {
    pub family: Family,
    pub rank: usize,
    /// Vertices `(i, x)` with `i ∈ ℤ_{2n_c}` and `i + ε(x) = 0`.
    pub vertices: Vec<(i64, usize)>,
    /// Every basis element of `H_{π,0}` is additive.
    pub additive: bool,
    pub root_count: usize,
    pub roots_distinct: bool,
}

pub fn ar_quiver(rep: &UsRep) -> Result<ArQuiver> {
    let level = rep.ring().level();
    let alg = level.algebra();
    if alg.family() != Family::A || alg.rank() != 1 {
        return Err(Error::NotAde("AR quiver requires an sl_2 representation".into()));
    }
    let adj = rep.fundamentals()[0].to_rows();
    let (family, rank) = dynkin_graph_type(&adj)?;
    let grading = rep.grading().ok_or(Error::NotGraded)?;
    let data = build_root_space(rep)?;
    let space = &data.space;
    let d = rep.dim();
    let period = 2 * level.nc();
    let vertices: Vec<(i64, usize)> = (0..period)
        .flat_map(|i| (0..d).filter(move |&x| (i + grading[x][0]).rem_euclid(2) == 0).map(move |x| (i, x)))
        .collect();
    let at = |f: &[i64], i: i64, x: usize| f[space.reduce(&[i]) * d + x];
    let additive = data.neutral.as_ref().unwrap().iter().all(|f| {
        (0..period).all(|i| {
            (0..d).all(|x| {
                let rhs: i64 = (0..d).map(|y| adj[x][y] * at(f, i + 1, y)).sum();
                at(f, i, x) + at(f, i + 2, x) == rhs
            })
        })
    });
    let roots = space.quantum_root_system()?;
    let mut keys: Vec<&Vec<i64>> = roots.iter().map(|r| &r.coeffs).collect();
    keys.sort();
    keys.dedup();
    Ok(ArQuiver {
        family,
        rank,
        vertices,
        additive,
        root_count: roots.len(),
        roots_distinct: keys.len() == roots.len(),
    })
}
