//! Finite tori attached to a level.
//!
//! A torus element `e^{2πH}` is stored by its coordinates in the basis of
//! simple coroots, `H = Σ h_j H_{α_j}` with `h_j = num_j / den` reduced into
//! `[0, 1)`. Every element of `T_ℓ` has the same denominator, the exponent of
//! the group. The pairing with a weight `k` in Dynkin labels is `Σ k_j h_j`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Signed, ToPrimitive};

use crate::intlat::{echelon_contains, hnf, lattice_quotient, snf, FiniteAbelianGroup, IntMatrix};
use crate::lie::{LieAlgebra, Weight, WeylElement};
use crate::phase::RootTable;
use crate::{Error, Limits, Result};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusElement {
    pub num: Vec<i64>,
    pub den: i64,
}

impl TorusElement {
    pub fn coords(&self) -> Vec<Ratio<i64>> {
        self.num.iter().map(|&x| Ratio::new(x, self.den)).collect()
    }

    /// `Σ k_j h_j mod 1`.
    pub fn pairing(&self, k: &[i64]) -> Ratio<i64> {
        Ratio::new(self.pairing_num(k), self.den)
    }

    /// Numerator of the pairing, reduced into `[0, den)`.
    #[inline]
    pub fn pairing_num(&self, k: &[i64]) -> i64 {
        let mut s: i64 = 0;
        for (a, b) in k.iter().zip(&self.num) {
            s = (s + (a.rem_euclid(self.den)) * b) % self.den;
        }
        s
    }
}

/// Structures attached to an algebra at a fixed level.
#[derive(Clone, Debug)]
pub struct LevelData {
    algebra: LieAlgebra,
    level: u64,
    nc: i64,
    limits: Limits,
    weyl: Vec<WeylElement>,
    ra_basis: IntMatrix,
    rl_basis: IntMatrix,
    weight_torus: FiniteAbelianGroup,
    den: i64,
    torus: Vec<TorusElement>,
    index: BTreeMap<Vec<i64>, usize>,
    mirror: Vec<bool>,
    t_l0: Vec<usize>,
    spec: Vec<usize>,
    spec_of: Vec<Option<usize>>,
    alcove: Vec<Weight>,
    alcove_index: BTreeMap<Weight, usize>,
    roots: RootTable,
}

fn to_i64(x: &BigInt, what: &'static str) -> Result<i64> {
    x.to_i64().ok_or(Error::Overflow(what))
}

impl LevelData {
    pub fn new(algebra: &LieAlgebra, level: u64) -> Result<Self> {
        Self::with_limits(algebra, level, &Limits::default())
    }

    pub fn with_limits(algebra: &LieAlgebra, level: u64, limits: &Limits) -> Result<Self> {
        limits.validate()?;
        let n = algebra.rank();
        let nc = algebra.dual_coxeter_number() + level as i64;

        let (h, _) = hnf(&IntMatrix::from_rows(&algebra.long_roots()));
        let ra_basis = IntMatrix::from_big_rows((0..n).map(|i| h.row(i).to_vec()).collect(), n);
        let rl_basis = IntMatrix::from_big_rows(
            (0..n).map(|i| ra_basis.row(i).iter().map(|x| x * nc).collect()).collect(),
            n,
        );
        let order = rl_basis.det()?.abs();
        let order_u64 = order.to_u64().unwrap_or(u64::MAX);
        if order_u64 > limits.torus_cap {
            return Err(Error::TorusTooLarge { order: order_u64, cap: limits.torus_cap });
        }
        let weight_torus = lattice_quotient(n, &rl_basis)?;
        let weyl = algebra.weyl_group(limits.weyl_cap)?;

        // T_ℓ = {h : R_ℓ h ∈ ℤⁿ}. With s = u·M·v, h = v·(c/d) for c in the box.
        let (s, _, v) = snf(&rl_basis);
        let d: Vec<i64> = (0..n).map(|i| to_i64(s.get(i, i), "invariant factor")).collect::<Result<_>>()?;
        let den = *d.iter().max().unwrap_or(&1);
        let v: Vec<Vec<i64>> = v.to_i64_rows()?;
        let mut torus = Vec::with_capacity(order_u64 as usize);
        for idx in 0..order_u64 {
            let mut rem = idx;
            let mut y = vec![0i64; n];
            for i in (0..n).rev() {
                let di = d[i] as u64;
                y[i] = (rem % di) as i64 * (den / d[i]);
                rem /= di;
            }
            let num: Vec<i64> = (0..n)
                .map(|r| {
                    let mut acc: i128 = 0;
                    for (j, yj) in y.iter().enumerate() {
                        acc += v[r][j] as i128 * *yj as i128;
                    }
                    acc.rem_euclid(den as i128) as i64
                })
                .collect();
            torus.push(TorusElement { num, den });
        }
        torus.sort();
        let index: BTreeMap<Vec<i64>, usize> =
            torus.iter().enumerate().map(|(i, t)| (t.num.clone(), i)).collect();
        if index.len() != torus.len() || torus.len() as u64 != order_u64 {
            return Err(Error::NonIntegral("torus enumeration".into()));
        }

        let mirror: Vec<bool> = torus
            .iter()
            .map(|t| algebra.positive_roots().iter().any(|r| t.pairing_num(r) == 0))
            .collect();
        let t_l0: Vec<usize> = (0..torus.len()).filter(|&i| !mirror[i]).collect();

        let mut alcove = Vec::new();
        enumerate_alcove(algebra, nc, &mut vec![0; n], 0, 0, &mut alcove);
        alcove.sort_by_key(|k| (algebra.level_pairing(k), k.clone()));
        let alcove_index = alcove.iter().enumerate().map(|(i, k)| (k.clone(), i)).collect();

        let mut data = LevelData {
            algebra: algebra.clone(),
            level,
            nc,
            limits: limits.clone(),
            weyl,
            ra_basis,
            rl_basis,
            weight_torus,
            den,
            index,
            mirror,
            t_l0,
            spec: Vec::new(),
            spec_of: vec![None; torus.len()],
            torus,
            alcove,
            alcove_index,
            roots: RootTable::new(den),
        };
        data.build_spec()?;
        Ok(data)
    }

    fn build_spec(&mut self) -> Result<()> {
        let worder = self.weyl.len();
        for &i in &self.t_l0 {
            if self.spec_of[i].is_some() {
                continue;
            }
            let id = self.spec.len();
            let orbit = self.orbit(i);
            if orbit.len() != worder {
                return Err(Error::NonIntegral("Weyl action on T_{l,0} is not free".into()));
            }
            for j in orbit {
                self.spec_of[j] = Some(id);
            }
            self.spec.push(i);
        }
        if self.spec.len() != self.alcove.len() {
            return Err(Error::NonIntegral("|Spec| differs from |C_l|".into()));
        }
        Ok(())
    }

    /// Indices of the Weyl orbit of torus element `i`.
    pub fn orbit(&self, i: usize) -> Vec<usize> {
        let mut seen = BTreeMap::new();
        seen.insert(i, ());
        let mut queue = VecDeque::from([i]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for r in 0..self.algebra.rank() {
                let y = self.reflect_index(x, r);
                if seen.insert(y, ()).is_none() {
                    queue.push_back(y);
                }
            }
            out.push(x);
        }
        out
    }

    fn reflect_index(&self, i: usize, r: usize) -> usize {
        let h = &self.torus[i].num;
        let a = &self.algebra.cartan()[r];
        let mut num = h.clone();
        let s: i64 = a.iter().zip(h).map(|(x, y)| x * y).sum();
        num[r] = (h[r] - s).rem_euclid(self.den);
        self.index[&num]
    }

    pub fn algebra(&self) -> &LieAlgebra {
        &self.algebra
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    /// Quantum Coxeter number `n_c = c_g^∨ + ℓ`.
    pub fn nc(&self) -> i64 {
        self.nc
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn weyl(&self) -> &[WeylElement] {
        &self.weyl
    }

    /// Hermite basis of `R_a`, the lattice spanned by the long roots.
    pub fn ra_basis(&self) -> &IntMatrix {
        &self.ra_basis
    }

    /// Hermite basis of `R_ℓ = n_c · R_a`.
    pub fn rl_basis(&self) -> &IntMatrix {
        &self.rl_basis
    }

    /// The weight torus `𝒲_ℓ = 𝒲 / R_ℓ`.
    pub fn weight_torus(&self) -> &FiniteAbelianGroup {
        &self.weight_torus
    }

    /// Common denominator of all coordinates in `T_ℓ`.
    pub fn den(&self) -> i64 {
        self.den
    }

    pub fn roots(&self) -> &RootTable {
        &self.roots
    }

    /// Elements of `T_ℓ` in lexicographic order.
    pub fn torus(&self) -> &[TorusElement] {
        &self.torus
    }

    pub fn torus_order(&self) -> usize {
        self.torus.len()
    }

    pub fn index_of(&self, num: &[i64]) -> Option<usize> {
        self.index.get(num).copied()
    }

    pub fn in_mirror(&self, i: usize) -> bool {
        self.mirror[i]
    }

    /// Indices of `T_{ℓ,0}`, the elements off every mirror.
    pub fn t_l0(&self) -> &[usize] {
        &self.t_l0
    }

    /// Torus indices of the lexicographically minimal orbit representatives.
    pub fn spec(&self) -> &[usize] {
        &self.spec
    }

    pub fn spec_elements(&self) -> Vec<TorusElement> {
        self.spec.iter().map(|&i| self.torus[i].clone()).collect()
    }

    /// Position in [`Self::spec`] of the orbit through torus element `i`.
    pub fn spec_class(&self, i: usize) -> Option<usize> {
        self.spec_of[i]
    }

    /// The alcove `C_ℓ` (ρ-shifted labels), ordered by level then lexicographically.
    pub fn alcove(&self) -> &[Weight] {
        &self.alcove
    }

    pub fn alcove_position(&self, k: &[i64]) -> Option<usize> {
        self.alcove_index.get(k).copied()
    }

    /// `e^{H}` for a torus element given by coordinates, as an index.
    pub fn locate(&self, h: &TorusElement) -> Option<usize> {
        if h.den == self.den {
            return self.index_of(&h.num.iter().map(|x| x.rem_euclid(self.den)).collect::<Vec<_>>());
        }
        if self.den % h.den != 0 {
            return None;
        }
        let f = self.den / h.den;
        self.index_of(&h.num.iter().map(|x| (x * f).rem_euclid(self.den)).collect::<Vec<_>>())
    }

    /// `θ(H)`, acting contragrediently so that `⟨k, θH⟩ = ⟨θ⁻¹k, H⟩`.
    pub fn weyl_act(&self, theta: &WeylElement, h: &TorusElement) -> TorusElement {
        let n = self.algebra.rank();
        let num = (0..n)
            .map(|j| {
                let mut s: i64 = 0;
                for i in 0..n {
                    s += theta.inverse[i * n + j] * h.num[i];
                }
                s.rem_euclid(h.den)
            })
            .collect();
        TorusElement { num, den: h.den }
    }

    /// `H + H'` as torus indices.
    pub fn add(&self, a: usize, b: usize) -> usize {
        let num: Vec<i64> = self.torus[a]
            .num
            .iter()
            .zip(&self.torus[b].num)
            .map(|(x, y)| (x + y).rem_euclid(self.den))
            .collect();
        self.index[&num]
    }

    pub fn neg(&self, a: usize) -> usize {
        let num: Vec<i64> = self.torus[a].num.iter().map(|x| (-x).rem_euclid(self.den)).collect();
        self.index[&num]
    }

    /// Lexicographically smallest element of the Weyl orbit of `h`.
    pub fn spec_canonical(&self, h: &TorusElement) -> Result<TorusElement> {
        let i = self.locate(h).ok_or(Error::NotIntermediate)?;
        match self.spec_of[i] {
            Some(c) => Ok(self.torus[self.spec[c]].clone()),
            None => Err(Error::MirrorElement),
        }
    }

    /// `T_A = {H ∈ T_ℓ : ⟨a, H⟩ ∈ ℤ for all a ∈ A}`, as sorted torus indices.
    pub fn subgroup_dual(&self, a_gens: &[Weight]) -> Result<Vec<usize>> {
        let n = self.algebra.rank();
        if a_gens.iter().any(|g| g.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: 0 });
        }
        if a_gens.is_empty() {
            return Err(Error::NotIntermediate);
        }
        let (h, _) = hnf(&IntMatrix::from_rows(a_gens));
        for i in 0..n {
            if !echelon_contains(&h, self.rl_basis.row(i)) {
                return Err(Error::NotIntermediate);
            }
        }
        Ok((0..self.torus.len())
            .filter(|&i| a_gens.iter().all(|g| self.torus[i].pairing_num(g) == 0))
            .collect())
    }

    /// Canonical representatives of `𝒲_ℓ` as `i64` label vectors.
    pub fn weight_torus_elements(&self) -> Vec<Weight> {
        self.weight_torus
            .enumerate()
            .iter()
            .map(|x| x.iter().map(|v| v.to_i64().expect("small")).collect())
            .collect()
    }
}

fn enumerate_alcove(
    algebra: &LieAlgebra,
    nc: i64,
    cur: &mut Weight,
    pos: usize,
    used: i64,
    out: &mut Vec<Weight>,
) {
    let n = algebra.rank();
    if pos == n {
        out.push(cur.clone());
        return;
    }
    let a = algebra.comarks()[pos];
    let rest: i64 = algebra.comarks()[pos + 1..].iter().sum();
    let mut k = 1;
    while used + a * k + rest < nc {
        cur[pos] = k;
        enumerate_alcove(algebra, nc, cur, pos + 1, used + a * k, out);
        k += 1;
    }
    cur[pos] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Family;

    fn level(f: Family, n: usize, l: u64) -> LevelData {
        LevelData::new(&LieAlgebra::new(f, n).unwrap(), l).unwrap()
    }

    #[test]
    fn sl2_level_two() {
        let d = level(Family::A, 1, 2);
        assert_eq!(d.torus_order(), 8);
        assert_eq!(d.den(), 8);
        assert_eq!(d.alcove(), &[vec![1], vec![2], vec![3]]);
        let nums: Vec<i64> = d.spec_elements().iter().map(|t| t.num[0]).collect();
        assert_eq!(nums, vec![1, 2, 3]);
        assert!(d.in_mirror(0) && d.in_mirror(4) && !d.in_mirror(1));
        assert_eq!(d.torus()[1].pairing(&[1]), Ratio::new(1, 8));
    }

    #[test]
    fn sl2_level_zero() {
        let d = level(Family::A, 1, 0);
        assert_eq!(d.alcove(), &[vec![1]]);
    }

    #[test]
    fn sl3_level_one() {
        let d = level(Family::A, 2, 1);
        assert_eq!(d.torus_order(), 48);
        assert_eq!(d.alcove().len(), 3);
        assert_eq!(d.t_l0().len(), 6 * 3);
    }

    #[test]
    fn spec_canonical_lex_min() {
        let d = level(Family::A, 1, 2);
        let t7 = TorusElement { num: vec![7], den: 8 };
        assert_eq!(d.spec_canonical(&t7).unwrap().num, vec![1]);
        let t5 = TorusElement { num: vec![5], den: 8 };
        assert_eq!(d.spec_canonical(&t5).unwrap().num, vec![3]);
        let t0 = TorusElement { num: vec![0], den: 8 };
        assert_eq!(d.spec_canonical(&t0).unwrap_err(), Error::MirrorElement);
    }

    #[test]
    fn subgroup_duals() {
        let d = level(Family::A, 1, 2);
        assert_eq!(d.subgroup_dual(&[vec![1]]).unwrap(), vec![0]);
        assert_eq!(d.subgroup_dual(&[vec![2]]).unwrap(), vec![0, 4]);
        assert_eq!(d.subgroup_dual(&[vec![8]]).unwrap().len(), 8);
        assert_eq!(d.subgroup_dual(&[vec![16]]).unwrap_err(), Error::NotIntermediate);
    }

    #[test]
    fn weyl_action_sl2() {
        let d = level(Family::A, 1, 2);
        let s = &d.weyl()[1];
        let t = TorusElement { num: vec![3], den: 8 };
        assert_eq!(d.weyl_act(s, &t).num, vec![5]);
    }

    #[test]
    fn torus_too_large() {
        let alg = LieAlgebra::new(Family::A, 2).unwrap();
        let limits = Limits { torus_cap: 10, ..Limits::default() };
        assert!(matches!(
            LevelData::with_limits(&alg, 1, &limits).unwrap_err(),
            Error::TorusTooLarge { order: 48, cap: 10 }
        ));
    }
}
