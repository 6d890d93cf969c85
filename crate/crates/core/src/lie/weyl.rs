use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use super::{LieAlgebra, Weight};
use crate::{Error, Result};

/// An element of the Weyl group, `θ = s_{word[0]} ∘ s_{word[1]} ∘ …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeylElement {
    pub word: Vec<usize>,
    pub sign: i64,
    /// `θ` on Dynkin labels, row-major: `θ(k)_i = Σ_j action[i·n + j] k_j`.
    pub action: Vec<i64>,
    /// `θ⁻¹` on Dynkin labels, same layout.
    pub inverse: Vec<i64>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut id = vec![0; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        WeylElement { word: Vec::new(), sign: 1, action: id.clone(), inverse: id }
    }

    pub fn apply(&self, k: &[i64]) -> Weight {
        mat_vec(&self.action, k)
    }

    pub fn apply_inverse(&self, k: &[i64]) -> Weight {
        mat_vec(&self.inverse, k)
    }
}

fn mat_vec(m: &[i64], k: &[i64]) -> Weight {
    let n = k.len();
    (0..n).map(|i| (0..n).map(|j| m[i * n + j] * k[j]).sum()).collect()
}

fn mat_mul(a: &[i64], b: &[i64], n: usize) -> Vec<i64> {
    let mut out = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x != 0 {
                for j in 0..n {
                    out[i * n + j] += x * b[k * n + j];
                }
            }
        }
    }
    out
}

/// Outcome of folding a weight into the dominant chamber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Fold {
    pub dominant: Weight,
    pub sign: i64,
    pub on_wall: bool,
    /// Reflections applied in order: `dominant = s_{word[last]} ∘ … ∘ s_{word[0]}(k)`.
    pub word: Vec<usize>,
}

/// Folds `k` into the dominant chamber by simple reflections.
pub fn dominant_fold(algebra: &LieAlgebra, k: &[i64]) -> Fold {
    let mut x = k.to_vec();
    let mut sign = 1;
    let mut word = Vec::new();
    while let Some(i) = x.iter().position(|&v| v < 0) {
        algebra.reflect(&mut x, i);
        sign = -sign;
        word.push(i);
    }
    let on_wall = x.contains(&0);
    Fold { dominant: x, sign, on_wall, word }
}

impl LieAlgebra {
    fn reflection_matrix(&self, i: usize) -> Vec<i64> {
        // s_i(k) = k − k_i · row_i(A): entry (m, j) = δ_mj − A[i][m] δ_ji.
        let n = self.rank;
        let mut s = vec![0; n * n];
        for m in 0..n {
            s[m * n + m] = 1;
            s[m * n + i] -= self.cartan[i][m];
        }
        s
    }

    /// Full enumeration of the Weyl group by breadth-first search.
    pub fn weyl_group(&self, cap: u64) -> Result<Vec<WeylElement>> {
        let order = self.weyl_order();
        if order > cap {
            return Err(Error::GroupTooLarge { order, cap });
        }
        let n = self.rank;
        let gens: Vec<Vec<i64>> = (0..n).map(|i| self.reflection_matrix(i)).collect();
        let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
        let mut out = Vec::with_capacity(order as usize);
        let id = WeylElement::identity(n);
        seen.insert(self.rho.clone(), ());
        let mut queue = VecDeque::from([id]);
        while let Some(t) = queue.pop_front() {
            for (i, g) in gens.iter().enumerate() {
                let action = mat_mul(g, &t.action, n);
                let key = mat_vec(&action, &self.rho);
                if seen.insert(key, ()).is_none() {
                    let mut word = Vec::with_capacity(t.word.len() + 1);
                    word.push(i);
                    word.extend_from_slice(&t.word);
                    let inverse = mat_mul(&t.inverse, g, n);
                    queue.push_back(WeylElement { word, sign: -t.sign, action, inverse });
                }
            }
            out.push(t);
        }
        debug_assert_eq!(out.len() as u64, order);
        Ok(out)
    }

    /// The Weyl orbit of `k`, by breadth-first search over simple reflections.
    pub fn orbit(&self, k: &[i64], cap: u64) -> Result<Vec<Weight>> {
        let mut seen: BTreeMap<Weight, ()> = BTreeMap::new();
        seen.insert(k.to_vec(), ());
        let mut queue = VecDeque::from([k.to_vec()]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for i in 0..self.rank {
                if x[i] == 0 {
                    continue;
                }
                let mut y = x.clone();
                self.reflect(&mut y, i);
                if seen.insert(y.clone(), ()).is_none() {
                    if seen.len() as u64 > cap {
                        return Err(Error::CapExceeded { what: "Weyl orbit", cap });
                    }
                    queue.push_back(y);
                }
            }
            out.push(x);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Family;

    #[test]
    fn small_groups() {
        let a1 = LieAlgebra::new(Family::A, 1).unwrap();
        let w = a1.weyl_group(100).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w[1].sign, -1);
        let a2 = LieAlgebra::new(Family::A, 2).unwrap();
        let w = a2.weyl_group(100).unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w.iter().filter(|t| t.sign == -1).count(), 3);
        let b2 = LieAlgebra::new(Family::B, 2).unwrap();
        assert_eq!(b2.weyl_group(100).unwrap().len(), 8);
        let g2 = LieAlgebra::new(Family::G, 2).unwrap();
        assert_eq!(g2.weyl_group(100).unwrap().len(), 12);
    }

    #[test]
    fn cap_is_enforced() {
        let e7 = LieAlgebra::new(Family::E, 7).unwrap();
        assert_eq!(
            e7.weyl_group(2_000_000).unwrap_err(),
            Error::GroupTooLarge { order: 2_903_040, cap: 2_000_000 }
        );
    }

    #[test]
    fn folds() {
        let a1 = LieAlgebra::new(Family::A, 1).unwrap();
        let f = dominant_fold(&a1, &[-3]);
        assert_eq!((f.dominant, f.sign, f.on_wall), (vec![3], -1, false));
        let a2 = LieAlgebra::new(Family::A, 2).unwrap();
        let f = dominant_fold(&a2, &[-1, 2]);
        assert_eq!((f.dominant, f.sign, f.on_wall), (vec![1, 1], -1, false));
        let f = dominant_fold(&a2, &[2, 3]);
        assert_eq!((f.dominant, f.sign, f.on_wall), (vec![2, 3], 1, false));
    }

    #[test]
    fn words_reproduce_actions() {
        let b3 = LieAlgebra::new(Family::B, 3).unwrap();
        let k = vec![3, -1, 2];
        for t in b3.weyl_group(1000).unwrap() {
            let mut x = k.clone();
            for &i in t.word.iter().rev() {
                b3.reflect(&mut x, i);
            }
            assert_eq!(x, t.apply(&k));
            assert_eq!(t.apply_inverse(&x), k);
            assert_eq!(t.sign, if t.word.len() % 2 == 0 { 1 } else { -1 });
        }
    }
}
