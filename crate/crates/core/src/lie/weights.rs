use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{dominant_fold, LieAlgebra, Weight};
use crate::{Error, Result};

/// Weights of an irreducible module with their multiplicities.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightSystem {
    pub highest: Weight,
    /// Dominant weights and multiplicities, in order of increasing depth.
    pub dominant: Vec<(Weight, u64)>,
    /// Every weight with its multiplicity.
    pub entries: BTreeMap<Weight, u64>,
}

impl WeightSystem {
    pub fn dimension(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn multiplicity(&self, mu: &[i64]) -> u64 {
        self.entries.get(mu).copied().unwrap_or(0)
    }
}

/// Weyl dimension formula `Π_{α>0} (λ+ρ, α) / (ρ, α)`.
pub fn weyl_dimension(algebra: &LieAlgebra, lambda: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    // (μ, α) for α = Σ c_k α_k is Σ c_k d_k μ_k; scale d to integers.
    let dl = algebra.symmetrizer().iter().fold(1i64, |a, d| a.lcm(d.denom()));
    let d: Vec<i64> = algebra.symmetrizer().iter().map(|x| (x * dl).to_integer()).collect();
    for c in algebra.positive_root_coords() {
        let mut a = 0i64;
        let mut b = 0i64;
        for k in 0..algebra.rank() {
            a += c[k] * d[k] * (lambda[k] + 1);
            b += c[k] * d[k];
        }
        num *= a;
        den *= b;
    }
    num / den
}

impl LieAlgebra {
    /// Weight diagram of the irreducible module with highest weight `lambda`,
    /// by the Freudenthal recursion on dominant weights.
    pub fn weight_system(&self, lambda: &[i64], cap: u64) -> Result<WeightSystem> {
        self.check_len(lambda)?;
        if lambda.iter().any(|&x| x < 0) {
            return Err(Error::NotDominant);
        }
        let dim = weyl_dimension(self, lambda);
        if dim > BigInt::from(cap) {
            return Err(Error::CapExceeded { what: "weight diagram", cap });
        }
        let n = self.rank;
        let (form, _) = self.integer_form();
        let ip = |a: &[i64], b: &[i64]| -> i64 {
            let mut s = 0;
            for i in 0..n {
                if a[i] != 0 {
                    for j in 0..n {
                        s += a[i] * form[i][j] * b[j];
                    }
                }
            }
            s
        };

        // Dominant weights below λ, with their depth.
        let mut depth: BTreeMap<Weight, i64> = BTreeMap::new();
        depth.insert(lambda.to_vec(), 0);
        let mut queue = VecDeque::from([lambda.to_vec()]);
        while let Some(mu) = queue.pop_front() {
            let dmu = depth[&mu];
            for (r, c) in self.positive_roots.iter().zip(&self.positive_root_coords) {
                let nu: Weight = mu.iter().zip(r).map(|(a, b)| a - b).collect();
                if nu.iter().all(|&x| x >= 0) && !depth.contains_key(&nu) {
                    depth.insert(nu.clone(), dmu + c.iter().sum::<i64>());
                    queue.push_back(nu);
                }
            }
        }
        let mut dominant: Vec<(Weight, i64)> = depth.into_iter().collect();
        dominant.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.0.cmp(&b.0)));

        let lr: Weight = lambda.iter().map(|x| x + 1).collect();
        let norm_lr = ip(&lr, &lr);
        let mut mult: BTreeMap<Weight, u64> = BTreeMap::new();
        let mut out_dom = Vec::with_capacity(dominant.len());
        for (mu, _) in &dominant {
            let m = if mu.as_slice() == lambda {
                1
            } else {
                let mr: Weight = mu.iter().map(|x| x + 1).collect();
                let denom = norm_lr - ip(&mr, &mr);
                let mut acc: i64 = 0;
                for r in &self.positive_roots {
                    let mut x: Weight = mu.iter().zip(r).map(|(a, b)| a + b).collect();
                    loop {
                        let f = dominant_fold(self, &x);
                        let Some(&mx) = mult.get(&f.dominant) else { break };
                        acc += mx as i64 * ip(&x, r);
                        for (xi, ri) in x.iter_mut().zip(r) {
                            *xi += ri;
                        }
                    }
                }
                let num = 2 * acc;
                if denom <= 0 || num % denom != 0 {
                    return Err(Error::NonIntegral("Freudenthal multiplicity".into()));
                }
                (num / denom) as u64
            };
            if m > 0 {
                mult.insert(mu.clone(), m);
                out_dom.push((mu.clone(), m));
            }
        }

        let mut entries = BTreeMap::new();
        for (mu, m) in &out_dom {
            for nu in self.orbit(mu, cap)? {
                entries.insert(nu, *m);
            }
            if entries.len() as u64 > cap {
                return Err(Error::CapExceeded { what: "weight diagram", cap });
            }
        }
        let ws = WeightSystem { highest: lambda.to_vec(), dominant: out_dom, entries };
        debug_assert_eq!(BigInt::from(ws.dimension()), dim);
        Ok(ws)
    }
}

/// Classical tensor product multiplicities `V_j ⊗ V_k = ⊕ N_{j,k}^s V_s`
/// by the Racah–Speiser algorithm.
pub fn classical_fusion(
    algebra: &LieAlgebra,
    j: &[i64],
    k: &[i64],
    cap: u64,
) -> Result<BTreeMap<Weight, u64>> {
    // Expand the smaller factor into weights.
    let (big, small) =
        if weyl_dimension(algebra, j) >= weyl_dimension(algebra, k) { (j, k) } else { (k, j) };
    let ws = algebra.weight_system(small, cap)?;
    let mut acc: BTreeMap<Weight, i64> = BTreeMap::new();
    for (mu, &m) in &ws.entries {
        let x: Weight = big.iter().zip(mu).map(|(a, b)| a + b + 1).collect();
        let f = dominant_fold(algebra, &x);
        if f.on_wall {
            continue;
        }
        let s: Weight = f.dominant.iter().map(|v| v - 1).collect();
        *acc.entry(s).or_insert(0) += f.sign * m as i64;
    }
    let mut out = BTreeMap::new();
    for (s, c) in acc {
        if c < 0 {
            return Err(Error::NonIntegral("negative Racah–Speiser coefficient".into()));
        }
        if c > 0 {
            out.insert(s, c.to_u64().expect("positive"));
        }
    }
    Ok(out)
}
