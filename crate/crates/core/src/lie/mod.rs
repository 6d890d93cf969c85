//! Simple Lie algebra data in Dynkin-label coordinates.
//!
//! Simple roots are numbered as in Bourbaki. The Cartan matrix is stored
//! with `cartan[i][j] = 2(α_i, α_j) / (α_j, α_j)`, so row `i` holds the
//! Dynkin labels of the simple root `α_i`.

mod weights;
mod weyl;

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::intlat::{lattice_quotient, FiniteAbelianGroup, IntMatrix};
use crate::{Error, Result};

pub use weights::{classical_fusion, weyl_dimension, WeightSystem};
pub use weyl::{dominant_fold, Fold, WeylElement};

/// Dynkin labels of a weight.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn from_char(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn as_char(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    pub fn is_valid_rank(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }

    pub fn is_simply_laced(self) -> bool {
        matches!(self, Family::A | Family::D | Family::E)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// Cartan data, roots and the center of a simple Lie algebra.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    family: Family,
    rank: usize,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<Ratio<i64>>,
    form: Vec<Vec<Ratio<i64>>>,
    positive_roots: Vec<Weight>,
    positive_root_coords: Vec<Vec<i64>>,
    highest_root: Weight,
    marks: Vec<i64>,
    comarks: Vec<i64>,
    coxeter_number: i64,
    dual_coxeter_number: i64,
    rho: Weight,
    center: FiniteAbelianGroup,
}

fn chain(n: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0i64; n]; n];
    for i in 0..n {
        a[i][i] = 2;
        if i + 1 < n {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    }
    a
}

fn cartan_matrix(family: Family, n: usize) -> Vec<Vec<i64>> {
    match family {
        Family::A => chain(n),
        Family::B => {
            let mut a = chain(n);
            a[n - 2][n - 1] = -2;
            a
        }
        Family::C => {
            let mut a = chain(n);
            a[n - 1][n - 2] = -2;
            a
        }
        Family::D => {
            let mut a = chain(n);
            a[n - 2][n - 1] = 0;
            a[n - 1][n - 2] = 0;
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
            a
        }
        Family::E => {
            let mut a = vec![vec![0i64; n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            let edges = [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)];
            for &(i, j) in edges.iter().filter(|&&(i, j)| i < n && j < n) {
                a[i][j] = -1;
                a[j][i] = -1;
            }
            a
        }
        Family::F => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -2, 0],
            vec![0, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        Family::G => vec![vec![2, -1], vec![-3, 2]],
    }
}

/// `d_j = (α_j, α_j)/2`, normalized so long roots have `d = 1`.
fn symmetrizer(cartan: &[Vec<i64>]) -> Vec<Ratio<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Ratio<i64>>> = vec![None; n];
    d[0] = Some(Ratio::one());
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let di = d[i].unwrap();
        for j in 0..n {
            if j != i && cartan[i][j] != 0 && d[j].is_none() {
                // A_ij d_j = A_ji d_i
                d[j] = Some(di * Ratio::new(cartan[j][i], cartan[i][j]));
                queue.push_back(j);
            }
        }
    }
    let d: Vec<Ratio<i64>> = d.into_iter().map(|x| x.expect("Dynkin diagram is connected")).collect();
    let max = *d.iter().max().unwrap();
    d.into_iter().map(|x| x / max).collect()
}

/// Exact inverse of a small nonsingular integer matrix.
pub(crate) fn rational_inverse(a: &[Vec<i64>]) -> Vec<Vec<Ratio<i64>>> {
    let n = a.len();
    let mut m: Vec<Vec<Ratio<i64>>> =
        a.iter().map(|r| r.iter().map(|&x| Ratio::from_integer(x)).collect()).collect();
    let mut inv: Vec<Vec<Ratio<i64>>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Ratio::one() } else { Ratio::zero() }).collect())
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !m[r][c].is_zero()).expect("nonsingular matrix");
        m.swap(c, p);
        inv.swap(c, p);
        let pv = m[c][c];
        for j in 0..n {
            m[c][j] /= pv;
            inv[c][j] /= pv;
        }
        for r in 0..n {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c];
                for j in 0..n {
                    let (mc, ic) = (m[c][j], inv[c][j]);
                    m[r][j] -= f * mc;
                    inv[r][j] -= f * ic;
                }
            }
        }
    }
    inv
}

impl LieAlgebra {
    /// Builds the algebra of type `family` and rank `rank`.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        if !family.is_valid_rank(rank) {
            return Err(Error::InvalidType { family: family.as_char(), rank });
        }
        let n = rank;
        let cartan = cartan_matrix(family, n);
        let symmetrizer = symmetrizer(&cartan);
        let inv = rational_inverse(&cartan);
        let form: Vec<Vec<Ratio<i64>>> =
            (0..n).map(|i| (0..n).map(|j| inv[i][j] * symmetrizer[j]).collect()).collect();

        let (positive_root_coords, positive_roots) = positive_roots(&cartan);
        let top = positive_root_coords.len() - 1;
        let marks = positive_root_coords[top].clone();
        let highest_root = positive_roots[top].clone();
        let comarks: Vec<i64> = marks
            .iter()
            .zip(&symmetrizer)
            .map(|(&a, d)| {
                let c = *d * a;
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect();
        let coxeter_number = 1 + marks.iter().sum::<i64>();
        let dual_coxeter_number = 1 + comarks.iter().sum::<i64>();
        let mut center = lattice_quotient(n, &IntMatrix::from_rows(&cartan))
            .expect("Cartan matrix is nonsingular");
        let probes: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect())
            .collect();
        center.normalize_coords(&probes);
        Ok(LieAlgebra {
            family,
            rank,
            cartan,
            symmetrizer,
            form,
            positive_roots,
            positive_root_coords,
            highest_root,
            marks,
            comarks,
            coxeter_number,
            dual_coxeter_number,
            rho: vec![1; n],
            center,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.cartan)
    }

    pub fn symmetrizer(&self) -> &[Ratio<i64>] {
        &self.symmetrizer
    }

    /// Gram matrix `(w_i, w_j)` of the fundamental weights.
    pub fn form(&self) -> &[Vec<Ratio<i64>>] {
        &self.form
    }

    /// Simple roots as Dynkin labels (the rows of the Cartan matrix).
    pub fn simple_roots(&self) -> &[Weight] {
        &self.cartan
    }

    /// Positive roots in Dynkin labels, ordered by height.
    pub fn positive_roots(&self) -> &[Weight] {
        &self.positive_roots
    }

    /// Positive roots in simple-root coordinates, same order.
    pub fn positive_root_coords(&self) -> &[Vec<i64>] {
        &self.positive_root_coords
    }

    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    pub fn marks(&self) -> &[i64] {
        &self.marks
    }

    pub fn comarks(&self) -> &[i64] {
        &self.comarks
    }

    pub fn coxeter_number(&self) -> i64 {
        self.coxeter_number
    }

    pub fn dual_coxeter_number(&self) -> i64 {
        self.dual_coxeter_number
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// `Z(g)`: the weight lattice modulo the root lattice.
    pub fn center(&self) -> &FiniteAbelianGroup {
        &self.center
    }

    pub fn center_order(&self) -> u64 {
        use num_traits::ToPrimitive;
        self.center.order().to_u64().expect("center is tiny")
    }

    pub fn weyl_order(&self) -> u64 {
        let n = self.rank as u64;
        let fact = |m: u64| (1..=m).product::<u64>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u64 << n) * fact(n),
            Family::D => (1u64 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1152,
            Family::G => 12,
        }
    }

    fn check_len(&self, k: &[i64]) -> Result<()> {
        if k.len() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: k.len() });
        }
        Ok(())
    }

    /// Invariant bilinear form, normalized so that long roots have length² 2.
    pub fn inner(&self, a: &[i64], b: &[i64]) -> Result<Ratio<i64>> {
        self.check_len(a)?;
        self.check_len(b)?;
        let mut acc = Ratio::zero();
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    acc += self.form[i][j] * (a[i] * b[j]);
                }
            }
        }
        Ok(acc)
    }

    /// `⟨k, H_{α_j}⟩`, which is the `j`-th Dynkin label.
    pub fn coroot_pairing(&self, k: &[i64], j: usize) -> i64 {
        k[j]
    }

    /// `⟨k, H_{r_+}⟩ = Σ a_j^∨ k_j`.
    pub fn level_pairing(&self, k: &[i64]) -> i64 {
        k.iter().zip(&self.comarks).map(|(a, b)| a * b).sum()
    }

    /// Dynkin labels of a root given in simple-root coordinates.
    pub fn labels_of(&self, coords: &[i64]) -> Weight {
        let n = self.rank;
        let mut out = vec![0; n];
        for (i, &c) in coords.iter().enumerate() {
            for (o, a) in out.iter_mut().zip(&self.cartan[i]) {
                *o += c * a;
            }
        }
        out
    }

    /// The simple reflection `s_i` on Dynkin labels.
    pub fn reflect(&self, k: &mut [i64], i: usize) {
        let ki = k[i];
        if ki != 0 {
            for (x, a) in k.iter_mut().zip(&self.cartan[i]) {
                *x -= ki * a;
            }
        }
    }

    /// Whether `r` has squared length 2.
    pub fn is_long(&self, r: &[i64]) -> bool {
        self.inner(r, r).map(|x| x == Ratio::from_integer(2)).unwrap_or(false)
    }

    /// Long roots `±θ(r_+)` in labels, positive ones first.
    pub fn long_roots(&self) -> Vec<Weight> {
        let pos: Vec<Weight> =
            self.positive_roots.iter().filter(|r| self.is_long(r)).cloned().collect();
        let neg: Vec<Weight> = pos.iter().map(|r| r.iter().map(|x| -x).collect()).collect();
        pos.into_iter().chain(neg).collect()
    }

    /// Scaled integer form `D·(w_i, w_j)` with `D` the common denominator.
    pub(crate) fn integer_form(&self) -> (Vec<Vec<i64>>, i64) {
        let den = self.form.iter().flatten().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
        let f = self.form.iter().map(|r| r.iter().map(|x| (x * den).to_integer()).collect()).collect();
        (f, den)
    }

    /// `|ℛ/R_a|` where `R_a` is spanned by the long roots.
    pub fn long_root_index(&self) -> BigInt {
        let (h, _) = crate::intlat::hnf(&IntMatrix::from_rows(&self.long_roots()));
        let n = self.rank;
        let basis = IntMatrix::from_big_rows((0..n).map(|i| h.row(i).to_vec()).collect(), n);
        let det_ra = basis.det().expect("square").abs();
        let det_r = self.cartan_matrix().det().expect("square").abs();
        det_ra / det_r
    }
}

fn positive_roots(cartan: &[Vec<i64>]) -> (Vec<Vec<i64>>, Vec<Weight>) {
    let n = cartan.len();
    let mut seen: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push_back(e);
    }
    let labels = |c: &[i64]| -> Vec<i64> {
        let mut out = vec![0; n];
        for (i, &ci) in c.iter().enumerate() {
            for j in 0..n {
                out[j] += ci * cartan[i][j];
            }
        }
        out
    };
    while let Some(c) = queue.pop_front() {
        let l = labels(&c);
        for i in 0..n {
            if l[i] == 0 {
                continue;
            }
            let mut r = c.clone();
            r[i] -= l[i];
            if r.iter().all(|&x| x >= 0) && r.iter().any(|&x| x > 0) && seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    let mut coords: Vec<Vec<i64>> = seen.into_iter().collect();
    coords.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
    let roots = coords.iter().map(|c| labels(c)).collect();
    (coords, roots)
}
