//! Exact integer lattice arithmetic.
//!
//! All entries are arbitrary-precision; vectors are rows and lattices are
//! spanned by the rows of an [`IntMatrix`].

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries((0..self.rows).map(|i| self.row(i))).finish()
    }
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![BigInt::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from `i64` rows. Panics on ragged input.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn from_big_rows(rows: Vec<Vec<BigInt>>, cols: usize) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r);
        }
        IntMatrix { rows: n, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.rows });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, x: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(x.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o += xi * self.get(i, j);
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    /// Converts to `i64` rows, failing on overflow.
    pub fn to_i64_rows(&self) -> Result<Vec<Vec<i64>>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_i64().ok_or(Error::Overflow("IntMatrix::to_i64_rows")))
                    .collect()
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, r: usize) {
        for j in 0..self.cols {
            let v = -self.get(r, j);
            self.set(r, j, v);
        }
    }


    /// `row[dst] -= k * row[src]`
    fn sub_row_multiple(&mut self, dst: usize, src: usize, k: &BigInt) {
        if k.is_zero() {
            return;
        }
        for j in 0..self.cols {
            let v = self.get(dst, j) - k * self.get(src, j);
            self.set(dst, j, v);
        }
    }


    /// Replaces rows (a, b) by (x·a + y·b, p·a + q·b); the 2×2 transform must
    /// be unimodular.
    fn mix_rows(&mut self, a: usize, b: usize, t: &[BigInt; 4]) {
        for j in 0..self.cols {
            let ra = self.get(a, j).clone();
            let rb = self.get(b, j).clone();
            self.set(a, j, &t[0] * &ra + &t[1] * &rb);
            self.set(b, j, &t[2] * &ra + &t[3] * &rb);
        }
    }

    fn mix_cols(&mut self, a: usize, b: usize, t: &[BigInt; 4]) {
        for i in 0..self.rows {
            let ca = self.get(i, a).clone();
            let cb = self.get(i, b).clone();
            self.set(i, a, &t[0] * &ca + &t[1] * &cb);
            self.set(i, b, &t[2] * &ca + &t[3] * &cb);
        }
    }
}

/// Unimodular 2×2 transform sending `(a, b)` to `(gcd, 0)`.
fn gcd_transform(a: &BigInt, b: &BigInt) -> [BigInt; 4] {
    // Keep the pivot when it already divides: otherwise the transform may
    // shuffle rows without making progress.
    if !a.is_zero() && b.is_multiple_of(a) {
        return [BigInt::one(), BigInt::zero(), -(b / a), BigInt::one()];
    }
    let e = a.extended_gcd(b);
    let g = e.gcd;
    // x·a + y·b = g, and (-b/g)·a + (a/g)·b = 0; the determinant is 1.
    [e.x, e.y, -(b / &g), a / &g]
}

/// Row-style Hermite normal form: returns `(h, u)` with `h = u·m`, `u`
/// unimodular, `h` in echelon form with positive pivots, entries above each
/// pivot reduced into `[0, pivot)`, and zero rows last.
pub fn hnf(m: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut h = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        for i in r + 1..rows {
            if h.get(i, c).is_zero() {
                continue;
            }
            let t = gcd_transform(h.get(r, c), h.get(i, c));
            h.mix_rows(r, i, &t);
            u.mix_rows(r, i, &t);
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            h.negate_row(r);
            u.negate_row(r);
        }
        let p = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&p);
            h.sub_row_multiple(i, r, &q);
            u.sub_row_multiple(i, r, &q);
        }
        r += 1;
    }
    (h, u)
}

/// Number of nonzero rows of an echelon matrix.
fn echelon_rank(h: &IntMatrix) -> usize {
    (0..h.rows).take_while(|&i| h.row(i).iter().any(|x| !x.is_zero())).count()
}

/// Smith normal form: returns `(s, u, v)` with `s = u·m·v` diagonal,
/// nonnegative, each diagonal entry dividing the next, `u` and `v` unimodular.
pub fn snf(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let (rows, cols) = (m.rows, m.cols);
    let mut s = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // Smallest nonzero entry of the trailing block becomes the pivot.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = s.get(i, j);
                if !x.is_zero() && best.is_none_or(|(bi, bj)| x.abs() < s.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        s.swap_rows(t, bi);
        u.swap_rows(t, bi);
        s.swap_cols(t, bj);
        v.swap_cols(t, bj);
        loop {
            for i in t + 1..rows {
                if !s.get(i, t).is_zero() {
                    let tr = gcd_transform(s.get(t, t), s.get(i, t));
                    s.mix_rows(t, i, &tr);
                    u.mix_rows(t, i, &tr);
                }
            }
            for j in t + 1..cols {
                if !s.get(t, j).is_zero() {
                    let tr = gcd_transform(s.get(t, t), s.get(t, j));
                    s.mix_cols(t, j, &tr);
                    v.mix_cols(t, j, &tr);
                }
            }
            let col_clear = (t + 1..rows).all(|i| s.get(i, t).is_zero());
            if !col_clear {
                continue;
            }
            // Enforce divisibility: fold an offending row into the pivot row.
            let p = s.get(t, t).clone();
            let bad = (t + 1..rows)
                .find(|&i| (t + 1..cols).any(|j| !s.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::from(-1);
                    s.sub_row_multiple(t, i, &one);
                    u.sub_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if s.get(t, t).is_negative() {
            s.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }
    (s, u, v)
}

/// Whether `x` lies in the row lattice of the echelon matrix `h` (as
/// returned by [`hnf`]).
pub fn echelon_contains(h: &IntMatrix, x: &[BigInt]) -> bool {
    assert_eq!(x.len(), h.cols);
    let mut x: Vec<BigInt> = x.to_vec();
    let mut r = 0;
    let rank = echelon_rank(h);
    for c in 0..h.cols {
        if r < rank && !h.get(r, c).is_zero() {
            let p = h.get(r, c);
            if !x[c].is_multiple_of(p) {
                return false;
            }
            let q = &x[c] / p;
            for (j, xj) in x.iter_mut().enumerate().skip(c) {
                *xj -= &q * h.get(r, j);
            }
            r += 1;
        } else if !x[c].is_zero() {
            return false;
        }
    }
    true
}

/// A finite quotient `ℤⁿ / L` of a full-rank sublattice `L`.
///
/// Cosets are named by canonical representatives: vectors reduced against
/// the Hermite basis of `L`, so that coordinate `i` lies in `[0, h_ii)`.
/// Group coordinates come from the Smith form: `x ↦ (x·v)_i mod d_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    hnf_basis: IntMatrix,
    /// Nontrivial invariant factors `d_1 | d_2 | …`.
    cyclic_orders: Vec<BigInt>,
    /// Smith column transform restricted to the nontrivial factors.
    coord_map: IntMatrix,
    /// Rows of `v⁻¹` for the nontrivial factors (sections of the coordinates).
    section: IntMatrix,
}

impl FiniteAbelianGroup {
    pub fn ambient_rank(&self) -> usize {
        self.hnf_basis.cols
    }

    pub fn cyclic_orders(&self) -> &[BigInt] {
        &self.cyclic_orders
    }

    pub fn hnf_basis(&self) -> &IntMatrix {
        &self.hnf_basis
    }

    pub fn order(&self) -> BigInt {
        self.cyclic_orders.iter().product()
    }

    /// Reduces `x` to the canonical representative of its coset.
    pub fn canonical(&self, x: &[BigInt]) -> Vec<BigInt> {
        let n = self.ambient_rank();
        assert_eq!(x.len(), n);
        let mut x = x.to_vec();
        for i in 0..n {
            let p = self.hnf_basis.get(i, i);
            let q = x[i].div_floor(p);
            if !q.is_zero() {
                for (j, xj) in x.iter_mut().enumerate().skip(i) {
                    *xj -= &q * self.hnf_basis.get(i, j);
                }
            }
        }
        x
    }

    pub fn canonical_i64(&self, x: &[i64]) -> Vec<i64> {
        let big: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        self.canonical(&big)
            .iter()
            .map(|v| v.to_i64().expect("canonical representative fits in i64"))
            .collect()
    }

    pub fn contains(&self, x: &[BigInt]) -> bool {
        self.canonical(x).iter().all(Zero::is_zero)
    }

    /// Homomorphism onto `⊕ ℤ/d_i`.
    pub fn to_coords(&self, x: &[BigInt]) -> Vec<BigInt> {
        let y = self.coord_map.left_apply(x);
        y.iter().zip(&self.cyclic_orders).map(|(yi, d)| yi.mod_floor(d)).collect()
    }

    pub fn to_coords_i64(&self, x: &[i64]) -> Vec<i64> {
        let big: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
        self.to_coords(&big).iter().map(|v| v.to_i64().expect("coordinate fits in i64")).collect()
    }

    /// Canonical representative with the given group coordinates.
    pub fn from_coords(&self, coords: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(coords.len(), self.cyclic_orders.len());
        let x = self.section.left_apply(coords);
        self.canonical(&x)
    }

    /// Rescales each cyclic coordinate by a unit so that the first probe
    /// generating that factor has coordinate 1 there.
    pub fn normalize_coords(&mut self, probes: &[Vec<BigInt>]) {
        for i in 0..self.cyclic_orders.len() {
            let d = self.cyclic_orders[i].clone();
            let found = probes.iter().find_map(|p| {
                let c = self.to_coords(p)[i].clone();
                let e = c.extended_gcd(&d);
                e.gcd.is_one().then(|| (c, e.x.mod_floor(&d)))
            });
            let Some((c, u)) = found else { continue };
            for r in 0..self.coord_map.rows {
                let v = (self.coord_map.get(r, i) * &u).mod_floor(&d);
                self.coord_map.set(r, i, v);
            }
            for r in 0..self.section.cols {
                let v = self.section.get(i, r) * &c;
                self.section.set(i, r, v);
            }
        }
    }

    /// All canonical representatives, in lexicographic order.
    pub fn enumerate(&self) -> Vec<Vec<BigInt>> {
        let n = self.ambient_rank();
        let bounds: Vec<BigInt> = (0..n).map(|i| self.hnf_basis.get(i, i).clone()).collect();
        let mut out = Vec::new();
        let mut cur = vec![BigInt::zero(); n];
        if n == 0 {
            out.push(cur);
            return out;
        }
        loop {
            out.push(cur.clone());
            let mut i = n;
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                cur[i] += 1;
                if cur[i] < bounds[i] {
                    break;
                }
                cur[i] = BigInt::zero();
            }
        }
    }
}

/// The quotient of `ℤ^ambient_rank` by the row lattice of `gens`.
pub fn lattice_quotient(ambient_rank: usize, gens: &IntMatrix) -> Result<FiniteAbelianGroup> {
    if gens.cols != ambient_rank {
        return Err(Error::DimensionMismatch { expected: ambient_rank, found: gens.cols });
    }
    let (h, _) = hnf(gens);
    let rank = echelon_rank(&h);
    if rank < ambient_rank {
        return Err(Error::InfiniteQuotient { rank, ambient: ambient_rank });
    }
    let n = ambient_rank;
    let basis = IntMatrix::from_big_rows((0..n).map(|i| h.row(i).to_vec()).collect(), n);
    let (s, _u, v) = snf(&basis);
    let (_, vinv) = hnf_inverse_unimodular(&v);
    let nontrivial: Vec<usize> = (0..n).filter(|&i| !s.get(i, i).is_one()).collect();
    let cyclic_orders = nontrivial.iter().map(|&i| s.get(i, i).clone()).collect();
    let mut coord_map = IntMatrix::zeros(n, nontrivial.len());
    let mut section = IntMatrix::zeros(nontrivial.len(), n);
    for (c, &i) in nontrivial.iter().enumerate() {
        for r in 0..n {
            coord_map.set(r, c, v.get(r, i).clone());
            section.set(c, r, vinv.get(i, r).clone());
        }
    }
    Ok(FiniteAbelianGroup { hnf_basis: basis, cyclic_orders, coord_map, section })
}

/// Inverse of a unimodular matrix via its Hermite form (which is the
/// identity): `I = u·v` so `v⁻¹ = u`.
fn hnf_inverse_unimodular(v: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let (h, u) = hnf(v);
    debug_assert_eq!(h, IntMatrix::identity(v.rows));
    (h, u)
}

/// An integer basis (as columns) of the rational kernel `{x : m·x = 0}`.
///
/// Each basis vector is primitive; vector `f` has a positive entry at the
/// `f`-th free column and zeros at the other free columns.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let (rows, cols) = (m.rows, m.cols);
    let mut a = m.clone();
    let mut pivots: Vec<(usize, usize)> = Vec::new(); // (row, col)
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else { continue };
        a.swap_rows(r, p);
        let pv = a.get(r, c).clone();
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let f = a.get(i, c).clone();
            let g = pv.gcd(&f);
            let (mi, mr) = (&pv / &g, &f / &g);
            let mut content = BigInt::zero();
            for j in 0..cols {
                let v = &mi * a.get(i, j) - &mr * a.get(r, j);
                content = content.gcd(&v);
                a.set(i, j, v);
            }
            if !content.is_zero() && !content.is_one() {
                for j in 0..cols {
                    let v = a.get(i, j) / &content;
                    a.set(i, j, v);
                }
            }
        }
        pivots.push((r, c));
        r += 1;
    }
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut k = IntMatrix::zeros(cols, free.len());
    let lcm = pivots.iter().fold(BigInt::one(), |acc, &(pr, pc)| acc.lcm(a.get(pr, pc)));
    for (fi, &f) in free.iter().enumerate() {
        let mut x = vec![BigInt::zero(); cols];
        x[f] = lcm.clone();
        for &(pr, pc) in &pivots {
            // p·x_pc + a[pr][f]·x_f = 0
            x[pc] = -(a.get(pr, f) * &lcm) / a.get(pr, pc);
        }
        let g = x.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        for (i, xi) in x.into_iter().enumerate() {
            k.set(i, fi, if g.is_zero() { xi } else { xi / &g });
        }
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn hnf_identity_and_scalar() {
        let i2 = IntMatrix::identity(2);
        assert_eq!(hnf(&i2), (i2.clone(), i2.clone()));
        let m = IntMatrix::from_rows(&[[2]]);
        assert_eq!(hnf(&m), (m.clone(), IntMatrix::identity(1)));
    }

    #[test]
    fn hnf_cartan_sl3() {
        let m = IntMatrix::from_rows(&[[2, -1], [-1, 2]]);
        let (h, u) = hnf(&m);
        assert_eq!(u.mul(&m).unwrap(), h);
        assert_eq!(h.det().unwrap().abs(), BigInt::from(3));
        assert_eq!(u.det().unwrap().abs(), BigInt::one());
        // Hand reduction: the row lattice is {(a,b): a+2b ≡ 0 mod 3}, basis (1,1),(0,3).
        assert_eq!(h, IntMatrix::from_rows(&[[1, 1], [0, 3]]));
    }

    #[test]
    fn snf_examples() {
        let (s, _, _) = snf(&IntMatrix::identity(3));
        assert_eq!(s, IntMatrix::identity(3));
        let (s, _, _) = snf(&IntMatrix::from_rows(&[[2]]));
        assert_eq!(s, IntMatrix::from_rows(&[[2]]));
        let m = IntMatrix::from_rows(&[[2, -1], [-1, 2]]);
        let (s, u, v) = snf(&m);
        assert_eq!(s, IntMatrix::from_rows(&[[1, 0], [0, 3]]));
        assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), s);
    }

    #[test]
    fn snf_rectangular_with_divisibility_fix() {
        // diag(2,3) must become diag(1,6).
        let m = IntMatrix::from_rows(&[[2, 0], [0, 3], [0, 0]]);
        let (s, u, v) = snf(&m);
        assert_eq!(s, IntMatrix::from_rows(&[[1, 0], [0, 6], [0, 0]]));
        assert_eq!(u.mul(&m).unwrap().mul(&v).unwrap(), s);
    }

    #[test]
    fn quotients() {
        let g = lattice_quotient(1, &IntMatrix::from_rows(&[[6]])).unwrap();
        assert_eq!(g.cyclic_orders(), &[BigInt::from(6)]);
        let g = lattice_quotient(2, &IntMatrix::from_rows(&[[2, 0], [0, 2]])).unwrap();
        assert_eq!(g.cyclic_orders(), &[BigInt::from(2), BigInt::from(2)]);
        let g = lattice_quotient(2, &IntMatrix::from_rows(&[[2, -1], [-1, 2]])).unwrap();
        assert_eq!(g.cyclic_orders(), &[BigInt::from(3)]);
        assert_eq!(g.enumerate().len(), 3);
        let err = lattice_quotient(2, &IntMatrix::from_rows(&[[1, 1], [2, 2]])).unwrap_err();
        assert_eq!(err, Error::InfiniteQuotient { rank: 1, ambient: 2 });
    }

    #[test]
    fn coords_round_trip() {
        let g = lattice_quotient(2, &IntMatrix::from_rows(&[[4, 2], [2, 6]])).unwrap();
        assert_eq!(g.order(), BigInt::from(20));
        for x in g.enumerate() {
            let c = g.to_coords(&x);
            assert_eq!(g.from_coords(&c), x);
        }
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = IntMatrix::from_rows(&[[1, 2, 3], [2, 4, 6]]);
        let k = kernel_basis(&m);
        assert_eq!(k.cols(), 2);
        assert!(m.mul(&k).unwrap().row(0).iter().all(Zero::is_zero));
        assert!(m.mul(&k).unwrap().row(1).iter().all(Zero::is_zero));
    }

    #[test]
    fn echelon_membership() {
        let (h, _) = hnf(&IntMatrix::from_rows(&[[2, 0], [0, 2], [1, 1]]));
        assert!(echelon_contains(&h, &big(&[1, 1])));
        assert!(echelon_contains(&h, &big(&[3, 1])));
        assert!(!echelon_contains(&h, &big(&[1, 0])));
    }
}
