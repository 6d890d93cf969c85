use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Square integer matrix used for representation images.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zeros(n: usize) -> Self {
        IntMat { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: r.len() });
            }
            data.extend_from_slice(r);
        }
        Ok(IntMat { n, data })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn add_to(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] += v;
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).map(|r| r.to_vec()).take(self.n).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.data[j * self.n + i] = self.data[i * self.n + j];
            }
        }
        t
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.data[i * self.n + i]).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.data.iter().all(|&x| x >= 0)
    }

    pub fn scaled(&self, c: i64) -> Result<Self> {
        let data = self
            .data
            .iter()
            .map(|x| x.checked_mul(c).ok_or(Error::Overflow("matrix scaling")))
            .collect::<Result<_>>()?;
        Ok(IntMat { n: self.n, data })
    }

    pub fn mul(&self, other: &IntMat) -> Result<IntMat> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { expected: self.n, found: other.n });
        }
        let n = self.n;
        let mut out = vec![0i128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k] as i128;
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += a * other.data[k * n + j] as i128;
                }
            }
        }
        let data = out
            .into_iter()
            .map(|x| i64::try_from(x).map_err(|_| Error::Overflow("matrix product")))
            .collect::<Result<_>>()?;
        Ok(IntMat { n, data })
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: i64, other: &IntMat) -> Result<()> {
        if c == 0 {
            return Ok(());
        }
        for (x, y) in self.data.iter_mut().zip(&other.data) {
            *x = y
                .checked_mul(c)
                .and_then(|v| x.checked_add(v))
                .ok_or(Error::Overflow("matrix sum"))?;
        }
        Ok(())
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.data[i * self.n + j] * v[j]).sum()).collect()
    }

    pub fn entries(&self) -> &[i64] {
        &self.data
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let a = IntMat::from_rows(&[[0, 1], [1, 0]]).unwrap();
        assert_eq!(a.mul(&a).unwrap(), IntMat::identity(2));
        let mut b = IntMat::identity(2);
        b.add_scaled(-2, &a).unwrap();
        assert_eq!(b.to_rows(), vec![vec![1, -2], vec![-2, 1]]);
        assert_eq!(b.trace(), 2);
        let big = IntMat::from_rows(&[[i64::MAX]]).unwrap();
        assert_eq!(big.mul(&big).unwrap_err(), Error::Overflow("matrix product"));
    }
}
