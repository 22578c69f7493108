use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::Error;

/// Largest qubit count for which dense `2^n × 2^n` matrices are materialised.
pub const MAX_DENSE_QUBITS: usize = 13;

/// Row-major square complex matrix whose dimension is `2^n` with `n ≥ 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    values: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn new(dim: usize, values: Vec<Complex64>) -> Result<Self, Error> {
        check_dim(dim)?;
        if values.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, found: values.len() });
        }
        Ok(Self { dim, values })
    }

    pub fn from_rows(rows: Vec<Vec<Complex64>>) -> Result<Self, Error> {
        let dim = rows.len();
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != dim) {
            return Err(Error::NonSquare { rows: dim, row, len: r.len() });
        }
        check_dim(dim)?;
        Ok(Self { dim, values: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self, Error> {
        check_dim(dim)?;
        let mut values = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                values.push(f(r, c));
            }
        }
        Ok(Self { dim, values })
    }

    pub fn zeros(dim: usize) -> Result<Self, Error> {
        check_dim(dim)?;
        Ok(Self { dim, values: vec![Complex64::new(0.0, 0.0); dim * dim] })
    }

    pub fn identity(dim: usize) -> Result<Self, Error> {
        let mut m = Self::zeros(dim)?;
        for j in 0..dim {
            m.values[j * dim + j] = Complex64::new(1.0, 0.0);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn num_qubits(&self) -> usize {
        self.dim.trailing_zeros() as usize
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.values[row * self.dim + col]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn row(&self, row: usize) -> &[Complex64] {
        &self.values[row * self.dim..(row + 1) * self.dim]
    }

    pub(crate) fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut values = Vec::with_capacity(d * d);
        for r in 0..d {
            for c in 0..d {
                values.push(self.get(c, r).conj());
            }
        }
        Self { dim: d, values }
    }

    /// Plain triple-loop product.
    pub fn matmul(&self, rhs: &Self) -> Result<Self, Error> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: rhs.dim });
        }
        let d = self.dim;
        let mut out = vec![Complex64::new(0.0, 0.0); d * d];
        for r in 0..d {
            for k in 0..d {
                let a = self.get(r, k);
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let rhs_row = rhs.row(k);
                for (o, b) in out[r * d..(r + 1) * d].iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Self { dim: d, values: out })
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        self.values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn frobenius_norm_sqr(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    pub fn scaled(&self, s: Complex64) -> Self {
        Self { dim: self.dim, values: self.values.iter().map(|v| v * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { expected: self.dim, found: other.dim });
        }
        Ok(Self {
            dim: self.dim,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }
}

fn check_dim(dim: usize) -> Result<(), Error> {
    if dim == 1 {
        return Err(Error::ZeroQubits);
    }
    if !dim.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(dim));
    }
    Ok(())
}

pub(crate) fn check_dense_qubits(n: usize) -> Result<(), Error> {
    if n > MAX_DENSE_QUBITS {
        return Err(Error::TooLargeForDense { n, max: MAX_DENSE_QUBITS });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn rejects_bad_shapes() {
        assert_eq!(DenseMatrix::zeros(3), Err(Error::NotPowerOfTwo(3)));
        assert_eq!(DenseMatrix::zeros(1), Err(Error::ZeroQubits));
        assert_eq!(DenseMatrix::zeros(0), Err(Error::NotPowerOfTwo(0)));
        let ragged = vec![vec![c(1.0), c(0.0)], vec![c(1.0)]];
        assert_eq!(
            DenseMatrix::from_rows(ragged),
            Err(Error::NonSquare { rows: 2, row: 1, len: 1 })
        );
        assert!(matches!(
            DenseMatrix::new(2, vec![c(0.0); 3]),
            Err(Error::DimensionMismatch { expected: 4, found: 3 })
        ));
    }

    #[test]
    fn matmul_identity() {
        let a = DenseMatrix::from_fn(4, |r, c_| c((r * 4 + c_) as f64)).unwrap();
        let i = DenseMatrix::identity(4).unwrap();
        assert_eq!(a.matmul(&i).unwrap(), a);
        assert_eq!(i.matmul(&a).unwrap(), a);
        assert_eq!(a.num_qubits(), 2);
    }
}
