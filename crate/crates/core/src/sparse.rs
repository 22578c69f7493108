//! The multiplication-free composer.
//!
//! For row `j` the only nonzero of `P(x)` sits at column `k(j)`. Row 0 is
//! seeded directly: `k(0)` is the y-bit string of `x` and the value is
//! `ω·(-i)^{n_Y mod 4}`. Stage `l` then doubles the filled prefix:
//!
//! ```text
//! k(j + 2^l) = k(j) ± 2^l        (+ for I/Z, - for X/Y)
//! m(j + 2^l) = ε_l · m(j)        (ε_l = -1 for Y/Z)
//! ```
//!
//! so after the seed only integer adds and negations are performed.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Neg;

use num_complex::Complex64;

use crate::dense::{check_dense_qubits, DenseMatrix};
use crate::{Error, PauliString};

/// Largest qubit count accepted by the sparse composers (`2^30` rows).
pub const MAX_SPARSE_QUBITS: usize = 30;

/// Absolute entry tolerance used when comparing weighted matrices.
pub const WEIGHTED_TOLERANCE: f64 = 1e-12;

/// Column index of the nonzero in each row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Columns {
    /// `k(j) = j`; produced by the diagonal composer, nothing is stored.
    Identity,
    Permutation(Vec<usize>),
}

/// Value of the nonzero in each row.
#[derive(Debug, Clone, PartialEq)]
pub enum Entries {
    /// All entries real. Used when `n_Y` is even and the weight is real.
    Real(Vec<f64>),
    Complex(Vec<Complex64>),
}

/// A `2^n × 2^n` matrix with exactly one stored entry per row, whose columns
/// form a permutation of `0..2^n`.
///
/// Rows are in ascending order. Equality (`==`) compares the logical
/// `(column, value)` pairs exactly, regardless of storage variant; use
/// [`SparsePauliMatrix::approx_eq`] for weighted matrices.
#[derive(Debug, Clone)]
pub struct SparsePauliMatrix {
    num_qubits: usize,
    columns: Columns,
    entries: Entries,
}

impl SparsePauliMatrix {
    pub(crate) fn from_parts(num_qubits: usize, columns: Columns, entries: Entries) -> Self {
        let m = Self { num_qubits, columns, entries };
        debug_assert!(match &m.columns {
            Columns::Identity => true,
            Columns::Permutation(k) => k.len() == m.dim(),
        });
        debug_assert_eq!(m.entries.len(), m.dim());
        m
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    /// Number of stored entries; always `2^n`.
    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    /// Fraction of nonzero entries, `2^{-n}`.
    pub fn density(&self) -> f64 {
        self.nnz() as f64 / (self.dim() as f64 * self.dim() as f64)
    }

    #[inline]
    pub fn column(&self, row: usize) -> usize {
        match &self.columns {
            Columns::Identity => row,
            Columns::Permutation(k) => k[row],
        }
    }

    #[inline]
    pub fn entry(&self, row: usize) -> Complex64 {
        self.entries.get(row)
    }

    pub fn columns(&self) -> &Columns {
        &self.columns
    }

    pub fn entries(&self) -> &Entries {
        &self.entries
    }

    pub fn is_diagonal(&self) -> bool {
        match &self.columns {
            Columns::Identity => true,
            Columns::Permutation(k) => k.iter().enumerate().all(|(j, &c)| j == c),
        }
    }

    /// Column indices materialised as a vector.
    pub fn column_indices(&self) -> Vec<usize> {
        match &self.columns {
            Columns::Identity => (0..self.dim()).collect(),
            Columns::Permutation(k) => k.clone(),
        }
    }

    /// `(row, column, value)` triplets in row order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        (0..self.dim()).map(move |j| (j, self.column(j), self.entry(j)))
    }

    pub fn to_dense(&self) -> Result<DenseMatrix, Error> {
        check_dense_qubits(self.num_qubits)?;
        let dim = self.dim();
        let mut out = DenseMatrix::zeros(dim)?;
        let values = out.values_mut();
        for (j, k, m) in self.iter() {
            values[j * dim + k] = m;
        }
        Ok(out)
    }

    /// Same columns and every entry within `tol` (absolute).
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.num_qubits == other.num_qubits
            && (0..self.dim()).all(|j| {
                self.column(j) == other.column(j) && (self.entry(j) - other.entry(j)).norm() <= tol
            })
    }
}

impl PartialEq for SparsePauliMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.num_qubits == other.num_qubits
            && (0..self.dim())
                .all(|j| self.column(j) == other.column(j) && self.entry(j) == other.entry(j))
    }
}

impl Entries {
    pub fn len(&self) -> usize {
        match self {
            Entries::Real(v) => v.len(),
            Entries::Complex(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    #[inline]
    pub fn get(&self, row: usize) -> Complex64 {
        match self {
            Entries::Real(v) => Complex64::new(v[row], 0.0),
            Entries::Complex(v) => v[row],
        }
    }

    pub fn is_real(&self) -> bool {
        matches!(self, Entries::Real(_))
    }
}

/// Composes the unit-weight string `P(x)`.
pub fn compose(x: &PauliString) -> Result<SparsePauliMatrix, Error> {
    compose_weighted(x, Complex64::new(1.0, 0.0))
}

/// Composes `ω·P(x)` with the weight folded into the row-0 seed.
pub fn compose_weighted(x: &PauliString, weight: Complex64) -> Result<SparsePauliMatrix, Error> {
    if weight == Complex64::new(0.0, 0.0) {
        return Err(Error::ZeroWeight);
    }
    let n = x.num_qubits();
    check_sparse_qubits(n)?;

    let columns = Columns::Permutation(propagate_columns(x));
    let n_y = x.n_y();
    let seed = rotate_by_minus_i(weight, n_y % 4);
    let entries = if n_y.is_multiple_of(2) && weight.im == 0.0 {
        Entries::Real(propagate_signs(x, seed.re))
    } else {
        Entries::Complex(propagate_signs(x, seed))
    };
    Ok(SparsePauliMatrix::from_parts(n, columns, entries))
}

/// Composes `ω·P(x)` for a string made only of `I` and `Z`.
///
/// Columns are the identity map and are never computed; only signs are
/// propagated.
pub fn compose_diagonal(x: &PauliString, weight: f64) -> Result<SparsePauliMatrix, Error> {
    if let Some(position) = x.axes().iter().position(|a| !a.is_diagonal()) {
        return Err(Error::NonDiagonalAxis { position });
    }
    if weight == 0.0 {
        return Err(Error::ZeroWeight);
    }
    let n = x.num_qubits();
    check_sparse_qubits(n)?;
    Ok(SparsePauliMatrix::from_parts(
        n,
        Columns::Identity,
        Entries::Real(propagate_signs(x, weight)),
    ))
}

pub(crate) fn check_sparse_qubits(n: usize) -> Result<(), Error> {
    if n > MAX_SPARSE_QUBITS {
        return Err(Error::TooManyQubits { n, max: MAX_SPARSE_QUBITS });
    }
    Ok(())
}

/// `ω·(-i)^p`, done as a quarter-turn rotation so no rounding is introduced.
fn rotate_by_minus_i(w: Complex64, p: usize) -> Complex64 {
    match p % 4 {
        0 => w,
        1 => Complex64::new(w.im, -w.re),
        2 => Complex64::new(-w.re, -w.im),
        _ => Complex64::new(-w.im, w.re),
    }
}

fn propagate_columns(x: &PauliString) -> Vec<usize> {
    let n = x.num_qubits();
    let mut k = vec![0usize; 1 << n];
    k[0] = x.first_column();
    for l in 0..n {
        let half = 1 << l;
        let (lo, hi) = k[..2 * half].split_at_mut(half);
        if x.qubit(l).y_bit() == 0 {
            for (h, &c) in hi.iter_mut().zip(lo.iter()) {
                *h = c + half;
            }
        } else {
            for (h, &c) in hi.iter_mut().zip(lo.iter()) {
                *h = c - half;
            }
        }
    }
    k
}

pub(crate) fn propagate_signs<T>(x: &PauliString, seed: T) -> Vec<T>
where
    T: Copy + Default + Neg<Output = T>,
{
    let n = x.num_qubits();
    let mut m = vec![T::default(); 1 << n];
    m[0] = seed;
    for l in 0..n {
        let half = 1 << l;
        let (lo, hi) = m[..2 * half].split_at_mut(half);
        if x.qubit(l).sign_flip() {
            for (h, &v) in hi.iter_mut().zip(lo.iter()) {
                *h = -v;
            }
        } else {
            hi.copy_from_slice(lo);
        }
    }
    m
}
