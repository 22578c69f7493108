//! Reference Kronecker-product routines.
//!
//! These are the generic approaches a Pauli-specific composer is measured
//! against: a direct left fold of dense Kronecker products, the mixed-product
//! factorisation into identity-padded single-site factors, and a pairwise tree
//! reduction. All three produce dense output so they can be compared bit for
//! bit with [`SparsePauliMatrix::to_dense`].

use alloc::vec::Vec;

use num_complex::Complex64;

use crate::dense::check_dense_qubits;
use crate::sparse::{Columns, Entries};
use crate::{compose, DenseMatrix, Error, PauliAxis, PauliString, SparsePauliMatrix};

/// A single-qubit operator as a row-major 2×2 array.
pub type Dense2x2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I_UNIT: Complex64 = Complex64::new(0.0, 1.0);

pub fn pauli_matrix(axis: PauliAxis) -> Dense2x2 {
    match axis {
        PauliAxis::I => [[ONE, ZERO], [ZERO, ONE]],
        PauliAxis::X => [[ZERO, ONE], [ONE, ZERO]],
        PauliAxis::Y => [[ZERO, -I_UNIT], [I_UNIT, ZERO]],
        PauliAxis::Z => [[ONE, ZERO], [ZERO, -ONE]],
    }
}

fn dense_from_2x2(m: &Dense2x2) -> DenseMatrix {
    DenseMatrix::new(2, m.iter().flatten().copied().collect()).expect("2x2 is valid")
}

/// Textbook Kronecker product `(A⊗B)[ia·db + ib, ja·db + jb] = A[ia,ja]·B[ib,jb]`.
pub fn kron_dense(a: &DenseMatrix, b: &DenseMatrix) -> Result<DenseMatrix, Error> {
    let (da, db) = (a.dim(), b.dim());
    check_dense_qubits(a.num_qubits() + b.num_qubits())?;
    let d = da * db;
    let mut values = Vec::with_capacity(d * d);
    for ia in 0..da {
        for ib in 0..db {
            for ja in 0..da {
                let av = a.get(ia, ja);
                for &bv in b.row(ib) {
                    values.push(av * bv);
                }
            }
        }
    }
    DenseMatrix::new(d, values)
}

/// `σ_{x_{n-1}} ⊗ … ⊗ σ_{x_0}` as a left fold of dense Kronecker products.
pub fn kron_naive(x: &PauliString) -> Result<DenseMatrix, Error> {
    check_dense_qubits(x.num_qubits())?;
    let mut axes = x.axes().iter();
    let first = axes.next().expect("PauliString is nonempty");
    let mut acc = dense_from_2x2(&pauli_matrix(*first));
    for &a in axes {
        acc = kron_dense(&acc, &dense_from_2x2(&pauli_matrix(a)))?;
    }
    Ok(acc)
}

/// `I^{⊗(n-i-1)} ⊗ σ ⊗ I^{⊗i}`: the factor `axis` placed on qubit `i`.
pub fn sigma_factor(axis: PauliAxis, i: usize, n: usize) -> Result<SparsePauliMatrix, Error> {
    if i >= n {
        return Err(Error::IndexOutOfRange { index: i, len: n });
    }
    let mut axes = alloc::vec![PauliAxis::I; n];
    axes[n - 1 - i] = axis;
    compose(&PauliString::new(axes)?)
}

/// Product of two matrices with one nonzero per row:
/// `(AB)[j, k_B(k_A(j))] = m_A(j)·m_B(k_A(j))`.
pub fn permutation_product(
    a: &SparsePauliMatrix,
    b: &SparsePauliMatrix,
) -> Result<SparsePauliMatrix, Error> {
    if a.num_qubits() != b.num_qubits() {
        return Err(Error::DimensionMismatch { expected: a.dim(), found: b.dim() });
    }
    let (columns, entries): (Vec<usize>, Vec<Complex64>) = (0..a.dim())
        .map(|j| {
            let mid = a.column(j);
            (b.column(mid), a.entry(j) * b.entry(mid))
        })
        .unzip();
    Ok(SparsePauliMatrix::from_parts(
        a.num_qubits(),
        Columns::Permutation(columns),
        Entries::Complex(entries),
    ))
}

/// Kronecker product of two one-nonzero-per-row matrices.
pub fn permutation_kron(a: &SparsePauliMatrix, b: &SparsePauliMatrix) -> SparsePauliMatrix {
    let db = b.dim();
    let mut columns = Vec::with_capacity(a.dim() * db);
    let mut entries = Vec::with_capacity(a.dim() * db);
    for (_, ka, ma) in a.iter() {
        for (_, kb, mb) in b.iter() {
            columns.push(ka * db + kb);
            entries.push(ma * mb);
        }
    }
    SparsePauliMatrix::from_parts(
        a.num_qubits() + b.num_qubits(),
        Columns::Permutation(columns),
        Entries::Complex(entries),
    )
}

/// Mixed-product route: the ordered product of identity-padded single-site
/// factors, multiplied as permutation-structured matrices and rendered dense.
pub fn kron_mixed(x: &PauliString) -> Result<DenseMatrix, Error> {
    let n = x.num_qubits();
    check_dense_qubits(n)?;
    let mut acc = sigma_factor(x.qubit(n - 1), n - 1, n)?;
    for i in (0..n - 1).rev() {
        acc = permutation_product(&acc, &sigma_factor(x.qubit(i), i, n)?)?;
    }
    acc.to_dense()
}

fn leaf(axis: PauliAxis) -> SparsePauliMatrix {
    let m = pauli_matrix(axis);
    let (columns, entries): (Vec<usize>, Vec<Complex64>) = (0..2)
        .map(|r| {
            let c = if m[r][0] != ZERO { 0 } else { 1 };
            (c, m[r][c])
        })
        .unzip();
    SparsePauliMatrix::from_parts(1, Columns::Permutation(columns), Entries::Complex(entries))
}

/// One level of the tree reduction. With an odd count the leading (leftmost)
/// factor is carried up unpaired; the rest are paired left to right.
fn pair_level(level: Vec<SparsePauliMatrix>) -> Vec<SparsePauliMatrix> {
    let mut next = Vec::with_capacity(level.len().div_ceil(2));
    let mut rest = level.as_slice();
    if rest.len() % 2 == 1 {
        next.push(rest[0].clone());
        rest = &rest[1..];
    }
    next.extend(rest.chunks_exact(2).map(|p| permutation_kron(&p[0], &p[1])));
    next
}

/// Tree route: adjacent factors are combined pairwise, halving the list at
/// every level, until one matrix remains.
pub fn kron_tree(x: &PauliString) -> Result<DenseMatrix, Error> {
    check_dense_qubits(x.num_qubits())?;
    let mut level: Vec<_> = x.axes().iter().map(|&a| leaf(a)).collect();
    while level.len() > 1 {
        level = pair_level(level);
    }
    level.pop().expect("nonempty").to_dense()
}
