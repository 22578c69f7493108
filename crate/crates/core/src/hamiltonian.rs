//! Hamiltonians assembled from weighted Pauli strings.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use crate::dense::check_dense_qubits;
use crate::sparse::check_sparse_qubits;
use crate::{compose, compose_diagonal, compose_weighted, DenseMatrix, Entries, Error, PauliAxis, PauliString};

/// General sparse matrix in coordinate form, sorted by `(row, column)`.
#[derive(Debug, Clone, PartialEq)]
pub struct SparseMatrix {
    num_qubits: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    values: Vec<Complex64>,
}

impl SparseMatrix {
    fn from_sorted(
        num_qubits: usize,
        triplets: impl IntoIterator<Item = ((usize, usize), Complex64)>,
    ) -> Self {
        let mut m = Self { num_qubits, rows: Vec::new(), cols: Vec::new(), values: Vec::new() };
        for ((r, c), v) in triplets {
            m.rows.push(r);
            m.cols.push(c);
            m.values.push(v);
        }
        m
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        1 << self.num_qubits
    }

    pub fn nnz(&self) -> usize {
        self.values.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, Complex64)> + '_ {
        self.rows
            .iter()
            .zip(&self.cols)
            .zip(&self.values)
            .map(|((&r, &c), &v)| (r, c, v))
    }

    pub fn to_dense(&self) -> Result<DenseMatrix, Error> {
        check_dense_qubits(self.num_qubits)?;
        let d = self.dim();
        let mut values = vec![Complex64::new(0.0, 0.0); d * d];
        for (r, c, v) in self.iter() {
            values[r * d + c] += v;
        }
        DenseMatrix::new(d, values)
    }
}

/// Diagonal operator stored as its `2^n` diagonal entries.
#[derive(Debug, Clone, PartialEq)]
pub struct DiagonalMatrix {
    num_qubits: usize,
    values: Vec<f64>,
}

impl DiagonalMatrix {
    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn to_dense(&self) -> Result<DenseMatrix, Error> {
        check_dense_qubits(self.num_qubits)?;
        DenseMatrix::from_fn(self.values.len(), |r, c| {
            if r == c {
                Complex64::new(self.values[r], 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }
}

/// `Σ ω_x P(x)` with each weight folded into its string's seed.
///
/// Contributions landing on the same `(row, column)` are summed in term order.
/// Zero-weight terms contribute nothing and are skipped.
pub fn build_weighted_sum(terms: &[(PauliString, Complex64)]) -> Result<SparseMatrix, Error> {
    let (first, _) = terms.first().ok_or(Error::EmptyTermList)?;
    let n = first.num_qubits();
    check_sparse_qubits(n)?;
    if let Some((index, (x, _))) =
        terms.iter().enumerate().find(|(_, (x, _))| x.num_qubits() != n)
    {
        return Err(Error::LengthMismatch { index, expected: n, found: x.num_qubits() });
    }
    let mut acc: BTreeMap<(usize, usize), Complex64> = BTreeMap::new();
    for (x, w) in terms {
        if *w == Complex64::new(0.0, 0.0) {
            continue;
        }
        for (j, k, m) in compose_weighted(x, *w)?.iter() {
            *acc.entry((j, k)).or_default() += m;
        }
    }
    Ok(SparseMatrix::from_sorted(n, acc))
}

/// Weights of `Σ_i α_i Z_i + Σ_{i<j} β_ij Z_i Z_j`.
///
/// `Z_i` is a `Z` at position `i` of the label counted from the left. Only
/// couplings with `i < j` are stored; a symmetric `β` has to be folded by the
/// caller.
#[derive(Debug, Clone, PartialEq)]
pub struct IsingCoefficients {
    alpha: Vec<f64>,
    beta: BTreeMap<(usize, usize), f64>,
}

impl IsingCoefficients {
    /// Repeated `(i, j)` couplings are added together.
    pub fn new(
        alpha: Vec<f64>,
        couplings: impl IntoIterator<Item = (usize, usize, f64)>,
    ) -> Result<Self, Error> {
        let n = alpha.len();
        if n == 0 {
            return Err(Error::ZeroQubits);
        }
        let mut beta = BTreeMap::new();
        for (i, j, v) in couplings {
            if i >= j || j >= n {
                return Err(Error::BetaShapeMismatch { i, j, n });
            }
            *beta.entry((i, j)).or_insert(0.0) += v;
        }
        Ok(Self { alpha, beta })
    }

    pub fn num_qubits(&self) -> usize {
        self.alpha.len()
    }

    pub fn alpha(&self) -> &[f64] {
        &self.alpha
    }

    pub fn beta(&self, i: usize, j: usize) -> f64 {
        self.beta.get(&(i, j)).copied().unwrap_or(0.0)
    }

    pub fn couplings(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        self.beta.iter().map(|(&(i, j), &v)| (i, j, v))
    }

    /// The expanded `(string, weight)` list: for each `i`, the `α_i` term
    /// followed by the `β_ij` terms with `j > i`. Zero weights are omitted.
    pub fn terms(&self) -> Vec<(PauliString, f64)> {
        let n = self.num_qubits();
        let mut out = Vec::new();
        for i in 0..n {
            let mut single = vec![PauliAxis::I; n];
            single[i] = PauliAxis::Z;
            if self.alpha[i] != 0.0 {
                out.push((PauliString::new(single.clone()).expect("n >= 1"), self.alpha[i]));
            }
            for (&(_, j), &b) in self.beta.range((i, i + 1)..(i + 1, 0)) {
                if b != 0.0 {
                    let mut pair = single.clone();
                    pair[j] = PauliAxis::Z;
                    out.push((PauliString::new(pair).expect("n >= 1"), b));
                }
            }
        }
        out
    }
}

/// Diagonal Ising Hamiltonian, accumulated term by term from the diagonal
/// composer with each weight in the seed.
pub fn build_ising(c: &IsingCoefficients) -> Result<DiagonalMatrix, Error> {
    let n = c.num_qubits();
    check_sparse_qubits(n)?;
    let mut values = vec![0.0; 1 << n];
    for (x, w) in c.terms() {
        let p = compose_diagonal(&x, w)?;
        if let Entries::Real(m) = p.entries() {
            for (h, v) in values.iter_mut().zip(m) {
                *h += v;
            }
        }
    }
    Ok(DiagonalMatrix { num_qubits: n, values })
}

/// `exp(-iθP(x)) = cos θ·I - i sin θ·P(x)`.
///
/// Diagonal strings give one merged entry per row; otherwise every row holds
/// `cos θ` on the diagonal and `-i sin θ·P_{j,k(j)}` at `k(j)`.
pub fn pauli_exponential(theta: f64, x: &PauliString) -> Result<SparseMatrix, Error> {
    let p = compose(x)?;
    // exp(-iθ) = cos θ - i sin θ
    let phase = Complex64::new(0.0, -theta).exp();
    let cos = Complex64::new(phase.re, 0.0);
    let minus_i_sin = Complex64::new(0.0, phase.im);
    let mut triplets = Vec::with_capacity(if x.is_diagonal() { p.dim() } else { 2 * p.dim() });
    for (j, k, m) in p.iter() {
        let off = minus_i_sin * m;
        if k == j {
            triplets.push(((j, j), cos + off));
        } else if k < j {
            triplets.push(((j, k), off));
            triplets.push(((j, j), cos));
        } else {
            triplets.push(((j, j), cos));
            triplets.push(((j, k), off));
        }
    }
    Ok(SparseMatrix::from_sorted(x.num_qubits(), triplets))
}
