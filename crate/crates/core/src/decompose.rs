//! Pauli-basis decomposition `H = Σ_x ω_x P(x)`.
//!
//! Each coefficient is the projection `ω_x = tr(P(x) H) / 2^n`. Because
//! `P(x)` has a single nonzero per row the trace is one pass over the composed
//! rows. Structure in `H` rules out whole families of strings up front:
//! symmetric matrices have no odd-`n_Y` components and diagonal matrices only
//! have `{I, Z}` components.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_complex::Complex64;

use crate::dense::check_dense_qubits;
use crate::sparse::Entries;
use crate::{compose, compose_diagonal, compose_weighted, DenseMatrix, Error, PauliAxis, PauliString};

/// Structural class of a matrix, ordered from least to most specific.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatrixClass {
    NonHermitian,
    Hermitian,
    Symmetric,
    Diagonal,
}

impl MatrixClass {
    pub fn name(self) -> &'static str {
        match self {
            MatrixClass::NonHermitian => "non-hermitian",
            MatrixClass::Hermitian => "hermitian",
            MatrixClass::Symmetric => "symmetric",
            MatrixClass::Diagonal => "diagonal",
        }
    }
}

impl fmt::Display for MatrixClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownClass;

impl fmt::Display for UnknownClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("expected one of non-hermitian, hermitian, symmetric, diagonal")
    }
}

impl core::error::Error for UnknownClass {}

impl FromStr for MatrixClass {
    type Err = UnknownClass;

    fn from_str(s: &str) -> Result<Self, UnknownClass> {
        match s.to_ascii_lowercase().replace('_', "-").as_str() {
            "non-hermitian" | "nonhermitian" | "general" => Ok(MatrixClass::NonHermitian),
            "hermitian" => Ok(MatrixClass::Hermitian),
            "symmetric" => Ok(MatrixClass::Symmetric),
            "diagonal" => Ok(MatrixClass::Diagonal),
            _ => Err(UnknownClass),
        }
    }
}

/// Most specific class whose defining relation holds entrywise within `tol`.
///
/// Precedence is Diagonal > Symmetric > Hermitian > NonHermitian.
pub fn classify_matrix(h: &DenseMatrix, tol: f64) -> MatrixClass {
    let d = h.dim();
    let mut diagonal = true;
    let mut symmetric = true;
    let mut hermitian = true;
    for r in 0..d {
        for c in (r + 1)..d {
            let (a, b) = (h.get(r, c), h.get(c, r));
            diagonal &= a.norm() <= tol && b.norm() <= tol;
            symmetric &= (a - b).norm() <= tol;
            hermitian &= (a - b.conj()).norm() <= tol;
        }
        hermitian &= h.get(r, r).im.abs() <= tol;
        if !symmetric && !hermitian {
            return MatrixClass::NonHermitian;
        }
    }
    if diagonal {
        MatrixClass::Diagonal
    } else if symmetric {
        MatrixClass::Symmetric
    } else if hermitian {
        MatrixClass::Hermitian
    } else {
        MatrixClass::NonHermitian
    }
}

/// A Hamiltonian in the Pauli basis: string → complex weight, kept sorted by
/// label.
#[derive(Debug, Clone, PartialEq)]
pub struct PauliSum {
    num_qubits: usize,
    terms: BTreeMap<PauliString, Complex64>,
}

impl PauliSum {
    pub fn new(num_qubits: usize) -> Self {
        Self { num_qubits, terms: BTreeMap::new() }
    }

    /// Builds a sum, adding weights of repeated strings.
    pub fn from_terms(
        num_qubits: usize,
        terms: impl IntoIterator<Item = (PauliString, Complex64)>,
    ) -> Result<Self, Error> {
        let mut sum = Self::new(num_qubits);
        for (index, (x, w)) in terms.into_iter().enumerate() {
            if x.num_qubits() != num_qubits {
                return Err(Error::LengthMismatch {
                    index,
                    expected: num_qubits,
                    found: x.num_qubits(),
                });
            }
            *sum.terms.entry(x).or_default() += w;
        }
        Ok(sum)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn get(&self, x: &PauliString) -> Option<Complex64> {
        self.terms.get(x).copied()
    }

    /// Terms in lexicographic label order.
    pub fn iter(&self) -> impl Iterator<Item = (&PauliString, Complex64)> {
        self.terms.iter().map(|(k, v)| (k, *v))
    }
}

/// `ω_x = (1/2^n) Σ_j P_{j,k(j)} H_{k(j),j}`.
pub fn pauli_coefficient(h: &DenseMatrix, x: &PauliString) -> Result<Complex64, Error> {
    let expected = 1usize.checked_shl(x.num_qubits() as u32).unwrap_or(0);
    if h.dim() != expected {
        return Err(Error::DimensionMismatch { expected, found: h.dim() });
    }
    let p = if x.is_diagonal() { compose_diagonal(x, 1.0)? } else { compose(x)? };
    let mut acc = Complex64::new(0.0, 0.0);
    match p.entries() {
        Entries::Real(m) => {
            for (j, &v) in m.iter().enumerate() {
                acc += h.get(p.column(j), j) * v;
            }
        }
        Entries::Complex(m) => {
            for (j, &v) in m.iter().enumerate() {
                acc += h.get(p.column(j), j) * v;
            }
        }
    }
    Ok(acc / h.dim() as f64)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecomposeOptions {
    /// Entrywise tolerance for classification.
    pub tol: f64,
    /// Coefficients with `|ω| <= prune` are dropped.
    pub prune: f64,
    /// Evaluate coefficients on the rayon pool (needs the `parallel` feature;
    /// ignored otherwise).
    pub parallel: bool,
    /// Skip classification and use this class. The caller vouches for it.
    pub force_class: Option<MatrixClass>,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        Self { tol: 1e-12, prune: 0.0, parallel: false, force_class: None }
    }
}

/// Size of the index space enumerated for `class`: `2^n` for diagonal
/// matrices, `4^n` otherwise.
fn index_space(class: MatrixClass, n: usize) -> usize {
    match class {
        MatrixClass::Diagonal => 1 << n,
        _ => 1 << (2 * n),
    }
}

/// Candidate string for `index`, or `None` when the class proves its
/// coefficient is zero.
fn candidate(class: MatrixClass, index: usize, n: usize) -> Option<PauliString> {
    let x = match class {
        MatrixClass::Diagonal => {
            let axes = (0..n)
                .map(|p| {
                    if index >> (n - 1 - p) & 1 == 1 {
                        PauliAxis::Z
                    } else {
                        PauliAxis::I
                    }
                })
                .collect();
            PauliString::new(axes).ok()?
        }
        _ => PauliString::from_index(index, n).ok()?,
    };
    if class == MatrixClass::Symmetric && x.n_y() % 2 == 1 {
        return None;
    }
    Some(x)
}

/// Strings whose coefficients are evaluated for a matrix of the given class,
/// in lexicographic order.
pub fn candidates(class: MatrixClass, n: usize) -> impl Iterator<Item = PauliString> {
    (0..index_space(class, n)).filter_map(move |i| candidate(class, i, n))
}

/// Decomposes `h` into the Pauli basis.
///
/// Output terms are sorted by label and do not depend on `options.parallel`.
pub fn decompose(h: &DenseMatrix, options: &DecomposeOptions) -> Result<PauliSum, Error> {
    let n = h.num_qubits();
    check_dense_qubits(n)?;
    let class = options.force_class.unwrap_or_else(|| classify_matrix(h, options.tol));

    let eval = |index: usize| -> Option<(PauliString, Complex64)> {
        let x = candidate(class, index, n)?;
        let mut w = pauli_coefficient(h, &x).expect("candidate matches matrix dimension");
        if class == MatrixClass::Hermitian && w.im.abs() <= options.tol {
            w.im = 0.0;
        }
        (w.norm() > options.prune).then_some((x, w))
    };

    let space = index_space(class, n);
    let terms: Vec<_> = if options.parallel {
        eval_parallel(space, &eval)
    } else {
        (0..space).filter_map(eval).collect()
    };
    Ok(PauliSum { num_qubits: n, terms: terms.into_iter().collect() })
}

#[cfg(feature = "parallel")]
fn eval_parallel<F>(space: usize, eval: &F) -> Vec<(PauliString, Complex64)>
where
    F: Fn(usize) -> Option<(PauliString, Complex64)> + Sync,
{
    use rayon::prelude::*;
    (0..space).into_par_iter().filter_map(eval).collect()
}

#[cfg(not(feature = "parallel"))]
fn eval_parallel<F>(space: usize, eval: &F) -> Vec<(PauliString, Complex64)>
where
    F: Fn(usize) -> Option<(PauliString, Complex64)>,
{
    (0..space).filter_map(eval).collect()
}

/// Dense `Σ_x ω_x P(x)`, each term composed with its weight in the seed.
pub fn recompose(s: &PauliSum) -> Result<DenseMatrix, Error> {
    let n = s.num_qubits();
    check_dense_qubits(n)?;
    let dim = 1usize << n;
    let mut out = DenseMatrix::zeros(dim)?;
    for (x, w) in s.iter() {
        if w == Complex64::new(0.0, 0.0) {
            continue;
        }
        let p = compose_weighted(x, w)?;
        let values = out.values_mut();
        for (j, k, m) in p.iter() {
            values[j * dim + k] += m;
        }
    }
    Ok(out)
}
