//! Sparse composition of Pauli strings without multiplications.
//!
//! A Pauli string `P(x) = σ_{x_{n-1}} ⊗ … ⊗ σ_{x_0}` has exactly one nonzero
//! entry per row. [`compose`] finds the column and value of that entry for
//! every row with integer additions and sign flips only, seeding the first row
//! with `ω·(-i)^{n_Y mod 4}` so weighted strings cost nothing extra.
//!
//! On top of the composer this crate provides:
//!
//! - [`baselines`]: textbook Kronecker routines (naive, mixed-product, tree)
//!   used as correctness oracles and benchmark rivals,
//! - [`decompose`]: projection of a dense matrix onto the Pauli basis with
//!   structure-aware skipping of coefficients that are known to vanish,
//! - [`hamiltonian`]: weighted Pauli sums, diagonal Ising Hamiltonians and the
//!   exponential `exp(-iθP)`.
//!
//! ```
//! use pauli_composer::{compose, PauliString};
//!
//! let yx: PauliString = "YX".parse().unwrap();
//! let p = compose(&yx).unwrap();
//! assert_eq!(p.column(0), 3);
//! ```
//!
//! The crate is `no_std` (with `alloc`) when the default `std` feature is
//! disabled. The `parallel` feature enables rayon-backed decomposition.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod baselines;
pub mod decompose;
mod dense;
mod error;
pub mod hamiltonian;
mod pauli;
mod sparse;

pub use num_complex::Complex64;

pub use dense::{DenseMatrix, MAX_DENSE_QUBITS};
pub use error::Error;
pub use pauli::{PauliAxis, PauliString};
pub use sparse::{
    compose, compose_diagonal, compose_weighted, Columns, Entries, SparsePauliMatrix,
    MAX_SPARSE_QUBITS, WEIGHTED_TOLERANCE,
};

pub type Result<T, E = Error> = core::result::Result<T, E>;
