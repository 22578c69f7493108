//! Subcommand bodies. Each returns the text for standard output, or an error
//! carrying the process exit code.

use num_complex::Complex64;
use pauli_composer::decompose::{classify_matrix, decompose, DecomposeOptions, MatrixClass};
use pauli_composer::hamiltonian::{build_ising, pauli_exponential, IsingCoefficients};
use pauli_composer::{compose_diagonal, compose_weighted, PauliString};
use thiserror::Error;

use crate::bench::{self, BenchConfig, BenchError};
use crate::io::{self, FormatError};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] pauli_composer::Error),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Bench(#[from] BenchError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Format(e) => e.exit_code(),
            _ => 2,
        }
    }
}

/// Sparse `row col re im` lines, or a dense matrix file with `dense`.
/// `{I, Z}` labels with a real weight go through the diagonal composer.
pub fn compose(label: &str, weight: Option<&str>, dense: bool) -> Result<String, CliError> {
    let x: PauliString = label.parse()?;
    let weight = match weight {
        Some(w) => io::parse_complex(w)
            .ok_or_else(|| CliError::Usage(format!("cannot parse weight {w:?}")))?,
        None => Complex64::new(1.0, 0.0),
    };
    let p = if x.is_diagonal() && weight.im == 0.0 {
        compose_diagonal(&x, weight.re)?
    } else {
        compose_weighted(&x, weight)?
    };
    if dense {
        Ok(io::format_matrix_file(&p.to_dense()?))
    } else {
        Ok(io::format_triplets(p.iter()))
    }
}

/// Returns the detected (or forced) class alongside the Pauli-sum text.
pub fn decompose_text(
    matrix_text: &str,
    options: &DecomposeOptions,
) -> Result<(MatrixClass, String), CliError> {
    let h = io::parse_matrix_file(matrix_text)?;
    let class = options.force_class.unwrap_or_else(|| classify_matrix(&h, options.tol));
    let opts = DecomposeOptions { force_class: Some(class), ..*options };
    let sum = decompose(&h, &opts)?;
    Ok((class, io::format_pauli_sum(&sum)))
}

/// Parses `"1,2,3"` or `"1 2 3"`.
pub fn parse_list(text: &str) -> Result<Vec<f64>, CliError> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| CliError::Usage(format!("bad number {t:?}"))))
        .collect()
}

/// Parses an `i j value` coupling (commas also accepted as separators).
pub fn parse_coupling(text: &str) -> Result<(usize, usize, f64), CliError> {
    let parts: Vec<_> =
        text.split(|c: char| c == ',' || c.is_whitespace()).filter(|t| !t.is_empty()).collect();
    let bad = || CliError::Usage(format!("coupling {text:?} must be `i j value`"));
    let [i, j, v] = parts[..] else { return Err(bad()) };
    Ok((i.parse().map_err(|_| bad())?, j.parse().map_err(|_| bad())?, v.parse().map_err(|_| bad())?))
}

/// Diagonal as `index value` lines, or a dense matrix file with `dense`.
pub fn ising(alpha: &str, betas: &[String], dense: bool) -> Result<String, CliError> {
    let alpha = parse_list(alpha)?;
    let couplings = betas.iter().map(|b| parse_coupling(b)).collect::<Result<Vec<_>, _>>()?;
    let h = build_ising(&IsingCoefficients::new(alpha, couplings)?)?;
    if dense {
        return Ok(io::format_matrix_file(&h.to_dense()?));
    }
    let mut out = String::new();
    for (j, v) in h.values().iter().enumerate() {
        out.push_str(&format!("{j} {}\n", io::format_f64(*v)));
    }
    Ok(out)
}

pub fn exp(label: &str, theta: f64, dense: bool) -> Result<String, CliError> {
    let x: PauliString = label.parse()?;
    let u = pauli_exponential(theta, &x)?;
    if dense {
        Ok(io::format_matrix_file(&u.to_dense()?))
    } else {
        Ok(io::format_triplets(u.iter()))
    }
}

pub fn bench(config: &BenchConfig) -> Result<String, CliError> {
    let records = bench::run(config)?;
    let mut out = Vec::new();
    bench::write_csv(&records, &mut out)?;
    Ok(String::from_utf8(out).expect("ascii csv"))
}
