//! Text formats: complex tokens, matrix files, Pauli-sum files and triplet
//! listings.
//!
//! A complex token is `<re>` or `<re><sign><im>i`, e.g. `1.5`, `0-2i`,
//! `-3+0.5i`. Numbers are printed in the shortest form that parses back to
//! the same `f64`.

use std::fmt::Write as _;

use num_complex::Complex64;
use pauli_composer::decompose::PauliSum;
use pauli_composer::{DenseMatrix, Error as CoreError, PauliString};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error(transparent)]
    Matrix(#[from] CoreError),
}

impl FormatError {
    /// Process exit code: 3 for an unusable matrix dimension, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            FormatError::Matrix(CoreError::NotPowerOfTwo(_) | CoreError::ZeroQubits) => 3,
            _ => 2,
        }
    }
}

fn malformed(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Malformed { line, message: message.into() }
}

/// Shortest round-trip representation, with `-0` folded to `0` and an
/// exponent for very small or very large magnitudes.
pub fn format_f64(v: f64) -> String {
    if v == 0.0 {
        return "0".to_string();
    }
    let a = v.abs();
    if (1e-5..1e16).contains(&a) {
        format!("{v}")
    } else {
        format!("{v:e}")
    }
}

pub fn format_complex(z: Complex64) -> String {
    if z.im == 0.0 {
        return format_f64(z.re);
    }
    let sign = if z.im.is_sign_negative() { '-' } else { '+' };
    format!("{}{}{}i", format_f64(z.re), sign, format_f64(z.im.abs()))
}

pub fn parse_complex(token: &str) -> Option<Complex64> {
    let t = token.trim();
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        return t.parse().ok().map(|re| Complex64::new(re, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&p| matches!(bytes[p], b'+' | b'-') && !matches!(bytes[p - 1], b'e' | b'E'));
    match split {
        Some(p) => {
            let re = body[..p].parse().ok()?;
            let im = body[p..].parse().ok()?;
            Some(Complex64::new(re, im))
        }
        None => body.parse().ok().map(|im| Complex64::new(0.0, im)),
    }
}

/// Parses a matrix file: a `dim <d>` header followed by `d` rows of `d`
/// complex tokens. Blank lines and lines starting with `#` are ignored.
pub fn parse_matrix_file(text: &str) -> Result<DenseMatrix, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| malformed(1, "missing `dim <d>` header"))?;
    let mut parts = header.split_whitespace();
    let dim: usize = match (parts.next(), parts.next(), parts.next()) {
        (Some("dim"), Some(d), None) => {
            d.parse().map_err(|_| malformed(hline, format!("bad dimension {d:?}")))?
        }
        _ => return Err(malformed(hline, "expected `dim <d>` header")),
    };
    if dim == 1 {
        return Err(CoreError::ZeroQubits.into());
    }
    if !dim.is_power_of_two() {
        return Err(CoreError::NotPowerOfTwo(dim).into());
    }
    let n = dim.trailing_zeros() as usize;
    if n > pauli_composer::MAX_DENSE_QUBITS {
        return Err(CoreError::TooLargeForDense { n, max: pauli_composer::MAX_DENSE_QUBITS }.into());
    }

    let mut values = Vec::with_capacity(dim * dim);
    for row in 0..dim {
        let (lno, line) =
            lines.next().ok_or_else(|| malformed(hline + row + 1, format!("expected {dim} rows, got {row}")))?;
        let before = values.len();
        for token in line.split_whitespace() {
            let z = parse_complex(token)
                .ok_or_else(|| malformed(lno, format!("bad complex token {token:?}")))?;
            values.push(z);
        }
        let count = values.len() - before;
        if count != dim {
            return Err(malformed(lno, format!("expected {dim} entries, found {count}")));
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(malformed(lno, format!("trailing content after {dim} rows")));
    }
    Ok(DenseMatrix::new(dim, values)?)
}

pub fn format_matrix_file(m: &DenseMatrix) -> String {
    let mut out = format!("dim {}\n", m.dim());
    for r in 0..m.dim() {
        let row: Vec<_> = m.row(r).iter().map(|&z| format_complex(z)).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// One `<label> <re> <im>` line per term, in label order.
pub fn format_pauli_sum(s: &PauliSum) -> String {
    let mut out = String::new();
    for (x, w) in s.iter() {
        writeln!(out, "{} {} {}", x.label(), format_f64(w.re), format_f64(w.im)).unwrap();
    }
    out
}

pub fn parse_pauli_sum(text: &str) -> Result<PauliSum, FormatError> {
    let mut terms = Vec::new();
    for (i, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<_> = line.split_whitespace().collect();
        let [label, re, im] = fields[..] else {
            return Err(malformed(i, "expected `<label> <re> <im>`"));
        };
        let x: PauliString = label.parse().map_err(|e| malformed(i, format!("{e}")))?;
        let re: f64 = re.parse().map_err(|_| malformed(i, format!("bad number {re:?}")))?;
        let im: f64 = im.parse().map_err(|_| malformed(i, format!("bad number {im:?}")))?;
        terms.push((x, Complex64::new(re, im)));
    }
    let n = terms.first().map_or(0, |(x, _)| x.num_qubits());
    Ok(PauliSum::from_terms(n, terms)?)
}

/// `row col re im` lines.
pub fn format_triplets(entries: impl IntoIterator<Item = (usize, usize, Complex64)>) -> String {
    let mut out = String::new();
    for (r, c, v) in entries {
        writeln!(out, "{r} {c} {} {}", format_f64(v.re), format_f64(v.im)).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn complex_tokens() {
        assert_eq!(parse_complex("1.5"), Some(c(1.5, 0.0)));
        assert_eq!(parse_complex("0-2i"), Some(c(0.0, -2.0)));
        assert_eq!(parse_complex("-3+0.5i"), Some(c(-3.0, 0.5)));
        assert_eq!(parse_complex("1e-3-2.5e+2i"), Some(c(1e-3, -250.0)));
        assert_eq!(parse_complex("2i"), Some(c(0.0, 2.0)));
        assert_eq!(parse_complex("-i"), None);
        assert_eq!(parse_complex("1,5"), None);
        assert_eq!(parse_complex(""), None);
    }

    #[test]
    fn number_formatting() {
        assert_eq!(format_f64(1.0), "1");
        assert_eq!(format_f64(-0.0), "0");
        assert_eq!(format_f64(2.5), "2.5");
        assert_eq!(format_f64(1e-20), "1e-20");
        assert_eq!(format_complex(c(0.0, -2.0)), "0-2i");
        assert_eq!(format_complex(c(-3.0, 0.5)), "-3+0.5i");
        assert_eq!(format_complex(c(1.0, -0.0)), "1");
    }

    #[test]
    fn complex_round_trip_samples() {
        for z in [c(0.1, 0.2), c(-1e-300, 5e300), c(1.0 / 3.0, -2.0 / 3.0), c(123456.789, 0.0)] {
            assert_eq!(parse_complex(&format_complex(z)), Some(z));
        }
    }

    #[test]
    fn matrix_file_parse() {
        let m = parse_matrix_file("dim 2\n1 0-2i\n# comment\n\n0+2i -1\n").unwrap();
        assert_eq!(m.get(0, 1), c(0.0, -2.0));
        assert_eq!(m.get(1, 0), c(0.0, 2.0));
        assert_eq!(parse_matrix_file(&format_matrix_file(&m)).unwrap(), m);
    }

    #[test]
    fn matrix_file_errors() {
        let code = |t: &str| parse_matrix_file(t).unwrap_err().exit_code();
        assert_eq!(code("dim 3\n1 0 0\n0 1 0\n0 0 1\n"), 3);
        assert_eq!(code("dim 1\n1\n"), 3);
        assert_eq!(code("1 0\n0 1\n"), 2);
        assert_eq!(code("dim 2\n1 0\n0\n"), 2);
        assert_eq!(code("dim 2\n1 0\n0 x\n"), 2);
        assert_eq!(code("dim 2\n1 0\n"), 2);
        assert_eq!(code("dim 2\n1 0\n0 1\n1 1\n"), 2);
        assert_eq!(code(""), 2);
    }

    #[test]
    fn pauli_sum_file() {
        let s = parse_pauli_sum("ZZ 1 0\nIX 0.5 -0.25\n").unwrap();
        assert_eq!(format_pauli_sum(&s), "IX 0.5 -0.25\nZZ 1 0\n");
        assert!(parse_pauli_sum("ZZ 1\n").is_err());
        assert!(parse_pauli_sum("ZZ 1 0\nZ 1 0\n").is_err());
    }
}
