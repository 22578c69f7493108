//! Benchmark harness: median wall-clock timings written as CSV.
//!
//! Every repetition draws a fresh random input from a seeded generator.
//! Input generation is excluded from the timed region. Each `(method, n)`
//! pair restarts the generator from the same seed so all methods at a given
//! `n` see identical inputs.

use std::fmt;
use std::hint::black_box;
use std::io::{self, Write};
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_complex::Complex64;
use pauli_composer::baselines::{kron_mixed, kron_naive, kron_tree};
use pauli_composer::decompose::{decompose, DecomposeOptions, MatrixClass};
use pauli_composer::hamiltonian::{build_ising, IsingCoefficients};
use pauli_composer::{compose, compose_diagonal, DenseMatrix, PauliAxis, PauliString};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Minimum length of one timed batch; fast operations are repeated inside a
/// batch until it is at least this long.
const MIN_BATCH: Duration = Duration::from_micros(200);

pub const CSV_HEADER: &str = "method,n,reps,median_seconds,threads";
pub const CSV_NOTE: &str =
    "# in-process Rust implementations only; timings are machine-specific wall-clock medians";

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("unknown suite {0:?} (expected compose, decompose or ising)")]
    UnknownSuite(String),
    #[error("method {method:?} is not available for the {suite} suite (choose from {available})")]
    UnknownMethod { suite: Suite, method: String, available: String },
    #[error("invalid n range {0:?}; expected `<lo>..<hi>` with 1 <= lo <= hi")]
    BadRange(String),
    #[error("method {method} supports n <= {max}, requested {n}")]
    TooLarge { method: String, n: usize, max: usize },
    #[error("at least one repetition is required")]
    NoRepetitions,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Compose,
    Decompose,
    Ising,
}

impl Suite {
    pub fn methods(self) -> &'static [&'static str] {
        match self {
            Suite::Compose => &["pc", "pdc", "naive", "mixed", "tree"],
            Suite::Decompose => &["decompose-pc-seq", "decompose-pc-par", "decompose-naive"],
            Suite::Ising => &["ising-pdc", "ising-pdc-mul", "ising-pc"],
        }
    }

    fn max_n(self, method: &str) -> usize {
        match (self, method) {
            (Suite::Compose, "pc" | "pdc") => pauli_composer::MAX_SPARSE_QUBITS,
            (Suite::Ising, _) => 24,
            _ => pauli_composer::MAX_DENSE_QUBITS,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Suite::Compose => "compose",
            Suite::Decompose => "decompose",
            Suite::Ising => "ising",
        })
    }
}

impl FromStr for Suite {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self, BenchError> {
        match s {
            "compose" => Ok(Suite::Compose),
            "decompose" => Ok(Suite::Decompose),
            "ising" => Ok(Suite::Ising),
            _ => Err(BenchError::UnknownSuite(s.to_string())),
        }
    }
}

/// Inclusive `lo..hi`.
pub fn parse_n_range(s: &str) -> Result<(usize, usize), BenchError> {
    let bad = || BenchError::BadRange(s.to_string());
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let hi = hi.strip_prefix('=').unwrap_or(hi);
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok((lo, hi))
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub suite: Suite,
    pub n_min: usize,
    pub n_max: usize,
    pub reps: usize,
    pub methods: Vec<String>,
    pub seed: u64,
    /// Matrix class for the decompose suite.
    pub class: MatrixClass,
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub method: String,
    pub n: usize,
    pub reps: usize,
    pub median_seconds: f64,
    pub threads: usize,
}

impl BenchRecord {
    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{:e},{}",
            self.method, self.n, self.reps, self.median_seconds, self.threads
        )
    }
}

pub fn write_csv(records: &[BenchRecord], mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{CSV_NOTE}")?;
    writeln!(out, "{CSV_HEADER}")?;
    for r in records {
        writeln!(out, "{}", r.csv_line())?;
    }
    Ok(())
}

fn input_rng(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn random_string(rng: &mut impl Rng, n: usize) -> PauliString {
    let axes = (0..n).map(|_| PauliAxis::ALL[rng.random_range(0..4)]).collect();
    PauliString::new(axes).expect("n >= 1")
}

/// Random string whose number of `Y` factors has the requested parity.
pub fn random_string_with_parity(rng: &mut impl Rng, n: usize, odd_y: bool) -> PauliString {
    let mut axes: Vec<_> = random_string(rng, n).axes().to_vec();
    let n_y = axes.iter().filter(|&&a| a == PauliAxis::Y).count();
    if (n_y % 2 == 1) != odd_y {
        let p = rng.random_range(0..n);
        axes[p] = if axes[p] == PauliAxis::Y {
            [PauliAxis::I, PauliAxis::X, PauliAxis::Z][rng.random_range(0..3)]
        } else {
            PauliAxis::Y
        };
    }
    PauliString::new(axes).expect("n >= 1")
}

pub fn random_diagonal_string(rng: &mut impl Rng, n: usize) -> PauliString {
    let axes = (0..n)
        .map(|_| if rng.random_bool(0.5) { PauliAxis::Z } else { PauliAxis::I })
        .collect();
    PauliString::new(axes).expect("n >= 1")
}

fn unit_square(rng: &mut impl Rng) -> Complex64 {
    Complex64::new(rng.random(), rng.random())
}

/// Random `2^n × 2^n` matrix of the given class with entries drawn from the
/// complex unit square, mirrored as the class requires. Hermitian matrices
/// get a real diagonal.
pub fn random_matrix(rng: &mut impl Rng, class: MatrixClass, n: usize) -> DenseMatrix {
    let d = 1usize << n;
    let mut v = vec![Complex64::new(0.0, 0.0); d * d];
    for r in 0..d {
        for c in 0..d {
            v[r * d + c] = match class {
                MatrixClass::NonHermitian => unit_square(rng),
                MatrixClass::Diagonal if r == c => unit_square(rng),
                MatrixClass::Diagonal => continue,
                MatrixClass::Hermitian if r == c => Complex64::new(rng.random(), 0.0),
                MatrixClass::Hermitian | MatrixClass::Symmetric if c < r => continue,
                MatrixClass::Hermitian | MatrixClass::Symmetric => unit_square(rng),
            };
        }
    }
    for r in 0..d {
        for c in 0..r {
            match class {
                MatrixClass::Hermitian => v[r * d + c] = v[c * d + r].conj(),
                MatrixClass::Symmetric => v[r * d + c] = v[c * d + r],
                _ => {}
            }
        }
    }
    DenseMatrix::new(d, v).expect("power-of-two dimension")
}

/// Random Ising weights in `[-1, 1)` with every `i < j` coupling present.
pub fn random_ising(rng: &mut impl Rng, n: usize) -> IsingCoefficients {
    let alpha = (0..n).map(|_| rng.random_range(-1.0..1.0)).collect();
    let mut couplings = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            couplings.push((i, j, rng.random_range(-1.0..1.0)));
        }
    }
    IsingCoefficients::new(alpha, couplings).expect("valid shape")
}

/// Seconds per call of `op` on one input. Fast calls are batched until the
/// batch lasts at least [`MIN_BATCH`].
fn time_call<I, O>(input: &I, op: &mut impl FnMut(&I) -> O) -> f64 {
    let start = Instant::now();
    black_box(op(black_box(input)));
    let first = start.elapsed();
    if first >= MIN_BATCH {
        return first.as_secs_f64().max(f64::MIN_POSITIVE);
    }
    let per_call = first.max(Duration::from_nanos(1));
    let iters = (MIN_BATCH.as_nanos() / per_call.as_nanos()).clamp(1, 1_000_000) as u32;
    let start = Instant::now();
    for _ in 0..iters {
        black_box(op(black_box(input)));
    }
    (start.elapsed().as_secs_f64() / iters as f64).max(f64::MIN_POSITIVE)
}

pub fn median(samples: &mut [f64]) -> f64 {
    assert!(!samples.is_empty(), "median of empty sample");
    samples.sort_by(f64::total_cmp);
    let m = samples.len() / 2;
    if samples.len() % 2 == 1 {
        samples[m]
    } else {
        0.5 * (samples[m - 1] + samples[m])
    }
}

/// Median seconds of `op` over `reps` fresh inputs from `gen`.
pub fn time_median<I, O>(
    reps: usize,
    mut gen: impl FnMut() -> I,
    mut op: impl FnMut(&I) -> O,
) -> f64 {
    let mut samples: Vec<f64> = (0..reps)
        .map(|_| {
            let input = gen();
            time_call(&input, &mut op)
        })
        .collect();
    median(&mut samples)
}

/// Median time of `method` at `n`, plus the worker count it ran with.
pub fn measure(
    suite: Suite,
    method: &str,
    n: usize,
    reps: usize,
    seed: u64,
    class: MatrixClass,
) -> Result<(f64, usize), BenchError> {
    if !suite.methods().contains(&method) {
        return Err(BenchError::UnknownMethod {
            suite,
            method: method.to_string(),
            available: suite.methods().join(","),
        });
    }
    let max = suite.max_n(method);
    if n > max {
        return Err(BenchError::TooLarge { method: method.to_string(), n, max });
    }
    if reps == 0 {
        return Err(BenchError::NoRepetitions);
    }
    let mut rng = input_rng(seed, n);
    let rng = &mut rng;
    let seconds = match (suite, method) {
        (Suite::Compose, "pc") => {
            // real (even n_Y) and imaginary (odd n_Y) strings are timed apart
            let mut rng_odd = input_rng(seed.wrapping_add(1), n);
            let even = time_median(reps, || random_string_with_parity(rng, n, false), compose);
            let odd =
                time_median(reps, || random_string_with_parity(&mut rng_odd, n, true), compose);
            0.5 * (even + odd)
        }
        (Suite::Compose, "pdc") => {
            time_median(reps, || random_diagonal_string(rng, n), |x| compose_diagonal(x, 1.0))
        }
        (Suite::Compose, "naive") => time_median(reps, || random_string(rng, n), kron_naive),
        (Suite::Compose, "mixed") => time_median(reps, || random_string(rng, n), kron_mixed),
        (Suite::Compose, "tree") => time_median(reps, || random_string(rng, n), kron_tree),
        (Suite::Decompose, m) => {
            let mut options = DecomposeOptions { force_class: Some(class), ..Default::default() };
            match m {
                "decompose-pc-par" => options.parallel = true,
                "decompose-naive" => {
                    return Ok((
                        time_median(reps, || random_matrix(rng, class, n), naive_decompose),
                        1,
                    ))
                }
                _ => {}
            }
            time_median(reps, || random_matrix(rng, class, n), |h| decompose(h, &options))
        }
        (Suite::Ising, "ising-pdc") => time_median(reps, || random_ising(rng, n), build_ising),
        (Suite::Ising, "ising-pdc-mul") => {
            time_median(reps, || random_ising(rng, n), |c| ising_postmultiplied(c, true))
        }
        (Suite::Ising, "ising-pc") => {
            time_median(reps, || random_ising(rng, n), |c| ising_postmultiplied(c, false))
        }
        _ => unreachable!("method list checked above"),
    };
    let threads = if method == "decompose-pc-par" { rayon::current_num_threads() } else { 1 };
    Ok((seconds, threads))
}

/// Ising diagonal built from unit-weight strings multiplied by their weight
/// afterwards, using either the diagonal or the general composer.
fn ising_postmultiplied(c: &IsingCoefficients, diagonal: bool) -> Vec<f64> {
    let mut h = vec![0.0; 1 << c.num_qubits()];
    for (x, w) in c.terms() {
        if diagonal {
            let p = compose_diagonal(&x, 1.0).expect("diagonal term");
            for (j, v) in h.iter_mut().enumerate() {
                *v += w * p.entry(j).re;
            }
        } else {
            let p = compose(&x).expect("valid term");
            for (j, v) in h.iter_mut().enumerate() {
                *v += w * p.entry(j).re;
            }
        }
    }
    h
}

/// Structure-blind decomposition: every string built densely and projected
/// with a full trace.
fn naive_decompose(h: &DenseMatrix) -> Vec<Complex64> {
    let n = h.num_qubits();
    let d = h.dim();
    (0..1usize << (2 * n))
        .map(|i| {
            let p = kron_naive(&PauliString::from_index(i, n).expect("n >= 1")).expect("n <= 13");
            let mut tr = Complex64::new(0.0, 0.0);
            for r in 0..d {
                for k in 0..d {
                    tr += p.get(r, k) * h.get(k, r);
                }
            }
            tr / d as f64
        })
        .collect()
}

pub fn run(config: &BenchConfig) -> Result<Vec<BenchRecord>, BenchError> {
    for m in &config.methods {
        if !config.suite.methods().contains(&m.as_str()) {
            return Err(BenchError::UnknownMethod {
                suite: config.suite,
                method: m.clone(),
                available: config.suite.methods().join(","),
            });
        }
        let max = config.suite.max_n(m);
        if config.n_max > max {
            return Err(BenchError::TooLarge { method: m.clone(), n: config.n_max, max });
        }
    }
    let mut records = Vec::new();
    for m in &config.methods {
        for n in config.n_min..=config.n_max {
            let (median_seconds, threads) =
                measure(config.suite, m, n, config.reps, config.seed, config.class)?;
            records.push(BenchRecord {
                method: m.clone(),
                n,
                reps: config.reps,
                median_seconds,
                threads,
            });
        }
    }
    Ok(records)
}
