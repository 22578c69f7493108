//! Pauli axes and strings.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::Error;

/// One of the four single-qubit generators, encoded `0..=3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[repr(u8)]
pub enum PauliAxis {
    I = 0,
    X = 1,
    Y = 2,
    Z = 3,
}

impl PauliAxis {
    pub const ALL: [PauliAxis; 4] = [PauliAxis::I, PauliAxis::X, PauliAxis::Y, PauliAxis::Z];

    pub fn from_code(code: u8) -> Option<Self> {
        Self::ALL.get(code as usize).copied()
    }

    pub fn code(self) -> u8 {
        self as u8
    }

    /// 1 for the anti-diagonal factors X and Y, 0 for I and Z.
    pub fn y_bit(self) -> usize {
        matches!(self, PauliAxis::X | PauliAxis::Y) as usize
    }

    /// Whether the lower-right entry of the factor (in the `iY` lift) is `-1`.
    pub fn sign_flip(self) -> bool {
        matches!(self, PauliAxis::Y | PauliAxis::Z)
    }

    pub fn is_diagonal(self) -> bool {
        self.y_bit() == 0
    }

    pub fn letter(self) -> char {
        ['I', 'X', 'Y', 'Z'][self as usize]
    }
}

impl fmt::Display for PauliAxis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A tensor product `σ_{x_{n-1}} ⊗ … ⊗ σ_{x_0}` of `n ≥ 1` Pauli factors.
///
/// Axes are kept in label order: `axes()[0]` is the leftmost factor
/// `x_{n-1}` and the last element is `x_0`. Use [`PauliString::qubit`] to
/// address factors by qubit index instead.
///
/// Ordering is lexicographic on the label, which is also the numeric order of
/// the base-4 digit string.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PauliString {
    axes: Vec<PauliAxis>,
}

impl PauliString {
    pub fn new(axes: Vec<PauliAxis>) -> Result<Self, Error> {
        if axes.is_empty() {
            return Err(Error::EmptyString);
        }
        Ok(Self { axes })
    }

    pub fn identity(n: usize) -> Result<Self, Error> {
        Self::new(alloc::vec![PauliAxis::I; n])
    }

    /// The string whose label is the base-4 expansion of `index` on `n` digits.
    ///
    /// Enumerating `index` over `0..4^n` visits every string in lexicographic
    /// label order.
    pub fn from_index(mut index: usize, n: usize) -> Result<Self, Error> {
        let mut axes = alloc::vec![PauliAxis::I; n];
        for slot in axes.iter_mut().rev() {
            *slot = PauliAxis::ALL[index & 3];
            index >>= 2;
        }
        Self::new(axes)
    }

    pub fn num_qubits(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[PauliAxis] {
        &self.axes
    }

    /// Factor acting on qubit `q`, i.e. `x_q`.
    pub fn qubit(&self, q: usize) -> PauliAxis {
        self.axes[self.axes.len() - 1 - q]
    }

    /// Number of `Y` factors.
    pub fn n_y(&self) -> usize {
        self.axes.iter().filter(|&&a| a == PauliAxis::Y).count()
    }

    /// True when every factor is `I` or `Z`.
    pub fn is_diagonal(&self) -> bool {
        self.axes.iter().all(|a| a.is_diagonal())
    }

    /// Column of the nonzero entry in row 0: the y-bits read as a binary number.
    pub fn first_column(&self) -> usize {
        self.axes.iter().fold(0, |k, a| (k << 1) | a.y_bit())
    }

    pub fn label(&self) -> String {
        self.axes.iter().map(|a| a.letter()).collect()
    }

    pub fn digits(&self) -> String {
        self.axes.iter().map(|a| (b'0' + a.code()) as char).collect()
    }
}

impl FromStr for PauliString {
    type Err = Error;

    /// Accepts `IXYZ` (any case) or `0123`, but not a mix of the two.
    fn from_str(text: &str) -> Result<Self, Error> {
        #[derive(PartialEq)]
        enum Alphabet {
            Letters,
            Digits,
        }
        let mut alphabet = None;
        let mut axes = Vec::with_capacity(text.len());
        for (position, c) in text.chars().enumerate() {
            let (kind, axis) = match c.to_ascii_uppercase() {
                'I' => (Alphabet::Letters, PauliAxis::I),
                'X' => (Alphabet::Letters, PauliAxis::X),
                'Y' => (Alphabet::Letters, PauliAxis::Y),
                'Z' => (Alphabet::Letters, PauliAxis::Z),
                '0' => (Alphabet::Digits, PauliAxis::I),
                '1' => (Alphabet::Digits, PauliAxis::X),
                '2' => (Alphabet::Digits, PauliAxis::Y),
                '3' => (Alphabet::Digits, PauliAxis::Z),
                _ => return Err(Error::InvalidCharacter { position, found: c }),
            };
            match &alphabet {
                None => alphabet = Some(kind),
                Some(seen) if *seen != kind => return Err(Error::MixedAlphabet),
                _ => {}
            }
            axes.push(axis);
        }
        Self::new(axes)
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.axes {
            write!(f, "{}", a.letter())?;
        }
        Ok(())
    }
}
