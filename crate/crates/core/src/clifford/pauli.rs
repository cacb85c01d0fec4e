use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Phase-free Pauli string `X^x Z^z` (per qubit, X applied after Z).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PauliString {
    pub x: BitVector,
    pub z: BitVector,
}

impl PauliString {
    pub fn identity(qubits: usize) -> Self {
        Self {
            x: BitVector::zeros(qubits),
            z: BitVector::zeros(qubits),
        }
    }

    pub fn qubits(&self) -> usize {
        self.x.len()
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    /// `X^{x1}Z^{z1} · X^{x2}Z^{z2} = i^k X^{x1⊕x2} Z^{z1⊕z2}`, returned as `(k, string)`.
    pub fn product(&self, other: &Self) -> (u8, PauliString) {
        // Z^{z1} X^{x2} = (−1)^{z1·x2} X^{x2} Z^{z1}
        let k = if self.z.dot(&other.x) { 2 } else { 0 };
        let string = PauliString {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
        };
        (k, string)
    }

    /// Number of Y factors, i.e. `|x ∧ z|`.
    pub fn y_count(&self) -> usize {
        self.x.overlap(&self.z)
    }

    /// Symplectic product: true iff the two strings anticommute.
    pub fn anticommutes(&self, other: &Self) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// Letter for qubit `j`.
    pub fn letter(&self, j: usize) -> char {
        match (self.x.get(j), self.z.get(j)) {
            (false, false) => 'I',
            (true, false) => 'X',
            (false, true) => 'Z',
            (true, true) => 'Y',
        }
    }
}

/// `i^phase · X^x Z^z` on `n` qubits, with exact phase in `{1, i, −1, −i}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliTerm {
    phase: u8,
    string: PauliString,
}

impl PauliTerm {
    pub fn new(phase: u8, x: BitVector, z: BitVector) -> Result<Self> {
        x.ensure_same_len(&z)?;
        Ok(Self {
            phase: phase % 4,
            string: PauliString { x, z },
        })
    }

    pub fn from_string(phase: u8, string: PauliString) -> Self {
        Self {
            phase: phase % 4,
            string,
        }
    }

    pub fn identity(qubits: usize) -> Self {
        Self::from_string(0, PauliString::identity(qubits))
    }

    /// Single-qubit letter `X`, `Y` or `Z` on qubit `j` (phase chosen so `Y` is the usual Y).
    pub fn single(qubits: usize, j: usize, letter: char) -> Self {
        let mut s = PauliString::identity(qubits);
        let phase = match letter {
            'X' => {
                s.x.set(j, true);
                0
            }
            'Z' => {
                s.z.set(j, true);
                0
            }
            'Y' => {
                s.x.set(j, true);
                s.z.set(j, true);
                1
            }
            'I' => 0,
            other => panic!("unknown Pauli letter {other:?}"),
        };
        Self::from_string(phase, s)
    }

    pub fn qubits(&self) -> usize {
        self.string.qubits()
    }

    /// Exponent `k` in `i^k · X^x Z^z`.
    pub fn phase(&self) -> u8 {
        self.phase
    }

    pub fn string(&self) -> &PauliString {
        &self.string
    }

    pub fn x_mask(&self) -> &BitVector {
        &self.string.x
    }

    pub fn z_mask(&self) -> &BitVector {
        &self.string.z
    }

    pub fn is_identity(&self) -> bool {
        self.string.is_identity() && self.phase == 0
    }

    /// Exact product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let (swap, string) = self.string.product(&other.string);
        Self {
            phase: (self.phase + other.phase + swap) % 4,
            string,
        }
    }

    /// Multiplies the phase by `i^k`.
    pub fn times_i_pow(&self, k: u8) -> Self {
        Self {
            phase: (self.phase + k) % 4,
            string: self.string.clone(),
        }
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        !self.string.anticommutes(&other.string)
    }

    pub fn adjoint(&self) -> Self {
        // (i^a X^x Z^z)† = i^{−a} (−1)^{x·z} X^x Z^z
        let sign = if self.string.x.dot(&self.string.z) {
            2
        } else {
            0
        };
        Self {
            phase: (4 - self.phase + sign) % 4,
            string: self.string.clone(),
        }
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    /// Phase of the letter form: `self = i^k · (letters with Y = iXZ)`.
    pub fn letter_phase(&self) -> u8 {
        let y = (self.string.y_count() % 4) as u8;
        (self.phase + 4 - y) % 4
    }

    /// Letter string without phase, e.g. `"XZIY"`.
    pub fn letters(&self) -> String {
        (0..self.qubits()).map(|j| self.string.letter(j)).collect()
    }
}

impl fmt::Display for PauliTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let token = ["+1", "+i", "-1", "-i"][self.letter_phase() as usize];
        write!(f, "{token} {}", self.letters())
    }
}

impl fmt::Debug for PauliTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PauliTerm({self})")
    }
}

impl FromStr for PauliTerm {
    type Err = Error;

    /// Inverse of `Display`: a phase token from `{+1,+i,-1,-i}`, whitespace,
    /// then one letter per qubit.
    fn from_str(s: &str) -> Result<Self> {
        let parse_err = |column: usize, message: String| Error::Parse {
            line: 1,
            column,
            message,
        };
        let s = s.trim();
        let (token, letters) = s
            .split_once(char::is_whitespace)
            .ok_or_else(|| parse_err(1, "expected '<phase> <letters>'".into()))?;
        let base = match token {
            "+1" => 0u8,
            "+i" => 1,
            "-1" => 2,
            "-i" => 3,
            other => return Err(parse_err(1, format!("unknown phase token {other:?}"))),
        };
        let letters = letters.trim();
        let n = letters.chars().count();
        let mut string = PauliString::identity(n);
        for (j, c) in letters.chars().enumerate() {
            match c {
                'I' => {}
                'X' => string.x.set(j, true),
                'Z' => string.z.set(j, true),
                'Y' => {
                    string.x.set(j, true);
                    string.z.set(j, true);
                }
                other => {
                    return Err(parse_err(
                        token.len() + 2 + j,
                        format!("unknown Pauli letter {other:?}"),
                    ))
                }
            }
        }
        let y = (string.y_count() % 4) as u8;
        Ok(Self::from_string(base + y, string))
    }
}
