use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use super::pauli::{PauliString, PauliTerm};
use super::scalar::GaussDyadic;

/// Exact linear combination of Pauli strings with Gaussian dyadic coefficients.
///
/// The coefficient of a key `(x, z)` multiplies the phase-free string
/// `X^x Z^z`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorSum {
    qubits: usize,
    terms: BTreeMap<PauliString, GaussDyadic>,
}

impl OperatorSum {
    pub fn zero(qubits: usize) -> Self {
        Self {
            qubits,
            terms: BTreeMap::new(),
        }
    }

    pub fn identity(qubits: usize) -> Self {
        Self::from_term(&PauliTerm::identity(qubits))
    }

    pub fn from_term(term: &PauliTerm) -> Self {
        let mut s = Self::zero(term.qubits());
        s.add_string(term.string().clone(), GaussDyadic::i_pow(term.phase()));
        s
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PauliString, &GaussDyadic)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, string: &PauliString) -> GaussDyadic {
        self.terms.get(string).copied().unwrap_or(GaussDyadic::ZERO)
    }

    /// Trace normalized so that `trace(I) = 1`, i.e. the identity coefficient.
    pub fn normalized_trace(&self) -> GaussDyadic {
        self.coefficient(&PauliString::identity(self.qubits))
    }

    /// Matrix trace `2^n · coeff(I)`.
    pub fn trace(&self) -> GaussDyadic {
        self.normalized_trace().mul_pow2(self.qubits as u32)
    }

    pub fn add_string(&mut self, string: PauliString, coeff: GaussDyadic) {
        assert_eq!(string.qubits(), self.qubits, "qubit count mismatch");
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(string) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = *o.get() + coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_term(&mut self, term: &PauliTerm, coeff: GaussDyadic) {
        self.add_string(
            term.string().clone(),
            coeff * GaussDyadic::i_pow(term.phase()),
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_string(k.clone(), *c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(-GaussDyadic::ONE))
    }

    pub fn scale(&self, factor: GaussDyadic) -> Self {
        let mut out = Self::zero(self.qubits);
        if factor.is_zero() {
            return out;
        }
        for (k, c) in &self.terms {
            out.terms.insert(k.clone(), *c * factor);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.qubits, other.qubits, "qubit count mismatch");
        let mut out = Self::zero(self.qubits);
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                let (k, string) = ka.product(kb);
                out.add_string(string, *ca * *cb * GaussDyadic::i_pow(k));
            }
        }
        out
    }

    pub fn mul_term(&self, term: &PauliTerm) -> Self {
        self.mul(&Self::from_term(term))
    }

    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero(self.qubits);
        for (k, c) in &self.terms {
            let adj = PauliTerm::from_string(0, k.clone()).adjoint();
            out.add_string(k.clone(), c.conj() * GaussDyadic::i_pow(adj.phase()));
        }
        out
    }

    pub fn is_hermitian(&self) -> bool {
        self.adjoint() == *self
    }

    /// `Some(λ)` when `self = λ · other` exactly (with `other` nonzero).
    pub fn ratio_to(&self, other: &Self) -> Option<GaussDyadic> {
        let (k0, c0) = other.terms.iter().next()?;
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let s0 = self.coefficient(k0);
        if s0.is_zero() {
            return None;
        }
        // λ = s0 / c0; verify by cross-multiplication to stay exact
        for (k, c) in &other.terms {
            let s = self.coefficient(k);
            if s * *c0 != s0 * *c {
                return None;
            }
        }
        Some(s0 * c0.checked_inv()?)
    }
}

impl fmt::Debug for OperatorSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("OperatorSum[")?;
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let letters: String = (0..self.qubits).map(|j| k.letter(j)).collect();
            write!(f, "{c}·{letters}")?;
        }
        f.write_str("]")
    }
}
