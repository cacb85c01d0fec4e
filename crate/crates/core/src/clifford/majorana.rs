//! Jordan–Wigner Majorana operators and their Hermitian products `Γ_x`.
//!
//! Mode indices are zero-based: mode `2j` is `Z^{⊗j} ⊗ X` and mode `2j + 1`
//! is `Z^{⊗j} ⊗ Y` on qubit `j`. For an odd mode count `2n + 1` the extra
//! mode is the parity operator of the first `2n`; that representation is not
//! faithful (the product of all generators is a scalar).

use super::pauli::PauliTerm;
use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::qgeometry::q;

/// Qubits used to represent `modes` Majoranas.
pub fn qubits_for(modes: usize) -> usize {
    modes / 2
}

/// The Majorana operator for zero-based mode `index` out of `modes`.
pub fn majorana(index: usize, modes: usize) -> Result<PauliTerm> {
    if modes < 2 {
        return Err(Error::Invalid(format!(
            "need at least 2 modes, got {modes}"
        )));
    }
    if index >= modes {
        return Err(Error::Invalid(format!(
            "mode {index} out of range for {modes} modes"
        )));
    }
    let n = qubits_for(modes);
    if index == 2 * n {
        return parity_operator_on(n);
    }
    let j = index / 2;
    let mut t = PauliTerm::identity(n);
    for k in 0..j {
        t = t.mul(&PauliTerm::single(n, k, 'Z'));
    }
    let letter = if index.is_multiple_of(2) { 'X' } else { 'Y' };
    Ok(t.mul(&PauliTerm::single(n, j, letter)))
}

/// `Γ_x = i^{w(w−1)/2} γ_{i1} ⋯ γ_{iw}` for the set bits `i1 < … < iw` of `x`.
///
/// The prefactor makes every `Γ_x` Hermitian with `Γ_x² = I`; `Γ_0 = I`.
pub fn gamma_of(x: &BitVector) -> PauliTerm {
    let modes = x.len();
    let n = qubits_for(modes);
    let mut t = PauliTerm::identity(n);
    for i in x.ones_iter() {
        t = t.mul(&majorana(i, modes).expect("index below mode count"));
    }
    let w = x.weight();
    t.times_i_pow(((w * w.saturating_sub(1) / 2) % 4) as u8)
}

fn parity_operator_on(n: usize) -> Result<PauliTerm> {
    let modes = 2 * n;
    let mut t = PauliTerm::identity(n);
    for i in 0..modes {
        t = t.mul(&majorana(i, modes)?);
    }
    Ok(t.times_i_pow((n % 4) as u8))
}

/// `𝒫 = iⁿ γ₁ γ₂ ⋯ γ_{2n}`.
pub fn parity_operator(modes: usize) -> Result<PauliTerm> {
    if !modes.is_multiple_of(2) || modes == 0 {
        return Err(Error::Invalid(format!(
            "parity operator needs a positive even mode count, got {modes}"
        )));
    }
    parity_operator_on(modes / 2)
}

/// `true` iff `Γ_x` and `Γ_y` anticommute, computed as `q(x, y)`.
pub fn commutation_sign(x: &BitVector, y: &BitVector) -> Result<bool> {
    x.ensure_same_len(y)?;
    Ok(q(x, y))
}

/// Operator-level counterpart of [`commutation_sign`] via exact Pauli products.
pub fn operator_anticommute(x: &BitVector, y: &BitVector) -> bool {
    !gamma_of(x).commutes_with(&gamma_of(y))
}
