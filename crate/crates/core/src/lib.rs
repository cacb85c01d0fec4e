//! Majorana (Ising-anyon) Clifford stabilizer codes built from binary codes.
//!
//! The crate is layered bottom-up:
//!
//! - [`gf2`]: bit-packed vectors and linear codes over F₂.
//! - [`qgeometry`]: the form `q(x,y) = x·y + wt(x)wt(y)`, q-isotropic
//!   subspaces, their classification, and the puncture/extend correspondence
//!   with all-even self-orthogonal codes.
//! - [`clifford`]: exact Pauli-string algebra, Jordan–Wigner Majoranas,
//!   `Γ_x` products, and a dense-matrix backend for cross-checks.
//! - [`stabilizer`]: stabilizer codes from q-isotropic subspaces, detection
//!   verdicts, and Clifford distance.
//! - [`qmetric`]: graph-metric filtrations `E_0 ⊆ E_1 ⊆ …` for the standard
//!   generating sets.
//! - [`format`]: the textual code-file format.
//! - [`verify`]: the invariant checklist, exact and dense.

pub mod clifford;
pub mod error;
pub mod format;
pub mod gf2;
pub mod qgeometry;
pub mod qmetric;
pub mod stabilizer;
pub mod verify;

pub use error::{Error, Result};
