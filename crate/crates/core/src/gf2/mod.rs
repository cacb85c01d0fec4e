//! Linear algebra over F₂: bit-packed vectors and linear codes.

mod bitvec;
mod code;

pub use bitvec::BitVector;
pub use code::{hamming, hamming_dual, BinaryCode, DualDistance, WeightProfile, DEFAULT_ENUM_BITS};
