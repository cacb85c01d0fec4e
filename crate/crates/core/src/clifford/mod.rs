//! Exact operator algebra for Majorana/Clifford generators.

mod dense;
mod majorana;
mod opsum;
mod pauli;
mod scalar;

pub use dense::{
    braid_unitary, chirality_block_indices, chirality_split, numerical_rank, DenseOperator,
    Realize, Sandwich, DEFAULT_DENSE_QUBITS, RANK_TOLERANCE, TOLERANCE,
};
pub use majorana::{
    commutation_sign, gamma_of, majorana, operator_anticommute, parity_operator, qubits_for,
};
pub use opsum::OperatorSum;
pub use pauli::{PauliString, PauliTerm};
pub use scalar::GaussDyadic;
