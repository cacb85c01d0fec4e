//! Dense complex matrices used to cross-check the exact Pauli algebra.
//!
//! Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
//! basis-state index.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::majorana::{majorana, parity_operator, qubits_for};
use super::opsum::OperatorSum;
use super::pauli::PauliTerm;
use crate::error::{Error, Result};

/// Absolute entrywise tolerance for dense comparisons.
pub const TOLERANCE: f64 = 1e-9;

/// Largest qubit count realized densely unless overridden.
pub const DEFAULT_DENSE_QUBITS: usize = 12;

/// Singular values above this count toward numerical rank.
pub const RANK_TOLERANCE: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    matrix: DMatrix<Complex64>,
}

/// Outcome of comparing `M` against a reference projector `P`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Sandwich {
    /// `M = λP` with `λ ≠ 0`.
    Proportional(Complex64),
    Zero,
    Neither,
}

impl DenseOperator {
    pub fn from_matrix(matrix: DMatrix<Complex64>) -> Self {
        assert!(matrix.is_square(), "operators are square");
        Self { matrix }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_matrix(DMatrix::identity(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.matrix
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::from_matrix(&self.matrix * &other.matrix)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::from_matrix(&self.matrix + &other.matrix)
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self::from_matrix(&self.matrix - &other.matrix)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self::from_matrix(&self.matrix * factor)
    }

    pub fn adjoint(&self) -> Self {
        Self::from_matrix(self.matrix.adjoint())
    }

    pub fn trace(&self) -> Complex64 {
        self.matrix.trace()
    }

    /// `U A U†`.
    pub fn conjugate(&self, a: &Self) -> Self {
        Self::from_matrix(&self.matrix * &a.matrix * self.matrix.adjoint())
    }

    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        self.matrix
            .iter()
            .zip(other.matrix.iter())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_abs_diff(other) <= tol
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.matrix.iter().all(|v| v.norm() <= tol)
    }

    pub fn is_unitary(&self, tol: f64) -> bool {
        self.adjoint()
            .mul(self)
            .approx_eq(&Self::identity(self.dim()), tol)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.approx_eq(&self.adjoint(), tol)
    }

    /// Classifies `self` as `λ·reference`, zero, or neither.
    pub fn compare_to(&self, reference: &Self, tol: f64) -> Sandwich {
        if self.is_zero(tol) {
            return Sandwich::Zero;
        }
        let norm2: f64 = reference.matrix.iter().map(|v| v.norm_sqr()).sum();
        if norm2 == 0.0 {
            return Sandwich::Neither;
        }
        // least-squares λ = <R, M> / <R, R>
        let inner: Complex64 = reference
            .matrix
            .iter()
            .zip(self.matrix.iter())
            .map(|(r, m)| r.conj() * m)
            .sum();
        let lambda = inner / norm2;
        if lambda.norm() > tol && self.approx_eq(&reference.scale(lambda), tol) {
            Sandwich::Proportional(lambda)
        } else {
            Sandwich::Neither
        }
    }

    /// Number of eigenvalues above 1/2 of a Hermitian operator (rank of a projector).
    pub fn projector_rank(&self) -> usize {
        let eig = self.matrix.clone().symmetric_eigen();
        eig.eigenvalues.iter().filter(|&&v| v > 0.5).count()
    }

    /// Column-stacked entries.
    pub fn vectorize(&self) -> DVector<Complex64> {
        DVector::from_iterator(self.dim() * self.dim(), self.matrix.iter().copied())
    }

    /// `T·self` for a Pauli term `T`, using that `T` is monomial.
    pub fn pauli_left_mul(&self, term: &PauliTerm) -> Self {
        let n = term.qubits();
        assert_eq!(1usize << n, self.dim(), "dimension mismatch");
        let xm = qubit_mask(term.x_mask());
        let zm = qubit_mask(term.z_mask());
        let phase = Complex64::i().powu(term.phase() as u32);
        let mut out = DMatrix::zeros(self.dim(), self.dim());
        for b in 0..self.dim() {
            let f = if (zm & b).count_ones() % 2 == 1 {
                -phase
            } else {
                phase
            };
            out.row_mut(b ^ xm).copy_from(&(self.matrix.row(b) * f));
        }
        Self::from_matrix(out)
    }

    /// Principal submatrix on the given basis indices.
    pub fn compress(&self, indices: &[usize]) -> Self {
        Self::from_matrix(DMatrix::from_fn(indices.len(), indices.len(), |r, c| {
            self.matrix[(indices[r], indices[c])]
        }))
    }
}

/// Numerical rank of a set of vectors (singular values above [`RANK_TOLERANCE`]).
pub fn numerical_rank(vectors: &[DVector<Complex64>]) -> usize {
    let Some(first) = vectors.first() else {
        return 0;
    };
    let m = DMatrix::from_fn(first.len(), vectors.len(), |r, c| vectors[c][r]);
    m.svd(false, false)
        .singular_values
        .iter()
        .filter(|&&s| s > RANK_TOLERANCE)
        .count()
}

fn check_cap(qubits: usize, max_qubits: usize) -> Result<()> {
    if qubits > max_qubits {
        return Err(Error::Capacity {
            what: "dense realization (qubits)",
            requested: qubits,
            cap: max_qubits,
        });
    }
    Ok(())
}

/// Dense realization of exact operators.
pub trait Realize {
    fn realize_capped(&self, max_qubits: usize) -> Result<DenseOperator>;

    fn realize(&self) -> Result<DenseOperator> {
        self.realize_capped(DEFAULT_DENSE_QUBITS)
    }
}

fn qubit_mask(bits: &crate::gf2::BitVector) -> usize {
    let n = bits.len();
    bits.ones_iter()
        .fold(0usize, |acc, j| acc | 1 << (n - 1 - j))
}

fn accumulate_term(out: &mut DMatrix<Complex64>, term: &PauliTerm, coeff: Complex64) {
    let xm = qubit_mask(term.x_mask());
    let zm = qubit_mask(term.z_mask());
    let phase = Complex64::i().powu(term.phase() as u32) * coeff;
    // X^x Z^z |b> = (−1)^{z·b} |b ⊕ x>
    for b in 0..out.ncols() {
        let sign = if (zm & b).count_ones() % 2 == 1 {
            -1.0
        } else {
            1.0
        };
        out[(b ^ xm, b)] += phase * sign;
    }
}

impl Realize for PauliTerm {
    fn realize_capped(&self, max_qubits: usize) -> Result<DenseOperator> {
        check_cap(self.qubits(), max_qubits)?;
        let dim = 1usize << self.qubits();
        let mut m = DMatrix::zeros(dim, dim);
        accumulate_term(&mut m, self, Complex64::new(1.0, 0.0));
        Ok(DenseOperator::from_matrix(m))
    }
}

impl Realize for OperatorSum {
    fn realize_capped(&self, max_qubits: usize) -> Result<DenseOperator> {
        check_cap(self.qubits(), max_qubits)?;
        let dim = 1usize << self.qubits();
        let mut m = DMatrix::zeros(dim, dim);
        for (string, coeff) in self.terms() {
            accumulate_term(
                &mut m,
                &PauliTerm::from_string(0, string.clone()),
                coeff.to_complex(),
            );
        }
        Ok(DenseOperator::from_matrix(m))
    }
}

/// `U_ij = e^{iα}/√2 (I + γ_i γ_j)` for zero-based modes `i < j`.
///
/// Conjugation sends `γ_i ↦ −γ_j` and `γ_j ↦ γ_i`, fixing the other modes.
pub fn braid_unitary(i: usize, j: usize, modes: usize, alpha: f64) -> Result<DenseOperator> {
    if i >= j {
        return Err(Error::Invalid(format!(
            "braid needs i < j, got i={i}, j={j}"
        )));
    }
    let gi = majorana(i, modes)?;
    let gj = majorana(j, modes)?;
    let n = qubits_for(modes);
    let mut sum = OperatorSum::identity(n);
    sum.add_term(&gi.mul(&gj), super::GaussDyadic::ONE);
    let dense = sum.realize()?;
    let factor = Complex64::from_polar(1.0 / std::f64::consts::SQRT_2, alpha);
    Ok(dense.scale(factor))
}

/// Eigenprojectors `(I ± 𝒫)/2` of the parity (chirality) operator.
pub fn chirality_split(modes: usize) -> Result<(DenseOperator, DenseOperator)> {
    let p = parity_operator(modes)?.realize()?;
    let id = DenseOperator::identity(p.dim());
    let half = Complex64::new(0.5, 0.0);
    Ok((id.add(&p).scale(half), id.sub(&p).scale(half)))
}

/// Basis-state indices spanning the `±1` eigenspace of 𝒫 (which is diagonal
/// in the Jordan–Wigner basis).
pub fn chirality_block_indices(modes: usize, plus: bool) -> Result<Vec<usize>> {
    let p = parity_operator(modes)?.realize()?;
    let target = if plus { 1.0 } else { -1.0 };
    Ok((0..p.dim())
        .filter(|&b| (p.matrix()[(b, b)].re - target).abs() < 0.5)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::gamma_of;
    use crate::gf2::BitVector;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn pauli_left_mul_matches_product() {
        let m: DenseOperator = "+i XYZ".parse::<PauliTerm>().unwrap().realize().unwrap();
        let other = braid_unitary(1, 4, 6, 0.2).unwrap();
        for t in ["+1 XII", "-i YZX", "+1 ZZY", "-1 III"] {
            let t: PauliTerm = t.parse().unwrap();
            let base = m.mul(&other);
            let direct = t.realize().unwrap().mul(&base);
            assert!(base.pauli_left_mul(&t).approx_eq(&direct, TOLERANCE));
        }
    }

    #[test]
    fn realize_two_mode_product() {
        let g = majorana(0, 2).unwrap().mul(&majorana(1, 2).unwrap());
        let d = g.realize().unwrap();
        let iz = DMatrix::from_row_slice(2, 2, &[c(0., 1.), c(0., 0.), c(0., 0.), c(0., -1.)]);
        assert!(d.approx_eq(&DenseOperator::from_matrix(iz), TOLERANCE));
        assert!(PauliTerm::identity(3)
            .realize()
            .unwrap()
            .approx_eq(&DenseOperator::identity(8), TOLERANCE));
    }

    #[test]
    fn y_matrix() {
        let y = PauliTerm::single(1, 0, 'Y').realize().unwrap();
        let expect = DMatrix::from_row_slice(2, 2, &[c(0., 0.), c(0., -1.), c(0., 1.), c(0., 0.)]);
        assert!(y.approx_eq(&DenseOperator::from_matrix(expect), TOLERANCE));
    }

    #[test]
    fn homomorphism_on_random_pairs() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let n = rng.gen_range(1..=4);
            let rand_term = |rng: &mut ChaCha8Rng| {
                let x = BitVector::from_u64(n, rng.gen::<u64>() & ((1 << n) - 1));
                let z = BitVector::from_u64(n, rng.gen::<u64>() & ((1 << n) - 1));
                PauliTerm::new(rng.gen_range(0..4), x, z).unwrap()
            };
            let (a, b) = (rand_term(&mut rng), rand_term(&mut rng));
            let prod = a.mul(&b).realize().unwrap();
            let dense = a.realize().unwrap().mul(&b.realize().unwrap());
            assert!(prod.approx_eq(&dense, TOLERANCE));
            let sum = OperatorSum::from_term(&a).add(&OperatorSum::from_term(&b));
            let dsum = a.realize().unwrap().add(&b.realize().unwrap());
            assert!(sum.realize().unwrap().approx_eq(&dsum, TOLERANCE));
            // hermiticity agrees with the dense adjoint
            assert_eq!(
                a.is_hermitian(),
                a.realize().unwrap().is_hermitian(TOLERANCE)
            );
        }
    }

    #[test]
    fn cap_enforced() {
        assert!(matches!(
            PauliTerm::identity(5).realize_capped(4),
            Err(Error::Capacity { .. })
        ));
    }

    #[test]
    fn braid_properties() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let m = rng.gen_range(2..=8);
            let i = rng.gen_range(0..m - 1);
            let j = rng.gen_range(i + 1..m);
            let alpha = rng.gen_range(0.0..std::f64::consts::TAU);
            let u = braid_unitary(i, j, m, alpha).unwrap();
            assert!(u.is_unitary(TOLERANCE));
            let gi = majorana(i, m).unwrap().realize().unwrap();
            let gj = majorana(j, m).unwrap().realize().unwrap();
            assert!(u.conjugate(&gi).approx_eq(&gj.scale(c(-1., 0.)), TOLERANCE));
            assert!(u.conjugate(&gj).approx_eq(&gi, TOLERANCE));
            for k in (0..m).filter(|&k| k != i && k != j) {
                let gk = majorana(k, m).unwrap().realize().unwrap();
                assert!(u.conjugate(&gk).approx_eq(&gk, TOLERANCE));
            }
            // U² = e^{2iα} γ_i γ_j
            let sq = u.mul(&u);
            let expect = gi.mul(&gj).scale(Complex64::from_polar(1.0, 2.0 * alpha));
            assert!(sq.approx_eq(&expect, TOLERANCE));
        }
        assert!(braid_unitary(2, 2, 4, 0.0).is_err());
    }

    #[test]
    fn braid_two_modes_swaps() {
        let u = braid_unitary(0, 1, 2, 0.0).unwrap();
        let g1 = majorana(0, 2).unwrap().realize().unwrap();
        let g2 = majorana(1, 2).unwrap().realize().unwrap();
        let conj = u.conjugate(&g1);
        match conj.compare_to(&g2, TOLERANCE) {
            Sandwich::Proportional(l) => assert!((l - c(-1., 0.)).norm() < TOLERANCE),
            other => panic!("expected ±γ₂, got {other:?}"),
        }
    }

    #[test]
    fn chirality_projectors() {
        for n in 1..=5 {
            let modes = 2 * n;
            let (plus, minus) = chirality_split(modes).unwrap();
            let dim = 1 << n;
            assert_eq!(plus.projector_rank(), dim / 2);
            assert_eq!(minus.projector_rank(), dim / 2);
            assert!(plus
                .add(&minus)
                .approx_eq(&DenseOperator::identity(dim), TOLERANCE));
            assert!(plus.mul(&plus).approx_eq(&plus, TOLERANCE));
            assert!(minus.mul(&minus).approx_eq(&minus, TOLERANCE));
            assert_eq!(chirality_block_indices(modes, true).unwrap().len(), dim / 2);
            if n <= 3 {
                for v in 0..(1u64 << modes) {
                    let x = BitVector::from_u64(modes, v);
                    if x.parity() {
                        continue;
                    }
                    let g = gamma_of(&x).realize().unwrap();
                    assert!(plus.mul(&g).approx_eq(&g.mul(&plus), TOLERANCE));
                }
            }
        }
        assert!(chirality_split(3).is_err());
    }

    #[test]
    fn compare_to_cases() {
        let p = DenseOperator::identity(2).scale(c(0.5, 0.));
        assert!(matches!(p.scale(c(0., 2.)).compare_to(&p, TOLERANCE),
            Sandwich::Proportional(l) if (l - c(0., 2.)).norm() < TOLERANCE));
        assert_eq!(
            DenseOperator::from_matrix(DMatrix::zeros(2, 2)).compare_to(&p, TOLERANCE),
            Sandwich::Zero
        );
        let z = PauliTerm::single(1, 0, 'Z').realize().unwrap();
        assert_eq!(z.compare_to(&p, TOLERANCE), Sandwich::Neither);
    }
}
