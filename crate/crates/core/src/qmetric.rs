//! Graph-metric filtrations `E_0 ⊆ E_1 ⊆ …` for distinguished error sets.
//!
//! `E_t` is the span of all products of at most `t` generators. Dimensions
//! are computed exactly by sparse elimination over Q(i) in the Pauli basis;
//! a dense floating-point route is kept as an independent cross-check.

use std::collections::BTreeMap;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use serde::Serialize;

use crate::clifford::{
    chirality_block_indices, gamma_of, majorana, numerical_rank, parity_operator, qubits_for,
    DenseOperator, GaussDyadic, OperatorSum, PauliString, PauliTerm, Realize, RANK_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Largest qubit count for filtration rank computations (operator space 4⁶).
pub const MAX_METRIC_QUBITS: usize = 6;

/// Restriction of a generating set to one chirality block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Chirality {
    Plus,
    Minus,
}

/// A distinguished error set `E`; `generators[0]` is the identity of the
/// space it acts on.
#[derive(Clone, Debug)]
pub struct GeneratingSet {
    pub label: String,
    /// Majorana mode count, for Clifford-type sets.
    pub modes: Option<usize>,
    pub qubits: usize,
    pub generators: Vec<OperatorSum>,
    /// Dimension of the full operator algebra the set acts in.
    pub ambient_dim: usize,
    /// Set when generators are compressed to a chirality block.
    pub block: Option<Chirality>,
}

impl GeneratingSet {
    fn check_size(&self) -> Result<()> {
        if self.qubits > MAX_METRIC_QUBITS {
            return Err(Error::Capacity {
                what: "metric filtration (qubits)",
                requested: self.qubits,
                cap: MAX_METRIC_QUBITS,
            });
        }
        Ok(())
    }

    /// True iff the adjoint of every generator lies in the generators' span.
    pub fn is_adjoint_closed(&self) -> bool {
        let mut span = ExactSpan::default();
        for g in &self.generators {
            span.insert(g);
        }
        self.generators.iter().all(|g| span.contains(&g.adjoint()))
    }

    /// Basis-state indices of the block, if compressed.
    pub fn block_indices(&self) -> Result<Option<Vec<usize>>> {
        match (self.block, self.modes) {
            (Some(ch), Some(m)) => Ok(Some(chirality_block_indices(m, ch == Chirality::Plus)?)),
            _ => Ok(None),
        }
    }

    /// Dense form of an element, compressed to the block when applicable.
    pub fn realize_element(&self, op: &OperatorSum) -> Result<DenseOperator> {
        let d = op.realize()?;
        Ok(match self.block_indices()? {
            Some(idx) => d.compress(&idx),
            None => d,
        })
    }
}

/// Identity plus the `3n` single-qubit Paulis.
pub fn gen_quantum_hamming(qubits: usize) -> Result<GeneratingSet> {
    if qubits == 0 {
        return Err(Error::Invalid("need at least one qubit".into()));
    }
    let mut generators = vec![OperatorSum::identity(qubits)];
    for j in 0..qubits {
        for letter in ['X', 'Y', 'Z'] {
            generators.push(OperatorSum::from_term(&PauliTerm::single(
                qubits, j, letter,
            )));
        }
    }
    Ok(GeneratingSet {
        label: format!("quantum-hamming(n={qubits})"),
        modes: None,
        qubits,
        generators,
        ambient_dim: 1 << (2 * qubits),
        block: None,
    })
}

/// Identity plus the `m` Majorana generators.
pub fn gen_full_clifford(modes: usize) -> Result<GeneratingSet> {
    if modes < 2 {
        return Err(Error::Invalid(format!(
            "need at least 2 modes, got {modes}"
        )));
    }
    let qubits = qubits_for(modes);
    let mut generators = vec![OperatorSum::identity(qubits)];
    for i in 0..modes {
        generators.push(OperatorSum::from_term(&majorana(i, modes)?));
    }
    Ok(GeneratingSet {
        label: format!("full-clifford(m={modes})"),
        modes: Some(modes),
        qubits,
        generators,
        ambient_dim: 1 << (2 * qubits),
        block: None,
    })
}

fn pair_products(modes: usize) -> Vec<PauliTerm> {
    let mut out = Vec::new();
    for k in 0..modes {
        for l in (k + 1)..modes {
            // Γ_{e_k + e_l} = i·γ_k γ_l, Hermitian
            out.push(gamma_of(&BitVector::from_indices(modes, [k, l])));
        }
    }
    out
}

/// Identity plus the `C(m,2)` Hermitian rank-2 products `i·γ_k γ_l`.
pub fn gen_spinorial(modes: usize) -> Result<GeneratingSet> {
    if modes < 3 {
        return Err(Error::Invalid(format!(
            "spinorial sets need m >= 3, got {modes}"
        )));
    }
    let qubits = qubits_for(modes);
    let mut generators = vec![OperatorSum::identity(qubits)];
    generators.extend(pair_products(modes).iter().map(OperatorSum::from_term));
    Ok(GeneratingSet {
        label: format!("spinorial(m={modes})"),
        modes: Some(modes),
        qubits,
        generators,
        ambient_dim: 1 << (2 * qubits),
        block: None,
    })
}

/// Rank-2 products restricted to one chirality block of an even mode count.
///
/// Each generator `A` is represented as `P_± A` on the full space, where
/// `P_± = (I ± 𝒫)/2`; this is exact because even products commute with `𝒫`,
/// and the map to the block is injective on such operators.
pub fn gen_semispinorial(modes: usize, chirality: Chirality) -> Result<GeneratingSet> {
    if !modes.is_multiple_of(2) || modes < 4 {
        return Err(Error::Invalid(format!(
            "semispinorial sets need an even m >= 4, got {modes}"
        )));
    }
    let qubits = qubits_for(modes);
    let parity = OperatorSum::from_term(&parity_operator(modes)?);
    let sign = match chirality {
        Chirality::Plus => GaussDyadic::ONE,
        Chirality::Minus => -GaussDyadic::ONE,
    };
    let projector = OperatorSum::identity(qubits)
        .add(&parity.scale(sign))
        .scale(GaussDyadic::inv_pow2(1));
    let mut generators = vec![projector.clone()];
    generators.extend(
        pair_products(modes)
            .iter()
            .map(|t| projector.mul(&OperatorSum::from_term(t))),
    );
    let block = 1usize << (qubits - 1);
    Ok(GeneratingSet {
        label: format!(
            "semispinorial(m={modes},{})",
            if chirality == Chirality::Plus {
                "+"
            } else {
                "-"
            }
        ),
        modes: Some(modes),
        qubits,
        generators,
        ambient_dim: block * block,
        block: Some(chirality),
    })
}

type Coeff = Complex<BigRational>;

fn to_exact(c: GaussDyadic) -> Coeff {
    let den = BigInt::one() << c.shift();
    Complex::new(
        BigRational::new(BigInt::from(c.re_num()), den.clone()),
        BigRational::new(BigInt::from(c.im_num()), den),
    )
}

/// Echelon basis over Q(i) for a span of operator sums, keyed by Pauli string.
#[derive(Default, Clone)]
struct ExactSpan {
    rows: BTreeMap<PauliString, BTreeMap<PauliString, Coeff>>,
}

impl ExactSpan {
    fn dim(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, op: &OperatorSum) -> BTreeMap<PauliString, Coeff> {
        let mut cand: BTreeMap<PauliString, Coeff> =
            op.terms().map(|(k, c)| (k.clone(), to_exact(*c))).collect();
        let mut cursor: Option<PauliString> = None;
        loop {
            let next = match &cursor {
                None => cand.keys().next().cloned(),
                Some(c) => cand
                    .range((
                        std::ops::Bound::Excluded(c.clone()),
                        std::ops::Bound::Unbounded,
                    ))
                    .next()
                    .map(|(k, _)| k.clone()),
            };
            let Some(key) = next else { break };
            match self.rows.get(&key) {
                Some(row) => {
                    // row has unit leading coefficient at `key`
                    let factor = cand[&key].clone();
                    for (k, v) in row {
                        let entry = cand.entry(k.clone()).or_insert_with(Coeff::zero);
                        *entry = entry.clone() - factor.clone() * v.clone();
                        if entry.is_zero() {
                            cand.remove(k);
                        }
                    }
                }
                None => cursor = Some(key),
            }
        }
        cand
    }

    fn contains(&self, op: &OperatorSum) -> bool {
        self.reduce(op).is_empty()
    }

    /// Adds `op` if independent; returns whether the span grew.
    fn insert(&mut self, op: &OperatorSum) -> bool {
        let cand = self.reduce(op);
        let Some((lead, lead_coeff)) = cand.iter().next() else {
            return false;
        };
        let inv = Coeff::one() / lead_coeff.clone();
        let lead = lead.clone();
        let row = cand
            .into_iter()
            .map(|(k, v)| (k, v * inv.clone()))
            .collect();
        self.rows.insert(lead, row);
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiltrationReport {
    pub label: String,
    pub dims: Vec<usize>,
    pub saturation_level: Option<usize>,
    pub ambient_dim: usize,
}

/// A computed filtration together with a spanning basis of each level.
#[derive(Clone, Debug)]
pub struct Filtration {
    pub report: FiltrationReport,
    /// `levels[t]`: elements first appearing at level `t`; `E_t` is spanned
    /// by `levels[0..=t]`.
    pub levels: Vec<Vec<OperatorSum>>,
}

impl Filtration {
    pub fn spanning_set(&self, t: usize) -> Vec<OperatorSum> {
        self.levels.iter().take(t + 1).flatten().cloned().collect()
    }

    /// Level at which `E_t` stops growing, or the last computed level.
    fn last_level(&self) -> usize {
        self.levels.len() - 1
    }
}

/// Dimensions `d_t = dim E_t` for `t = 0..=t_max` (or until saturation when
/// `t_max` is `None`), by exact rank.
pub fn filtration(gen: &GeneratingSet, t_max: Option<usize>) -> Result<FiltrationReport> {
    Ok(filtration_levels(gen, t_max)?.report)
}

pub fn filtration_levels(gen: &GeneratingSet, t_max: Option<usize>) -> Result<Filtration> {
    gen.check_size()?;
    let mut span = ExactSpan::default();
    span.insert(&gen.generators[0]);
    let mut levels = vec![vec![gen.generators[0].clone()]];
    let mut dims = vec![span.dim()];
    let mut saturation_level = None;
    let mut t = 0;
    loop {
        if span.dim() == gen.ambient_dim {
            saturation_level = Some(t);
            break;
        }
        if t_max.is_some_and(|m| t >= m) {
            break;
        }
        let mut fresh = Vec::new();
        for a in &levels[t] {
            for g in &gen.generators[1..] {
                let prod = a.mul(g);
                if span.insert(&prod) {
                    fresh.push(prod);
                }
            }
        }
        if fresh.is_empty() {
            saturation_level = Some(t);
            break;
        }
        t += 1;
        dims.push(span.dim());
        levels.push(fresh);
    }
    Ok(Filtration {
        report: FiltrationReport {
            label: gen.label.clone(),
            dims,
            saturation_level,
            ambient_dim: gen.ambient_dim,
        },
        levels,
    })
}

/// Incremental orthonormal basis with a residual-norm independence test.
struct DenseSpan {
    basis: Vec<DVector<Complex64>>,
}

impl DenseSpan {
    fn new() -> Self {
        Self { basis: Vec::new() }
    }

    fn residual(&self, v: &DVector<Complex64>) -> DVector<Complex64> {
        let mut r = v.clone();
        // two passes of modified Gram-Schmidt
        for _ in 0..2 {
            for q in &self.basis {
                let c = q.dotc(&r);
                r -= q * c;
            }
        }
        r
    }

    fn contains(&self, v: &DVector<Complex64>) -> bool {
        let scale = v.norm().max(1.0);
        self.residual(v).norm() <= RANK_TOLERANCE * scale
    }

    fn insert(&mut self, v: &DVector<Complex64>) -> bool {
        let r = self.residual(v);
        let norm = r.norm();
        if norm <= RANK_TOLERANCE * v.norm().max(1.0) {
            return false;
        }
        self.basis.push(r / Complex64::new(norm, 0.0));
        true
    }
}

/// Floating-point counterpart of [`filtration`] on dense (block) matrices.
///
/// Final dimensions are confirmed by SVD rank of all accepted elements.
pub fn filtration_dense(gen: &GeneratingSet, t_max: Option<usize>) -> Result<FiltrationReport> {
    gen.check_size()?;
    let dense: Vec<DenseOperator> = gen
        .generators
        .iter()
        .map(|g| gen.realize_element(g))
        .collect::<Result<_>>()?;
    let mut span = DenseSpan::new();
    let mut accepted = vec![dense[0].vectorize()];
    span.insert(&accepted[0]);
    let mut frontier = vec![dense[0].clone()];
    let mut dims = vec![1];
    let mut saturation_level = None;
    let mut t = 0;
    loop {
        if span.basis.len() == gen.ambient_dim {
            saturation_level = Some(t);
            break;
        }
        if t_max.is_some_and(|m| t >= m) {
            break;
        }
        let mut fresh = Vec::new();
        for a in &frontier {
            for g in &dense[1..] {
                let prod = a.mul(g);
                let v = prod.vectorize();
                if span.insert(&v) {
                    accepted.push(v);
                    fresh.push(prod);
                }
            }
        }
        if fresh.is_empty() {
            saturation_level = Some(t);
            break;
        }
        t += 1;
        dims.push(numerical_rank(&accepted));
        frontier = fresh;
    }
    Ok(FiltrationReport {
        label: gen.label.clone(),
        dims,
        saturation_level,
        ambient_dim: gen.ambient_dim,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub identity_only_at_zero: bool,
    pub adjoint_closed: bool,
    pub products_contained: bool,
    pub monotone: bool,
}

impl AxiomReport {
    pub fn all_hold(&self) -> bool {
        self.identity_only_at_zero
            && self.adjoint_closed
            && self.products_contained
            && self.monotone
    }
}

/// Checks the metric axioms on a computed filtration: `d_0 = 1`, each level
/// is closed under adjoints, and sampled products of level-`s` and level-`t`
/// elements lie in level `s + t`.
pub fn check_axioms<R: Rng>(
    gen: &GeneratingSet,
    filt: &Filtration,
    samples: usize,
    rng: &mut R,
) -> AxiomReport {
    let last = filt.last_level();
    let spans: Vec<ExactSpan> = (0..=last)
        .map(|t| {
            let mut s = ExactSpan::default();
            for op in filt.spanning_set(t) {
                s.insert(&op);
            }
            s
        })
        .collect();
    let adjoint_closed = gen.is_adjoint_closed()
        && (0..=last).all(|t| {
            filt.spanning_set(t)
                .iter()
                .all(|op| spans[t].contains(&op.adjoint()))
        });
    let random_element = |t: usize, rng: &mut R| {
        let set = filt.spanning_set(t);
        let mut acc = OperatorSum::zero(gen.qubits);
        for op in set {
            let c = GaussDyadic::new(rng.gen_range(-2..=2), rng.gen_range(-2..=2), 0);
            acc = acc.add(&op.scale(c));
        }
        acc
    };
    let mut products_contained = true;
    for _ in 0..samples {
        let s = rng.gen_range(0..=last);
        let t = rng.gen_range(0..=last);
        let target = (s + t).min(last);
        let prod = random_element(s, rng).mul(&random_element(t, rng));
        products_contained &= spans[target].contains(&prod);
    }
    let dims = &filt.report.dims;
    AxiomReport {
        identity_only_at_zero: dims[0] == 1,
        adjoint_closed,
        products_contained,
        monotone: dims.windows(2).all(|w| w[0] <= w[1]),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IsometryReport {
    pub is_isometry: bool,
    /// First level whose span is not preserved by conjugation.
    pub witness_level: Option<usize>,
}

/// True iff conjugation by `unitary` maps a spanning set of each `E_t`
/// (`t ≤ t_max`) into `E_t`, within the numerical rank tolerance.
pub fn isometry_check(
    gen: &GeneratingSet,
    unitary: &DenseOperator,
    t_max: usize,
) -> Result<IsometryReport> {
    let filt = filtration_levels(gen, Some(t_max))?;
    let block = gen.block_indices()?;
    let full_dim = 1usize << gen.qubits;
    let compress = match (unitary.dim(), &block) {
        (d, Some(idx)) if d == idx.len() => true,
        (d, _) if d == full_dim => false,
        (d, _) => {
            return Err(Error::Invalid(format!(
                "unitary of dimension {d} does not act on this generating set"
            )))
        }
    };
    for t in 0..=filt.last_level().min(t_max) {
        let elems: Vec<DenseOperator> = filt
            .spanning_set(t)
            .iter()
            .map(|op| {
                let d = op.realize()?;
                Ok(match (&block, compress) {
                    (Some(idx), true) => d.compress(idx),
                    _ => d,
                })
            })
            .collect::<Result<_>>()?;
        let mut span = DenseSpan::new();
        for e in &elems {
            span.insert(&e.vectorize());
        }
        if !elems
            .iter()
            .all(|e| span.contains(&unitary.conjugate(e).vectorize()))
        {
            return Ok(IsometryReport {
                is_isometry: false,
                witness_level: Some(t),
            });
        }
    }
    Ok(IsometryReport {
        is_isometry: true,
        witness_level: None,
    })
}

/// Unitary from the QR factorization of a random complex matrix.
pub fn random_unitary<R: Rng>(dim: usize, rng: &mut R) -> DenseOperator {
    let m = DMatrix::from_fn(dim, dim, |_, _| {
        Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
    });
    DenseOperator::from_matrix(m.qr().q())
}
