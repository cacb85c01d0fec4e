//! Invariant checklist for a stabilizer code, at the exact (combinatorial)
//! level and optionally against dense matrices.

use std::collections::BTreeSet;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::clifford::{gamma_of, DenseOperator, Realize, Sandwich, TOLERANCE};
use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BitVector};
use crate::qgeometry::{classify, isotropy_witness};
use crate::stabilizer::{DetectVerdict, StabilizerCode, VerdictCensus};

/// Largest mode count accepted at the dense level.
pub const MAX_DENSE_MODES: usize = 14;
/// Exhaustive error-vector sweeps up to this many modes; sampling above.
pub const EXACT_SWEEP_MODES: usize = 14;
pub const DENSE_SWEEP_MODES: usize = 10;
/// The exact sweep also samples once `2^{2n} · |P|²` exceeds `2^` this.
pub const EXACT_SWEEP_WORK_BITS: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerifyLevel {
    Combinatorial,
    Dense,
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub level: VerifyLevel,
    pub max_enum_bits: usize,
    pub max_dense_qubits: usize,
    /// Random error vectors drawn when a sweep is not exhaustive.
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            level: VerifyLevel::Combinatorial,
            max_enum_bits: crate::gf2::DEFAULT_ENUM_BITS,
            max_dense_qubits: crate::clifford::DEFAULT_DENSE_QUBITS,
            samples: 400,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub level: VerifyLevel,
    pub modes: usize,
    pub checks: Vec<CheckResult>,
    pub verdict_census: Option<VerdictCensus>,
    pub passed: bool,
}

impl VerifyReport {
    fn push(
        &mut self,
        name: &'static str,
        passed: bool,
        detail: impl Into<String>,
        witness: Option<String>,
    ) {
        self.passed &= passed;
        self.checks.push(CheckResult {
            name,
            passed,
            detail: detail.into(),
            witness,
        });
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed)
    }
}

/// Runs the checklist. Input problems (odd length, malformed signs) and
/// size limits are errors; failed invariants are recorded in the report.
pub fn verify(
    code: &BinaryCode,
    signs: Option<Vec<i8>>,
    options: &VerifyOptions,
) -> Result<VerifyReport> {
    let modes = code.length();
    if !modes.is_multiple_of(2) || modes == 0 {
        return Err(Error::Invalid(format!(
            "ambient length must be a positive even number, got {modes}"
        )));
    }
    if options.level == VerifyLevel::Dense {
        let cap = (MAX_DENSE_MODES / 2).min(options.max_dense_qubits);
        if modes / 2 > cap {
            return Err(Error::Capacity {
                what: "dense verification (qubits)",
                requested: modes / 2,
                cap,
            });
        }
    }
    let mut report = VerifyReport {
        level: options.level,
        modes,
        checks: Vec::new(),
        verdict_census: None,
        passed: true,
    };

    if let Some((x, y)) = isotropy_witness(code) {
        report.push(
            "commutation",
            false,
            "basis operators anticommute",
            Some(format!("x={x} y={y}")),
        );
        return Ok(report);
    }
    let sc = StabilizerCode::new(classify(code)?, signs)?;
    let gens = sc.generators();
    let basis = sc.stabilizer_code().basis();
    let mut clash = None;
    'outer: for (i, a) in gens.iter().enumerate() {
        for (j, b) in gens.iter().enumerate().skip(i + 1) {
            if !a.commutes_with(b) {
                clash = Some(format!("x={} y={}", basis[i], basis[j]));
                break 'outer;
            }
        }
    }
    report.push(
        "commutation",
        clash.is_none(),
        format!("{} generators pairwise commute", gens.len()),
        clash,
    );

    let non_hermitian = gens.iter().position(|g| !g.is_hermitian());
    report.push(
        "real-signs",
        non_hermitian.is_none(),
        "every signed generator is Hermitian",
        non_hermitian.map(|i| basis[i].to_string()),
    );

    let p = sc.projector();
    let k = sc.logical_count();
    match sc.projector_group_sum(options.max_enum_bits) {
        Ok(sum) => report.push(
            "group-sum",
            sum == p,
            "product of (I+g)/2 equals the normalized signed group sum",
            None,
        ),
        Err(Error::Capacity { .. }) => report.push(
            "group-sum",
            true,
            "skipped: group exceeds the enumeration cap",
            None,
        ),
        Err(e) => report.push("group-sum", false, e.to_string(), None),
    }
    report.push("projector-idempotent", p.mul(&p) == p, "P^2 = P", None);
    report.push(
        "projector-hermitian",
        p.is_hermitian(),
        "P^dagger = P",
        None,
    );
    let expected_trace = crate::clifford::GaussDyadic::from_int(1i64 << k);
    report.push(
        "projector-trace",
        p.trace() == expected_trace,
        format!("trace P = {} (expected 2^{k})", p.trace()),
        None,
    );

    // P has 2^dim terms, so each exact sandwich costs about 4^dim products
    let exact_modes =
        EXACT_SWEEP_MODES.min(EXACT_SWEEP_WORK_BITS.saturating_sub(2 * sc.subspace().dimension()));
    let (ys, exhaustive) = error_vectors(&sc, exact_modes, options);
    let mut mismatch = None;
    for y in &ys {
        let verdict = sc.detect(y)?;
        let ok = match (verdict, sc.sandwich_exact(&p, y)) {
            (DetectVerdict::Stabilizer, Some(Some(l))) => {
                let s = sc
                    .group_sign(y)
                    .map(|s| crate::clifford::GaussDyadic::from_int(s as i64));
                s == Some(l)
            }
            (DetectVerdict::Detectable, Some(None)) => true,
            (DetectVerdict::Logical, None) => true,
            _ => false,
        };
        if !ok {
            mismatch = Some(y.to_string());
            break;
        }
    }
    report.push(
        "verdict-correspondence",
        mismatch.is_none(),
        format!(
            "exact P·Γ_y·P agrees with the verdict on {} error vectors ({})",
            ys.len(),
            if exhaustive { "exhaustive" } else { "sampled" }
        ),
        mismatch,
    );
    report.verdict_census = Some(sc.census(options.max_enum_bits.min(20)));

    if options.level == VerifyLevel::Dense {
        dense_checks(&sc, &p, options, &mut report)?;
    }
    Ok(report)
}

/// All of F₂^{2n} when small; otherwise every vector of weight ≤ 2, the code
/// and complement bases, and seeded random samples.
fn error_vectors(
    sc: &StabilizerCode,
    exhaustive_modes: usize,
    options: &VerifyOptions,
) -> (Vec<BitVector>, bool) {
    let m = sc.modes();
    if m <= exhaustive_modes {
        return (BinaryCode::full(m).words(m).expect("within cap"), true);
    }
    let mut set = BTreeSet::new();
    set.insert(BitVector::zeros(m));
    for i in 0..m {
        set.insert(BitVector::unit(m, i));
        for j in (i + 1)..m {
            set.insert(BitVector::from_indices(m, [i, j]));
        }
    }
    set.extend(sc.stabilizer_code().basis().iter().cloned());
    set.extend(sc.complement().basis().iter().cloned());
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed);
    for _ in 0..options.samples {
        let bits: Vec<bool> = (0..m).map(|_| rng.gen()).collect();
        set.insert(BitVector::from_bools(&bits));
    }
    (set.into_iter().collect(), false)
}

fn dense_checks(
    sc: &StabilizerCode,
    p: &crate::clifford::OperatorSum,
    options: &VerifyOptions,
    report: &mut VerifyReport,
) -> Result<()> {
    let cap = options.max_dense_qubits;
    let dim = 1usize << sc.qubits();
    let id = DenseOperator::identity(dim);
    let half = Complex64::new(0.5, 0.0);
    let mut dp = id.clone();
    for g in sc.generators() {
        dp = dp.mul(&id.add(&g.realize_capped(cap)?).scale(half));
    }
    let exact = p.realize_capped(cap)?;
    let diff = dp.max_abs_diff(&exact);
    report.push(
        "dense-product",
        diff <= TOLERANCE,
        format!("dense product matches the exact expansion (max diff {diff:.1e})"),
        None,
    );
    let k = sc.logical_count();
    report.push(
        "dense-idempotent",
        dp.mul(&dp).approx_eq(&dp, TOLERANCE),
        format!("P^2 = P on {dim}x{dim} matrices"),
        None,
    );
    report.push(
        "dense-hermitian",
        dp.is_hermitian(TOLERANCE),
        "P^dagger = P",
        None,
    );
    let tr = dp.trace();
    let expected = (1u64 << k) as f64;
    report.push(
        "dense-trace",
        (tr - Complex64::new(expected, 0.0)).norm() <= TOLERANCE,
        format!("trace P = {:.6} (expected {expected})", tr.re),
        None,
    );
    let rank = dp.projector_rank();
    report.push(
        "dense-rank",
        rank == 1 << k,
        format!("rank P = {rank}"),
        None,
    );

    let (ys, exhaustive) = error_vectors(sc, DENSE_SWEEP_MODES, options);
    let mut mismatch = None;
    for y in &ys {
        let verdict = sc.detect(y)?;
        let sandwich = dp.mul(&dp.pauli_left_mul(&gamma_of(y)));
        let ok = match (verdict, sandwich.compare_to(&dp, TOLERANCE)) {
            (DetectVerdict::Stabilizer, Sandwich::Proportional(l)) => {
                let s = sc.group_sign(y).unwrap_or(0) as f64;
                (l - Complex64::new(s, 0.0)).norm() <= TOLERANCE
            }
            (DetectVerdict::Detectable, Sandwich::Zero) => true,
            (DetectVerdict::Logical, Sandwich::Neither) => true,
            _ => false,
        };
        if !ok {
            mismatch = Some(y.to_string());
            break;
        }
    }
    report.push(
        "dense-verdicts",
        mismatch.is_none(),
        format!(
            "dense P·Γ_y·P agrees with the verdict on {} error vectors ({})",
            ys.len(),
            if exhaustive { "exhaustive" } else { "sampled" }
        ),
        mismatch,
    );
    Ok(())
}
