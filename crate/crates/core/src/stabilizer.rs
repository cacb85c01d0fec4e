//! Clifford stabilizer codes from q-isotropic subspaces of F₂^{2n}.
//!
//! A q-isotropic `C` of dimension `n − k` gives commuting Hermitian
//! involutions `{Γ_x : x ∈ C}` on `n` qubits. With signs `c_x` on a basis,
//! `P = 2^{-(n-k)} ∏ (I + c_x Γ_x)` projects onto a `2^k`-dimensional code.
//! An error `Γ_y` is a stabilizer when `y ∈ C`, detectable when
//! `y ∉ C^{⊥_q}`, and logical otherwise.

use serde::Serialize;

use crate::clifford::{gamma_of, GaussDyadic, OperatorSum, PauliTerm};
use crate::error::{Error, Result};
use crate::gf2::{hamming_dual, BinaryCode, BitVector, DualDistance};
use crate::qgeometry::{classify, q_complement, ParityClass, QSubspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DetectVerdict {
    /// `y ∈ C`: acts as `±I` on the code space.
    Stabilizer,
    /// `y ∉ C^{⊥_q}`: anticommutes with some stabilizer.
    Detectable,
    /// `y ∈ C^{⊥_q} \ C`: undetectable nontrivial error.
    Logical,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerCode {
    qubits: usize,
    subspace: QSubspace,
    signs: Vec<i8>,
    complement: BinaryCode,
    shifted: Vec<BitVector>,
}

/// Minimum-weight logical search outcome.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Distance {
    /// Smallest weight in `C^{⊥_q} \ C`, with the textually smallest witness of that weight.
    Exact { weight: usize, witness: BitVector },
    /// `C^{⊥_q} = C` (or no word matched the parity filter).
    NoLogical,
    /// Exhaustive search was out of reach; a certificate bounds the distance from below.
    LowerBound { bound: usize, certificate: String },
}

impl Distance {
    pub fn weight(&self) -> Option<usize> {
        match self {
            Distance::Exact { weight, .. } => Some(*weight),
            _ => None,
        }
    }

    pub fn witness(&self) -> Option<&BitVector> {
        match self {
            Distance::Exact { witness, .. } => Some(witness),
            _ => None,
        }
    }

    pub fn value(&self) -> DistanceValue {
        match self {
            Distance::Exact { weight, .. } => DistanceValue::Exact(*weight),
            Distance::NoLogical => DistanceValue::Token("no-logical"),
            Distance::LowerBound { bound, .. } => DistanceValue::LowerBound {
                lower_bound: *bound,
            },
        }
    }
}

/// JSON form of a distance: a number, `"no-logical"`, or `{"lower_bound": d}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum DistanceValue {
    Exact(usize),
    Token(&'static str),
    LowerBound { lower_bound: usize },
}

/// Which logical errors a distance search counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorParity {
    Any,
    EvenOnly,
}

impl ErrorParity {
    fn admits(self, v: &BitVector) -> bool {
        match self {
            ErrorParity::Any => true,
            ErrorParity::EvenOnly => !v.parity(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerdictCensus {
    pub stabilizer: u64,
    pub detectable: u64,
    pub logical: u64,
    /// `"exhaustive"` or `"counting"` (from subspace dimensions).
    pub method: &'static str,
}

impl StabilizerCode {
    /// Builds a code from a q-isotropic subspace of even length.
    ///
    /// `signs` are aligned with the subspace's RREF basis; `None` means all `+1`.
    pub fn new(subspace: QSubspace, signs: Option<Vec<i8>>) -> Result<Self> {
        let modes = subspace.length();
        if !modes.is_multiple_of(2) || modes == 0 {
            return Err(Error::Invalid(format!(
                "ambient length must be a positive even number, got {modes}"
            )));
        }
        let dim = subspace.dimension();
        let signs = signs.unwrap_or_else(|| vec![1; dim]);
        if signs.len() != dim {
            return Err(Error::Invalid(format!(
                "expected {dim} signs (one per basis vector), got {}",
                signs.len()
            )));
        }
        if let Some(bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::Invalid(format!("sign {bad} is not ±1")));
        }
        let complement = q_complement(subspace.code());
        let ones = BitVector::ones(modes);
        let shifted = subspace
            .code()
            .basis()
            .iter()
            .map(|c| if c.parity() { c.xor(&ones) } else { c.clone() })
            .collect();
        Ok(Self {
            qubits: modes / 2,
            subspace,
            signs,
            complement,
            shifted,
        })
    }

    /// Classifies `code` first; non-isotropic input is rejected with a witness.
    pub fn from_code(code: &BinaryCode, signs: Option<Vec<i8>>) -> Result<Self> {
        Self::new(classify(code)?, signs)
    }

    pub fn modes(&self) -> usize {
        2 * self.qubits
    }

    pub fn qubits(&self) -> usize {
        self.qubits
    }

    pub fn logical_count(&self) -> usize {
        self.qubits - self.subspace.dimension()
    }

    pub fn subspace(&self) -> &QSubspace {
        &self.subspace
    }

    pub fn stabilizer_code(&self) -> &BinaryCode {
        self.subspace.code()
    }

    pub fn complement(&self) -> &BinaryCode {
        &self.complement
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn parity_violating(&self) -> bool {
        self.subspace.parity_class() == ParityClass::MixedParity
    }

    /// `c_x Γ_x` for each basis vector.
    pub fn generators(&self) -> Vec<PauliTerm> {
        self.stabilizer_code()
            .basis()
            .iter()
            .zip(&self.signs)
            .map(|(b, &s)| {
                let g = gamma_of(b);
                if s < 0 {
                    g.times_i_pow(2)
                } else {
                    g
                }
            })
            .collect()
    }

    /// The group element for `g ∈ C`, as the ordered product of signed basis
    /// operators. `None` if `g ∉ C`.
    pub fn group_element(&self, g: &BitVector) -> Option<PauliTerm> {
        let coords = self.stabilizer_code().coordinates(g)?;
        let gens = self.generators();
        let mut t = PauliTerm::identity(self.qubits);
        for (on, gen) in coords.iter().zip(&gens) {
            if *on {
                t = t.mul(gen);
            }
        }
        Some(t)
    }

    /// `s ∈ {±1}` with `group_element(g) = s·Γ_g`, or `None` if `g ∉ C` or the
    /// phase is not real.
    pub fn group_sign(&self, g: &BitVector) -> Option<i8> {
        let elem = self.group_element(g)?;
        let gamma = gamma_of(g);
        debug_assert_eq!(elem.string(), gamma.string());
        match (elem.phase() + 4 - gamma.phase()) % 4 {
            0 => Some(1),
            2 => Some(-1),
            _ => None,
        }
    }

    /// `2^{-(n-k)} ∏_{x∈S} (I + c_x Γ_x)`, expanded exactly.
    pub fn projector(&self) -> OperatorSum {
        let mut p = OperatorSum::identity(self.qubits);
        let half = GaussDyadic::inv_pow2(1);
        for g in self.generators() {
            let factor = OperatorSum::identity(self.qubits)
                .add(&OperatorSum::from_term(&g))
                .scale(half);
            p = p.mul(&factor);
        }
        p
    }

    /// `2^{-(n-k)} Σ_{g∈C} sign(g) Γ_g`, built from the group rather than the product.
    pub fn projector_group_sum(&self, cap_bits: usize) -> Result<OperatorSum> {
        let mut p = OperatorSum::zero(self.qubits);
        let weight = GaussDyadic::inv_pow2(self.subspace.dimension() as u32);
        let mut failure = None;
        self.stabilizer_code()
            .for_each_word(cap_bits, |g| match self.group_sign(g) {
                Some(s) => p.add_term(&gamma_of(g), weight * GaussDyadic::from_int(s as i64)),
                None => failure = Some(g.clone()),
            })?;
        if let Some(g) = failure {
            return Err(Error::Invalid(format!(
                "stabilizer element for {g} has a non-real phase"
            )));
        }
        Ok(p)
    }

    /// True iff `y ∈ C^{⊥_q}`, i.e. `Γ_y` commutes with every stabilizer.
    pub fn in_complement(&self, y: &BitVector) -> bool {
        self.shifted.iter().all(|h| !h.dot(y))
    }

    pub fn detect(&self, y: &BitVector) -> Result<DetectVerdict> {
        if y.len() != self.modes() {
            return Err(Error::LengthMismatch {
                expected: self.modes(),
                found: y.len(),
            });
        }
        Ok(if self.stabilizer_code().contains(y) {
            DetectVerdict::Stabilizer
        } else if !self.in_complement(y) {
            DetectVerdict::Detectable
        } else {
            DetectVerdict::Logical
        })
    }

    /// Exact `P Γ_y P` compared with `P`: `Some(Some(λ))` for `λP`,
    /// `Some(None)` for zero, `None` for neither.
    pub fn sandwich_exact(
        &self,
        projector: &OperatorSum,
        y: &BitVector,
    ) -> Option<Option<GaussDyadic>> {
        let m = projector.mul_term(&gamma_of(y)).mul(projector);
        if m.is_zero() {
            return Some(None);
        }
        m.ratio_to(projector).map(Some)
    }

    /// Minimum weight over `C^{⊥_q} \ C` by enumerating the complement.
    pub fn clifford_distance(&self, cap_bits: usize) -> Result<Distance> {
        self.distance_by_enumeration(cap_bits, ErrorParity::Any)
    }

    /// As [`Self::clifford_distance`], counting only even-weight errors.
    pub fn even_clifford_distance(&self, cap_bits: usize) -> Result<Distance> {
        self.distance_by_enumeration(cap_bits, ErrorParity::EvenOnly)
    }

    fn distance_by_enumeration(&self, cap_bits: usize, parity: ErrorParity) -> Result<Distance> {
        let comp = &self.complement;
        let c = self.stabilizer_code();
        let total = comp.dimension();
        if total > cap_bits {
            return Err(Error::Capacity {
                what: "q-complement enumeration (log2 words)",
                requested: total,
                cap: cap_bits,
            });
        }
        // basis of C first, then complement vectors outside C: a word lies in
        // C exactly when its Gray index has no high bits
        let mut ordered: Vec<BitVector> = c.basis().to_vec();
        let mut span = c.clone();
        for v in comp.basis() {
            if !span.contains(v) {
                ordered.push(v.clone());
                span = span.sum(&BinaryCode::new(v.len(), vec![v.clone()])?)?;
            }
        }
        debug_assert_eq!(ordered.len(), total);
        let low = c.dimension();
        if total == low {
            return Ok(Distance::NoLogical);
        }
        let start = 1u64 << low;
        let mut word = BitVector::zeros(self.modes());
        let gray = start ^ (start >> 1);
        for (i, b) in ordered.iter().enumerate() {
            if gray >> i & 1 == 1 {
                word.xor_assign(b);
            }
        }
        let mut best: Option<(usize, BitVector)> = None;
        let mut consider = |w: &BitVector| {
            if !parity.admits(w) {
                return;
            }
            let wt = w.weight();
            match &best {
                Some((bw, bv)) if (wt, w) >= (*bw, bv) => {}
                _ => best = Some((wt, w.clone())),
            }
        };
        consider(&word);
        for i in (start + 1)..(1u64 << total) {
            word.xor_assign(&ordered[i.trailing_zeros() as usize]);
            consider(&word);
        }
        Ok(match best {
            Some((weight, witness)) => Distance::Exact { weight, witness },
            None => Distance::NoLogical,
        })
    }

    /// Increasing-weight search over F₂^{2n} for logical errors of weight at
    /// most `max_weight`. Returns `None` when nothing that light exists.
    pub fn logical_up_to_weight(&self, max_weight: usize, parity: ErrorParity) -> Option<Distance> {
        let n = self.modes();
        for w in 1..=max_weight.min(n) {
            let mut best: Option<BitVector> = None;
            for_each_combination(n, w, |idx| {
                let y = BitVector::from_indices(n, idx.iter().copied());
                if parity.admits(&y)
                    && self.in_complement(&y)
                    && !self.stabilizer_code().contains(&y)
                    && best.as_ref().is_none_or(|b| y < *b)
                {
                    best = Some(y);
                }
            });
            if let Some(witness) = best {
                return Some(Distance::Exact { weight: w, witness });
            }
        }
        None
    }

    /// Counts of each verdict; exhaustive over F₂^{2n} when `2n ≤ cap_bits`.
    pub fn census(&self, cap_bits: usize) -> VerdictCensus {
        let modes = self.modes();
        if modes <= cap_bits {
            let mut census = VerdictCensus {
                stabilizer: 0,
                detectable: 0,
                logical: 0,
                method: "exhaustive",
            };
            BinaryCode::full(modes)
                .for_each_word(cap_bits, |y| {
                    match self.detect(y).expect("length matches") {
                        DetectVerdict::Stabilizer => census.stabilizer += 1,
                        DetectVerdict::Detectable => census.detectable += 1,
                        DetectVerdict::Logical => census.logical += 1,
                    }
                })
                .expect("within cap");
            census
        } else {
            let pow = |d: usize| 1u64.checked_shl(d as u32).unwrap_or(u64::MAX);
            let stab = pow(self.subspace.dimension());
            let comp = pow(self.complement.dimension());
            VerdictCensus {
                stabilizer: stab,
                detectable: pow(modes).saturating_sub(comp),
                logical: comp - stab,
                method: "counting",
            }
        }
    }

    pub fn report(&self, options: &ReportOptions) -> CodeReport {
        let (distance, even_distance, method) = self.distances(options);
        CodeReport {
            modes: self.modes(),
            n: self.qubits,
            k: self.logical_count(),
            stabilizer_dimension: self.subspace.dimension(),
            parity_class: self.subspace.parity_class(),
            parity_violating: self.parity_violating(),
            clifford_distance: distance.value(),
            even_clifford_distance: even_distance.value(),
            distance_method: method,
            distance_certificate: match &distance {
                Distance::LowerBound { certificate, .. } => Some(certificate.clone()),
                _ => None,
            },
            logical_minweight_witness: distance.witness().cloned(),
            verdict_census: self.census(options.max_enum_bits),
            basis: self.stabilizer_code().basis().to_vec(),
            signs: self.signs.clone(),
        }
    }

    fn distances(&self, options: &ReportOptions) -> (Distance, Distance, &'static str) {
        if self.complement.dimension() <= options.max_enum_bits {
            let d = self
                .clifford_distance(options.max_enum_bits)
                .expect("within cap");
            let e = self
                .even_clifford_distance(options.max_enum_bits)
                .expect("within cap");
            return (d, e, "exhaustive");
        }
        if let Some(w) = options.weight_limit {
            if let Some(d) = self.logical_up_to_weight(w, ErrorParity::Any) {
                let e = self
                    .logical_up_to_weight(w, ErrorParity::EvenOnly)
                    .unwrap_or_else(|| Distance::LowerBound {
                        bound: w + 1,
                        certificate: "no even logical error up to the weight limit".into(),
                    });
                return (d, e, "weight-limited");
            }
        }
        match &options.certificate {
            Some((bound, text)) => {
                let lb = Distance::LowerBound {
                    bound: *bound,
                    certificate: text.clone(),
                };
                (lb.clone(), lb, "certificate")
            }
            None => {
                let lb = Distance::LowerBound {
                    bound: options.weight_limit.map_or(1, |w| w + 1),
                    certificate: "no logical error up to the weight limit".into(),
                };
                (lb.clone(), lb, "weight-limited")
            }
        }
    }
}

/// Controls how [`StabilizerCode::report`] computes distances.
#[derive(Clone, Debug)]
pub struct ReportOptions {
    pub max_enum_bits: usize,
    /// Increasing-weight search bound used when enumeration exceeds the cap.
    pub weight_limit: Option<usize>,
    /// Fallback `(bound, description)` when neither search settles the distance.
    pub certificate: Option<(usize, String)>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self {
            max_enum_bits: crate::gf2::DEFAULT_ENUM_BITS,
            weight_limit: None,
            certificate: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CodeReport {
    pub modes: usize,
    pub n: usize,
    pub k: usize,
    pub stabilizer_dimension: usize,
    pub parity_class: ParityClass,
    pub parity_violating: bool,
    pub clifford_distance: DistanceValue,
    pub even_clifford_distance: DistanceValue,
    pub distance_method: &'static str,
    pub distance_certificate: Option<String>,
    pub logical_minweight_witness: Option<BitVector>,
    pub verdict_census: VerdictCensus,
    pub basis: Vec<BitVector>,
    pub signs: Vec<i8>,
}

fn for_each_combination(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in (i + 1)..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// `span{(x, x) : x ∈ simplex_s} + span{(1ⁿ, 0ⁿ)}` in F₂^{2n}, `n = 2^s − 1`.
///
/// q-isotropic of dimension `s + 1` and mixed-parity, with odd coset
/// representative `(1ⁿ, 0ⁿ)`. Intended for `s ≥ 3`; `s = 2` also builds.
pub fn build_hamming_subspace(s: usize) -> QSubspace {
    let simplex = hamming_dual(s);
    let n = simplex.length();
    let mut rows: Vec<BitVector> = simplex.basis().iter().map(|x| x.concat(x)).collect();
    let u = BitVector::ones(n).concat(&BitVector::zeros(n));
    rows.push(u.clone());
    let code = BinaryCode::new(2 * n, rows).expect("rows have length 2n");
    classify(&code)
        .expect("doubled simplex plus (1,0) is q-isotropic")
        .with_odd_rep(u)
        .expect("(1,0) is an odd word of the subspace")
}

/// Lower bound on the Clifford distance of the Hamming-family code from the
/// column-independence dual distance of the simplex code.
pub fn hamming_certificate(s: usize) -> (usize, String) {
    let d = hamming_dual(s).dual_distance_by_columns();
    let bound = match d {
        DualDistance::Finite(d) if d < 3 => 1,
        _ => 3,
    };
    (
        bound,
        format!("simplex code of order {s} has column dual distance {d}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{Realize, TOLERANCE};
    use crate::qgeometry::is_q_isotropic;
    use num_complex::Complex64;

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    #[test]
    fn empty_code() {
        let code = StabilizerCode::from_code(&BinaryCode::zero(4), None).unwrap();
        assert_eq!(code.logical_count(), 2);
        assert_eq!(code.projector(), OperatorSum::identity(2));
        assert_eq!(code.detect(&bv("0000")).unwrap(), DetectVerdict::Stabilizer);
        let d = code.clifford_distance(28).unwrap();
        assert_eq!(d.weight(), Some(1));
        let census = code.census(28);
        assert_eq!(
            (census.stabilizer, census.detectable, census.logical),
            (1, 0, 15)
        );
    }

    #[test]
    fn single_generator() {
        let c = BinaryCode::from_rows(4, &["1100"]).unwrap();
        let code = StabilizerCode::from_code(&c, None).unwrap();
        let p = code.projector();
        assert_eq!(p.trace(), GaussDyadic::from_int(2));
        let dense = p.realize().unwrap();
        assert!((dense.trace() - Complex64::new(2.0, 0.0)).norm() < TOLERANCE);
        let census = code.census(28);
        assert_eq!(census.stabilizer + census.detectable + census.logical, 16);
    }

    #[test]
    fn rejects_bad_inputs() {
        let odd = BinaryCode::from_rows(3, &["110"]).unwrap();
        assert!(StabilizerCode::from_code(&odd, None).is_err());
        let c = BinaryCode::from_rows(4, &["1100"]).unwrap();
        assert!(StabilizerCode::from_code(&c, Some(vec![1, 1])).is_err());
        assert!(StabilizerCode::from_code(&c, Some(vec![0])).is_err());
        let bad = BinaryCode::from_rows(4, &["1000", "0100"]).unwrap();
        assert!(matches!(
            StabilizerCode::from_code(&bad, None),
            Err(Error::NotIsotropic { .. })
        ));
        let code = StabilizerCode::from_code(&c, None).unwrap();
        assert!(code.detect(&bv("110")).is_err());
    }

    #[test]
    fn hamming_subspace_shape() {
        let s3 = build_hamming_subspace(3);
        assert_eq!(s3.length(), 14);
        assert_eq!(s3.dimension(), 4);
        assert!(is_q_isotropic(s3.code()));
        assert_eq!(s3.parity_class(), ParityClass::MixedParity);
        assert_eq!(s3.odd_coset_rep().unwrap().to_string(), "11111110000000");
        assert_eq!(s3.even_part().dimension(), 3);
        let words = s3.code().words(28).unwrap();
        assert_eq!(words.iter().filter(|w| !w.parity()).count(), 8);
        // every odd word of this subspace has weight 7
        assert!(words.iter().filter(|w| w.parity()).all(|w| w.weight() == 7));

        let s4 = build_hamming_subspace(4);
        assert_eq!((s4.length(), s4.dimension()), (30, 5));
        assert!(is_q_isotropic(s4.code()));
    }

    #[test]
    fn hamming_s3_code() {
        let code = StabilizerCode::new(build_hamming_subspace(3), None).unwrap();
        assert_eq!(code.logical_count(), 3);
        assert_eq!(code.complement().dimension(), 10);
        let d = code.clifford_distance(28).unwrap();
        assert_eq!(d.weight(), Some(3));
        assert_eq!(
            code.logical_up_to_weight(3, ErrorParity::Any),
            Some(d.clone())
        );
        let census = code.census(28);
        assert_eq!(census.stabilizer, 16);
        assert_eq!(census.logical, 1024 - 16);
        assert_eq!(census.method, "exhaustive");
        for w in 1..=2 {
            for_each_combination(14, w, |idx| {
                let y = BitVector::from_indices(14, idx.iter().copied());
                assert_ne!(code.detect(&y).unwrap(), DetectVerdict::Logical);
            });
        }
        assert_eq!(code.projector().trace(), GaussDyadic::from_int(8));
    }

    #[test]
    fn group_sum_matches_product() {
        let code =
            StabilizerCode::new(build_hamming_subspace(3), Some(vec![1, -1, -1, 1])).unwrap();
        assert_eq!(code.projector(), code.projector_group_sum(28).unwrap());
        code.stabilizer_code()
            .for_each_word(28, |g| assert!(code.group_sign(g).is_some()))
            .unwrap();
    }

    #[test]
    fn exact_sandwich_matches_verdicts() {
        let c = BinaryCode::from_rows(6, &["110000", "001111"]).unwrap();
        let code = StabilizerCode::from_code(&c, Some(vec![-1, 1])).unwrap();
        let p = code.projector();
        assert_eq!(p.mul(&p), p);
        BinaryCode::full(6)
            .for_each_word(28, |y| {
                let s = code.sandwich_exact(&p, y);
                match code.detect(y).unwrap() {
                    DetectVerdict::Stabilizer => {
                        let l = s.unwrap().unwrap();
                        assert!(l == GaussDyadic::ONE || l == -GaussDyadic::ONE);
                    }
                    DetectVerdict::Detectable => assert_eq!(s, Some(None)),
                    DetectVerdict::Logical => assert_eq!(s, None),
                }
            })
            .unwrap();
    }

    #[test]
    fn combinations_enumerate_all() {
        let mut count = 0;
        for_each_combination(6, 3, |idx| {
            assert!(idx.windows(2).all(|w| w[0] < w[1]));
            count += 1;
        });
        assert_eq!(count, 20);
    }

    #[test]
    fn certificate() {
        assert_eq!(hamming_certificate(5).0, 3);
        let sc = StabilizerCode::new(build_hamming_subspace(5), None).unwrap();
        let r = sc.report(&ReportOptions {
            certificate: Some(hamming_certificate(5)),
            ..ReportOptions::default()
        });
        assert_eq!((r.n, r.k), (31, 25));
        assert_eq!(r.distance_method, "certificate");
        assert_eq!(
            r.clifford_distance,
            DistanceValue::LowerBound { lower_bound: 3 }
        );
    }

    #[test]
    fn weight_limited_report() {
        let sc = StabilizerCode::new(build_hamming_subspace(4), None).unwrap();
        let r = sc.report(&ReportOptions {
            max_enum_bits: 20,
            weight_limit: Some(3),
            certificate: None,
        });
        assert_eq!((r.n, r.k), (15, 10));
        assert_eq!(r.distance_method, "weight-limited");
        assert_eq!(r.clifford_distance, DistanceValue::Exact(3));
        assert_eq!(
            r.even_clifford_distance,
            DistanceValue::LowerBound { lower_bound: 4 }
        );
        // without a hit inside the limit, the limit itself bounds the distance
        let r = sc.report(&ReportOptions {
            max_enum_bits: 20,
            weight_limit: Some(2),
            certificate: None,
        });
        assert_eq!(
            r.clifford_distance,
            DistanceValue::LowerBound { lower_bound: 3 }
        );
    }
}
