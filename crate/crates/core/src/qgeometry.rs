//! Geometry of the form `q(x,y) = x·y + wt(x)·wt(y) (mod 2)`.
//!
//! `q(x,y)` is the commutation sign of the Majorana products `Γ_x` and `Γ_y`,
//! so q-isotropic subspaces are exactly the sets of mutually commuting
//! products. Every q-isotropic subspace is either all-even (and then
//! self-orthogonal in the usual sense) or splits as `D ∪ (D + u)` with `D` its
//! even-weight part. Appending a parity bit maps q-isotropic subspaces of F₂ⁿ
//! bijectively onto all-even self-orthogonal codes of F₂ⁿ⁺¹; deleting any
//! coordinate inverts it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::{BinaryCode, BitVector, DualDistance};

/// `x·y + wt(x)·wt(y) mod 2`. Panics on length mismatch; see [`q_form`].
#[inline]
pub fn q(x: &BitVector, y: &BitVector) -> bool {
    x.dot(y) ^ (x.parity() & y.parity())
}

/// Checked form of [`q`].
pub fn q_form(x: &BitVector, y: &BitVector) -> Result<bool> {
    x.ensure_same_len(y)?;
    Ok(q(x, y))
}

/// First basis pair `(x, y)` with `q(x,y) = 1`, if any.
///
/// By bilinearity this is `None` exactly when `q` vanishes on the whole code.
pub fn isotropy_witness(code: &BinaryCode) -> Option<(BitVector, BitVector)> {
    let b = code.basis();
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            if q(&b[i], &b[j]) {
                return Some((b[i].clone(), b[j].clone()));
            }
        }
    }
    None
}

pub fn is_q_isotropic(code: &BinaryCode) -> bool {
    isotropy_witness(code).is_none()
}

/// `C^{⊥_q} = {x : q(x,c) = 0 ∀c ∈ C}`.
///
/// Uses `q(x,c) = x·(c + wt(c)·1ⁿ)`, so the complement is the ordinary dual
/// of the shifted basis.
pub fn q_complement(code: &BinaryCode) -> BinaryCode {
    let n = code.length();
    let ones = BitVector::ones(n);
    let shifted = code
        .basis()
        .iter()
        .map(|c| if c.parity() { c.xor(&ones) } else { c.clone() })
        .collect();
    BinaryCode::new(n, shifted)
        .expect("shifted rows keep the code length")
        .dual()
}

/// Splits a code into its even-weight subcode and one odd-weight word.
///
/// When the code has an odd word, the even part has codimension one and the
/// returned `u` is the first odd-weight row of the RREF basis.
pub fn even_subcode(code: &BinaryCode) -> (BinaryCode, Option<BitVector>) {
    let basis = code.basis();
    let Some(odd_idx) = basis.iter().position(|b| b.parity()) else {
        return (code.clone(), None);
    };
    let u = basis[odd_idx].clone();
    let rows = basis
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != odd_idx)
        .map(|(_, b)| if b.parity() { b.xor(&u) } else { b.clone() })
        .collect();
    let even = BinaryCode::new(code.length(), rows).expect("rows keep the code length");
    (even, Some(u))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum ParityClass {
    AllEven,
    MixedParity,
}

impl std::fmt::Display for ParityClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            ParityClass::AllEven => "AllEven",
            ParityClass::MixedParity => "MixedParity",
        })
    }
}

/// A q-isotropic subspace together with its parity decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSubspace {
    code: BinaryCode,
    parity_class: ParityClass,
    even_part: BinaryCode,
    odd_coset_rep: Option<BitVector>,
}

impl QSubspace {
    pub fn code(&self) -> &BinaryCode {
        &self.code
    }

    pub fn parity_class(&self) -> ParityClass {
        self.parity_class
    }

    pub fn even_part(&self) -> &BinaryCode {
        &self.even_part
    }

    pub fn odd_coset_rep(&self) -> Option<&BitVector> {
        self.odd_coset_rep.as_ref()
    }

    pub fn length(&self) -> usize {
        self.code.length()
    }

    pub fn dimension(&self) -> usize {
        self.code.dimension()
    }

    /// Replaces the odd coset representative by another odd word of the code.
    pub fn with_odd_rep(mut self, u: BitVector) -> Result<Self> {
        if self.parity_class != ParityClass::MixedParity {
            return Err(Error::Invalid("all-even subspace has no odd coset".into()));
        }
        if !u.parity() || !self.code.contains(&u) {
            return Err(Error::Invalid(format!(
                "{u} is not an odd-weight word of the subspace"
            )));
        }
        self.odd_coset_rep = Some(u);
        Ok(self)
    }

    pub fn report(&self) -> ClassifyReport {
        ClassifyReport {
            isotropic: true,
            parity_class: Some(self.parity_class),
            length: self.length(),
            dimension: self.dimension(),
            even_dimension: Some(self.even_part.dimension()),
            odd_coset_rep: self.odd_coset_rep.clone(),
            basis: self.code.basis().to_vec(),
            witnesses: Vec::new(),
        }
    }
}

/// JSON-facing summary of a classification attempt.
#[derive(Clone, Debug, Serialize)]
pub struct ClassifyReport {
    pub isotropic: bool,
    pub parity_class: Option<ParityClass>,
    pub length: usize,
    pub dimension: usize,
    pub even_dimension: Option<usize>,
    pub odd_coset_rep: Option<BitVector>,
    pub basis: Vec<BitVector>,
    pub witnesses: Vec<BitVector>,
}

impl ClassifyReport {
    /// Report for a code that failed the isotropy check.
    pub fn rejected(code: &BinaryCode, x: &BitVector, y: &BitVector) -> Self {
        Self {
            isotropic: false,
            parity_class: None,
            length: code.length(),
            dimension: code.dimension(),
            even_dimension: None,
            odd_coset_rep: None,
            basis: code.basis().to_vec(),
            witnesses: vec![x.clone(), y.clone()],
        }
    }
}

/// Classifies a q-isotropic subspace as all-even or mixed-parity.
///
/// Non-isotropic input is rejected with a basis pair `(x, y)` where
/// `q(x,y) = 1`. The zero subspace is all-even.
pub fn classify(code: &BinaryCode) -> Result<QSubspace> {
    if let Some((x, y)) = isotropy_witness(code) {
        return Err(Error::NotIsotropic { x, y });
    }
    let (even_part, odd) = even_subcode(code);
    let parity_class = if odd.is_some() {
        ParityClass::MixedParity
    } else {
        ParityClass::AllEven
    };
    if parity_class == ParityClass::AllEven {
        // q restricted to even words is the dot product
        debug_assert!(code.is_subcode_of(&code.dual()));
    }
    Ok(QSubspace {
        code: code.clone(),
        parity_class,
        even_part,
        odd_coset_rep: odd,
    })
}

/// `{(x, wt(x) mod 2) : x ∈ S}` in F₂ⁿ⁺¹.
pub fn extend(subspace: &QSubspace) -> BinaryCode {
    let code = subspace.code();
    BinaryCode::new(
        code.length() + 1,
        code.basis().iter().map(|b| b.push(b.parity())).collect(),
    )
    .expect("extended rows have length n + 1")
}

/// Checks that a code is all-even and self-orthogonal, returning a witness otherwise.
pub fn check_even_self_orthogonal(code: &BinaryCode) -> Result<()> {
    let b = code.basis();
    if let Some(odd) = b.iter().find(|r| r.parity()) {
        return Err(Error::NotAllEven { word: odd.clone() });
    }
    for i in 0..b.len() {
        for j in (i + 1)..b.len() {
            if b[i].dot(&b[j]) {
                return Err(Error::NotSelfOrthogonal {
                    x: b[i].clone(),
                    y: b[j].clone(),
                });
            }
        }
    }
    Ok(())
}

/// Deletes `coordinate` (default: the last) from an all-even self-orthogonal code.
pub fn puncture(code: &BinaryCode, coordinate: Option<usize>) -> Result<QSubspace> {
    check_even_self_orthogonal(code)?;
    if code.length() < 2 {
        return Err(Error::Invalid(
            "cannot puncture a code of length < 2".into(),
        ));
    }
    let coord = coordinate.unwrap_or(code.length() - 1);
    let punctured = code.puncture_coordinate(coord)?;
    debug_assert_eq!(punctured.dimension(), code.dimension());
    classify(&punctured)
}

fn random_word<R: Rng>(code: &BinaryCode, rng: &mut R) -> BitVector {
    let mut w = BitVector::zeros(code.length());
    for b in code.basis() {
        if rng.gen::<bool>() {
            w.xor_assign(b);
        }
    }
    w
}

/// A random q-isotropic subspace of F₂ⁿ with dimension up to `dim`.
///
/// Grows a basis by drawing from `C^{⊥_q} \ C`, which keeps `q` identically
/// zero because `q(v,v) = 0`. Stops early if the subspace becomes maximal.
pub fn random_q_isotropic<R: Rng>(length: usize, dim: usize, rng: &mut R) -> BinaryCode {
    let mut code = BinaryCode::zero(length);
    while code.dimension() < dim {
        let comp = q_complement(&code);
        if comp.dimension() == code.dimension() {
            break;
        }
        let v = loop {
            let v = random_word(&comp, rng);
            if !code.contains(&v) {
                break v;
            }
        };
        let mut rows = code.basis().to_vec();
        rows.push(v);
        code = BinaryCode::new(length, rows).expect("rows keep the code length");
    }
    code
}

/// Even words orthogonal to every word of `code`.
fn even_orthogonal_space(code: &BinaryCode) -> BinaryCode {
    let mut rows = code.basis().to_vec();
    rows.push(BitVector::ones(code.length()));
    BinaryCode::new(code.length(), rows)
        .expect("rows keep the code length")
        .dual()
}

/// A random all-even self-orthogonal code of the given length with dimension up to `dim`.
pub fn random_even_self_orthogonal<R: Rng>(length: usize, dim: usize, rng: &mut R) -> BinaryCode {
    let mut code = BinaryCode::zero(length);
    while code.dimension() < dim {
        let allowed = even_orthogonal_space(&code);
        if allowed.dimension() == code.dimension() {
            break;
        }
        let v = loop {
            let v = random_word(&allowed, rng);
            if !code.contains(&v) {
                break v;
            }
        };
        let mut rows = code.basis().to_vec();
        rows.push(v);
        code = BinaryCode::new(length, rows).expect("rows keep the code length");
    }
    code
}

/// Randomized greedy search for an all-even self-orthogonal code in F₂ⁿ⁺¹
/// with dual distance at least `target_dual_distance`, returned punctured on
/// its last coordinate.
///
/// Each step draws a random even word orthogonal to the current code; a
/// maximal code that misses the target triggers a restart. `budget` bounds
/// the total number of draws. The result depends only on the arguments.
pub fn search_self_orthogonal(
    n: usize,
    target_dual_distance: usize,
    budget: u64,
    seed: u64,
) -> Option<QSubspace> {
    assert!(
        n >= 2 && target_dual_distance >= 2,
        "need n >= 2 and d >= 2"
    );
    let len = n + 1;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let meets = |code: &BinaryCode| match code.dual_distance_by_columns() {
        DualDistance::Unbounded => true,
        DualDistance::Finite(d) => d >= target_dual_distance,
    };
    let mut code = BinaryCode::zero(len);
    for _ in 0..budget {
        let allowed = even_orthogonal_space(&code);
        if allowed.dimension() == code.dimension() {
            code = BinaryCode::zero(len);
            continue;
        }
        let v = random_word(&allowed, &mut rng);
        if code.contains(&v) {
            continue;
        }
        let mut rows = code.basis().to_vec();
        rows.push(v);
        code = BinaryCode::new(len, rows).expect("rows keep the code length");
        if meets(&code) {
            return Some(
                puncture(&code, None).expect("search keeps the code even and self-orthogonal"),
            );
        }
    }
    None
}
