use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::Serialize;

use super::BitVector;
use crate::error::{Error, Result};

/// Default cap on `log2` of the number of words an exhaustive scan may visit.
pub const DEFAULT_ENUM_BITS: usize = 28;

/// A linear code (subspace of F₂ⁿ) held in reduced row-echelon form.
///
/// Pivot columns are leftmost, so two codes are equal exactly when their
/// bases are equal.
#[derive(Clone)]
pub struct BinaryCode {
    length: usize,
    generators: Vec<BitVector>,
    basis: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl BinaryCode {
    /// Row-reduces `generators` into a canonical basis.
    pub fn new(length: usize, generators: Vec<BitVector>) -> Result<Self> {
        for g in &generators {
            if g.len() != length {
                return Err(Error::LengthMismatch {
                    expected: length,
                    found: g.len(),
                });
            }
        }
        let (basis, pivots) = rref(length, generators.clone());
        Ok(Self {
            length,
            generators,
            basis,
            pivots,
        })
    }

    pub fn zero(length: usize) -> Self {
        Self {
            length,
            generators: Vec::new(),
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(length: usize) -> Self {
        let rows: Vec<_> = (0..length).map(|i| BitVector::unit(length, i)).collect();
        Self::new(length, rows).expect("unit rows have matching length")
    }

    /// `{0ⁿ, 1ⁿ}`.
    pub fn repetition(length: usize) -> Self {
        Self::new(length, vec![BitVector::ones(length)]).expect("length matches")
    }

    /// Parses generator rows given as `0`/`1` strings.
    pub fn from_rows(length: usize, rows: &[&str]) -> Result<Self> {
        let gens = rows
            .iter()
            .map(|r| r.parse::<BitVector>())
            .collect::<Result<Vec<_>>>()?;
        Self::new(length, gens)
    }

    #[inline]
    pub fn length(&self) -> usize {
        self.length
    }

    #[inline]
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitVector] {
        &self.basis
    }

    /// Generators as originally supplied (possibly dependent).
    pub fn generators(&self) -> &[BitVector] {
        &self.generators
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` against the basis; the result is zero iff `v` is in the code.
    pub fn reduce(&self, v: &BitVector) -> BitVector {
        assert_eq!(
            v.len(),
            self.length,
            "vector length does not match code length"
        );
        let mut r = v.clone();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if r.get(p) {
                r.xor_assign(row);
            }
        }
        r
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        v.len() == self.length && self.reduce(v).is_zero()
    }

    /// Coefficients of `v` in the RREF basis, or `None` if `v` is not a codeword.
    pub fn coordinates(&self, v: &BitVector) -> Option<Vec<bool>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v.get(p)).collect())
    }

    /// True if every word of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &BinaryCode) -> bool {
        self.length == other.length && self.basis.iter().all(|b| other.contains(b))
    }

    /// `{x : x·c = 0 for all c}`.
    pub fn dual(&self) -> BinaryCode {
        let n = self.length;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..n)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = BitVector::unit(n, f);
                for (row, &p) in self.basis.iter().zip(&self.pivots) {
                    if row.get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect();
        BinaryCode::new(n, rows).expect("dual rows have code length")
    }

    /// Linear span of `self` and `other`.
    pub fn sum(&self, other: &BinaryCode) -> Result<BinaryCode> {
        let mut rows = self.basis.clone();
        rows.extend(other.basis.iter().cloned());
        BinaryCode::new(self.length, rows)
    }

    /// Visits every codeword in Gray-code order (starting at zero).
    pub fn for_each_word(&self, cap_bits: usize, mut f: impl FnMut(&BitVector)) -> Result<()> {
        let k = self.dimension();
        if k > cap_bits {
            return Err(Error::Capacity {
                what: "codeword enumeration (log2 words)",
                requested: k,
                cap: cap_bits,
            });
        }
        let mut word = BitVector::zeros(self.length);
        f(&word);
        for i in 1u64..(1u64 << k) {
            word.xor_assign(&self.basis[i.trailing_zeros() as usize]);
            f(&word);
        }
        Ok(())
    }

    /// All codewords, in Gray-code order.
    pub fn words(&self, cap_bits: usize) -> Result<Vec<BitVector>> {
        let mut out = Vec::with_capacity(1usize << self.dimension().min(cap_bits));
        self.for_each_word(cap_bits, |w| out.push(w.clone()))?;
        Ok(out)
    }

    /// Exact weight distribution by exhaustive enumeration.
    pub fn weight_profile(&self, cap_bits: usize) -> Result<WeightProfile> {
        let mut counts = vec![0u64; self.length + 1];
        self.for_each_word(cap_bits, |w| counts[w.weight()] += 1)?;
        Ok(WeightProfile::from_counts(counts))
    }

    /// [`Self::weight_profile`] with the default cap.
    pub fn min_distance(&self) -> Result<WeightProfile> {
        self.weight_profile(DEFAULT_ENUM_BITS)
    }

    /// Dual distance from the generator matrix alone: the largest `L` such that
    /// every `L − 1` columns of the basis matrix are linearly independent.
    ///
    /// The smallest dependent column set is a circuit, so its columns XOR to
    /// zero; the search looks for the smallest such set.
    pub fn dual_distance_by_columns(&self) -> DualDistance {
        let n = self.length;
        let k = self.dimension();
        if k == n {
            return DualDistance::Unbounded;
        }
        let columns: Vec<BitVector> = (0..n)
            .map(|j| {
                BitVector::from_bools(&self.basis.iter().map(|r| r.get(j)).collect::<Vec<_>>())
            })
            .collect();
        let mut by_value: HashMap<&BitVector, Vec<usize>> = HashMap::new();
        for (j, c) in columns.iter().enumerate() {
            by_value.entry(c).or_default().push(j);
        }
        // rank k means any k+1 columns are dependent
        for t in 1..=(k + 1).min(n) {
            let zero = BitVector::zeros(k);
            if has_zero_sum_subset(&columns, &by_value, t, 0, &zero) {
                return DualDistance::Finite(t);
            }
        }
        unreachable!("k + 1 columns of a rank-k matrix are always dependent")
    }

    /// Deletes coordinate `index` from every word.
    pub fn puncture_coordinate(&self, index: usize) -> Result<BinaryCode> {
        if index >= self.length {
            return Err(Error::Invalid(format!(
                "coordinate {index} out of range for length {}",
                self.length
            )));
        }
        BinaryCode::new(
            self.length - 1,
            self.basis.iter().map(|b| b.delete(index)).collect(),
        )
    }
}

fn has_zero_sum_subset(
    columns: &[BitVector],
    by_value: &HashMap<&BitVector, Vec<usize>>,
    remaining: usize,
    start: usize,
    acc: &BitVector,
) -> bool {
    if remaining == 1 {
        // the last column must equal the running sum
        return by_value
            .get(acc)
            .is_some_and(|idx| idx.iter().any(|&j| j >= start));
    }
    for j in start..columns.len() {
        if columns.len() - j < remaining {
            break;
        }
        let next = acc.xor(&columns[j]);
        if has_zero_sum_subset(columns, by_value, remaining - 1, j + 1, &next) {
            return true;
        }
    }
    false
}

fn rref(length: usize, mut rows: Vec<BitVector>) -> (Vec<BitVector>, Vec<usize>) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..length {
        let Some(found) = (rank..rows.len()).find(|&r| rows[r].get(col)) else {
            continue;
        };
        rows.swap(rank, found);
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row.get(col) {
                row.xor_assign(&pivot_row);
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    (rows, pivots)
}

impl PartialEq for BinaryCode {
    fn eq(&self, other: &Self) -> bool {
        self.length == other.length && self.basis == other.basis
    }
}

impl Eq for BinaryCode {}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BinaryCode")
            .field("length", &self.length)
            .field("basis", &self.basis)
            .finish()
    }
}

/// Weight distribution of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightProfile {
    pub counts: BTreeMap<usize, u64>,
    pub min_nonzero_weight: Option<usize>,
}

impl WeightProfile {
    fn from_counts(counts: Vec<u64>) -> Self {
        let min_nonzero_weight = counts.iter().skip(1).position(|&c| c > 0).map(|w| w + 1);
        Self {
            counts: counts
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c > 0)
                .collect(),
            min_nonzero_weight,
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }
}

/// Dual distance as certified by column independence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DualDistance {
    Finite(usize),
    /// The dual is the zero code, so no dual distance exists.
    Unbounded,
}

impl fmt::Display for DualDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DualDistance::Finite(d) => write!(f, "{d}"),
            DualDistance::Unbounded => f.write_str("unbounded"),
        }
    }
}

/// The `[2^s − 1, s]` simplex code: the dual of the Hamming code.
///
/// Column `j` is the `s`-bit binary expansion of `j + 1`, most significant bit
/// in row 0, so columns run through all nonzero `s`-bit vectors in ascending
/// order.
pub fn hamming_dual(s: usize) -> BinaryCode {
    assert!((2..=20).contains(&s), "simplex order must be in 2..=20");
    let n = (1usize << s) - 1;
    let rows = (0..s)
        .map(|r| BitVector::from_indices(n, (0..n).filter(|j| (j + 1) >> (s - 1 - r) & 1 == 1)))
        .collect();
    BinaryCode::new(n, rows).expect("simplex rows have length 2^s - 1")
}

/// The `[2^s − 1, 2^s − 1 − s]` Hamming code.
pub fn hamming(s: usize) -> BinaryCode {
    hamming_dual(s).dual()
}
