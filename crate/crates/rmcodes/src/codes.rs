//! Binary linear codes: exact weight distributions by bit-packed Gray-code
//! enumeration, minimum distance, puncture/extend, duals, and the constructive
//! uniqueness verifier for `[2^m, 1+m, 2^(m-1)]` codes.

use std::collections::BTreeMap;
use std::fmt;
use std::io::{BufRead, Write};
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::binlinalg::{BitMatrix, BitVector, Span};
use crate::error::{Error, Result};

/// Default cap on the enumeration dimension (`2^k` codewords).
pub const DEFAULT_ENUMERATION_BUDGET: usize = 30;

/// Chunks of this many messages are handed to worker threads.
const GRAY_CHUNK_BITS: usize = 18;

/// Exact multiset of codeword weights.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WeightDistribution {
    counts: BTreeMap<u32, u64>,
}

impl WeightDistribution {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_counts(counts: impl IntoIterator<Item = (u32, u64)>) -> Self {
        let mut d = Self::new();
        for (w, c) in counts {
            d.add(w, c);
        }
        d
    }

    pub fn add(&mut self, weight: u32, count: u64) {
        if count > 0 {
            *self.counts.entry(weight).or_insert(0) += count;
        }
    }

    pub fn merge(&mut self, other: &WeightDistribution) {
        for (&w, &c) in &other.counts {
            self.add(w, c);
        }
    }

    pub fn count(&self, weight: u32) -> u64 {
        self.counts.get(&weight).copied().unwrap_or(0)
    }

    /// Total number of codewords.
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn min_nonzero_weight(&self) -> Option<u32> {
        self.counts.keys().copied().find(|&w| w > 0)
    }

    pub fn max_weight(&self) -> Option<u32> {
        self.counts.keys().next_back().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u64)> + '_ {
        self.counts.iter().map(|(&w, &c)| (w, c))
    }

    pub fn weights(&self) -> impl Iterator<Item = u32> + '_ {
        self.counts.keys().copied()
    }

    /// True if `count(w) == count(n - w)` for all `w`.
    pub fn is_complement_symmetric(&self, n: u32) -> bool {
        self.iter().all(|(w, c)| w <= n && self.count(n - w) == c)
    }

    /// CSV lines `weight,count` sorted by weight.
    pub fn write_csv(&self, mut out: impl Write) -> std::io::Result<()> {
        for (w, c) in self.iter() {
            writeln!(out, "{w},{c}")?;
        }
        Ok(())
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in self.iter() {
            writeln!(f, "{w},{c}")?;
        }
        Ok(())
    }
}

/// A binary linear `[n, k]` code, held as a full-row-rank generator matrix.
#[derive(Debug)]
pub struct LinearCode {
    generator: BitMatrix,
    cached_weights: OnceLock<WeightDistribution>,
}

impl Clone for LinearCode {
    fn clone(&self) -> Self {
        let cached = OnceLock::new();
        if let Some(w) = self.cached_weights.get() {
            let _ = cached.set(w.clone());
        }
        LinearCode {
            generator: self.generator.clone(),
            cached_weights: cached,
        }
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.generator == other.generator
    }
}
impl Eq for LinearCode {}

impl LinearCode {
    /// Wraps a generator matrix, requiring full row rank.
    pub fn from_generator(generator: BitMatrix) -> Result<LinearCode> {
        if generator.rank() != generator.rows() {
            return Err(Error::RankDeficient);
        }
        Ok(LinearCode {
            generator,
            cached_weights: OnceLock::new(),
        })
    }

    /// Builds the code spanned by the given rows, reducing them to a basis.
    /// The basis keeps the first linearly independent rows in input order.
    pub fn from_span(rows: &BitMatrix) -> LinearCode {
        let mut span = Span::new(rows.cols());
        let mut basis = Vec::new();
        for r in rows.row_iter() {
            if span.insert(r) {
                basis.push(r.clone());
            }
        }
        LinearCode {
            generator: BitMatrix::from_rows(basis, rows.cols()),
            cached_weights: OnceLock::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.generator.cols()
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// Encodes a message given as the set bits of `msg`.
    pub fn encode(&self, msg: u64) -> BitVector {
        let mut cw = BitVector::zeros(self.n());
        for i in 0..self.k() {
            if (msg >> i) & 1 == 1 {
                cw.xor_assign(self.generator.row(i));
            }
        }
        cw
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.generator.row_space_contains(v)
    }

    /// True if the all-one word belongs to the code.
    pub fn contains_all_one(&self) -> bool {
        self.n() > 0 && self.contains(&BitVector::ones(self.n()))
    }

    /// Alias: a code containing the all-one word is closed under complement.
    pub fn is_self_complementary(&self) -> bool {
        self.contains_all_one()
    }

    /// Exact weight distribution under the default enumeration budget.
    pub fn weight_distribution(&self) -> Result<&WeightDistribution> {
        self.weight_distribution_with_budget(DEFAULT_ENUMERATION_BUDGET)
    }

    /// Exact weight distribution via Gray-code traversal: successive codewords
    /// differ by a single generator row. `O(2^k * n/64)` word operations, run
    /// in parallel over subcubes of the message space.
    pub fn weight_distribution_with_budget(&self, budget: usize) -> Result<&WeightDistribution> {
        if let Some(w) = self.cached_weights.get() {
            return Ok(w);
        }
        if self.k() > budget {
            return Err(Error::BudgetExceeded {
                k: self.k(),
                budget,
            });
        }
        let dist = self.enumerate_weights();
        Ok(self.cached_weights.get_or_init(|| dist))
    }

    fn enumerate_weights(&self) -> WeightDistribution {
        let k = self.k();
        let n = self.n();
        let rows: Vec<&[u64]> = (0..k).map(|i| self.generator.row(i).words()).collect();
        let words = n.div_ceil(64);

        let scan = |first: u64, count: u64| -> Vec<u64> {
            // Enumerates messages gray(c) for c in [first, first + count),
            // starting from the codeword of gray(first).
            let mut counts = vec![0u64; n + 1];
            let mut cw = vec![0u64; words];
            let g0 = first ^ (first >> 1);
            for (i, row) in rows.iter().enumerate() {
                if (g0 >> i) & 1 == 1 {
                    for (a, b) in cw.iter_mut().zip(*row) {
                        *a ^= *b;
                    }
                }
            }
            let weight_of = |cw: &[u64]| cw.iter().map(|w| w.count_ones() as usize).sum::<usize>();
            counts[weight_of(&cw)] += 1;
            for c in first + 1..first + count {
                let i = c.trailing_zeros() as usize;
                for (a, b) in cw.iter_mut().zip(rows[i]) {
                    *a ^= *b;
                }
                counts[weight_of(&cw)] += 1;
            }
            counts
        };

        let total = 1u64 << k;
        let counts = if k <= GRAY_CHUNK_BITS {
            scan(0, total)
        } else {
            // Within a chunk of 2^q consecutive Gray indices only the low q
            // rows flip, so each chunk is an independent subcube walk.
            let chunk = 1u64 << GRAY_CHUNK_BITS;
            (0..total / chunk)
                .into_par_iter()
                .map(|c| scan(c * chunk, chunk))
                .reduce(
                    || vec![0u64; n + 1],
                    |mut a, b| {
                        for (x, y) in a.iter_mut().zip(b) {
                            *x += y;
                        }
                        a
                    },
                )
        };

        let mut dist = WeightDistribution::new();
        for (w, &c) in counts.iter().enumerate() {
            dist.add(w as u32, c);
        }
        dist
    }

    /// Smallest nonzero codeword weight.
    pub fn minimum_distance(&self) -> Result<u32> {
        self.minimum_distance_with_budget(DEFAULT_ENUMERATION_BUDGET)
    }

    pub fn minimum_distance_with_budget(&self, budget: usize) -> Result<u32> {
        if self.k() == 0 {
            return Err(Error::ZeroCode);
        }
        let dist = self.weight_distribution_with_budget(budget)?;
        Ok(dist
            .min_nonzero_weight()
            .expect("nonzero code has a nonzero weight"))
    }

    /// Appends an overall parity-check coordinate at the last index.
    pub fn extend_parity(&self) -> LinearCode {
        let rows = self
            .generator
            .row_iter()
            .map(|r| r.with_appended_bit(r.weight() % 2 == 1))
            .collect();
        LinearCode {
            generator: BitMatrix::from_rows(rows, self.n() + 1),
            cached_weights: OnceLock::new(),
        }
    }

    /// Deletes one coordinate; the dimension may drop and is recomputed.
    pub fn puncture(&self, pos: usize) -> Result<LinearCode> {
        if pos >= self.n() {
            return Err(Error::BadPuncturePosition { pos, n: self.n() });
        }
        let rows: Vec<BitVector> = self
            .generator
            .row_iter()
            .map(|r| r.with_deleted_bit(pos))
            .collect();
        Ok(LinearCode::from_span(&BitMatrix::from_rows(
            rows,
            self.n() - 1,
        )))
    }

    /// The dual `[n, n-k]` code.
    pub fn dual(&self) -> LinearCode {
        let kernel = self.generator.kernel_basis();
        LinearCode::from_generator(kernel).expect("kernel basis is independent")
    }

    /// Applies a column permutation (entry `i` of `perm` is the source column
    /// for position `i`).
    pub fn permuted_columns(&self, perm: &[usize]) -> LinearCode {
        LinearCode {
            generator: self.generator.permuted_columns(perm),
            cached_weights: OnceLock::new(),
        }
    }

    /// Writes the text code-file format: a `n k` header line, then `k` rows of
    /// `n` characters in `{0,1}`.
    pub fn write_to(&self, mut out: impl Write) -> std::io::Result<()> {
        writeln!(out, "{} {}", self.n(), self.k())?;
        for r in self.generator.row_iter() {
            writeln!(out, "{r}")?;
        }
        Ok(())
    }

    /// Parses the text code-file format produced by [`LinearCode::write_to`].
    pub fn read_from(input: impl BufRead) -> Result<LinearCode> {
        let mut lines = input.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::MalformedCodeFile("missing header line".into()))?
            .map_err(|e| Error::MalformedCodeFile(e.to_string()))?;
        let mut parts = header.split_whitespace();
        let n: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::MalformedCodeFile("bad length in header".into()))?;
        let k: usize = parts
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::MalformedCodeFile("bad dimension in header".into()))?;
        if parts.next().is_some() {
            return Err(Error::MalformedCodeFile("trailing tokens in header".into()));
        }
        let mut rows = Vec::with_capacity(k);
        for i in 0..k {
            let line = lines
                .next()
                .ok_or_else(|| Error::MalformedCodeFile(format!("missing row {i}")))?
                .map_err(|e| Error::MalformedCodeFile(e.to_string()))?;
            let row = BitVector::from_str01(line.trim_end())?;
            if row.len() != n {
                return Err(Error::MalformedCodeFile(format!(
                    "row {i} has length {} but header says {n}",
                    row.len()
                )));
            }
            rows.push(row);
        }
        LinearCode::from_generator(BitMatrix::from_rows(rows, n))
    }
}

/// Canonical generator of the first order Reed-Muller code `R(1, m)`: the
/// all-one row followed by the coordinate functions, under the global point
/// ordering (point `u` encodes the input, coordinate `i` is bit `i` of `u`).
pub(crate) fn canonical_rm1_generator(m: u32) -> BitMatrix {
    let n = 1usize << m;
    BitMatrix::from_fn(m as usize + 1, n, |i, u| {
        if i == 0 {
            true
        } else {
            (u >> (i - 1)) & 1 == 1
        }
    })
}

/// Why the uniqueness verifier rejected a candidate code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RejectionReason {
    /// Length is not a power of two (or too short for the family).
    LengthNotPowerOfTwo { n: usize },
    /// Dimension differs from `m + 1`.
    WrongDimension { expected: usize, actual: usize },
    /// Minimum distance differs from `2^(m-1)`.
    WrongMinimumDistance { expected: u32, actual: u32 },
    /// Parameters are right but the all-one word is missing. A code in this
    /// state would falsify the uniqueness theorem, so it is flagged loudly
    /// instead of failing silently.
    AllOneAbsent,
    /// The column multiset of the chosen sub-generator does not enumerate all
    /// binary m-tuples.
    ColumnsNotAllTuples,
}

impl fmt::Display for RejectionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RejectionReason::LengthNotPowerOfTwo { n } => {
                write!(f, "wrong parameters: length {n} is not a power of two")
            }
            RejectionReason::WrongDimension { expected, actual } => {
                write!(
                    f,
                    "wrong parameters: dimension {actual}, expected {expected}"
                )
            }
            RejectionReason::WrongMinimumDistance { expected, actual } => {
                write!(
                    f,
                    "wrong parameters: minimum distance {actual}, expected {expected}"
                )
            }
            RejectionReason::AllOneAbsent => write!(
                f,
                "theorem violation: parameters match but the all-one word is absent"
            ),
            RejectionReason::ColumnsNotAllTuples => {
                write!(f, "column multiset does not enumerate all binary m-tuples")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    Reject(RejectionReason),
}

/// Outcome of the uniqueness verifier. On acceptance the certificate data
/// maps the candidate generator onto the canonical `R(1, m)` generator:
/// permute columns (entry `i` of `column_permutation` is the source column
/// for position `i`), then multiply by `basis_change` on the left.
#[derive(Debug, Clone)]
pub struct EquivalenceCertificate {
    pub column_permutation: Vec<usize>,
    pub basis_change: BitMatrix,
    pub verdict: Verdict,
}

impl EquivalenceCertificate {
    fn reject(reason: RejectionReason) -> Self {
        EquivalenceCertificate {
            column_permutation: Vec::new(),
            basis_change: BitMatrix::zeros(0, 0),
            verdict: Verdict::Reject(reason),
        }
    }

    pub fn is_accept(&self) -> bool {
        self.verdict == Verdict::Accept
    }

    /// Applies the certificate to a generator matrix; `None` on rejects.
    pub fn apply(&self, generator: &BitMatrix) -> Option<BitMatrix> {
        if !self.is_accept() {
            return None;
        }
        Some(
            self.basis_change
                .mul(&generator.permuted_columns(&self.column_permutation)),
        )
    }
}

impl LinearCode {
    /// Constructive uniqueness check: accepts exactly the codes equivalent to
    /// the first order Reed-Muller code `R(1, m)`, following the constructive
    /// skeleton (parameters, the forced all-one word, the column-enumeration
    /// property of the orthogonal sub-generator), and emits a certificate that
    /// maps the candidate onto the canonical generator.
    pub fn verify_first_order_rm(&self) -> EquivalenceCertificate {
        let n = self.n();
        if n < 4 || !n.is_power_of_two() {
            return EquivalenceCertificate::reject(RejectionReason::LengthNotPowerOfTwo { n });
        }
        let m = n.trailing_zeros();
        if self.k() != m as usize + 1 {
            return EquivalenceCertificate::reject(RejectionReason::WrongDimension {
                expected: m as usize + 1,
                actual: self.k(),
            });
        }
        let expected_d = 1u32 << (m - 1);
        let d = self
            .minimum_distance_with_budget(m as usize + 1)
            .expect("k = m+1 is within budget");
        if d != expected_d {
            return EquivalenceCertificate::reject(RejectionReason::WrongMinimumDistance {
                expected: expected_d,
                actual: d,
            });
        }
        if !self.contains_all_one() {
            return EquivalenceCertificate::reject(RejectionReason::AllOneAbsent);
        }

        // Complete {all-one} to a basis with m generator rows; the candidate
        // has full rank and contains all-one, so exactly m rows are picked up.
        let all_one = BitVector::ones(n);
        let mut span = Span::new(n);
        span.insert(&all_one);
        let mut sub_rows: Vec<&BitVector> = Vec::with_capacity(m as usize);
        for r in self.generator.row_iter() {
            if span.insert(r) {
                sub_rows.push(r);
            }
        }
        debug_assert_eq!(sub_rows.len(), m as usize);

        // Columns of the sub-generator, read as m-bit integers, must
        // enumerate every value in 0..2^m exactly once.
        let mut col_value = vec![0usize; n];
        for (i, row) in sub_rows.iter().enumerate() {
            for (j, value) in col_value.iter_mut().enumerate() {
                if row.get(j) {
                    *value |= 1 << i;
                }
            }
        }
        let mut perm = vec![usize::MAX; n];
        for (j, &v) in col_value.iter().enumerate() {
            if perm[v] != usize::MAX {
                return EquivalenceCertificate::reject(RejectionReason::ColumnsNotAllTuples);
            }
            perm[v] = j;
        }

        // After sorting the columns to standard order the sub-generator rows
        // become the coordinate functions; express the canonical rows over
        // the permuted candidate rows to get the basis change.
        let permuted = self.generator.permuted_columns(&perm);
        let canonical = canonical_rm1_generator(m);
        let solver = RowSpaceSolver::new(&permuted);
        let k = self.k();
        let t_rows: Vec<BitVector> = canonical
            .row_iter()
            .map(|r| {
                solver
                    .express(r)
                    .expect("canonical rows lie in the accepted candidate's row space")
            })
            .collect();
        let basis_change = BitMatrix::from_rows(t_rows, k);
        debug_assert_eq!(basis_change.mul(&permuted), canonical);

        EquivalenceCertificate {
            column_permutation: perm,
            basis_change,
            verdict: Verdict::Accept,
        }
    }
}

/// Expresses vectors as combinations of a fixed matrix's rows.
struct RowSpaceSolver {
    /// Echelon rows paired with the combination of original rows producing them.
    rows: Vec<(usize, BitVector, BitVector)>,
}

impl RowSpaceSolver {
    fn new(basis: &BitMatrix) -> Self {
        let k = basis.rows();
        let mut rows: Vec<(usize, BitVector, BitVector)> = Vec::with_capacity(k);
        for (i, r) in basis.row_iter().enumerate() {
            let mut v = r.clone();
            let mut combo = BitVector::zeros(k);
            combo.set(i, true);
            for (pivot, row, c) in &rows {
                if v.get(*pivot) {
                    v.xor_assign(row);
                    combo.xor_assign(c);
                }
            }
            if let Some(p) = v.first_set_bit() {
                let at = rows.partition_point(|(q, _, _)| *q < p);
                rows.insert(at, (p, v, combo));
            }
        }
        RowSpaceSolver { rows }
    }

    /// Returns `x` with `x * basis = v`, if `v` lies in the row space.
    fn express(&self, v: &BitVector) -> Option<BitVector> {
        let k = self
            .rows
            .first()
            .map(|(_, _, c)| c.len())
            .unwrap_or_default();
        let mut v = v.clone();
        let mut combo = BitVector::zeros(k);
        for (pivot, row, c) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
                combo.xor_assign(c);
            }
        }
        v.is_zero().then_some(combo)
    }
}
