//! Bit-packed vectors and matrices over GF(2).
//!
//! Vectors are stored as little-endian 64-bit limbs (bit `i` of the vector is
//! bit `i % 64` of limb `i / 64`); all bits beyond the logical length are kept
//! zero so that the Hamming weight is a plain sum of popcounts. Elimination
//! always pivots on the lowest-index available column, which keeps every
//! reduced form (and therefore every certificate built from one) deterministic.

use std::fmt;

use crate::error::{Error, Result};

const WORD_BITS: usize = 64;

fn word_count(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A binary vector of fixed length.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; word_count(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut v = Self::zeros(len);
        for w in v.words.iter_mut() {
            *w = u64::MAX;
        }
        v.mask_tail();
        v
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(len);
        for i in 0..len {
            if f(i) {
                v.words[i / WORD_BITS] |= 1u64 << (i % WORD_BITS);
            }
        }
        v
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        Self::from_fn(bits.len(), |i| bits[i])
    }

    /// Parses a string of `0`/`1` characters; character `i` becomes bit `i`.
    pub fn from_str01(s: &str) -> Result<Self> {
        let mut v = Self::zeros(s.len());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i, true),
                _ => {
                    return Err(Error::MalformedCodeFile(format!(
                        "unexpected character {c:?} in row"
                    )))
                }
            }
        }
        Ok(v)
    }

    fn mask_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    /// Hamming weight.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch in xor");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn xor(&self, other: &BitVector) -> BitVector {
        let mut v = self.clone();
        v.xor_assign(other);
        v
    }

    /// Inner product over GF(2).
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch in dot");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    /// Index of the first set bit, if any.
    pub fn first_set_bit(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Returns a copy with `bit` appended at index `len`.
    pub fn with_appended_bit(&self, bit: bool) -> BitVector {
        let mut v = BitVector::zeros(self.len + 1);
        v.words[..self.words.len()].copy_from_slice(&self.words);
        v.set(self.len, bit);
        v
    }

    /// Returns a copy with the bit at `pos` deleted (length shrinks by one).
    pub fn with_deleted_bit(&self, pos: usize) -> BitVector {
        debug_assert!(pos < self.len);
        BitVector::from_fn(self.len - 1, |i| {
            if i < pos {
                self.get(i)
            } else {
                self.get(i + 1)
            }
        })
    }

    /// Column permutation: bit `i` of the result is bit `perm[i]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> BitVector {
        assert_eq!(perm.len(), self.len, "permutation length mismatch");
        BitVector::from_fn(self.len, |i| self.get(perm[i]))
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter_bits(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// A binary matrix stored as a list of equal-length rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Self {
        for r in &rows {
            assert_eq!(r.len(), cols, "row length mismatch");
        }
        BitMatrix { cols, rows }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let rows = (0..rows)
            .map(|i| BitVector::from_fn(cols, |j| f(i, j)))
            .collect();
        BitMatrix { cols, rows }
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &BitVector> {
        self.rows.iter()
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVector::is_zero)
    }

    pub fn xor_assign(&mut self, other: &BitMatrix) {
        assert_eq!(self.cols, other.cols);
        assert_eq!(self.rows.len(), other.rows.len());
        for (a, b) in self.rows.iter_mut().zip(&other.rows) {
            a.xor_assign(b);
        }
    }

    pub fn xor(&self, other: &BitMatrix) -> BitMatrix {
        let mut m = self.clone();
        m.xor_assign(other);
        m
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.cols, self.rows.len(), |i, j| self.get(j, i))
    }

    /// Matrix product over GF(2): each result row is the XOR of the rows of
    /// `rhs` selected by the bits of the corresponding row of `self`.
    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows(), "dimension mismatch in mul");
        let rows = self
            .rows
            .iter()
            .map(|lrow| {
                let mut acc = BitVector::zeros(rhs.cols);
                for j in 0..self.cols {
                    if lrow.get(j) {
                        acc.xor_assign(&rhs.rows[j]);
                    }
                }
                acc
            })
            .collect();
        BitMatrix {
            cols: rhs.cols,
            rows,
        }
    }

    pub fn permuted_columns(&self, perm: &[usize]) -> BitMatrix {
        let rows = self.rows.iter().map(|r| r.permuted(perm)).collect();
        BitMatrix {
            cols: self.cols,
            rows,
        }
    }

    /// Row rank via Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut span = Span::new(self.cols);
        for r in &self.rows {
            span.insert(r);
        }
        span.rank()
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn reduced_row_echelon(&self) -> (BitMatrix, Vec<usize>) {
        let mut rows: Vec<BitVector> = self.rows.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(sel) = (r..rows.len()).find(|&i| rows[i].get(col)) else {
                continue;
            };
            rows.swap(r, sel);
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row.get(col) {
                    row.xor_assign(&pivot_row);
                }
            }
            pivots.push(col);
            r += 1;
        }
        rows.truncate(r);
        (
            BitMatrix {
                cols: self.cols,
                rows,
            },
            pivots,
        )
    }

    /// Brings a full-row-rank matrix into systematic form `[I | A]`.
    ///
    /// Returns the systematic matrix together with the column permutation that
    /// was applied: entry `i` of the permutation is the index **in the input**
    /// of the column now at position `i`. The row space of the result equals
    /// the input's row space up to that permutation.
    pub fn systematic_form(&self) -> Result<(BitMatrix, Vec<usize>)> {
        let (rref, pivots) = self.reduced_row_echelon();
        if pivots.len() < self.rows.len() {
            return Err(Error::RankDeficient);
        }
        let mut perm = pivots.clone();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        perm.extend((0..self.cols).filter(|c| !pivot_set.contains(c)));
        Ok((rref.permuted_columns(&perm), perm))
    }

    /// True if `v` lies in the row space.
    pub fn row_space_contains(&self, v: &BitVector) -> bool {
        assert_eq!(v.len(), self.cols, "length mismatch");
        let mut span = Span::new(self.cols);
        for r in &self.rows {
            span.insert(r);
        }
        span.contains(v)
    }

    /// Basis of the right kernel `{ v : M v^T = 0 }` as matrix rows.
    pub fn kernel_basis(&self) -> BitMatrix {
        let (rref, pivots) = self.reduced_row_echelon();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivot_set.contains(c)).collect();
        let rows = free
            .iter()
            .map(|&f| {
                BitVector::from_fn(self.cols, |j| {
                    if j == f {
                        true
                    } else if let Some(t) = pivots.iter().position(|&p| p == j) {
                        rref.get(t, f)
                    } else {
                        false
                    }
                })
            })
            .collect();
        BitMatrix {
            cols: self.cols,
            rows,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows.len() != self.cols {
            return false;
        }
        (0..self.cols).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn has_zero_diagonal(&self) -> bool {
        (0..self.rows.len().min(self.cols)).all(|i| !self.get(i, i))
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// True if every row of `a` lies in the row space of `b`.
pub fn row_space_subset(a: &BitMatrix, b: &BitMatrix) -> bool {
    assert_eq!(a.cols(), b.cols(), "length mismatch");
    let mut span = Span::new(b.cols());
    for r in b.row_iter() {
        span.insert(r);
    }
    a.row_iter().all(|r| span.contains(r))
}

/// Incrementally built row basis in echelon form (each stored row's leading
/// bit is unique, rows kept sorted by pivot).
pub(crate) struct Span {
    cols: usize,
    rows: Vec<(usize, BitVector)>,
}

impl Span {
    pub fn new(cols: usize) -> Self {
        Span {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &BitVector) -> BitVector {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns true if it enlarged the span.
    pub fn insert(&mut self, v: &BitVector) -> bool {
        assert_eq!(v.len(), self.cols, "length mismatch");
        let r = self.reduce(v);
        match r.first_set_bit() {
            None => false,
            Some(pivot) => {
                let at = self.rows.partition_point(|(p, _)| *p < pivot);
                self.rows.insert(at, (pivot, r));
                true
            }
        }
    }
}

/// Rank of a small matrix whose rows fit in single machine words, with an
/// early exit once `stop_at` pivots have been found. Used in coset-enumeration
/// hot loops where matrices are at most 16x16.
#[inline]
pub(crate) fn word_rank_at_least(rows: &[u64], stop_at: usize) -> usize {
    let mut pivot_rows = [0u64; 64];
    let mut rank = 0;
    for &row in rows {
        let mut r = row;
        let mut t = 0;
        while t < rank {
            let p = pivot_rows[t];
            if r & (p & p.wrapping_neg()) != 0 {
                r ^= p;
            }
            t += 1;
        }
        if r != 0 {
            pivot_rows[rank] = r;
            rank += 1;
            if rank >= stop_at {
                return rank;
            }
        }
    }
    rank
}

/// Full rank of a small single-word-row matrix.
#[inline]
pub(crate) fn word_rank(rows: &[u64]) -> usize {
    word_rank_at_least(rows, usize::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn random_matrix(rng: &mut StdRng, rows: usize, cols: usize) -> BitMatrix {
        BitMatrix::from_fn(rows, cols, |_, _| rng.gen())
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(BitMatrix::zeros(5, 9).rank(), 0);
    }

    #[test]
    fn identity_has_full_rank() {
        for m in 1..10 {
            assert_eq!(BitMatrix::identity(m).rank(), m);
        }
    }

    #[test]
    fn block_symplectic_4x4_has_rank_4() {
        // two disjoint 2x2 blocks, each of rank 2
        let mut b = BitMatrix::zeros(4, 4);
        b.set(0, 1, true);
        b.set(1, 0, true);
        b.set(2, 3, true);
        b.set(3, 2, true);
        assert_eq!(b.rank(), 4);
        assert!(b.is_symmetric());
        assert!(b.has_zero_diagonal());
    }

    #[test]
    fn systematic_form_of_systematic_input_is_identity_permutation() {
        // [I | A] with A = [1; 1]
        let g = BitMatrix::from_rows(
            vec![
                BitVector::from_str01("101").unwrap(),
                BitVector::from_str01("011").unwrap(),
            ],
            3,
        );
        let (sys, perm) = g.systematic_form().unwrap();
        assert_eq!(perm, vec![0, 1, 2]);
        assert_eq!(sys, g);
    }

    #[test]
    fn systematic_form_2x3_by_hand() {
        // rows (011, 101): elimination pivots columns 0 and 1, identity
        // permutation, rref rows (101, 011)
        let g = BitMatrix::from_rows(
            vec![
                BitVector::from_str01("011").unwrap(),
                BitVector::from_str01("101").unwrap(),
            ],
            3,
        );
        let (sys, perm) = g.systematic_form().unwrap();
        assert_eq!(perm, vec![0, 1, 2]);
        assert_eq!(sys.row(0).to_string(), "101");
        assert_eq!(sys.row(1).to_string(), "011");
    }

    #[test]
    fn systematic_form_rejects_rank_deficient_input() {
        let row = BitVector::from_str01("110").unwrap();
        let g = BitMatrix::from_rows(vec![row.clone(), row], 3);
        assert_eq!(g.systematic_form(), Err(Error::RankDeficient));
    }

    #[test]
    fn systematic_form_moves_pivot_columns_first() {
        // leading zero column forces a non-identity permutation
        let g = BitMatrix::from_rows(
            vec![
                BitVector::from_str01("011").unwrap(),
                BitVector::from_str01("010").unwrap(),
            ],
            3,
        );
        let (sys, perm) = g.systematic_form().unwrap();
        assert_eq!(perm, vec![1, 2, 0]);
        assert_eq!(sys.row(0).to_string(), "100");
        assert_eq!(sys.row(1).to_string(), "010");
    }

    #[test]
    fn row_space_contains_zero_and_full_space() {
        let mut rng = StdRng::seed_from_u64(7);
        let g = random_matrix(&mut rng, 4, 10);
        assert!(g.row_space_contains(&BitVector::zeros(10)));
        let id = BitMatrix::identity(6);
        for _ in 0..20 {
            let v = BitVector::from_fn(6, |_| rng.gen());
            assert!(id.row_space_contains(&v));
        }
    }

    #[test]
    fn simplex_row_space_does_not_contain_all_one() {
        // simplex S_3: columns are the binary representations of 1..7; every
        // nonzero codeword has weight 4, so the all-one word of weight 7 is
        // outside the row space
        let g = BitMatrix::from_fn(3, 7, |i, j| ((j + 1) >> i) & 1 == 1);
        assert!(!g.row_space_contains(&BitVector::ones(7)));
        let sum = g.row(0).xor(g.row(1)).xor(g.row(2));
        assert_eq!(sum.weight(), 4);
    }

    #[test]
    fn kernel_is_orthogonal_complement() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..20 {
            let g = random_matrix(&mut rng, 5, 12);
            let k = g.kernel_basis();
            assert_eq!(g.rank() + k.rows(), 12);
            for kr in k.row_iter() {
                for gr in g.row_iter() {
                    assert!(!gr.dot(kr));
                }
            }
        }
    }

    #[test]
    fn word_rank_matches_matrix_rank() {
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..200 {
            let m = rng.gen_range(1..=12usize);
            let rows: Vec<u64> = (0..m).map(|_| rng.gen::<u64>() & ((1 << m) - 1)).collect();
            let big = BitMatrix::from_fn(m, m, |i, j| (rows[i] >> j) & 1 == 1);
            assert_eq!(word_rank(&rows), big.rank());
        }
    }

    proptest! {
        #[test]
        fn rank_equals_rank_of_transpose(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let rows = rng.gen_range(1..=64usize);
            let cols = rng.gen_range(1..=64usize);
            let m = random_matrix(&mut rng, rows, cols);
            prop_assert_eq!(m.rank(), m.transpose().rank());
        }

        #[test]
        fn rank_invariant_under_row_operations(seed in any::<u64>()) {
            let mut rng = StdRng::seed_from_u64(seed);
            let rows = rng.gen_range(2..=16usize);
            let cols = rng.gen_range(1..=32usize);
            let m = random_matrix(&mut rng, rows, cols);
            let r = m.rank();

            let mut swapped = m.clone();
            let (a, b) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
            swapped.rows.swap(a, b);
            prop_assert_eq!(swapped.rank(), r);

            let mut added = m.clone();
            let (a, b) = (rng.gen_range(0..rows), rng.gen_range(0..rows));
            if a != b {
                let src = added.rows[b].clone();
                added.rows[a].xor_assign(&src);
            }
            prop_assert_eq!(added.rank(), r);
        }

        #[test]
        fn weight_is_popcount_of_words(bits in proptest::collection::vec(any::<bool>(), 0..200)) {
            let v = BitVector::from_bits(&bits);
            prop_assert_eq!(v.weight(), bits.iter().filter(|&&b| b).count());
            let from_words: usize = v.words().iter().map(|w| w.count_ones() as usize).sum();
            prop_assert_eq!(v.weight(), from_words);
        }
    }
}
