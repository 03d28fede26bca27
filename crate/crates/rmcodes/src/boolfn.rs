//! Boolean functions on binary m-tuples as truth tables: Hadamard transform,
//! bent test, and polarization of a quadratic function into its symplectic
//! matrix.
//!
//! The global index convention identifies the point `u = (u_1, ..., u_m)` with
//! the integer `sum of u_i * 2^(i-1)` (first variable least significant); the
//! truth-table entry at that index is `f(u)`. Weight distributions do not
//! depend on the ordering, but golden outputs do, so it is fixed once here.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::binlinalg::{BitMatrix, BitVector};
use crate::codes::WeightDistribution;
use crate::error::{Error, Result};

/// Truth table of a Boolean function of `m` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BooleanFunction {
    m: u32,
    table: BitVector,
}

impl BooleanFunction {
    pub fn new(m: u32, table: BitVector) -> Result<BooleanFunction> {
        if table.len() != 1 << m {
            return Err(Error::DimensionMismatch(format!(
                "truth table has length {}, expected 2^{m}",
                table.len()
            )));
        }
        Ok(BooleanFunction { m, table })
    }

    pub fn from_fn(m: u32, mut f: impl FnMut(usize) -> bool) -> BooleanFunction {
        BooleanFunction {
            m,
            table: BitVector::from_fn(1 << m, &mut f),
        }
    }

    pub fn constant(m: u32, value: bool) -> BooleanFunction {
        Self::from_fn(m, |_| value)
    }

    /// The coordinate function of variable `i` (0-based): bit `i` of the point.
    pub fn coordinate(m: u32, i: u32) -> BooleanFunction {
        assert!(i < m);
        Self::from_fn(m, |u| (u >> i) & 1 == 1)
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn table(&self) -> &BitVector {
        &self.table
    }

    #[inline]
    pub fn value(&self, u: usize) -> bool {
        self.table.get(u)
    }

    pub fn weight(&self) -> usize {
        self.table.weight()
    }

    pub fn xor(&self, other: &BooleanFunction) -> BooleanFunction {
        assert_eq!(self.m, other.m);
        BooleanFunction {
            m: self.m,
            table: self.table.xor(&other.table),
        }
    }

    /// Hadamard transform of `F(u) = (-1)^f(u)`, computed with the usual
    /// in-place butterfly in `O(m * 2^m)` integer operations.
    ///
    /// Entry `u` equals `2^m - 2 * dist(f, sum of u_i v_i)`.
    pub fn hadamard_transform(&self) -> SpectrumVector {
        let n = 1usize << self.m;
        let mut values: Vec<i64> = (0..n).map(|u| if self.value(u) { -1 } else { 1 }).collect();
        let mut len = 1;
        while len < n {
            let step = len << 1;
            let mut base = 0;
            while base < n {
                for j in base..base + len {
                    let a = values[j];
                    let b = values[j + len];
                    values[j] = a + b;
                    values[j + len] = a - b;
                }
                base += step;
            }
            len = step;
        }
        SpectrumVector { m: self.m, values }
    }

    /// True iff every spectrum entry is `+-2^(m/2)`; only defined for even m.
    pub fn is_bent(&self) -> Result<bool> {
        if self.m % 2 != 0 {
            return Err(Error::OddVariableCount(self.m));
        }
        let target = 1i64 << (self.m / 2);
        Ok(self
            .hadamard_transform()
            .values()
            .iter()
            .all(|&v| v.abs() == target))
    }

    /// Polarization value `f(u+v) + f(u) + f(v) + f(0)` over GF(2).
    #[inline]
    fn polarization(&self, u: usize, v: usize) -> bool {
        self.value(u ^ v) ^ self.value(u) ^ self.value(v) ^ self.value(0)
    }

    /// Polarizes a quadratic function into its m x m symplectic matrix
    /// `B[i][j] = f(e_i + e_j) + f(e_i) + f(e_j) + f(0)`.
    ///
    /// Quadratic-ness is validated probabilistically: 32 seeded random triples
    /// must satisfy bilinearity of the polarization, otherwise the input is
    /// rejected as not quadratic. Linear and constant inputs polarize to the
    /// zero matrix.
    pub fn polarize(&self) -> Result<BitMatrix> {
        let m = self.m as usize;
        let mut b = BitMatrix::zeros(m, m);
        for i in 0..m {
            for j in i + 1..m {
                if self.polarization(1 << i, 1 << j) {
                    b.set(i, j, true);
                    b.set(j, i, true);
                }
            }
        }
        let mask = (1usize << self.m) - 1;
        let mut rng = StdRng::seed_from_u64(0x706f_6c61_7269_7a65);
        for _ in 0..32 {
            let u = rng.gen::<usize>() & mask;
            let v = rng.gen::<usize>() & mask;
            let w = rng.gen::<usize>() & mask;
            if self.polarization(u ^ v, w) != self.polarization(u, w) ^ self.polarization(v, w) {
                return Err(Error::NotQuadratic);
            }
        }
        Ok(b)
    }
}

/// Signed Hadamard spectrum of a Boolean function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumVector {
    m: u32,
    values: Vec<i64>,
}

impl SpectrumVector {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// `sum of F^(u)^2 == 2^(2m)`.
    pub fn parseval_holds(&self) -> bool {
        let sum: i64 = self.values.iter().map(|v| v * v).sum();
        sum == 1i64 << (2 * self.m)
    }
}

/// Weight distribution of the coset `f + R(1, m)` for a quadratic `f` whose
/// symplectic matrix is `b`, from the rank alone: with `rank(b) = 2h` the
/// coset holds `2^(2h)` words of weight `2^(m-1) - 2^(m-h-1)`, the same number
/// of weight `2^(m-1) + 2^(m-h-1)`, and `2^(m+1) - 2^(2h+1)` of weight
/// `2^(m-1)`.
pub fn coset_weight_distribution_by_rank(b: &BitMatrix) -> Result<WeightDistribution> {
    if !b.is_symmetric() || !b.has_zero_diagonal() {
        return Err(Error::NotSymplectic);
    }
    let m = b.rows() as u32;
    let rank = b.rank() as u32;
    debug_assert_eq!(rank % 2, 0, "symplectic matrices have even rank");
    Ok(rank_coset_distribution(m, rank / 2))
}

/// The three-line distribution for a coset of rank `2h` (see
/// [`coset_weight_distribution_by_rank`]).
pub fn rank_coset_distribution(m: u32, h: u32) -> WeightDistribution {
    debug_assert!(2 * h <= m);
    let mid = 1u32 << (m - 1);
    let delta = 1u32 << (m - h - 1);
    let outer = 1u64 << (2 * h);
    let mut dist = WeightDistribution::new();
    dist.add(mid - delta, outer);
    dist.add(mid, (1u64 << (m + 1)) - (1u64 << (2 * h + 1)));
    dist.add(mid + delta, outer);
    dist
}
