//! Reed-Muller constructions: `R(1,m)`, `R(2,m)`, orthogonal and simplex
//! codes, the even-m and odd-m linear sub-code families built from cyclic
//! idempotents, coset-rank weight distributions, nesting checks, and the
//! additive group of full-rank symplectic matrices.
//!
//! Two coordinate worlds meet here. Cyclic codes live on positions
//! `alpha^0..alpha^(n-1)` with `n = 2^m - 1`; Boolean functions live on points
//! `0..2^m`. The gluing is fixed once: the field element with polynomial-basis
//! mask `b` maps to point index `b`, and the parity coordinate appended by
//! extension maps to point 0. Under this identification every extended cyclic
//! sub-code below is literally a set of truth tables, so containment in
//! `R(2,m)` is a plain row-space check.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::binlinalg::{row_space_subset, word_rank, BitMatrix, BitVector, Span};
use crate::boolfn::{rank_coset_distribution, BooleanFunction};
use crate::codes::{canonical_rm1_generator, LinearCode, WeightDistribution};
use crate::cyclic::{
    cyclic_code_from_idempotent, cyclotomic_coset, primitive_idempotent_star, RingPolynomial,
};
use crate::error::{Error, Result};
use crate::gf2m::FieldTable;

/// Rows of small symplectic matrices, packed one row per machine word.
type SmallMatrix = [u64; 16];

const CENSUS_CHUNK_BITS: usize = 18;

/// The orthogonal code `O_m`: all linear forms without constant term,
/// `[2^m, m, 2^(m-1)]`.
pub fn orthogonal(m: u32) -> Result<LinearCode> {
    if !(1..=16).contains(&m) {
        return Err(Error::OutOfRangeM(m));
    }
    let g = BitMatrix::from_fn(m as usize, 1 << m, |i, u| (u >> i) & 1 == 1);
    LinearCode::from_generator(g)
}

/// The first order Reed-Muller code `R(1,m) = O_m union (1 + O_m)`,
/// `[2^m, 1+m, 2^(m-1)]`.
pub fn rm1(m: u32) -> Result<LinearCode> {
    if !(1..=16).contains(&m) {
        return Err(Error::OutOfRangeM(m));
    }
    LinearCode::from_generator(canonical_rm1_generator(m))
}

/// The second order Reed-Muller code `R(2,m)`, of dimension
/// `1 + m + m(m-1)/2` and minimum distance `2^(m-2)`.
pub fn rm2(m: u32) -> Result<LinearCode> {
    if !(2..=8).contains(&m) {
        return Err(Error::OutOfRangeM(m));
    }
    let mm = m as usize;
    let mut rows = Vec::with_capacity(1 + mm + mm * (mm - 1) / 2);
    rows.push(BitVector::ones(1 << m));
    for i in 0..mm {
        rows.push(BitVector::from_fn(1 << m, |u| (u >> i) & 1 == 1));
    }
    for i in 0..mm {
        for j in i + 1..mm {
            rows.push(BitVector::from_fn(1 << m, |u| {
                (u >> i) & 1 == 1 && (u >> j) & 1 == 1
            }));
        }
    }
    LinearCode::from_generator(BitMatrix::from_rows(rows, 1 << m))
}

/// The simplex code: `O_m` punctured at the zero point; every nonzero
/// codeword has weight `2^(m-1)`.
pub fn simplex(m: u32) -> Result<LinearCode> {
    orthogonal(m)?.puncture(0)
}

/// Which of the three sub-code families a spec addresses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubcodeFamily {
    /// Even m: idempotent `theta_0 + theta_1^* + sum over j in d..=t+1`.
    Even,
    /// Odd m, first family: `theta_0 + theta_1^* + sum over j in d..=t`.
    OddFirst,
    /// Odd m, second family: `theta_0 + theta_1^* + sum over j in 1..=t-d+1`.
    OddSecond,
}

impl SubcodeFamily {
    pub fn name(&self) -> &'static str {
        match self {
            SubcodeFamily::Even => "even",
            SubcodeFamily::OddFirst => "odd-first",
            SubcodeFamily::OddSecond => "odd-second",
        }
    }
}

/// Parameters of one sub-code of `R(2,m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubcodeSpec {
    pub m: u32,
    pub d: u32,
    pub family: SubcodeFamily,
}

impl SubcodeSpec {
    pub fn new(m: u32, d: u32, family: SubcodeFamily) -> Result<SubcodeSpec> {
        let spec = SubcodeSpec { m, d, family };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        let SubcodeSpec { m, d, family } = *self;
        if !(2..=16).contains(&m) {
            return Err(Error::OutOfRangeM(m));
        }
        match family {
            SubcodeFamily::Even => {
                if m % 2 != 0 {
                    return Err(Error::InvalidSubcodeSpec(format!(
                        "even family needs even m, got {m}"
                    )));
                }
                // At m = 2 the index l_{t+1} = 3 coincides with 0 mod n = 3,
                // so the idempotent sum collapses; the construction starts
                // at m = 4.
                if m < 4 {
                    return Err(Error::InvalidSubcodeSpec("even family needs m >= 4".into()));
                }
                if d < 1 || d > m / 2 {
                    return Err(Error::InvalidSubcodeSpec(format!(
                        "even family needs 1 <= d <= {}, got {d}",
                        m / 2
                    )));
                }
            }
            SubcodeFamily::OddFirst | SubcodeFamily::OddSecond => {
                if m % 2 != 1 {
                    return Err(Error::InvalidSubcodeSpec(format!(
                        "odd families need odd m, got {m}"
                    )));
                }
                if d < 1 || d > (m - 1) / 2 {
                    return Err(Error::InvalidSubcodeSpec(format!(
                        "odd families need 1 <= d <= {}, got {d}",
                        (m - 1) / 2
                    )));
                }
            }
        }
        Ok(())
    }

    /// `t` with `m = 2t+1` (odd) or `m = 2t+2` (even).
    pub fn t(&self) -> u32 {
        match self.family {
            SubcodeFamily::Even => self.m / 2 - 1,
            _ => (self.m - 1) / 2,
        }
    }

    pub fn expected_length(&self) -> usize {
        1 << self.m
    }

    pub fn expected_dimension(&self) -> usize {
        let (m, t, d) = (self.m as usize, self.t() as usize, self.d as usize);
        match self.family {
            SubcodeFamily::Even => m * (t + 2 - d) + m / 2 + 1,
            _ => m * (t + 2 - d) + 1,
        }
    }

    pub fn expected_min_distance(&self) -> u32 {
        (1 << (self.m - 1)) - (1 << (self.m - self.d - 1))
    }

    /// Exponents `s` of the primitive idempotents `theta_s^*` whose sum is
    /// the code's idempotent (`s = 0` stands for `theta_0`).
    pub fn idempotent_indices(&self) -> Vec<u64> {
        let t = self.t();
        let mut s = vec![0u64, 1];
        let js: Vec<u32> = match self.family {
            SubcodeFamily::Even => (self.d..=t + 1).collect(),
            SubcodeFamily::OddFirst => (self.d..=t).collect(),
            SubcodeFamily::OddSecond => (1..=t - self.d + 1).collect(),
        };
        s.extend(js.iter().map(|&j| 1 + (1u64 << j)));
        s
    }

    /// The weight set the construction is claimed to realize:
    /// `{0, 2^m, 2^(m-1)}` together with `2^(m-1) +- 2^(m-h-1)` for every
    /// `h` in `d ..= t+1` (even) or `d ..= t` (odd).
    pub fn claimed_weight_set(&self) -> BTreeSet<u32> {
        let m = self.m;
        let hmax = match self.family {
            SubcodeFamily::Even => self.t() + 1,
            _ => self.t(),
        };
        let mid = 1u32 << (m - 1);
        let mut set = BTreeSet::from([0, 1 << m, mid]);
        for h in self.d..=hmax {
            let delta = 1 << (m - h - 1);
            set.insert(mid - delta);
            set.insert(mid + delta);
        }
        set
    }
}

/// Permutation taking the extended cyclic coordinate order (positions
/// `alpha^0..alpha^(n-1)` plus the parity coordinate last) into the Boolean
/// point order: entry `p` is the source column for point `p`.
pub fn boolean_order_permutation(field: &FieldTable) -> Vec<usize> {
    let n = field.n();
    let mut perm = vec![0usize; n + 1];
    perm[0] = n;
    for i in 0..n {
        perm[field.alpha_pow(i as u64).mask() as usize] = i;
    }
    perm
}

/// Builds a sub-code of `R(2,m)`: sums the family's primitive idempotents,
/// generates the cyclic code, extends it by a parity coordinate and permutes
/// the columns into Boolean point order.
pub fn subcode(spec: &SubcodeSpec, field: &FieldTable) -> Result<LinearCode> {
    spec.validate()?;
    if field.m() != spec.m {
        return Err(Error::DimensionMismatch(format!(
            "field has degree {} but the spec says m = {}",
            field.m(),
            spec.m
        )));
    }
    let n = field.n();
    let mut e = RingPolynomial::zero(n);
    let mut reps = BTreeSet::new();
    for s in spec.idempotent_indices() {
        let coset = cyclotomic_coset(s % n as u64, n as u64);
        if !reps.insert(coset.representative()) {
            return Err(Error::InvalidSubcodeSpec(format!(
                "idempotent indices collide on the coset of {}",
                coset.representative()
            )));
        }
        e = e.add(&primitive_idempotent_star(s, field));
    }
    let cyclic = cyclic_code_from_idempotent(&e, field)?;
    let glued = cyclic
        .extend_parity()
        .permuted_columns(&boolean_order_permutation(field));
    debug_assert_eq!(glued.n(), spec.expected_length());
    debug_assert_eq!(glued.k(), spec.expected_dimension());
    Ok(glued)
}

/// Representatives of the quotient of `c` by its `R(1,m)` sub-code: the
/// generator rows of `c` outside the span of the canonical `R(1,m)` basis,
/// in generator order (the first independent completion found).
pub fn quotient_basis(c: &LinearCode, m: u32) -> Result<Vec<BitVector>> {
    if c.n() != 1 << m {
        return Err(Error::DimensionMismatch(format!(
            "code length {} is not 2^{m}",
            c.n()
        )));
    }
    let base = canonical_rm1_generator(m);
    if !row_space_subset(&base, c.generator()) {
        return Err(Error::DoesNotContainRm1(m));
    }
    let mut span = Span::new(c.n());
    for row in base.row_iter() {
        span.insert(row);
    }
    let mut q = Vec::new();
    for row in c.generator().row_iter() {
        if span.insert(row) {
            q.push(row.clone());
        }
    }
    debug_assert_eq!(q.len(), c.k() - (m as usize + 1));
    Ok(q)
}

fn to_small(b: &BitMatrix) -> SmallMatrix {
    debug_assert!(b.rows() <= 16 && b.cols() <= 64);
    let mut rows = [0u64; 16];
    for (i, row) in rows.iter_mut().enumerate().take(b.rows()) {
        *row = b.row(i).words().first().copied().unwrap_or(0);
    }
    rows
}

/// Polarizes each quotient representative; fails on non-quadratic rows.
fn polarized_quotient_basis(reps: &[BitVector], m: u32) -> Result<Vec<SmallMatrix>> {
    reps.iter()
        .map(|row| {
            let f = BooleanFunction::new(m, row.clone())?;
            Ok(to_small(&f.polarize()?))
        })
        .collect()
}

/// Counts the cosets of `R(1,m)` by half-rank `h` of their symplectic
/// matrices. Polarization is additive, so the matrix of each coset is the XOR
/// combination of the quotient-basis matrices; the combinations are walked in
/// Gray-code order and split into independent subcube chunks for the parallel
/// case.
fn coset_rank_census(basis: &[SmallMatrix], m: u32) -> Vec<u64> {
    let q = basis.len();
    let mm = m as usize;
    let hmax = mm / 2;

    let scan = |first: u64, count: u64| -> Vec<u64> {
        let mut census = vec![0u64; hmax + 1];
        let mut cur = [0u64; 16];
        let g0 = first ^ (first >> 1);
        for (i, b) in basis.iter().enumerate() {
            if (g0 >> i) & 1 == 1 {
                for (a, x) in cur.iter_mut().zip(b) {
                    *a ^= *x;
                }
            }
        }
        census[word_rank(&cur[..mm]) / 2] += 1;
        for c in first + 1..first + count {
            let i = c.trailing_zeros() as usize;
            for (a, x) in cur.iter_mut().zip(&basis[i]) {
                *a ^= *x;
            }
            census[word_rank(&cur[..mm]) / 2] += 1;
        }
        census
    };

    let total = 1u64 << q;
    if q <= CENSUS_CHUNK_BITS {
        scan(0, total)
    } else {
        let chunk = 1u64 << CENSUS_CHUNK_BITS;
        (0..total / chunk)
            .into_par_iter()
            .map(|c| scan(c * chunk, chunk))
            .reduce(
                || vec![0u64; hmax + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }
}

fn census_of_code(c: &LinearCode, m: u32) -> Result<Vec<u64>> {
    let reps = quotient_basis(c, m)?;
    let basis = polarized_quotient_basis(&reps, m)?;
    Ok(coset_rank_census(&basis, m))
}

/// Weight distribution of an `R(1,m)`-containing sub-code of `R(2,m)` by the
/// coset-rank method: each coset contributes the three-line distribution
/// determined by the rank of its symplectic matrix. Must agree with
/// brute-force enumeration wherever both apply.
pub fn weight_distribution_by_cosets(c: &LinearCode, m: u32) -> Result<WeightDistribution> {
    let census = census_of_code(c, m)?;
    let mut dist = WeightDistribution::new();
    for (h, &count) in census.iter().enumerate() {
        if count > 0 {
            for (w, per_coset) in rank_coset_distribution(m, h as u32).iter() {
                dist.add(w, per_coset * count);
            }
        }
    }
    Ok(dist)
}

/// Minimum distance by the coset-rank method. The smallest weight in a coset
/// of half-rank `h >= 1` is `2^(m-1) - 2^(m-h-1)`, which decreases as `h`
/// does, so the answer comes from the smallest positive half-rank present.
pub fn minimum_distance_by_cosets(c: &LinearCode, m: u32) -> Result<u32> {
    let census = census_of_code(c, m)?;
    debug_assert_eq!(census[0], 1, "only the trivial coset polarizes to zero");
    let mid = 1u32 << (m - 1);
    Ok(match census.iter().skip(1).position(|&c| c > 0) {
        Some(p) => {
            let h = p as u32 + 1;
            mid - (1 << (m - h - 1))
        }
        None => mid,
    })
}

/// Checks that the nonzero weights of a constructed sub-code are exactly the
/// claimed set `{2^(m-1), 2^(m-1) +- 2^(m-h-1) for d <= h} + {0, 2^m}`.
pub fn verify_weight_set(c: &LinearCode, spec: &SubcodeSpec) -> Result<bool> {
    let dist = weight_distribution_by_cosets(c, spec.m)?;
    let observed: BTreeSet<u32> = dist.weights().collect();
    Ok(observed == spec.claimed_weight_set())
}

/// Verifies the containment chain of a sub-code family: even m gives
/// `R^{t+1} subset ... subset R^1`, odd m gives the analogous chain for both
/// odd families.
pub fn check_nesting(m: u32) -> Result<bool> {
    let field = FieldTable::new(m)?;
    let chains: Vec<Vec<SubcodeSpec>> = if m % 2 == 0 {
        vec![(1..=m / 2)
            .map(|d| SubcodeSpec::new(m, d, SubcodeFamily::Even))
            .collect::<Result<_>>()?]
    } else {
        [SubcodeFamily::OddFirst, SubcodeFamily::OddSecond]
            .into_iter()
            .map(|fam| {
                (1..=(m - 1) / 2)
                    .map(|d| SubcodeSpec::new(m, d, fam))
                    .collect::<Result<_>>()
            })
            .collect::<Result<_>>()?
    };
    for chain in chains {
        let codes: Vec<LinearCode> = chain
            .iter()
            .map(|spec| subcode(spec, &field))
            .collect::<Result<_>>()?;
        for pair in codes.windows(2) {
            // chain is ordered by ascending d: the code with larger d must
            // sit inside the code with smaller d
            if !row_space_subset(pair[1].generator(), pair[0].generator()) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Checks the rank lower bound of the even family: every nontrivial coset of
/// `R(1,m)` in the sub-code with parameter `d` polarizes to rank at least
/// `2d`; for `d = m/2` every representative must in addition be bent (the
/// rank is then exactly `m`).
pub fn rank_lower_bound_check(spec: &SubcodeSpec, field: &FieldTable) -> Result<bool> {
    if spec.family != SubcodeFamily::Even {
        return Err(Error::InvalidSubcodeSpec(
            "rank bound check applies to the even family".into(),
        ));
    }
    let c = subcode(spec, field)?;
    let census = census_of_code(&c, spec.m)?;
    if census[0] != 1 {
        return Ok(false);
    }
    if (1..spec.d as usize).any(|h| census[h] != 0) {
        return Ok(false);
    }
    if spec.d == spec.m / 2 {
        // bent case: confirm spectrally on the actual truth tables
        let reps = quotient_basis(&c, spec.m)?;
        for mask in 1u64..1 << reps.len() {
            let mut f = BooleanFunction::constant(spec.m, false);
            for (i, rep) in reps.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    f = f.xor(&BooleanFunction::new(spec.m, rep.clone())?);
                }
            }
            if !f.is_bent()? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The additive group of symplectic matrices extracted from the cosets of
/// `R(1,m)` in the even-family sub-code with `d = m/2`; `2^(m/2)` matrices in
/// all, every nonzero one of full rank `m`.
#[derive(Debug, Clone)]
pub struct SymplecticGroup {
    m: u32,
    elements: Vec<BitMatrix>,
}

impl SymplecticGroup {
    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn elements(&self) -> &[BitMatrix] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, b: &BitMatrix) -> bool {
        self.elements.iter().any(|e| e == b)
    }

    /// Closure under entrywise XOR.
    pub fn is_xor_closed(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, a)| self.elements[i..].iter().all(|b| self.contains(&a.xor(b))))
    }
}

/// Builds the symplectic-matrix group for even `m <= 12` by polarizing the
/// coset representatives of `R(1,m)` in the `d = m/2` sub-code. The element
/// order is the mask order over the quotient basis, with the zero matrix
/// first.
pub fn symplectic_group(m: u32, field: &FieldTable) -> Result<SymplecticGroup> {
    if m % 2 != 0 {
        return Err(Error::OddVariableCount(m));
    }
    if !(2..=12).contains(&m) {
        return Err(Error::OutOfRangeM(m));
    }
    if m == 2 {
        // The idempotent construction degenerates at m = 2 (l_{t+1} = 0 mod
        // n), but the group it would induce is forced: the only nonzero 2x2
        // symmetric zero-diagonal matrix already has full rank.
        let mut b = BitMatrix::zeros(2, 2);
        b.set(0, 1, true);
        b.set(1, 0, true);
        return Ok(SymplecticGroup {
            m,
            elements: vec![BitMatrix::zeros(2, 2), b],
        });
    }
    let spec = SubcodeSpec::new(m, m / 2, SubcodeFamily::Even)?;
    let c = subcode(&spec, field)?;
    let reps = quotient_basis(&c, m)?;
    let basis: Vec<BitMatrix> = reps
        .iter()
        .map(|row| BooleanFunction::new(m, row.clone())?.polarize())
        .collect::<Result<_>>()?;
    let elements = (0..1u64 << basis.len())
        .map(|mask| {
            let mut acc = BitMatrix::zeros(m as usize, m as usize);
            for (i, b) in basis.iter().enumerate() {
                if (mask >> i) & 1 == 1 {
                    acc.xor_assign(b);
                }
            }
            acc
        })
        .collect();
    Ok(SymplecticGroup { m, elements })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes::DEFAULT_ENUMERATION_BUDGET;

    fn field(m: u32) -> FieldTable {
        FieldTable::new(m).unwrap()
    }

    fn all_specs_up_to(mmax: u32) -> Vec<SubcodeSpec> {
        let mut specs = Vec::new();
        for m in 3..=mmax {
            if m % 2 == 0 {
                for d in 1..=m / 2 {
                    specs.push(SubcodeSpec::new(m, d, SubcodeFamily::Even).unwrap());
                }
            } else {
                for d in 1..=(m - 1) / 2 {
                    specs.push(SubcodeSpec::new(m, d, SubcodeFamily::OddFirst).unwrap());
                    specs.push(SubcodeSpec::new(m, d, SubcodeFamily::OddSecond).unwrap());
                }
            }
        }
        specs
    }

    #[test]
    fn rm1_parameters() {
        let c = rm1(4).unwrap();
        assert_eq!((c.n(), c.k()), (16, 5));
        assert_eq!(c.minimum_distance().unwrap(), 8);
    }

    #[test]
    fn rm2_parameters() {
        let c = rm2(4).unwrap();
        assert_eq!((c.n(), c.k()), (16, 11));
        assert_eq!(c.minimum_distance().unwrap(), 4);
    }

    #[test]
    fn simplex_parameters_and_weights() {
        let c = simplex(3).unwrap();
        assert_eq!((c.n(), c.k()), (7, 3));
        let dist = c.weight_distribution().unwrap();
        assert_eq!(dist.count(4), 7);
        assert_eq!(dist.count(0), 1);
        assert_eq!(c.minimum_distance().unwrap(), 4);
    }

    #[test]
    fn orthogonal_is_rm1_without_all_one() {
        let o = orthogonal(4).unwrap();
        assert_eq!((o.n(), o.k()), (16, 4));
        assert!(!o.contains_all_one());
        assert!(row_space_subset(o.generator(), rm1(4).unwrap().generator()));
    }

    #[test]
    fn range_checks() {
        assert!(rm2(9).is_err());
        assert!(rm1(0).is_err());
        assert!(orthogonal(17).is_err());
    }

    #[test]
    fn spec_validation() {
        assert!(SubcodeSpec::new(6, 0, SubcodeFamily::Even).is_err());
        assert!(SubcodeSpec::new(6, 4, SubcodeFamily::Even).is_err());
        assert!(SubcodeSpec::new(5, 1, SubcodeFamily::Even).is_err());
        assert!(SubcodeSpec::new(6, 1, SubcodeFamily::OddFirst).is_err());
        assert!(SubcodeSpec::new(2, 1, SubcodeFamily::Even).is_err());
        assert!(SubcodeSpec::new(5, 3, SubcodeFamily::OddSecond).is_err());
        assert!(SubcodeSpec::new(5, 2, SubcodeFamily::OddSecond).is_ok());
    }

    #[test]
    fn subcode_parameters_match_closed_forms_small_m() {
        for spec in all_specs_up_to(6) {
            let c = subcode(&spec, &field(spec.m)).unwrap();
            assert_eq!(c.n(), spec.expected_length(), "{spec:?}");
            assert_eq!(c.k(), spec.expected_dimension(), "{spec:?}");
            assert_eq!(
                c.minimum_distance().unwrap(),
                spec.expected_min_distance(),
                "{spec:?}"
            );
            assert_eq!(
                minimum_distance_by_cosets(&c, spec.m).unwrap(),
                spec.expected_min_distance(),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn table_rows_for_m6() {
        let f = field(6);
        let c = subcode(&SubcodeSpec::new(6, 3, SubcodeFamily::Even).unwrap(), &f).unwrap();
        assert_eq!((c.n(), c.k()), (64, 10));
        assert_eq!(c.minimum_distance().unwrap(), 28);
        let c = subcode(&SubcodeSpec::new(6, 2, SubcodeFamily::Even).unwrap(), &f).unwrap();
        assert_eq!((c.n(), c.k()), (64, 16));
        assert_eq!(c.minimum_distance().unwrap(), 24);
    }

    #[test]
    fn coset_method_on_rm1_itself() {
        for m in 2..=6 {
            let c = rm1(m).unwrap();
            let dist = weight_distribution_by_cosets(&c, m).unwrap();
            let mut expected = WeightDistribution::new();
            expected.add(0, 1);
            expected.add(1 << (m - 1), (1 << (m + 1)) - 2);
            expected.add(1 << m, 1);
            assert_eq!(dist, expected);
        }
    }

    #[test]
    fn subcode_m4_d2_distribution() {
        // [16, 7, 6]: three nontrivial cosets, all of rank 4
        let c = subcode(
            &SubcodeSpec::new(4, 2, SubcodeFamily::Even).unwrap(),
            &field(4),
        )
        .unwrap();
        assert_eq!((c.n(), c.k()), (16, 7));
        let dist = weight_distribution_by_cosets(&c, 4).unwrap();
        let expected =
            WeightDistribution::from_counts([(0, 1), (6, 48), (8, 30), (10, 48), (16, 1)]);
        assert_eq!(dist, expected);
        assert_eq!(c.weight_distribution().unwrap(), &expected);
    }

    #[test]
    fn coset_method_matches_brute_force_for_all_small_subcodes() {
        for spec in all_specs_up_to(6) {
            let c = subcode(&spec, &field(spec.m)).unwrap();
            let by_cosets = weight_distribution_by_cosets(&c, spec.m).unwrap();
            assert_eq!(&by_cosets, c.weight_distribution().unwrap(), "{spec:?}");
        }
    }

    #[test]
    fn coset_method_matches_brute_force_at_larger_m() {
        // cross-checks beyond the m <= 6 sweep: [128, 22] and [256, 13]
        let c = subcode(
            &SubcodeSpec::new(7, 2, SubcodeFamily::OddFirst).unwrap(),
            &field(7),
        )
        .unwrap();
        assert_eq!((c.n(), c.k()), (128, 22));
        assert_eq!(
            &weight_distribution_by_cosets(&c, 7).unwrap(),
            c.weight_distribution().unwrap()
        );
        let c = subcode(
            &SubcodeSpec::new(8, 4, SubcodeFamily::Even).unwrap(),
            &field(8),
        )
        .unwrap();
        assert_eq!((c.n(), c.k()), (256, 13));
        assert_eq!(
            &weight_distribution_by_cosets(&c, 8).unwrap(),
            c.weight_distribution().unwrap()
        );
    }

    #[test]
    fn parity_extension_lifts_odd_minimum_distance() {
        // the cyclic precursor of the m=4, d=2 sub-code is a [15, 7, 5] code;
        // the parity bit lifts the odd distance to 6
        let f = field(4);
        let spec = SubcodeSpec::new(4, 2, SubcodeFamily::Even).unwrap();
        let mut e = RingPolynomial::zero(f.n());
        for s in spec.idempotent_indices() {
            e = e.add(&primitive_idempotent_star(s, &f));
        }
        let cyclic = cyclic_code_from_idempotent(&e, &f).unwrap();
        assert_eq!((cyclic.n(), cyclic.k()), (15, 7));
        assert_eq!(cyclic.minimum_distance().unwrap(), 5);
        let extended = cyclic.extend_parity();
        assert_eq!(extended.minimum_distance().unwrap(), 6);
    }

    #[test]
    fn coset_method_matches_brute_force_on_rm2() {
        for m in 2..=5 {
            let c = rm2(m).unwrap();
            let by_cosets = weight_distribution_by_cosets(&c, m).unwrap();
            assert_eq!(&by_cosets, c.weight_distribution().unwrap(), "m={m}");
        }
        // rm2(4) contains weight-4 words
        assert!(rm2(4).unwrap().weight_distribution().unwrap().count(4) > 0);
    }

    #[test]
    fn coset_method_rejects_codes_without_rm1() {
        let o = orthogonal(4).unwrap();
        assert_eq!(
            weight_distribution_by_cosets(&o, 4),
            Err(Error::DoesNotContainRm1(4))
        );
    }

    #[test]
    fn coset_method_rejects_cubic_representatives() {
        // R(1,3) extended by the cubic v1 v2 v3
        let mut rows: Vec<BitVector> = canonical_rm1_generator(3).row_iter().cloned().collect();
        rows.push(BitVector::from_fn(8, |u| u == 7));
        let c = LinearCode::from_generator(BitMatrix::from_rows(rows, 8)).unwrap();
        assert_eq!(
            weight_distribution_by_cosets(&c, 3),
            Err(Error::NotQuadratic)
        );
    }

    #[test]
    fn every_subcode_contains_rm1_and_is_self_complementary() {
        for spec in all_specs_up_to(6) {
            let c = subcode(&spec, &field(spec.m)).unwrap();
            assert!(row_space_subset(
                &canonical_rm1_generator(spec.m),
                c.generator()
            ));
            assert!(c.is_self_complementary());
        }
    }

    #[test]
    fn every_subcode_lies_inside_rm2() {
        for spec in all_specs_up_to(6) {
            let c = subcode(&spec, &field(spec.m)).unwrap();
            assert!(
                row_space_subset(c.generator(), rm2(spec.m).unwrap().generator()),
                "{spec:?}"
            );
        }
    }

    #[test]
    fn d1_subcode_is_all_of_rm2() {
        for m in [3u32, 4, 5, 6] {
            let fam = if m % 2 == 0 {
                SubcodeFamily::Even
            } else {
                SubcodeFamily::OddFirst
            };
            let c = subcode(&SubcodeSpec::new(m, 1, fam).unwrap(), &field(m)).unwrap();
            let r2 = rm2(m).unwrap();
            assert_eq!(c.k(), r2.k());
            assert!(row_space_subset(c.generator(), r2.generator()));
        }
    }

    #[test]
    fn odd_families_coincide_at_d_1() {
        for m in [3u32, 5, 7] {
            let f = field(m);
            let a = subcode(
                &SubcodeSpec::new(m, 1, SubcodeFamily::OddFirst).unwrap(),
                &f,
            )
            .unwrap();
            let b = subcode(
                &SubcodeSpec::new(m, 1, SubcodeFamily::OddSecond).unwrap(),
                &f,
            )
            .unwrap();
            assert_eq!(a.generator(), b.generator());
        }
    }

    #[test]
    fn odd_families_share_parameters_everywhere() {
        for m in [5u32, 7] {
            let f = field(m);
            for d in 1..=(m - 1) / 2 {
                let a = subcode(
                    &SubcodeSpec::new(m, d, SubcodeFamily::OddFirst).unwrap(),
                    &f,
                )
                .unwrap();
                let b = subcode(
                    &SubcodeSpec::new(m, d, SubcodeFamily::OddSecond).unwrap(),
                    &f,
                )
                .unwrap();
                assert_eq!((a.n(), a.k()), (b.n(), b.k()));
                assert_eq!(
                    minimum_distance_by_cosets(&a, m).unwrap(),
                    minimum_distance_by_cosets(&b, m).unwrap()
                );
            }
        }
    }

    #[test]
    fn weight_sets_match_the_claim() {
        for spec in all_specs_up_to(6) {
            let c = subcode(&spec, &field(spec.m)).unwrap();
            assert!(verify_weight_set(&c, &spec).unwrap(), "{spec:?}");
        }
    }

    #[test]
    fn nesting_chains_small_m() {
        assert!(check_nesting(4).unwrap());
        assert!(check_nesting(5).unwrap());
        assert!(check_nesting(6).unwrap());
    }

    #[test]
    fn symplectic_group_m2() {
        let g = symplectic_group(2, &field(2)).unwrap();
        assert_eq!(g.len(), 2);
        assert!(g.elements()[0].is_zero());
        let nz = &g.elements()[1];
        assert!(nz.get(0, 1) && nz.get(1, 0) && !nz.get(0, 0) && !nz.get(1, 1));
        assert_eq!(nz.rank(), 2);
        assert!(g.is_xor_closed());
    }

    #[test]
    fn symplectic_group_m4() {
        let g = symplectic_group(4, &field(4)).unwrap();
        assert_eq!(g.len(), 4);
        assert!(g.elements()[0].is_zero());
        for b in &g.elements()[1..] {
            assert_eq!(b.rank(), 4);
            assert!(b.is_symmetric() && b.has_zero_diagonal());
        }
        assert!(g.is_xor_closed());
    }

    #[test]
    fn symplectic_group_rejects_odd_m() {
        assert!(symplectic_group(3, &field(3)).is_err());
    }

    #[test]
    fn rank_lower_bound_m4_d2_all_bent() {
        let f = field(4);
        assert!(
            rank_lower_bound_check(&SubcodeSpec::new(4, 2, SubcodeFamily::Even).unwrap(), &f)
                .unwrap()
        );
    }

    #[test]
    fn rank_lower_bound_m6() {
        let f = field(6);
        for d in 1..=3 {
            assert!(rank_lower_bound_check(
                &SubcodeSpec::new(6, d, SubcodeFamily::Even).unwrap(),
                &f
            )
            .unwrap());
        }
        // m=6, d=2: ranks land in {4, 6}
        let c = subcode(&SubcodeSpec::new(6, 2, SubcodeFamily::Even).unwrap(), &f).unwrap();
        let census = census_of_code(&c, 6).unwrap();
        assert_eq!(census[1], 0);
        assert!(census[2] > 0 && census[3] > 0);
    }

    #[test]
    fn trace_representation_matches_the_bent_cosets() {
        // The d = m/2 sub-code's nontrivial cosets have the trace form
        // f(x) = T_{m/2}(c * x^(1+2^(t+1))) with c ranging over the nonzero
        // subfield elements; the exponent pushes the argument into
        // GF(2^(m/2)), which the trace verifies at runtime. Every such truth
        // table must land in the sub-code and polarize into the group.
        for m in [4u32, 6] {
            let f = field(m);
            let t1 = m / 2; // t + 1
            let l = 1 + (1u64 << t1);
            let c_code = subcode(
                &SubcodeSpec::new(m, m / 2, SubcodeFamily::Even).unwrap(),
                &f,
            )
            .unwrap();
            let group = symplectic_group(m, &f).unwrap();
            let mut seen = Vec::new();
            for j in 0..(1u64 << t1) - 1 {
                let c = f.pow(f.alpha_pow(j), l);
                let table = BitVector::from_fn(1 << m, |u| {
                    if u == 0 {
                        return false;
                    }
                    let x = f.element(u as u32).unwrap();
                    let arg = f.mul(c, f.pow(x, l));
                    !f.trace(arg, m / 2).unwrap().is_zero()
                });
                assert!(c_code.contains(&table), "m={m} j={j}");
                let b = BooleanFunction::new(m, table.clone())
                    .unwrap()
                    .polarize()
                    .unwrap();
                assert_eq!(b.rank(), m as usize, "m={m} j={j}");
                assert!(group.contains(&b), "m={m} j={j}");
                assert!(!seen.contains(&table), "distinct cosets");
                seen.push(table);
            }
            assert_eq!(seen.len(), (1 << t1) - 1);
        }
    }

    #[test]
    fn budget_keeps_brute_force_away_from_large_codes() {
        // the (256, 29) target exceeds nothing: k = 29 <= 30 budget, but the
        // coset method is the intended fast path; just pin the budget value
        assert_eq!(DEFAULT_ENUMERATION_BUDGET, 30);
    }
}
