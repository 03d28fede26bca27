//! Cyclotomic cosets mod `2^m - 1`, primitive idempotents via the inverse
//! Mattson-Solomon transform, and cyclic codes generated from an idempotent.
//!
//! The ring is `R_n = GF(2)[x] / (x^n - 1)` with `n = 2^m - 1`. A ring
//! polynomial is a length-`n` binary coefficient vector (coefficient of `x^i`
//! at bit `i`); position `i` corresponds to the field element `alpha^i`.

use crate::binlinalg::{BitMatrix, BitVector, Span};
use crate::codes::LinearCode;
use crate::error::{Error, Result};
use crate::gf2m::{FieldElement, FieldTable};

/// Orbit of `s` under doubling mod `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclotomicCoset {
    representative: u64,
    members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn representative(&self) -> u64 {
        self.representative
    }

    /// Members in ascending order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: u64) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}

/// The cyclotomic coset `C_s = {s, 2s, 4s, ...}` mod `n`.
pub fn cyclotomic_coset(s: u64, n: u64) -> CyclotomicCoset {
    assert!(n > 0 && s < n, "require 0 <= s < n");
    let mut members = vec![s];
    let mut cur = (2 * s) % n;
    while cur != s {
        members.push(cur);
        cur = (2 * cur) % n;
    }
    members.sort_unstable();
    CyclotomicCoset {
        representative: members[0],
        members,
    }
}

/// All distinct cyclotomic cosets mod `n`, ordered by representative.
pub fn all_cyclotomic_cosets(n: u64) -> Vec<CyclotomicCoset> {
    let mut seen = vec![false; n as usize];
    let mut cosets = Vec::new();
    for s in 0..n {
        if !seen[s as usize] {
            let c = cyclotomic_coset(s, n);
            for &x in c.members() {
                seen[x as usize] = true;
            }
            cosets.push(c);
        }
    }
    cosets
}

/// Closed form for `gcd(2^m - 1, 2^i + 1)`: 1 when `gcd(m, 2i) = gcd(m, i)`,
/// and `2^gcd(m, i) + 1` when `gcd(m, 2i) = 2 gcd(m, i)`.
pub fn gcd_power_formula(m: u32, i: u32) -> u64 {
    assert!(m >= 1 && i >= 1);
    let g = gcd(m as u64, i as u64);
    let g2 = gcd(m as u64, 2 * i as u64);
    if g2 == g {
        1
    } else {
        debug_assert_eq!(g2, 2 * g);
        (1u64 << g) + 1
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Closed form for `|C_{1 + 2^i}|` mod `2^m - 1`: for odd `m = 2t+1` the size
/// is `m` for `1 <= i <= t`; for even `m = 2t+2` it is `m` for `i <= t` and
/// `m/2` for `i = t+1`.
pub fn coset_size_formula(m: u32, i: u32) -> Result<u64> {
    let max = if m % 2 == 0 { m / 2 } else { (m - 1) / 2 };
    if i < 1 || i > max {
        return Err(Error::CosetIndexOutOfRange { i, max });
    }
    if m % 2 == 0 && i == m / 2 {
        Ok(m as u64 / 2)
    } else {
        Ok(m as u64)
    }
}

/// A binary polynomial in `R_n = GF(2)[x] / (x^n - 1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingPolynomial {
    coeffs: BitVector,
}

impl RingPolynomial {
    pub fn zero(n: usize) -> RingPolynomial {
        RingPolynomial {
            coeffs: BitVector::zeros(n),
        }
    }

    pub fn from_coeffs(coeffs: BitVector) -> RingPolynomial {
        RingPolynomial { coeffs }
    }

    /// The monomial `x^i`.
    pub fn monomial(n: usize, i: usize) -> RingPolynomial {
        let mut p = Self::zero(n);
        p.coeffs.set(i % n, true);
        p
    }

    pub fn n(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.coeffs.get(i)
    }

    pub fn coeffs(&self) -> &BitVector {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }

    pub fn weight(&self) -> usize {
        self.coeffs.weight()
    }

    pub fn add(&self, other: &RingPolynomial) -> RingPolynomial {
        RingPolynomial {
            coeffs: self.coeffs.xor(&other.coeffs),
        }
    }

    /// Schoolbook product with reduction `x^n = 1`.
    pub fn mul(&self, other: &RingPolynomial) -> RingPolynomial {
        let n = self.n();
        assert_eq!(n, other.n(), "ring size mismatch");
        let mut out = BitVector::zeros(n);
        for i in 0..n {
            if !self.coeffs.get(i) {
                continue;
            }
            for j in 0..n {
                if other.coeffs.get(j) {
                    let k = (i + j) % n;
                    out.set(k, !out.get(k));
                }
            }
        }
        RingPolynomial { coeffs: out }
    }

    /// Squaring in characteristic 2 permutes coefficients: `c(x)^2 = c(x^2)`.
    pub fn square(&self) -> RingPolynomial {
        let n = self.n();
        let mut out = BitVector::zeros(n);
        for i in 0..n {
            if self.coeffs.get(i) {
                out.set(2 * i % n, true);
            }
        }
        RingPolynomial { coeffs: out }
    }

    pub fn is_idempotent(&self) -> bool {
        self.square() == *self
    }

    /// The cyclic shift `x^i * self`.
    pub fn shift(&self, i: usize) -> RingPolynomial {
        let n = self.n();
        let mut out = BitVector::zeros(n);
        for j in 0..n {
            if self.coeffs.get(j) {
                out.set((j + i) % n, true);
            }
        }
        RingPolynomial { coeffs: out }
    }

    /// Evaluation at a field element.
    pub fn eval(&self, field: &FieldTable, point: FieldElement) -> FieldElement {
        let mut acc = FieldElement::ZERO;
        for i in 0..self.n() {
            if self.coeffs.get(i) {
                acc = field.add(acc, field.pow(point, i as u64));
            }
        }
        acc
    }
}

/// The primitive idempotent `theta_s^*`, whose Mattson-Solomon polynomial is
/// `A(z) = sum of z^j over j in C_s`; by the inverse transform its
/// coefficients are `c_i = A(alpha^i) = sum of alpha^(i j) over j in C_s`,
/// each of which lands in GF(2) because `C_s` is closed under doubling.
///
/// Its defining evaluation property is `theta_s^*(alpha^j) = 1` exactly for
/// `j` in `C_{-s}`.
pub fn primitive_idempotent_star(s: u64, field: &FieldTable) -> RingPolynomial {
    let n = field.n() as u64;
    let coset = cyclotomic_coset(s % n, n);
    let coeffs = BitVector::from_fn(n as usize, |i| {
        let mut acc = FieldElement::ZERO;
        for &j in coset.members() {
            acc = field.add(acc, field.alpha_pow(i as u64 * j));
        }
        debug_assert!(acc.mask() <= 1, "spectral sum must land in GF(2)");
        !acc.is_zero()
    });
    RingPolynomial::from_coeffs(coeffs)
}

/// The primitive idempotent `theta_s` itself (`theta_s = theta_{-s}^*`).
pub fn primitive_idempotent(s: u64, field: &FieldTable) -> RingPolynomial {
    let n = field.n() as u64;
    primitive_idempotent_star((n - s % n) % n, field)
}

/// The cyclic code generated by an idempotent: the span of the cyclic shifts
/// `x^i e(x)`. Its dimension equals the size of the spectral support
/// `{ j : e(alpha^j) = 1 }`.
pub fn cyclic_code_from_idempotent(e: &RingPolynomial, field: &FieldTable) -> Result<LinearCode> {
    let n = field.n();
    if e.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "polynomial lives in R_{} but the field has n = {n}",
            e.n()
        )));
    }
    if !e.is_idempotent() {
        return Err(Error::NotIdempotent);
    }
    let mut span = Span::new(n);
    let mut basis = Vec::new();
    for i in 0..n {
        let row = e.shift(i).coeffs().clone();
        if span.insert(&row) {
            basis.push(row);
        }
    }
    let code = LinearCode::from_generator(BitMatrix::from_rows(basis, n))
        .expect("collected rows are independent");
    debug_assert_eq!(code.k(), spectral_support_size(e, field));
    Ok(code)
}

/// Number of `j` with `e(alpha^j) = 1`.
pub fn spectral_support_size(e: &RingPolynomial, field: &FieldTable) -> usize {
    (0..field.n())
        .filter(|&j| e.eval(field, field.alpha_pow(j as u64)) == FieldElement::ONE)
        .count()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn euclid_oracle(m: u32, i: u32) -> u64 {
        let a = (1u128 << m) - 1;
        let b = (1u128 << i) + 1;
        let (mut a, mut b) = (a, b);
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a as u64
    }

    #[test]
    fn coset_of_zero_is_singleton() {
        for n in [3u64, 7, 15, 31] {
            let c = cyclotomic_coset(0, n);
            assert_eq!(c.members(), &[0]);
            assert_eq!(c.representative(), 0);
        }
    }

    #[test]
    fn coset_5_mod_15_has_size_2() {
        let c = cyclotomic_coset(5, 15);
        assert_eq!(c.members(), &[5, 10]);
    }

    #[test]
    fn coset_3_mod_15_has_size_4() {
        let c = cyclotomic_coset(3, 15);
        assert_eq!(c.members(), &[3, 6, 9, 12]);
        assert_eq!(c.representative(), 3);
    }

    #[test]
    fn cosets_partition_the_residues() {
        for m in 2..=10u32 {
            let n = (1u64 << m) - 1;
            let cosets = all_cyclotomic_cosets(n);
            let total: usize = cosets.iter().map(|c| c.len()).sum();
            assert_eq!(total as u64, n);
            for c in &cosets {
                assert!(c.len() as u32 <= m);
                assert_eq!(m as usize % c.len(), 0, "coset size divides m");
                // closed under doubling
                for &x in c.members() {
                    assert!(c.contains(2 * x % n));
                }
            }
        }
    }

    #[test]
    fn gcd_formula_examples() {
        assert_eq!(gcd_power_formula(6, 2), 1); // gcd(63, 5)
        assert_eq!(gcd_power_formula(6, 3), 9); // gcd(63, 9) = 2^3 + 1
        assert_eq!(gcd_power_formula(5, 1), 1); // gcd(31, 3)
    }

    #[test]
    fn gcd_formula_matches_euclid_exhaustively() {
        for m in 1..=20u32 {
            for i in 1..=m {
                assert_eq!(gcd_power_formula(m, i), euclid_oracle(m, i), "m={m} i={i}");
            }
        }
    }

    #[test]
    fn coset_size_formula_examples() {
        assert_eq!(coset_size_formula(4, 2).unwrap(), 2);
        assert_eq!(coset_size_formula(7, 3).unwrap(), 7);
        assert_eq!(coset_size_formula(8, 4).unwrap(), 4);
    }

    #[test]
    fn coset_size_formula_range_checks() {
        assert!(coset_size_formula(7, 4).is_err());
        assert!(coset_size_formula(6, 0).is_err());
        assert!(coset_size_formula(6, 4).is_err());
    }

    #[test]
    fn coset_size_formula_matches_direct_computation() {
        for m in 2..=16u32 {
            let n = (1u64 << m) - 1;
            let max = if m % 2 == 0 { m / 2 } else { (m - 1) / 2 };
            for i in 1..=max {
                let l = (1 + (1u64 << i)) % n;
                assert_eq!(
                    coset_size_formula(m, i).unwrap(),
                    cyclotomic_coset(l, n).len() as u64,
                    "m={m} i={i}"
                );
            }
        }
    }

    #[test]
    fn theta_0_is_the_all_one_polynomial() {
        let f = FieldTable::new(3).unwrap();
        let t0 = primitive_idempotent_star(0, &f);
        assert_eq!(t0.weight(), 7);
    }

    #[test]
    fn theta_star_evaluation_property() {
        // theta_1^* evaluates to 1 exactly on C_{-1}
        for m in 2..=6u32 {
            let f = FieldTable::new(m).unwrap();
            let n = f.n() as u64;
            for s in [0u64, 1, 3] {
                let theta = primitive_idempotent_star(s % n, &f);
                let neg = cyclotomic_coset((n - s % n) % n, n);
                for j in 0..n {
                    let v = theta.eval(&f, f.alpha_pow(j));
                    let expect = if neg.contains(j) {
                        FieldElement::ONE
                    } else {
                        FieldElement::ZERO
                    };
                    assert_eq!(v, expect, "m={m} s={s} j={j}");
                }
            }
        }
    }

    #[test]
    fn theta_1_star_m3_support() {
        let f = FieldTable::new(3).unwrap();
        let theta = primitive_idempotent_star(1, &f);
        let neg = cyclotomic_coset(6, 7); // C_{-1} = {6, 5, 3}
        assert_eq!(neg.members(), &[3, 5, 6]);
        for j in 0..7u64 {
            let one = theta.eval(&f, f.alpha_pow(j)) == FieldElement::ONE;
            assert_eq!(one, neg.contains(j));
        }
    }

    #[test]
    fn idempotents_square_to_themselves() {
        for m in 2..=6u32 {
            let f = FieldTable::new(m).unwrap();
            let n = f.n() as u64;
            for s in 0..n {
                let theta = primitive_idempotent_star(s, &f);
                assert!(theta.is_idempotent(), "m={m} s={s}");
                assert_eq!(theta.mul(&theta), theta, "ring product agrees");
            }
        }
    }

    #[test]
    fn primitive_idempotents_are_orthogonal() {
        for m in 2..=5u32 {
            let f = FieldTable::new(m).unwrap();
            let n = (1u64 << m) - 1;
            let reps: Vec<u64> = all_cyclotomic_cosets(n)
                .iter()
                .map(|c| c.representative())
                .collect();
            for (a, &r) in reps.iter().enumerate() {
                for &t in &reps[a + 1..] {
                    let p = primitive_idempotent_star(r, &f);
                    let q = primitive_idempotent_star(t, &f);
                    assert!(p.mul(&q).is_zero(), "m={m} r={r} t={t}");
                }
            }
        }
    }

    #[test]
    fn theta_equals_star_of_negated_index() {
        let f = FieldTable::new(4).unwrap();
        for s in 0..15u64 {
            let direct = primitive_idempotent(s, &f);
            // evaluation property of theta_s: 1 exactly on C_s
            let coset = cyclotomic_coset(s, 15);
            for j in 0..15u64 {
                let one = direct.eval(&f, f.alpha_pow(j)) == FieldElement::ONE;
                assert_eq!(one, coset.contains(j));
            }
        }
    }

    #[test]
    fn code_from_theta_0_is_the_repetition_code() {
        let f = FieldTable::new(3).unwrap();
        let c = cyclic_code_from_idempotent(&primitive_idempotent_star(0, &f), &f).unwrap();
        assert_eq!((c.n(), c.k()), (7, 1));
        assert!(c.contains_all_one());
    }

    #[test]
    fn code_from_theta0_plus_theta1_star_m3_has_dimension_4() {
        let f = FieldTable::new(3).unwrap();
        let e = primitive_idempotent_star(0, &f).add(&primitive_idempotent_star(1, &f));
        let c = cyclic_code_from_idempotent(&e, &f).unwrap();
        assert_eq!((c.n(), c.k()), (7, 4));
    }

    #[test]
    fn punctured_rm2_idempotent_m4_has_dimension_11() {
        // theta_0 + theta_1^* + theta_3^* + theta_5^*: 1 + 4 + 4 + 2 = 11
        let f = FieldTable::new(4).unwrap();
        let e = primitive_idempotent_star(0, &f)
            .add(&primitive_idempotent_star(1, &f))
            .add(&primitive_idempotent_star(3, &f))
            .add(&primitive_idempotent_star(5, &f));
        let c = cyclic_code_from_idempotent(&e, &f).unwrap();
        assert_eq!((c.n(), c.k()), (15, 11));
    }

    #[test]
    fn non_idempotent_is_rejected() {
        let f = FieldTable::new(3).unwrap();
        let x = RingPolynomial::monomial(7, 1);
        assert_eq!(
            cyclic_code_from_idempotent(&x, &f),
            Err(Error::NotIdempotent)
        );
    }

    #[test]
    fn dimension_equals_spectral_support_for_coset_sums() {
        for m in 2..=6u32 {
            let f = FieldTable::new(m).unwrap();
            let n = (1u64 << m) - 1;
            let cosets = all_cyclotomic_cosets(n);
            // a few deterministic subsets of the coset list
            for pick in 1..(1usize << cosets.len().min(5)) {
                let mut e = RingPolynomial::zero(n as usize);
                for (i, c) in cosets.iter().enumerate().take(5) {
                    if (pick >> i) & 1 == 1 {
                        e = e.add(&primitive_idempotent_star(c.representative(), &f));
                    }
                }
                if e.is_zero() {
                    continue;
                }
                let code = cyclic_code_from_idempotent(&e, &f).unwrap();
                assert_eq!(code.k(), spectral_support_size(&e, &f));
            }
        }
    }

    #[test]
    fn shifts_generate_the_whole_code() {
        // every cyclic shift of a codeword stays in the code
        let f = FieldTable::new(4).unwrap();
        let e = primitive_idempotent_star(1, &f);
        let c = cyclic_code_from_idempotent(&e, &f).unwrap();
        for i in 0..c.k() {
            let row = RingPolynomial::from_coeffs(c.generator().row(i).clone());
            assert!(c.contains(row.shift(1).coeffs()));
        }
    }
}
