//! Arithmetic in GF(2^m) for 2 <= m <= 16.
//!
//! Each field is realized as GF(2)[x] modulo a fixed primitive polynomial, one
//! per degree, so that every construction downstream is reproducible
//! byte-for-byte. Elements are m-bit masks in the polynomial basis
//! {1, alpha, ..., alpha^(m-1)}; multiplication goes through exp/log tables
//! built once at construction. A table is at most 128 KiB (m = 16).
//!
//! The table build doubles as the primitivity check: if x failed to generate
//! all 2^m - 1 nonzero masks with period exactly 2^m - 1, construction fails,
//! which also rules out a reducible modulus.

use crate::error::{Error, Result};

/// Fixed primitive polynomial per degree, as a bitmask including the leading
/// term. Degree 2: x^2+x+1, 3: x^3+x+1, 4: x^4+x+1, 5: x^5+x^2+1,
/// 6: x^6+x+1, 7: x^7+x^3+1, 8: x^8+x^4+x^3+x^2+1, then the standard choices
/// up to degree 16.
const PRIMITIVE_POLYS: [u32; 15] = [
    0b111,                   // m = 2
    0b1011,                  // m = 3
    0b1_0011,                // m = 4
    0b10_0101,               // m = 5
    0b100_0011,              // m = 6
    0b1000_1001,             // m = 7
    0b1_0001_1101,           // m = 8
    0b10_0001_0001,          // m = 9  (x^9+x^4+1)
    0b100_0000_1001,         // m = 10 (x^10+x^3+1)
    0b1000_0000_0101,        // m = 11 (x^11+x^2+1)
    0b1_0000_0101_0011,      // m = 12 (x^12+x^6+x^4+x+1)
    0b10_0000_0001_1011,     // m = 13 (x^13+x^4+x^3+x+1)
    0b100_0100_0100_0011,    // m = 14 (x^14+x^10+x^6+x+1)
    0b1000_0000_0000_0011,   // m = 15 (x^15+x+1)
    0b1_0001_0000_0000_1011, // m = 16 (x^16+x^12+x^3+x+1)
];

/// An element of GF(2^m), stored as its m-bit mask in the polynomial basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u16);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub fn mask(self) -> u16 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Precomputed exp/log tables for one GF(2^m).
#[derive(Debug, Clone)]
pub struct FieldTable {
    m: u32,
    primitive_poly: u32,
    exp: Vec<u16>,
    log: Vec<u16>,
}

impl FieldTable {
    /// Builds the tables for the fixed primitive polynomial of degree `m`.
    pub fn new(m: u32) -> Result<FieldTable> {
        if !(2..=16).contains(&m) {
            return Err(Error::UnsupportedDegree(m));
        }
        let poly = PRIMITIVE_POLYS[(m - 2) as usize];
        let n = (1u32 << m) - 1;
        let mut exp = vec![0u16; n as usize];
        let mut log = vec![u16::MAX; 1 << m];
        let mut cur: u32 = 1;
        for (i, slot) in exp.iter_mut().enumerate() {
            *slot = cur as u16;
            if log[cur as usize] != u16::MAX {
                // repeated mask: x is not primitive for this modulus
                return Err(Error::UnsupportedDegree(m));
            }
            log[cur as usize] = i as u16;
            cur <<= 1;
            if cur & (1 << m) != 0 {
                cur ^= poly;
            }
        }
        if cur != 1 {
            return Err(Error::UnsupportedDegree(m));
        }
        Ok(FieldTable {
            m,
            primitive_poly: poly,
            exp,
            log,
        })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    /// Order of the multiplicative group, `2^m - 1`.
    pub fn n(&self) -> usize {
        self.exp.len()
    }

    pub fn primitive_poly(&self) -> u32 {
        self.primitive_poly
    }

    /// The fixed primitive element alpha (= x).
    pub fn alpha(&self) -> FieldElement {
        FieldElement(self.exp[1])
    }

    /// `alpha^e` with the exponent reduced mod `2^m - 1`.
    pub fn alpha_pow(&self, e: u64) -> FieldElement {
        FieldElement(self.exp[(e % self.n() as u64) as usize])
    }

    /// Wraps a mask as a field element, validating the range.
    pub fn element(&self, mask: u32) -> Result<FieldElement> {
        if mask >> self.m != 0 {
            return Err(Error::ElementOutOfRange { mask, m: self.m });
        }
        Ok(FieldElement(mask as u16))
    }

    /// Discrete log base alpha; `None` for the zero element.
    pub fn log(&self, a: FieldElement) -> Option<u32> {
        if a.is_zero() {
            None
        } else {
            Some(self.log[a.0 as usize] as u32)
        }
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(a.0 ^ b.0)
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if a.is_zero() || b.is_zero() {
            return FieldElement::ZERO;
        }
        let n = self.n() as u32;
        let e = (self.log[a.0 as usize] as u32 + self.log[b.0 as usize] as u32) % n;
        FieldElement(self.exp[e as usize])
    }

    /// `a^e`. `0^0` is defined as 1; inversion is `pow(a, 2^m - 2)`.
    pub fn pow(&self, a: FieldElement, e: u64) -> FieldElement {
        if a.is_zero() {
            return if e == 0 {
                FieldElement::ONE
            } else {
                FieldElement::ZERO
            };
        }
        let n = self.n() as u64;
        let la = self.log[a.0 as usize] as u64;
        FieldElement(self.exp[((la * (e % n)) % n) as usize])
    }

    /// Frobenius map `a -> a^(2^k)`.
    pub fn frobenius(&self, a: FieldElement, k: u32) -> FieldElement {
        self.pow(a, 1u64 << (k % 64))
    }

    /// True if `a` lies in the subfield GF(2^s) (i.e. `a^(2^s) = a`).
    pub fn in_subfield(&self, a: FieldElement, s: u32) -> bool {
        self.frobenius(a, s) == a
    }

    /// Trace of GF(2^s) onto GF(2): `a + a^2 + ... + a^(2^(s-1))`.
    ///
    /// `s` must divide `m` and `a` must lie in the subfield GF(2^s); the
    /// membership is verified at runtime rather than assumed. The result is
    /// always 0 or 1.
    pub fn trace(&self, a: FieldElement, s: u32) -> Result<FieldElement> {
        if s == 0 || self.m % s != 0 {
            return Err(Error::NotASubfieldDegree { m: self.m, s });
        }
        if !self.in_subfield(a, s) {
            return Err(Error::NotInSubfield {
                mask: a.0 as u32,
                s,
            });
        }
        let mut acc = FieldElement::ZERO;
        let mut cur = a;
        for _ in 0..s {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur, 1);
        }
        debug_assert!(acc.0 <= 1, "trace onto GF(2) must be 0 or 1");
        Ok(acc)
    }

    /// Relative trace GF(2^m) -> GF(2^s): `sum of a^(2^(s*i))` for i < m/s.
    pub fn trace_down(&self, a: FieldElement, s: u32) -> Result<FieldElement> {
        if s == 0 || self.m % s != 0 {
            return Err(Error::NotASubfieldDegree { m: self.m, s });
        }
        let mut acc = FieldElement::ZERO;
        let mut cur = a;
        for _ in 0..self.m / s {
            acc = self.add(acc, cur);
            cur = self.frobenius(cur, s);
        }
        debug_assert!(self.in_subfield(acc, s));
        Ok(acc)
    }

    /// Iterator over all field elements, zero first then powers of alpha by
    /// ascending mask order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..1u32 << self.m).map(|mask| FieldElement(mask as u16))
    }
}
