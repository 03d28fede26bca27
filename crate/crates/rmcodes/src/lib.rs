//! First- and second-order Reed-Muller codes over GF(2), the linear sub-code
//! families of `R(2,m)` generated by cyclic-code idempotents, exact weight
//! distributions by two independent methods, and the classical coding bounds
//! used to reason about them.
//!
//! The building blocks:
//!
//! * [`binlinalg`] — bit-packed vectors and matrices over GF(2): rank,
//!   reduced echelon forms, systematic form with an explicit column
//!   permutation, kernels, row-space queries.
//! * [`gf2m`] — GF(2^m) arithmetic for `2 <= m <= 16` over fixed primitive
//!   polynomials, with trace maps down to subfields.
//! * [`codes`] — linear codes as generator matrices: Gray-code weight
//!   enumeration, minimum distance, puncture/extend, duals, a text file
//!   format, and a constructive uniqueness verifier for `[2^m, 1+m, 2^(m-1)]`
//!   codes that emits an equivalence certificate.
//! * [`boolfn`] — Boolean functions as truth tables: fast Hadamard transform,
//!   bent test, polarization of quadratics into symplectic matrices, and the
//!   rank-determined coset weight law.
//! * [`cyclic`] — cyclotomic cosets, primitive idempotents via the
//!   Mattson-Solomon transform, and cyclic codes generated from idempotents.
//! * [`rm`] — the Reed-Muller constructions themselves: `R(1,m)`, `R(2,m)`,
//!   orthogonal/simplex codes, the even-m and odd-m sub-code families,
//!   coset-rank weight distributions, nesting checks, and the additive group
//!   of full-rank symplectic matrices.
//! * [`bounds`] — Plotkin, Hamming and Grey-Rankin bounds in exact integer
//!   arithmetic, plus the self-complementary optimality predicate.
//! * [`table1`] — the bundled reference table of constructed sub-codes and
//!   its reproduction.
//!
//! ```
//! use rmcodes::rm;
//!
//! // R(1,4) is a [16, 5, 8] code with 30 words of weight 8
//! let code = rm::rm1(4).unwrap();
//! assert_eq!((code.n(), code.k()), (16, 5));
//! let dist = code.weight_distribution().unwrap();
//! assert_eq!(dist.count(8), 30);
//!
//! // the same distribution through the coset-rank method
//! let by_cosets = rm::weight_distribution_by_cosets(&code, 4).unwrap();
//! assert_eq!(&by_cosets, dist);
//! ```

pub mod binlinalg;
pub mod boolfn;
pub mod bounds;
pub mod codes;
pub mod cyclic;
pub mod error;
pub mod gf2m;
pub mod rm;
pub mod table1;

pub use binlinalg::{BitMatrix, BitVector};
pub use boolfn::{BooleanFunction, SpectrumVector};
pub use codes::{EquivalenceCertificate, LinearCode, WeightDistribution};
pub use error::{Error, Result};
pub use gf2m::{FieldElement, FieldTable};
pub use rm::{SubcodeFamily, SubcodeSpec, SymplecticGroup};
