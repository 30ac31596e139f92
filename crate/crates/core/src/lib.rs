//! Exact engine for deciding whether a filtered deformation of a graded
//! algebra is a PBW-deformation.
//!
//! Three independent routes are implemented and cross-checked:
//!
//! * the Hilbert dimensions of `gr(U)` against those of `A`,
//! * regularity of the central variable `z` in the central extension `D`,
//!   together with the single matrix condition `pi_D(M3 f2 + f3 M1) = 0`
//!   built from a minimal resolution of the trivial module,
//! * the finite Jacobi condition `P_{k+1} ∩ F^k T ⊆ P_k` for `k <= c(A)`,
//!   where `c(A)` is the complexity read off `Ext^3(K, K)`.
//!
//! All arithmetic is exact; the whole crate is generic over [`Field`].

pub mod centralext;
pub mod error;
pub mod freealg;
pub mod linalg;
pub mod matrix;
pub mod pbw;
pub mod presentation;
pub mod report;
pub mod resolution;
pub mod rewrite;
pub mod scalar;

pub use error::{Error, Result};
pub use freealg::{Alphabet, CentralValue, ExtWord, ExtendedNCPoly, Letter, NCPoly, Word};
pub use scalar::{ConstPrime, Field, FieldKind, Fp, Gf101, GfRuntime, Modulus, Rational, RuntimePrime};

/// Free-algebra polynomial over the rationals.
pub type QPoly = NCPoly<Rational>;
/// Free-algebra polynomial over GF(101).
pub type Gf101Poly = NCPoly<Gf101>;
/// Element of `T[z]` over the rationals.
pub type QExtPoly = ExtendedNCPoly<Rational>;

/// Graded algebra over the rationals.
pub type QAlgebra = resolution::GradedAlgebra<Rational>;
/// Deformation over the rationals.
pub type QDeformation = centralext::Deformation<Rational>;
pub type Gf101Algebra = resolution::GradedAlgebra<Gf101>;
pub type Gf101Deformation = centralext::Deformation<Gf101>;
