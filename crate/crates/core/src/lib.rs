//! Exact-arithmetic workbench for small Hopf algebras over finite fields.
//!
//! Everything here is exact: scalars live in `F_{q^m}` (coefficient vectors
//! modulo an irreducible polynomial), linear algebra is fraction-free
//! Gauss-Jordan, and algebra structures are stored as explicit
//! structure-constant tensors. There are no floats and no tolerances; every
//! comparison is exact equality, so any check that passes is a proof at the
//! stated dimensions.
//!
//! Module map:
//! - [`field`]: finite fields `F_{q^m}` and their scalars.
//! - [`linalg`]: dense matrices, reduced row echelon form, subspaces.
//! - [`hopf`]: structure-constant Hopf algebras, axiom verification,
//!   convolution-inverse antipodes, duals, JSON import/export.
//! - [`families`]: constructors for the classified families of dimension
//!   `p^2` (group algebras, the `taft` family, `a1`..`a8`, `b1`..`b4`).
//! - [`analysis`]: grouplikes, skew-primitives, conjugation characters,
//!   coradical filtration, Frobenius data, adjoint-matrix identities.
//! - [`classify`]: invariant fingerprints and the self-calibrating matcher.

pub mod analysis;
pub mod classify;
pub mod families;
pub mod field;
pub mod hopf;
pub mod linalg;

mod error;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
