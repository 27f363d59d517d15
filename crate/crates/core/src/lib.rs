// Index loops mirror the matrix notation throughout; iterator rewrites of
// them obscure the arithmetic.
#![allow(clippy::needless_range_loop)]

//! Exact arithmetic for Hermitian lattices over the Eisenstein integers.
//!
//! The Eisenstein integers `E = Z[ω]`, `ω² + ω + 1 = 0`, form a Euclidean
//! domain with six units `±1, ±ω, ±ω²` and a ramified prime `θ = ω − ω̄ = √−3`
//! with `θθ̄ = 3`. This crate implements the linear algebra of finitely
//! generated `E`-modules carrying a Hermitian form (linear in the first
//! argument, antilinear in the second), entirely in checked machine-integer
//! arithmetic, and uses it to build and verify a small zoo of classical
//! objects:
//!
//! - the definite Eisenstein root lattices `A₂ᴱ`, `D₄ᴱ`, `E₆ᴱ`, `E₈ᴱ`, their
//!   root systems, reflection groups, automorphism groups, and glue groups
//!   ([`catalog`]);
//! - the tetracode, hexacode, and ternary Golay code, and the glue
//!   constructions they drive: the four Eisenstein Niemeier lattices with
//!   roots and the complex Leech lattice ([`codes`], [`catalog`]);
//! - the projective plane `P²F₃`, its collineation group `L₃(3)`, its
//!   26-node incidence graph, and the embedding of the `Y₅₅₅` diagram into
//!   that graph ([`plane`]);
//! - the Lorentzian lattice `L₁₃,₁` of signature (13,1) defined by the line
//!   code of `P²F₃`, its point and line roots, the null vector `ρ`, and the
//!   reflection-group computations that identify the sublattice generated by
//!   differences of a distinguished 390-root batch ([`model`]).
//!
//! Every verification is an exact computation: root counts by complete
//! short-vector enumeration, group orders by breadth-first closure or
//! backtracking, subspace claims by Hermite normal form over `E`. Floating
//! point appears only as a conservative pruning bound inside the enumerator;
//! no check is decided by a floating-point comparison.
//!
//! The [`report`] module packages the checks into named suites producing
//! machine-readable reports; the companion CLI exposes them.

pub mod catalog;
pub mod codes;
pub mod eisenstein;
pub mod fields;
pub mod fmat;
pub mod hnf;
pub mod isometry;
pub mod lattice;
pub mod lll;
pub mod model;
pub mod par;
pub mod plane;
pub mod rat;
pub mod report;
pub mod scaled;

use thiserror::Error;

/// Errors for operations with explicit failure contracts.
///
/// Checks that merely *fail* (a count coming out wrong) are not errors; they
/// become failing [`report::VerificationRecord`]s. Errors are reserved for
/// inputs outside an operation's domain and for exceeded resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Breadth-first group closure exceeded the configured element cap.
    #[error("group closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    /// Short-vector enumeration exceeded the configured vector cap.
    #[error("enumeration exceeded cap of {cap} vectors ({found} found)")]
    EnumerationCapExceeded { cap: usize, found: usize },
    /// A vector or matrix had the wrong dimension for the operation.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    /// The operation requires an integral (denominator-1) lattice basis.
    #[error("operation requires an integral basis: {0}")]
    NonIntegral(&'static str),
    /// The Gram matrix is singular where a nondegenerate form is required.
    #[error("degenerate Gram matrix")]
    DegenerateGram,
    /// The operation requires a positive definite form.
    #[error("operation requires a positive definite form")]
    NotDefinite,
    /// A vector expected to be a root (norm 3) is not.
    #[error("vector is not a root: norm is {0}")]
    NotARoot(String),
    /// A vector expected to be null (norm 0) is not.
    #[error("vector is not null: norm is {0}")]
    NotNull(String),
    /// A vector expected to be primitive in its lattice is divisible.
    #[error("vector is not primitive in the lattice")]
    NotPrimitive,
    /// A vector expected to lie in a lattice does not.
    #[error("vector does not lie in the lattice")]
    NotInLattice,
    /// Exhaustive weight enumeration refused: the code dimension is too big.
    #[error("code dimension {dim} exceeds the enumeration limit of 12")]
    CodeTooLarge { dim: usize },
    /// A hard-coded constant failed its construction-time self-check.
    #[error("self-check failed: {0}")]
    SelfCheck(String),
}

/// Resource limits and the parallelism degree for long-running operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct Config {
    /// Cap on group-closure size (default 200 000).
    pub closure_cap: usize,
    /// Cap on enumerated short vectors (default 1 000 000).
    pub enum_cap: usize,
    /// Worker threads for data-parallel scans: 0 = all cores, 1 = sequential.
    /// Results are identical for every setting.
    pub threads: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { closure_cap: 200_000, enum_cap: 1_000_000, threads: 0 }
    }
}
