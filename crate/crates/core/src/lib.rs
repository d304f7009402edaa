//! Exact and numerical machinery for the vacuum distributions of
//! nonsymmetric position operators on weakly monotone and monotone Fock
//! spaces.
//!
//! The operator of interest is `G + λ·A⁰` where `G = A + A†` is the
//! position operator built from creation/annihilation by a basis vector
//! and `A⁰ = A†A` is the preservation projection; `λ > 0` is the
//! intensity. The crate computes the vacuum moment sequences of sums of
//! such operators along four independent routes and the analytic
//! (free Meixner) description of the corresponding laws:
//!
//! - [`paths`]: Motzkin/Riordan lattice-path enumeration and λ-weighted
//!   dynamic programming;
//! - [`partitions`]: noncrossing labeled partition classes whose weighted
//!   cardinalities are the moments;
//! - [`moments`]: the moment recursions, their scaled floating-point
//!   variant for large sums, and the combinatorial limit moments;
//! - [`fock`]: a direct sparse simulation of the operators themselves;
//! - [`measures`]: free Meixner laws, Cauchy transforms, Stieltjes
//!   inversion, Jacobi matrices, and monotone convolution.
//!
//! Everything exact runs on [`algebra::LambdaPoly`], polynomials in the
//! intensity with arbitrary-precision integer coefficients.

pub mod algebra;
pub mod fock;
pub mod measures;
pub mod moments;
pub mod partitions;
pub mod paths;

pub use algebra::LambdaPoly;

/// Which Fock space a computation lives on: tensor indices weakly
/// decreasing (labels weakly increase inward along nesting) or strictly
/// decreasing (labels strictly increase on nested two-blocks).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    WeaklyMonotone,
    Monotone,
}
