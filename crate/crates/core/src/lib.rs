//! Dirac's two-oscillator representation of the 3+2 de Sitter algebra, built
//! from the Sp(4) matrix generators.
//!
//! The crate follows one chain of constructions and checks every link:
//!
//! * [`lie_matrix`]: Pauli-block 4×4 generators, the symplectic condition, and
//!   the so(3,2) commutator table.
//! * [`symplectic`]: quadratic phase-space forms, linear Hamiltonian fields,
//!   and Poisson brackets.
//! * [`fock`]: truncated multi-mode Fock spaces and sparse operators.
//! * [`quantization`]: Weyl quantization of quadratic forms into ladder
//!   operators, plus the hand-written ten-operator representation.
//! * [`jordan`]: bilinear and pair-creation Jordan maps and the Sp(2n) bases.
//! * [`chiral`]: the chiral-oscillator picture of `H` and `L₃`.
//! * [`suites`] and [`cli`]: named verification suites and the command line.

pub mod algebra;
pub mod chiral;
pub mod cli;
pub mod error;
pub mod fock;
pub mod generators;
pub mod jordan;
pub mod lie_matrix;
pub mod matrix;
pub mod quantization;
pub mod report;
pub mod suites;
pub mod symplectic;
pub mod tolerance;

pub use error::{Error, Result};
pub use generators::{GeneratorSet, Label};
pub use matrix::ComplexMatrix;

/// Complex scalar used everywhere.
pub type C64 = num_complex::Complex64;

/// Shorthand for `C64::new(re, im)`.
#[inline]
pub const fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}
