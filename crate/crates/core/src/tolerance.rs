//! Numerical tolerances.
//!
//! | name        | value  | used for                                          |
//! |-------------|--------|---------------------------------------------------|
//! | `EPS_ALG`   | 1e-12  | small matrices with entries that are halves of integers |
//! | `EPS_FOCK`  | 1e-10  | Fock operators (√n factors, larger commutator sums) |
//! | `EPS_ALIGN` | 1e-8   | least-squares basis alignment between two spans   |

pub const EPS_ALG: f64 = 1e-12;
pub const EPS_FOCK: f64 = 1e-10;
pub const EPS_ALIGN: f64 = 1e-8;

/// Relative threshold below which a Gram eigenvalue counts as zero.
pub const RANK_REL_TOL: f64 = 1e-10;

/// Tolerance for identities whose residual must be exactly zero.
pub const EXACT: f64 = f64::MIN_POSITIVE;
