//! Exact arithmetic for counting homomorphisms between finite cyclic groups
//! and direct products of cyclic groups.
//!
//! The crate provides four layers:
//!
//! - [`arith`]: integer primitives (factorization, totient, divisors, lcm).
//! - [`cyclic`]: homomorphism counts and enumerations for `Z_m -> Z_n`,
//!   with brute-force enumeration alongside every closed form.
//! - [`products`]: the same machinery for direct products `Z_{m_1} x ... x Z_{m_k}`,
//!   including element-order census via divisor tuples.
//! - [`divisibility`]: classification of the relation `2^omega(n) | phi(n)`
//!   and its product-level analogue, plus exhaustive verification sweeps.
//!
//! All counts are carried as [`num_bigint::BigUint`] so that products over
//! many group components can never overflow silently. Every operation is a
//! pure function of its inputs and is safe to call from multiple threads.

pub mod arith;
pub mod cyclic;
pub mod divisibility;
pub mod products;
pub mod report;

pub use num_bigint::BigUint;

/// Work-unit cap for brute-force enumerations. Enumerations that would
/// exceed this refuse loudly instead of running unbounded.
pub const DEFAULT_WORK_BUDGET: u64 = 10_000_000;

/// Hard ceiling for caller-supplied budget overrides.
pub const MAX_WORK_BUDGET: u64 = 1_000_000_000;

/// Errors shared by all modules.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument that must be a positive integer was zero.
    #[error("argument must be a positive integer, got 0")]
    Zero,

    /// A sequence argument that must be non-empty was empty.
    #[error("sequence argument must be non-empty")]
    Empty,

    /// A residue was not reduced modulo its modulus.
    #[error("residue {residue} is out of range for modulus {modulus}")]
    ResidueOutOfRange { residue: u64, modulus: u64 },

    /// A closed form was requested outside its proven domain.
    #[error("hypothesis violated: {divisor} does not divide {dividend}")]
    DivisibilityHypothesis { divisor: u64, dividend: u64 },

    /// Two product groups that must have equal rank did not.
    #[error("component count mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    /// A brute-force enumeration would exceed its work budget.
    #[error("enumeration needs {required} work units, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u64 },

    /// Exact integer arithmetic left the machine-word range.
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    /// A sweep bound was outside the supported range.
    #[error("bound {value} outside supported range {min}..={max}")]
    BoundOutOfRange { value: u64, min: u64, max: u64 },

    /// A closed form and its brute-force oracle disagreed. This means an
    /// implementation bug, never a property of the inputs.
    #[error("oracle disagreement: {0}")]
    OracleDisagreement(String),
}

pub type Result<T> = std::result::Result<T, Error>;
