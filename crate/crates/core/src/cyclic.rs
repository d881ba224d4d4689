//! Homomorphisms of cyclic groups and rings `Z_m -> Z_n`.
//!
//! Every additive map out of `Z_m` is determined by the image of 1, so a
//! homomorphism is witnessed by a single residue `a` with `m*a = 0 (mod n)`.
//! Ring homomorphisms additionally need `a` idempotent (`a^2 = a (mod n)`),
//! since the definition used here only asks for preservation of `+` and `*`;
//! the zero map always counts.
//!
//! Each closed-form count in this module has a brute-force enumeration next
//! to it. The enumerations scan all candidate residues and check the defining
//! congruences directly, so they stay valid evidence for the formulas.

use num_bigint::BigUint;
use num_integer::gcd;
use num_traits::Zero;

use crate::arith;
use crate::{Error, Result};

/// Witness for a group homomorphism `Z_m -> Z_n`: the image of the
/// generator 1. Well-definedness means `m * generator_image = 0 (mod n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicHomWitness {
    pub source_modulus: u64,
    pub target_modulus: u64,
    pub generator_image: u64,
}

impl CyclicHomWitness {
    /// Validates the well-definedness congruence.
    pub fn new(source_modulus: u64, target_modulus: u64, generator_image: u64) -> Result<Self> {
        if source_modulus == 0 || target_modulus == 0 {
            return Err(Error::Zero);
        }
        if generator_image >= target_modulus {
            return Err(Error::ResidueOutOfRange {
                residue: generator_image,
                modulus: target_modulus,
            });
        }
        let w = Self {
            source_modulus,
            target_modulus,
            generator_image,
        };
        if !w.is_well_defined() {
            return Err(Error::OracleDisagreement(format!(
                "{source_modulus}*{generator_image} != 0 mod {target_modulus}"
            )));
        }
        Ok(w)
    }

    fn is_well_defined(&self) -> bool {
        mul_mod(
            self.source_modulus % self.target_modulus,
            self.generator_image,
            self.target_modulus,
        ) == 0
    }

    /// The induced map `x -> a*x (mod n)`.
    pub fn apply(&self, x: u64) -> u64 {
        mul_mod(
            self.generator_image,
            x % self.target_modulus,
            self.target_modulus,
        )
    }

    /// A cyclic hom is surjective iff its generator image generates `Z_n`,
    /// i.e. has additive order `n`.
    pub fn is_surjective(&self) -> bool {
        element_order(self.generator_image, self.target_modulus)
            .map(|ord| ord == self.target_modulus)
            .unwrap_or(false)
    }
}

/// Witness for a ring homomorphism `Z_m -> Z_n`. The generator image must
/// be idempotent in addition to the additive well-definedness congruence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingHomWitness {
    pub source_modulus: u64,
    pub target_modulus: u64,
    pub generator_image: u64,
    pub image_idempotent: bool,
}

impl RingHomWitness {
    pub fn new(source_modulus: u64, target_modulus: u64, generator_image: u64) -> Result<Self> {
        let base = CyclicHomWitness::new(source_modulus, target_modulus, generator_image)?;
        if !is_idempotent(generator_image, target_modulus) {
            return Err(Error::OracleDisagreement(format!(
                "{generator_image}^2 != {generator_image} mod {target_modulus}"
            )));
        }
        Ok(Self {
            source_modulus: base.source_modulus,
            target_modulus: base.target_modulus,
            generator_image: base.generator_image,
            image_idempotent: true,
        })
    }
}

fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    ((a as u128 * b as u128) % n as u128) as u64
}

fn is_idempotent(a: u64, n: u64) -> bool {
    mul_mod(a, a, n) == a % n
}

/// Additive order of the residue `a` in `Z_n`: the least `k >= 1` with
/// `k*a = 0 (mod n)`, which equals `n / gcd(a, n)`.
pub fn element_order(a: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if a >= n {
        return Err(Error::ResidueOutOfRange {
            residue: a,
            modulus: n,
        });
    }
    if a == 0 {
        return Ok(1);
    }
    Ok(n / gcd(a, n))
}

/// Brute-force enumeration of all group homomorphisms `Z_m -> Z_n`,
/// ascending by generator image. There are exactly `gcd(m, n)` of them.
pub fn enumerate_group_homs(m: u64, n: u64) -> Result<Vec<CyclicHomWitness>> {
    if m == 0 || n == 0 {
        return Err(Error::Zero);
    }
    let m_red = m % n;
    Ok((0..n)
        .filter(|&a| mul_mod(m_red, a, n) == 0)
        .map(|a| CyclicHomWitness {
            source_modulus: m,
            target_modulus: n,
            generator_image: a,
        })
        .collect())
}

/// Number of surjective group homomorphisms `Z_m -> Z_n`: `phi(n)` when
/// `n | m`, and 0 otherwise (no surjection can exist).
pub fn count_surjective_group_homs(m: u64, n: u64) -> Result<BigUint> {
    if m == 0 || n == 0 {
        return Err(Error::Zero);
    }
    if m % n != 0 {
        return Ok(BigUint::zero());
    }
    arith::totient(n)
}

/// Brute-force enumeration of the idempotents of `Z_n`, ascending.
/// For `n >= 2` there are exactly `2^omega(n)` of them.
pub fn enumerate_idempotents(n: u64) -> Result<Vec<u64>> {
    if n == 0 {
        return Err(Error::Zero);
    }
    Ok((0..n).filter(|&a| is_idempotent(a, n)).collect())
}

/// Brute-force enumeration of all ring homomorphisms `Z_m -> Z_n`,
/// ascending by generator image.
pub fn enumerate_ring_homs(m: u64, n: u64) -> Result<Vec<RingHomWitness>> {
    if m == 0 || n == 0 {
        return Err(Error::Zero);
    }
    let m_red = m % n;
    Ok((0..n)
        .filter(|&a| is_idempotent(a, n) && mul_mod(m_red, a, n) == 0)
        .map(|a| RingHomWitness {
            source_modulus: m,
            target_modulus: n,
            generator_image: a,
            image_idempotent: true,
        })
        .collect())
}

/// Closed-form ring homomorphism count `2^omega(n)`, valid only under the
/// hypothesis `n | m`. Outside that regime the formula is not proven, so the
/// call is rejected; use [`enumerate_ring_homs`] for the general count.
pub fn count_ring_homs_closed_form(m: u64, n: u64) -> Result<BigUint> {
    if m == 0 || n == 0 {
        return Err(Error::Zero);
    }
    if m % n != 0 {
        return Err(Error::DivisibilityHypothesis {
            divisor: n,
            dividend: m,
        });
    }
    Ok(arith::pow2(arith::omega(n)? as u64))
}
