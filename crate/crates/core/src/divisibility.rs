//! Classification of the divisibility relation between ring-homomorphism
//! and surjective-group-homomorphism counts.
//!
//! For a cyclic target `Z_n` (with `n | m` so that surjections exist) the
//! two counts are `2^omega(n)` and `phi(n)`. The former divides the latter
//! for every `n >= 2` *except* the exceptional moduli: `n = 2*alpha` with
//! every prime factor of `alpha` congruent to 3 mod 4 (including `n = 2`,
//! where `alpha = 1` holds vacuously).
//!
//! For products `S = Z_{n_1} x ... x Z_{n_k}` the analogous comparison is
//! `2^(sum omega(n_i))` against the number of maximal-order elements of
//! `S`. That divisibility *may* fail; the checker records a descriptive
//! flag (one modulus equal to 2 next to an odd companion whose primes are
//! all 3 mod 4) without asserting either direction, and the sweep
//! classifies what actually happened.

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::Zero;

use crate::products::{self, ProductGroup};
use crate::report::{CyclicSweepReport, ProductSweepReport};
use crate::{arith, Error, Result, DEFAULT_WORK_BUDGET};

/// Largest `max_n` accepted by [`sweep_cyclic`].
pub const MAX_CYCLIC_SWEEP: u64 = 10_000_000;

/// Desk-scale caps for [`sweep_products`].
pub const MAX_PRODUCT_SWEEP_RANK: u64 = 3;
pub const MAX_PRODUCT_SWEEP_MODULUS: u64 = 12;

/// Per-modulus comparison of `2^omega(n)` against `phi(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationRecord {
    pub n: u64,
    pub omega: u32,
    pub phi: BigUint,
    /// `2^omega(n)`, the ring-homomorphism count in the `n | m` regime.
    pub ring_homs: BigUint,
    /// `phi(n)`, the surjective-group-homomorphism count in that regime.
    pub surj_homs: BigUint,
    /// Exact divisibility `ring_homs | surj_homs`.
    pub divides: bool,
    pub exceptional: bool,
    /// `divides == !exceptional`; false would mean an implementation bug.
    pub agrees: bool,
}

/// True iff `n` is an exceptional modulus: `n = 2 (mod 4)` and every odd
/// prime divisor of `n` is `3 (mod 4)`. `n = 2` is exceptional (the
/// condition on `alpha = 1` holds vacuously).
pub fn is_exceptional(n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::Zero);
    }
    if n % 4 != 2 {
        return Ok(false);
    }
    let alpha = n / 2;
    Ok(arith::factorize(alpha)?
        .pairs()
        .iter()
        .all(|&(p, _)| p % 4 == 3))
}

/// Builds the full classification record for one modulus.
pub fn classify(n: u64) -> Result<ClassificationRecord> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let omega = arith::omega(n)?;
    let phi = arith::totient(n)?;
    let ring_homs = arith::pow2(omega as u64);
    let divides = (&phi % &ring_homs).is_zero();
    let exceptional = is_exceptional(n)?;
    Ok(ClassificationRecord {
        n,
        omega,
        surj_homs: phi.clone(),
        phi,
        ring_homs,
        divides,
        exceptional,
        agrees: divides == !exceptional,
    })
}

/// Classifies every `n` in `2..=max_n`. The resulting report carries its
/// disagreement list; a non-empty list means a bug, not a finding.
pub fn sweep_cyclic(max_n: u64) -> Result<CyclicSweepReport> {
    if !(2..=MAX_CYCLIC_SWEEP).contains(&max_n) {
        return Err(Error::BoundOutOfRange {
            value: max_n,
            min: 2,
            max: MAX_CYCLIC_SWEEP,
        });
    }
    let records = (2..=max_n).map(classify).collect::<Result<Vec<_>>>()?;
    Ok(CyclicSweepReport { max_n, records })
}

/// How a product group fared against the divisibility claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DivisibilityClass {
    /// Not flagged, divisibility holds (the ordinary case).
    Held,
    /// Flagged by the stated failure condition and divisibility failed.
    FlaggedAndFailed,
    /// Flagged, yet divisibility held ("may fail" permits this).
    FlaggedAndHeld,
    /// Divisibility failed without the flag (e.g. Z_2 x Z_2).
    UnflaggedAndFailed,
}

impl DivisibilityClass {
    pub fn from_parts(flagged: bool, divides: bool) -> Self {
        match (flagged, divides) {
            (false, true) => Self::Held,
            (true, false) => Self::FlaggedAndFailed,
            (true, true) => Self::FlaggedAndHeld,
            (false, false) => Self::UnflaggedAndFailed,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Self::Held => "held",
            Self::FlaggedAndFailed => "flagged_and_failed",
            Self::FlaggedAndHeld => "flagged_and_held",
            Self::UnflaggedAndFailed => "unflagged_and_failed",
        }
    }
}

/// Product-level comparison of `2^(sum omega(n_i))` against the number of
/// maximal-order elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductDivisibilityRecord {
    pub moduli: ProductGroup,
    /// `2^(omega(n_1) + ... + omega(n_k))`.
    pub ring_homs: BigUint,
    /// Elements of order equal to the group exponent.
    pub max_order_count: BigUint,
    pub divides: bool,
    /// The stated failure condition: some `n_i = 2` beside an odd `n_j`
    /// (j != i) all of whose prime divisors are `3 (mod 4)`.
    pub flagged: bool,
    pub class: DivisibilityClass,
    /// Whether the maximal-order count was re-verified by a whole-group
    /// scan. False only when the group order exceeded the work budget.
    pub verified: bool,
}

/// Evaluates the stated failure condition on a modulus sequence. An odd
/// companion `n_j = 1` satisfies the prime condition vacuously, mirroring
/// the `alpha = 1` convention of [`is_exceptional`].
pub fn product_failure_flag(moduli: &[u64]) -> Result<bool> {
    for (i, &ni) in moduli.iter().enumerate() {
        if ni != 2 {
            continue;
        }
        for (j, &nj) in moduli.iter().enumerate() {
            if j == i || nj % 2 == 0 {
                continue;
            }
            if arith::factorize(nj)?
                .pairs()
                .iter()
                .all(|&(p, _)| p % 4 == 3)
            {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Checks the product-level divisibility claim on one group. The
/// maximal-order count comes from the divisor-tuple formula and is
/// re-verified by scanning all elements whenever the group order fits the
/// budget; otherwise the record is returned unverified.
pub fn check_product_divisibility(
    target: &ProductGroup,
    budget: u64,
) -> Result<ProductDivisibilityRecord> {
    let mut omega_sum: u64 = 0;
    for &n in target.moduli() {
        omega_sum += arith::omega(n)? as u64;
    }
    let ring_homs = arith::pow2(omega_sum);
    let max_order_count = products::count_maximal_order_elements(target)?;

    let verified = target.order_u128() <= budget as u128;
    if verified {
        let exponent = products::group_exponent(target)?;
        let scanned = target
            .elements()
            .filter(|e| {
                target
                    .element_order(e)
                    .map(|o| o == exponent)
                    .unwrap_or(false)
            })
            .count();
        if BigUint::from(scanned) != max_order_count {
            return Err(Error::OracleDisagreement(format!(
                "maximal-order count for {:?}: formula {max_order_count}, scan {scanned}",
                target.moduli()
            )));
        }
    }

    let divides = (&max_order_count % &ring_homs).is_zero();
    let flagged = product_failure_flag(target.moduli())?;
    Ok(ProductDivisibilityRecord {
        moduli: target.clone(),
        ring_homs,
        max_order_count,
        divides,
        flagged,
        class: DivisibilityClass::from_parts(flagged, divides),
        verified,
    })
}

/// Checks every multiset of moduli from `2..=max_modulus` with rank up to
/// `max_k`, in deterministic order (rank ascending, then lexicographic).
pub fn sweep_products(max_k: u64, max_modulus: u64) -> Result<ProductSweepReport> {
    if !(1..=MAX_PRODUCT_SWEEP_RANK).contains(&max_k) {
        return Err(Error::BoundOutOfRange {
            value: max_k,
            min: 1,
            max: MAX_PRODUCT_SWEEP_RANK,
        });
    }
    if !(2..=MAX_PRODUCT_SWEEP_MODULUS).contains(&max_modulus) {
        return Err(Error::BoundOutOfRange {
            value: max_modulus,
            min: 2,
            max: MAX_PRODUCT_SWEEP_MODULUS,
        });
    }
    let mut records = Vec::new();
    for k in 1..=max_k as usize {
        for moduli in (2..=max_modulus).combinations_with_replacement(k) {
            let group = ProductGroup::new(moduli)?;
            records.push(check_product_divisibility(&group, DEFAULT_WORK_BUDGET)?);
        }
    }
    Ok(ProductSweepReport {
        max_k,
        max_modulus,
        records,
    })
}
