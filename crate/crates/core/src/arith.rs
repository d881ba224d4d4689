//! Exact integer primitives: factorization by trial division, multiplicative
//! functions, divisor enumeration, lcm and 2-adic valuation.
//!
//! Everything here is deterministic. Factorization is plain trial division
//! up to the square root; the crate targets moduli small enough that this
//! is both correct and auditable.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;

use crate::{Error, Result};

/// Canonical prime-power decomposition of a positive integer.
///
/// The pair list is strictly increasing in the prime and empty exactly for
/// the integer 1. Reconstructing the product of `prime^exponent` always
/// recovers the original input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// The `(prime, exponent)` pairs in increasing prime order.
    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    /// Number of distinct prime divisors.
    pub fn distinct_primes(&self) -> u32 {
        self.pairs.len() as u32
    }

    /// Multiplies the decomposition back together.
    pub fn reconstruct(&self) -> u64 {
        self.pairs.iter().fold(1u64, |acc, &(p, e)| acc * p.pow(e))
    }

    /// Euler's totient from the decomposition: product of `p^(e-1) * (p-1)`.
    pub fn totient(&self) -> BigUint {
        self.pairs.iter().fold(BigUint::one(), |acc, &(p, e)| {
            acc * BigUint::from(p).pow(e - 1) * BigUint::from(p - 1)
        })
    }

    /// All divisors of the underlying integer, strictly increasing.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, e) in &self.pairs {
            let prev = std::mem::take(&mut out);
            let mut power = 1u64;
            for i in 0..=e {
                // d * power divides the original integer, so it fits u64
                out.extend(prev.iter().map(|&d| d * power));
                if i < e {
                    power *= p;
                }
            }
        }
        out.sort_unstable();
        out
    }
}

/// Deterministic primality check by trial division.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Factorizes a positive integer by trial division. Rejects 0.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut pairs = Vec::new();
    let mut push = |p: u64, rest: &mut u64| {
        let mut e = 0u32;
        while *rest % p == 0 {
            *rest /= p;
            e += 1;
        }
        if e > 0 {
            pairs.push((p, e));
        }
    };
    push(2, &mut rest);
    let mut d = 3u64;
    while (d as u128) * (d as u128) <= rest as u128 {
        push(d, &mut rest);
        d += 2;
    }
    if rest > 1 {
        pairs.push((rest, 1));
    }
    Ok(Factorization { pairs })
}

/// Euler's totient `phi(n)`, computed from the factorization.
pub fn totient(n: u64) -> Result<BigUint> {
    Ok(factorize(n)?.totient())
}

/// Number of distinct prime divisors `omega(n)`; `omega(1) = 0`.
pub fn omega(n: u64) -> Result<u32> {
    Ok(factorize(n)?.distinct_primes())
}

/// All divisors of `n` in strictly increasing order.
pub fn divisors(n: u64) -> Result<Vec<u64>> {
    Ok(factorize(n)?.divisors())
}

/// Least common multiple of two positive integers, erroring on overflow.
pub fn lcm(a: u64, b: u64) -> Result<u64> {
    (a / a.gcd(&b)).checked_mul(b).ok_or(Error::Overflow("lcm"))
}

/// Least common multiple of a non-empty sequence of positive integers.
pub fn lcm_many(values: &[u64]) -> Result<u64> {
    if values.is_empty() {
        return Err(Error::Empty);
    }
    values.iter().try_fold(1u64, |acc, &v| {
        if v == 0 {
            return Err(Error::Zero);
        }
        lcm(acc, v)
    })
}

/// Largest `t` with `2^t | n`. Rejects 0.
pub fn two_adic_valuation(n: u64) -> Result<u32> {
    if n == 0 {
        return Err(Error::Zero);
    }
    Ok(n.trailing_zeros())
}

/// `2^k` as an exact big integer.
pub fn pow2(k: u64) -> BigUint {
    BigUint::one() << k
}
