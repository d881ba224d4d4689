//! Direct products of cyclic groups `Z_{m_1} x ... x Z_{m_k}`.
//!
//! The component sequence is ordered and order matters: the component-wise
//! homomorphism counts pair source index `i` with target index `i`. A
//! separate matrix-based census ([`count_all_group_homs`]) counts *all*
//! group homomorphisms between two products, so the gap between the two
//! notions stays observable.
//!
//! Element-order counting follows the divisor-tuple formula: the number of
//! elements of order `d` is the sum of `phi(d_1)...phi(d_k)` over all tuples
//! with `d_i | m_i` and `lcm(d_1,...,d_k) = d`.

use std::collections::HashSet;

use itertools::Itertools;
use num_bigint::BigUint;
use num_integer::gcd;
use num_traits::{One, Zero};

use crate::{arith, cyclic, Error, Result};

/// An ordered sequence of cyclic moduli presenting `Z_{m_1} x ... x Z_{m_k}`.
/// Moduli equal to 1 are legal and contribute neutral factors everywhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductGroup {
    moduli: Vec<u64>,
}

impl ProductGroup {
    /// Builds a product group from its moduli. The sequence must be
    /// non-empty with every modulus >= 1.
    pub fn new(moduli: Vec<u64>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(Error::Empty);
        }
        if moduli.contains(&0) {
            return Err(Error::Zero);
        }
        Ok(Self { moduli })
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    /// Number of cyclic components `k`.
    pub fn rank(&self) -> usize {
        self.moduli.len()
    }

    /// Group order as an exact integer.
    pub fn order(&self) -> BigUint {
        self.moduli.iter().map(|&m| BigUint::from(m)).product()
    }

    /// Group order clamped into u128, for budget arithmetic.
    pub fn order_u128(&self) -> u128 {
        self.moduli
            .iter()
            .fold(1u128, |acc, &m| acc.saturating_mul(m as u128))
    }

    /// Validates and wraps a component vector as an element.
    pub fn element(&self, components: Vec<u64>) -> Result<ProductElement> {
        if components.len() != self.rank() {
            return Err(Error::LengthMismatch {
                left: components.len(),
                right: self.rank(),
            });
        }
        for (&a, &m) in components.iter().zip(&self.moduli) {
            if a >= m {
                return Err(Error::ResidueOutOfRange {
                    residue: a,
                    modulus: m,
                });
            }
        }
        Ok(ProductElement { components })
    }

    /// All elements in lexicographic order (first component slowest).
    pub fn elements(&self) -> impl Iterator<Item = ProductElement> + '_ {
        self.moduli
            .iter()
            .map(|&m| 0..m)
            .multi_cartesian_product()
            .map(|components| ProductElement { components })
    }

    /// Order of an element: the lcm of its per-component additive orders.
    pub fn element_order(&self, element: &ProductElement) -> Result<u64> {
        if element.components.len() != self.rank() {
            return Err(Error::LengthMismatch {
                left: element.components.len(),
                right: self.rank(),
            });
        }
        element
            .components
            .iter()
            .zip(&self.moduli)
            .try_fold(1u64, |acc, (&a, &m)| {
                arith::lcm(acc, cyclic::element_order(a, m)?)
            })
    }
}

/// An element of a product group, componentwise reduced.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductElement {
    components: Vec<u64>,
}

impl ProductElement {
    pub fn components(&self) -> &[u64] {
        &self.components
    }
}

/// A tuple `(d_1, ..., d_k)` with `d_i | m_i`, together with its lcm.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivisorTuple {
    entries: Vec<u64>,
    lcm_value: u64,
}

impl DivisorTuple {
    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn lcm_value(&self) -> u64 {
        self.lcm_value
    }
}

/// Exponent of the group: `lcm(m_1, ..., m_k)`, the maximal element order.
pub fn group_exponent(group: &ProductGroup) -> Result<u64> {
    arith::lcm_many(group.moduli())
}

/// Iterates every divisor tuple of the group in lexicographic order.
pub fn divisor_tuples(group: &ProductGroup) -> Result<impl Iterator<Item = DivisorTuple> + '_> {
    // The exponent bounds every tuple lcm, so computing it up front makes
    // the per-tuple lcm infallible.
    group_exponent(group)?;
    let divisor_lists: Vec<Vec<u64>> = group
        .moduli()
        .iter()
        .map(|&m| arith::divisors(m))
        .collect::<Result<_>>()?;
    Ok(divisor_lists
        .into_iter()
        .map(|ds| ds.into_iter())
        .multi_cartesian_product()
        .map(|entries| {
            let lcm_value =
                arith::lcm_many(&entries).expect("tuple lcm divides the group exponent");
            DivisorTuple { entries, lcm_value }
        }))
}

/// Result of the component-wise surjective-homomorphism count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentwiseSurjectionCount {
    /// `prod phi(n_i)` when every `n_i | m_i`, zero otherwise.
    pub count: BigUint,
    /// First index where `n_i` fails to divide `m_i`, if any. When set, no
    /// component-wise surjective tuple exists and `count` is zero.
    pub obstruction: Option<usize>,
}

/// Counts k-tuples of component-wise surjective maps `Z_{m_i} -> Z_{n_i}`:
/// `prod phi(n_i)` when `n_i | m_i` for all i.
pub fn count_componentwise_surjective_homs(
    source: &ProductGroup,
    target: &ProductGroup,
) -> Result<ComponentwiseSurjectionCount> {
    if source.rank() != target.rank() {
        return Err(Error::LengthMismatch {
            left: source.rank(),
            right: target.rank(),
        });
    }
    for (i, (&m, &n)) in source.moduli().iter().zip(target.moduli()).enumerate() {
        if m % n != 0 {
            return Ok(ComponentwiseSurjectionCount {
                count: BigUint::zero(),
                obstruction: Some(i),
            });
        }
    }
    let mut count = BigUint::one();
    for &n in target.moduli() {
        count *= arith::totient(n)?;
    }
    Ok(ComponentwiseSurjectionCount {
        count,
        obstruction: None,
    })
}

/// Number of idempotent elements: `2^(omega(m_1) + ... + omega(m_k))`.
pub fn count_product_idempotents(group: &ProductGroup) -> Result<BigUint> {
    let mut omega_sum: u64 = 0;
    for &m in group.moduli() {
        omega_sum += arith::omega(m)? as u64;
    }
    Ok(arith::pow2(omega_sum))
}

/// Enumerates all idempotent elements in lexicographic order by scanning
/// each component for solutions of `a^2 = a (mod m_i)` and taking the
/// cartesian product. Refuses groups whose order exceeds the budget.
pub fn enumerate_product_idempotents(
    group: &ProductGroup,
    budget: u64,
) -> Result<Vec<ProductElement>> {
    let order = group.order_u128();
    if order > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: order,
            budget,
        });
    }
    let component_idempotents: Vec<Vec<u64>> = group
        .moduli()
        .iter()
        .map(|&m| cyclic::enumerate_idempotents(m))
        .collect::<Result<_>>()?;
    Ok(component_idempotents
        .into_iter()
        .map(|l| l.into_iter())
        .multi_cartesian_product()
        .map(|components| ProductElement { components })
        .collect())
}

/// Number of elements of order `d`, by the divisor-tuple formula. Returns
/// zero when `d` does not divide the group exponent.
pub fn count_elements_of_order(group: &ProductGroup, d: u64) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::Zero);
    }
    let exponent = group_exponent(group)?;
    if exponent % d != 0 {
        return Ok(BigUint::zero());
    }
    let mut total = BigUint::zero();
    for tuple in divisor_tuples(group)? {
        if tuple.lcm_value() == d {
            let mut term = BigUint::one();
            for &di in tuple.entries() {
                term *= arith::totient(di)?;
            }
            total += term;
        }
    }
    Ok(total)
}

/// Number of elements of maximal order, i.e. of order equal to the exponent.
/// For a single cyclic factor this is `phi(n)`.
pub fn count_maximal_order_elements(group: &ProductGroup) -> Result<BigUint> {
    count_elements_of_order(group, group_exponent(group)?)
}

/// Census of *all* group homomorphisms between two products, counted by
/// enumerating residue matrices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixHomCount {
    /// Total number of homomorphisms `source -> target`.
    pub total: BigUint,
    /// Number of surjective homomorphisms, when the image test fit the
    /// work budget; `None` means the subcount was skipped, not zero.
    pub surjective: Option<BigUint>,
}

/// Counts all group homomorphisms `source -> target` by brute-force matrix
/// enumeration: a homomorphism sends the i-th source generator to a column
/// `(a_{1i}, ..., a_{ki})` with `m_i * a_{ji} = 0 (mod n_j)`, so each cell
/// ranges over the `gcd(m_i, n_j)` multiples of `n_j / gcd(m_i, n_j)`.
///
/// This deliberately counts more than the component-wise maps of
/// [`count_componentwise_surjective_homs`]; the ranks need not match.
/// The surjective subcount is reported only when testing every matrix
/// image fits the budget (`|source| * total` work units).
pub fn count_all_group_homs(
    source: &ProductGroup,
    target: &ProductGroup,
    budget: u64,
) -> Result<MatrixHomCount> {
    let mut matrix_count: u128 = 1;
    for &n in target.moduli() {
        for &m in source.moduli() {
            matrix_count = matrix_count.saturating_mul(gcd(m, n) as u128);
        }
    }
    if matrix_count > budget as u128 {
        return Err(Error::BudgetExceeded {
            required: matrix_count,
            budget,
        });
    }

    // cells[j * rank_source + i] lists the admissible images in Z_{n_j}
    // of the i-th source generator.
    let rank_source = source.rank();
    let cells: Vec<Vec<u64>> = target
        .moduli()
        .iter()
        .flat_map(|&n| {
            source.moduli().iter().map(move |&m| {
                let g = gcd(m, n);
                let step = n / g;
                (0..g).map(|t| t * step).collect()
            })
        })
        .collect();

    let source_order = source.order_u128();
    let target_order = target.order_u128();
    let run_image_test = source_order.saturating_mul(matrix_count) <= budget as u128;

    let source_elements: Vec<ProductElement> = if run_image_test {
        source.elements().collect()
    } else {
        Vec::new()
    };

    let mut total: u64 = 0;
    let mut surjective: u64 = 0;
    let mut image: HashSet<u128> = HashSet::new();
    let mut cursor = vec![0usize; cells.len()];
    'matrices: loop {
        total += 1;
        if run_image_test {
            image.clear();
            for element in &source_elements {
                // mixed-radix encoding of the image vector
                let mut encoded: u128 = 0;
                for (j, &n) in target.moduli().iter().enumerate() {
                    let mut component: u128 = 0;
                    for (i, &x) in element.components().iter().enumerate() {
                        let a = cells[j * rank_source + i][cursor[j * rank_source + i]];
                        component += a as u128 * x as u128 % n as u128;
                    }
                    encoded = encoded * n as u128 + component % n as u128;
                }
                image.insert(encoded);
            }
            if image.len() as u128 == target_order {
                surjective += 1;
            }
        }
        // odometer advance, last cell fastest
        for pos in (0..cells.len()).rev() {
            cursor[pos] += 1;
            if cursor[pos] < cells[pos].len() {
                continue 'matrices;
            }
            cursor[pos] = 0;
        }
        break;
    }

    Ok(MatrixHomCount {
        total: BigUint::from(total),
        surjective: run_image_test.then(|| BigUint::from(surjective)),
    })
}
