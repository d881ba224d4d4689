//! Consistency checks that cut across modules: the cyclic counts, the
//! product counts and the matrix census must tell one coherent story.

use homcount::divisibility;
use homcount::products::{self, ProductGroup};
use homcount::{arith, cyclic, BigUint};

use proptest::prelude::*;

#[test]
fn rank_one_product_counts_reduce_to_cyclic_counts() {
    for n in 1..=200u64 {
        let r = ProductGroup::new(vec![n]).unwrap();
        assert_eq!(
            products::count_maximal_order_elements(&r).unwrap(),
            arith::totient(n).unwrap(),
            "maximal-order elements of Z_{n}"
        );
        assert_eq!(
            products::count_product_idempotents(&r).unwrap(),
            BigUint::from(cyclic::enumerate_idempotents(n).unwrap().len()),
            "idempotents of Z_{n}"
        );
    }
}

#[test]
fn rank_one_surjective_count_matches_cyclic_for_divisible_pairs() {
    for n in 1..=60u64 {
        for m in (n..=240).step_by(n as usize) {
            let g = ProductGroup::new(vec![m]).unwrap();
            let h = ProductGroup::new(vec![n]).unwrap();
            let product_count = products::count_componentwise_surjective_homs(&g, &h)
                .unwrap()
                .count;
            assert_eq!(
                product_count,
                cyclic::count_surjective_group_homs(m, n).unwrap(),
                "Z_{m} -> Z_{n}"
            );
        }
    }
}

#[test]
fn ring_hom_images_are_exactly_the_idempotents_when_target_divides_source() {
    // n | m makes the additive constraint vacuous, so the images collapse
    // to the idempotents of Z_n
    for n in 1..=80u64 {
        let m = 4 * n;
        let images: Vec<u64> = cyclic::enumerate_ring_homs(m, n)
            .unwrap()
            .iter()
            .map(|w| w.generator_image)
            .collect();
        assert_eq!(
            images,
            cyclic::enumerate_idempotents(n).unwrap(),
            "Z_{m} -> Z_{n}"
        );
    }
}

#[test]
fn matrix_census_dominates_componentwise_surjections() {
    // every component-wise surjective tuple is in particular a surjective
    // matrix homomorphism, so the census subcount can only be larger
    for (source, target) in [
        (vec![4, 6], vec![2, 3]),
        (vec![8, 8], vec![4, 2]),
        (vec![2, 2], vec![2, 2]),
        (vec![12, 10], vec![6, 5]),
        (vec![9, 3], vec![3, 3]),
    ] {
        let g = ProductGroup::new(source.clone()).unwrap();
        let h = ProductGroup::new(target.clone()).unwrap();
        let componentwise = products::count_componentwise_surjective_homs(&g, &h)
            .unwrap()
            .count;
        let census = products::count_all_group_homs(&g, &h, 1_000_000).unwrap();
        let surjective = census.surjective.expect("image test within budget");
        assert!(
            componentwise <= surjective,
            "G={source:?} H={target:?}: componentwise {componentwise} > census {surjective}"
        );
    }
}

#[test]
fn total_group_hom_count_matches_gcd_of_cyclic_pairs() {
    for m in 1..=40u64 {
        for n in 1..=40u64 {
            let g = ProductGroup::new(vec![m]).unwrap();
            let h = ProductGroup::new(vec![n]).unwrap();
            let census = products::count_all_group_homs(&g, &h, 1_000_000).unwrap();
            assert_eq!(
                census.total,
                BigUint::from(cyclic::enumerate_group_homs(m, n).unwrap().len()),
                "homs Z_{m} -> Z_{n}"
            );
        }
    }
}

#[test]
fn classification_record_fields_recompute_from_first_principles() {
    for n in 1..=500u64 {
        let record = divisibility::classify(n).unwrap();
        assert_eq!(record.omega, arith::omega(n).unwrap());
        assert_eq!(record.phi, arith::totient(n).unwrap());
        assert_eq!(record.ring_homs, arith::pow2(record.omega as u64));
        assert_eq!(record.surj_homs, record.phi);
        assert_eq!(
            record.ring_homs,
            cyclic::count_ring_homs_closed_form(n, n).unwrap()
        );
    }
}

proptest! {
    #[test]
    fn surjective_closed_form_matches_oracle(m in 1u64..400, n in 1u64..400) {
        let closed = cyclic::count_surjective_group_homs(m, n).unwrap();
        let oracle = cyclic::enumerate_group_homs(m, n)
            .unwrap()
            .iter()
            .filter(|w| w.is_surjective())
            .count();
        prop_assert_eq!(closed, BigUint::from(oracle));
    }

    #[test]
    fn order_partition_holds_for_random_small_products(
        // small moduli keep the divisor-tuple sums fast
        moduli in proptest::collection::vec(1u64..30, 1..4)
    ) {
        let r = ProductGroup::new(moduli).unwrap();
        let exponent = products::group_exponent(&r).unwrap();
        let mut sum = BigUint::from(0u32);
        for d in arith::divisors(exponent).unwrap() {
            sum += products::count_elements_of_order(&r, d).unwrap();
        }
        prop_assert_eq!(sum, r.order());
    }
}
