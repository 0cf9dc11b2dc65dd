use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use weylroots_core::combinatorics::{enumerate_bipartitions, factorial};
use weylroots_core::group::{class_data, group_order};
use weylroots_core::rootcount::{
    class_power, class_size_q, root_enumerator, subgroup_root_enumerator,
};
use weylroots_core::series::TruncatedSeries;
use weylroots_core::{Bipartition, Bounds, SignedPermutation, Subgroup, Twist};

fn bipartition(max_n: usize) -> impl Strategy<Value = Bipartition> {
    (0..=max_n).prop_flat_map(|n| {
        let classes = enumerate_bipartitions(n);
        (0..classes.len()).prop_map(move |i| classes[i].clone())
    })
}

fn element(n: usize) -> impl Strategy<Value = SignedPermutation> {
    let order = (factorial(n) as usize) << n;
    (0..order).prop_map(move |i| SignedPermutation::from_index(n, i))
}

fn pair(max_n: usize) -> impl Strategy<Value = (SignedPermutation, SignedPermutation)> {
    (0..=max_n).prop_flat_map(|n| (element(n), element(n)))
}

fn small_series() -> impl Strategy<Value = TruncatedSeries<Bipartition>> {
    prop::collection::vec((bipartition(3), -3i64..=3, 1i64..=4), 0..5).prop_map(|terms| {
        let mut f = TruncatedSeries::zero(6);
        for (m, a, b) in terms {
            if m.size() > 0 {
                f.add_term(m, BigRational::new(a.into(), b.into()));
            }
        }
        f
    })
}

proptest! {
    #[test]
    fn power_map_composes(lambda in bipartition(8), a in 0i64..=12, b in 0i64..=12) {
        prop_assert_eq!(class_power(&class_power(&lambda, a), b), class_power(&lambda, a * b));
    }

    #[test]
    fn power_map_ignores_sign_of_k(lambda in bipartition(8), k in 0i64..=12) {
        prop_assert_eq!(class_power(&lambda, -k), class_power(&lambda, k));
    }

    #[test]
    fn power_map_matches_elements(x in (0usize..=6).prop_flat_map(element), k in -12i64..=12) {
        prop_assert_eq!(x.power(k).signed_cycle_type(), class_power(&x.signed_cycle_type(), k));
    }

    #[test]
    fn linear_characters_are_homomorphisms((x, y) in pair(8)) {
        let xy = x.compose(&y).unwrap();
        prop_assert_eq!(xy.chi(), x.chi() * y.chi());
        prop_assert_eq!(xy.chi_prime(), x.chi_prime() * y.chi_prime());
    }

    #[test]
    fn element_text_round_trip(x in (0usize..=8).prop_flat_map(element)) {
        prop_assert_eq!(x.to_string().parse::<SignedPermutation>().unwrap(), x);
    }

    #[test]
    fn bipartition_text_round_trip(lambda in bipartition(10)) {
        prop_assert_eq!(lambda.to_string().parse::<Bipartition>().unwrap(), lambda);
    }

    #[test]
    fn exp_is_a_homomorphism(f in small_series(), g in small_series()) {
        let lhs = f.exp().unwrap().mul(&g.exp().unwrap());
        let rhs = f.add(&g).exp().unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn roots_have_total_mass_of_group(n in 0usize..=8, k in -12i64..=12) {
        let r = root_enumerator(n, k, Twist::One, &Bounds::default()).unwrap();
        let mut mass = BigRational::zero();
        for (mu, v) in r.entries() {
            prop_assert!(*v >= BigRational::zero());
            mass += v * class_size_q(mu);
        }
        prop_assert_eq!(mass, BigRational::from_integer(BigInt::from(group_order(n))));
    }

    #[test]
    fn subgroup_enumerators_are_integral(n in 0usize..=8, k in 0i64..=12) {
        for sub in Subgroup::ALL {
            // vanishing off the subgroup is asserted inside
            let r = subgroup_root_enumerator(n, k, sub, &Bounds::default()).unwrap();
            prop_assert!(r.is_integral() && r.is_nonnegative());
        }
    }
}

#[test]
fn zeroth_power_is_regular() {
    let b = Bounds::default();
    for n in 0..=6 {
        let r = root_enumerator(n, 0, Twist::One, &b).unwrap();
        for (mu, v) in r.entries() {
            let expected = if *mu == Bipartition::identity(n) {
                BigInt::from(group_order(n))
            } else {
                BigInt::zero()
            };
            assert_eq!(*v, BigRational::from_integer(expected));
        }
    }
}

#[test]
fn class_sizes_sum_to_group_order() {
    for n in 0..=10 {
        let total: num_bigint::BigUint = enumerate_bipartitions(n)
            .iter()
            .map(|l| class_data(l).class_size)
            .sum();
        assert_eq!(total, group_order(n));
    }
}
