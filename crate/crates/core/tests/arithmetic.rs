use astro_float::{BigFloat, Consts, RoundingMode};
use weylroots_core::combinatorics::{
    enumerate_bipartitions, enumerate_partitions, gcd, k_coeff, mobius, Sign,
};

/// 256 bits, about 77 decimal digits.
const PREC: usize = 256;
const RM: RoundingMode = RoundingMode::ToEven;

/// `Σ_{k ∈ ks} exp(2πi·k/m)` in high precision, as `(re, im)`.
fn root_sum(m: u64, ks: impl Iterator<Item = u64>, cc: &mut Consts) -> (BigFloat, BigFloat) {
    let two_pi = cc
        .pi(PREC, RM)
        .mul(&BigFloat::from_f64(2.0, PREC), PREC, RM);
    let mut re = BigFloat::from_f64(0.0, PREC);
    let mut im = BigFloat::from_f64(0.0, PREC);
    for k in ks {
        let theta = two_pi
            .mul(&BigFloat::from_f64(k as f64, PREC), PREC, RM)
            .div(&BigFloat::from_f64(m as f64, PREC), PREC, RM);
        re = re.add(&theta.cos(PREC, RM, cc), PREC, RM);
        im = im.add(&theta.sin(PREC, RM, cc), PREC, RM);
    }
    (re, im)
}

fn close_to(sum: &(BigFloat, BigFloat), target: i64) -> bool {
    let tol = BigFloat::from_f64(1e-6, PREC);
    let dre = sum
        .0
        .sub(&BigFloat::from_f64(target as f64, PREC), PREC, RM)
        .abs();
    let dim = sum.1.abs();
    dre < tol && dim < tol
}

#[test]
fn mobius_sums_over_divisors() {
    for m in 1..=200u64 {
        let s: i64 = (1..=m)
            .filter(|e| m % e == 0)
            .map(|e| mobius(e).unwrap())
            .sum();
        assert_eq!(s, i64::from(m == 1), "m={m}");
    }
}

#[test]
fn mobius_of_double() {
    for e in 1..=100u64 {
        let expected = if e % 2 == 1 { -mobius(e).unwrap() } else { 0 };
        assert_eq!(mobius(2 * e).unwrap(), expected, "e={e}");
    }
}

#[test]
fn k_coeff_case_split() {
    for e in 1..=50u64 {
        let mu = mobius(e).unwrap();
        let odd = e % 2 == 1;
        let cases = [
            (Sign::Plus, Sign::Plus, if odd { mu } else { 2 * mu }),
            (Sign::Plus, Sign::Minus, if odd { mu } else { 0 }),
            (Sign::Minus, Sign::Plus, if odd { mu } else { 0 }),
            (Sign::Minus, Sign::Minus, if odd { -mu } else { 0 }),
        ];
        for (eps, theta, expected) in cases {
            assert_eq!(
                k_coeff(eps, theta, e).unwrap(),
                expected,
                "{eps}{theta} e={e}"
            );
        }
    }
}

#[test]
fn primitive_root_sums_give_mobius() {
    let mut cc = Consts::new().unwrap();
    for n in 1..=60u64 {
        let s = root_sum(n, (0..n).filter(|k| gcd(*k, n) == 1), &mut cc);
        assert!(close_to(&s, mobius(n).unwrap()), "n={n}");
    }
}

#[test]
fn split_primitive_root_sums() {
    let mut cc = Consts::new().unwrap();
    for n in 1..=40u64 {
        let mu2n = mobius(2 * n).unwrap();
        let coprime = |k: &u64| gcd(*k, n) == 1;
        let odd = root_sum(
            2 * n,
            (0..2 * n).filter(coprime).filter(|k| k % 2 == 1),
            &mut cc,
        );
        let even = root_sum(
            2 * n,
            (0..2 * n).filter(coprime).filter(|k| k % 2 == 0),
            &mut cc,
        );
        let all = root_sum(2 * n, (0..2 * n).filter(coprime), &mut cc);
        assert!(close_to(&odd, mu2n), "odd n={n}");
        assert!(close_to(&even, -mu2n), "even n={n}");
        assert!(close_to(&all, 0), "all n={n}");
    }
}

/// Partition numbers by the recurrence over the largest part.
fn partition_count(n: usize) -> u64 {
    let mut p = vec![0u64; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] += p[m - part];
        }
    }
    p[n]
}

#[test]
fn class_counts() {
    assert_eq!(enumerate_partitions(4).len(), 5);
    assert_eq!(enumerate_partitions(10).len(), 42);
    for n in 0..=20 {
        assert_eq!(enumerate_partitions(n).len() as u64, partition_count(n));
        let expected: u64 = (0..=n)
            .map(|a| partition_count(a) * partition_count(n - a))
            .sum();
        assert_eq!(enumerate_bipartitions(n).len() as u64, expected, "n={n}");
    }
}
