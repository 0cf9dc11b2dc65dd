//! Class-level power maps and exact (twisted) root enumerators.
//!
//! The class-level enumerator uses the fact that the `k`-th power map
//! sends a whole class `C_λ` onto one class `C_μ`, each element of `C_μ`
//! having exactly `|C_λ|/|C_μ|` preimages in `C_λ`. The quotient is taken in
//! the rationals and its integrality is checked at runtime.
//!
//! `k < 0` is reduced to `|k|` (every signed permutation is conjugate to its
//! inverse), and `k = 0` is the regular character.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bounds::{self, Bounds};
use crate::classfn::{to_integer, ClassFunction, GroupTag};
use crate::combinatorics::{
    enumerate_bipartitions, enumerate_partitions, factorial, gcd, Bipartition, Partition, Sign,
};
use crate::error::{Error, Result};
use crate::group::{
    class_chi, class_chi_prime, class_data, enumerate_group, enumerate_symmetric, subgroup_member,
    Subgroup,
};

/// A linear character of `B_n` used to weight roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Twist {
    One,
    Chi,
    ChiPrime,
    ChiChiPrime,
}

impl Twist {
    pub const ALL: [Twist; 4] = [Twist::One, Twist::Chi, Twist::ChiPrime, Twist::ChiChiPrime];

    pub fn name(self) -> &'static str {
        match self {
            Twist::One => "1",
            Twist::Chi => "chi",
            Twist::ChiPrime => "chiP",
            Twist::ChiChiPrime => "chichiP",
        }
    }

    pub fn from_values(self, chi: Sign, chi_prime: Sign) -> Sign {
        match self {
            Twist::One => Sign::Plus,
            Twist::Chi => chi,
            Twist::ChiPrime => chi_prime,
            Twist::ChiChiPrime => chi * chi_prime,
        }
    }

    pub fn on_class(self, lambda: &Bipartition) -> Sign {
        self.from_values(class_chi(lambda), class_chi_prime(lambda))
    }

    /// Whether the twist involves `χ′`, which flips the sign pattern of the
    /// generating-function argument.
    pub fn has_chi_prime(self) -> bool {
        matches!(self, Twist::ChiPrime | Twist::ChiChiPrime)
    }

    /// Whether the twist involves `χ`, which selects signed `Z₂` root counts.
    pub fn has_chi(self) -> bool {
        matches!(self, Twist::Chi | Twist::ChiChiPrime)
    }
}

impl fmt::Display for Twist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Twist {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "1" => Ok(Twist::One),
            "chi" => Ok(Twist::Chi),
            "chiP" => Ok(Twist::ChiPrime),
            "chichiP" => Ok(Twist::ChiChiPrime),
            _ => Err(Error::Parse(alloc::format!("unknown twist `{s}`"))),
        }
    }
}

/// Signed cycle type of `x^k` for `x` of type `λ`.
pub fn class_power(lambda: &Bipartition, k: i64) -> Bipartition {
    let k = k.unsigned_abs();
    let mut parts = Vec::new();
    for (len, sign) in lambda.parts() {
        let d = if k == 0 {
            len
        } else {
            gcd(k, len as u64) as usize
        };
        let s = if k == 0 {
            Sign::Plus
        } else {
            sign.pow((k / d as u64) as i64)
        };
        parts.extend(core::iter::repeat_n((len / d, s), d));
    }
    Bipartition::from_parts(parts)
}

/// Cycle type of `x^k` for `x ∈ S_n` of type `λ`.
pub fn class_power_s(lambda: &Partition, k: i64) -> Partition {
    let k = k.unsigned_abs();
    let mut parts = Vec::new();
    for &len in lambda.parts() {
        let d = if k == 0 {
            len
        } else {
            gcd(k, len as u64) as usize
        };
        parts.extend(core::iter::repeat_n(len / d, d));
    }
    Partition::new(parts)
}

fn big(n: &num_bigint::BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n.clone()))
}

/// `Σ_{x^k = y} twist(x)` as a class function on `B_n`, via the power map.
pub fn root_enumerator(n: usize, k: i64, twist: Twist, bounds: &Bounds) -> Result<ClassFunction> {
    bounds::check("class-level", bounds.class_level, n)?;
    let classes = enumerate_bipartitions(n);
    let mut acc: BTreeMap<Bipartition, BigRational> = BTreeMap::new();
    for lambda in &classes {
        let mu = class_power(lambda, k);
        let ratio = big(&class_data(lambda).class_size) / big(&class_data(&mu).class_size);
        let term = ratio * BigRational::from_integer(twist.on_class(lambda).value().into());
        *acc.entry(mu).or_insert_with(BigRational::zero) += term;
    }
    let mut entries = Vec::with_capacity(classes.len());
    for mu in classes {
        let v = acc.remove(&mu).unwrap_or_else(BigRational::zero);
        let v = to_integer(&v, || {
            alloc::format!("root_enumerator(n={n}, k={k}, {twist}) at {mu}")
        })?;
        entries.push((mu, BigRational::from_integer(v)));
    }
    Ok(ClassFunction::new(GroupTag::B, n, entries))
}

/// Literal count over all of `B_n`; asserts the result is a class function.
pub fn brute_force_root_enumerator(
    n: usize,
    k: i64,
    twist: Twist,
    bounds: &Bounds,
) -> Result<ClassFunction> {
    Ok(brute_force_all_twists(n, k, bounds)?
        .into_iter()
        .nth(twist as usize)
        .expect("four twists"))
}

/// [`brute_force_root_enumerator`] for the four twists in one pass, in
/// [`Twist::ALL`] order.
pub fn brute_force_all_twists(n: usize, k: i64, bounds: &Bounds) -> Result<Vec<ClassFunction>> {
    bounds::check("brute-force", bounds.brute_force, n)?;
    let unbounded = Bounds {
        group_enumeration: usize::MAX,
        ..*bounds
    };
    let total = (factorial(n) as usize) << n;
    let mut sums = vec![[0i64; 4]; total];
    for x in enumerate_group(n, &unbounded)? {
        let y = x.power(k).index();
        let (c, cp) = (x.chi(), x.chi_prime());
        for (slot, t) in sums[y].iter_mut().zip(Twist::ALL) {
            *slot += t.from_values(c, cp).value();
        }
    }
    let mut per_class: BTreeMap<Bipartition, [i64; 4]> = BTreeMap::new();
    for y in enumerate_group(n, &unbounded)? {
        let v = sums[y.index()];
        let label = y.signed_cycle_type();
        match per_class.get(&label) {
            Some(prev) if *prev != v => {
                return Err(Error::Inconsistent(alloc::format!(
                    "brute-force root count not constant on class {label} (n={n}, k={k}) at {y}"
                )))
            }
            Some(_) => {}
            None => {
                per_class.insert(label, v);
            }
        }
    }
    let classes = enumerate_bipartitions(n);
    Ok((0..4)
        .map(|t| {
            ClassFunction::from_integers(
                GroupTag::B,
                n,
                classes
                    .iter()
                    .map(|mu| (mu.clone(), BigInt::from(per_class[mu][t])))
                    .collect(),
            )
        })
        .collect())
}

/// The twists whose average is the root enumerator of `sub`.
pub fn subgroup_twists(sub: Subgroup) -> &'static [Twist] {
    match sub {
        Subgroup::D => &[Twist::One, Twist::Chi],
        Subgroup::Z2A => &[Twist::One, Twist::ChiPrime],
        Subgroup::AB => &[Twist::One, Twist::ChiChiPrime],
        Subgroup::AD => &Twist::ALL,
    }
}

/// Averages the twisted enumerators produced by `twisted` over
/// [`subgroup_twists`], keeping the classes inside `sub`. The average must
/// vanish on every class outside the subgroup.
pub fn combine_for_subgroup(
    n: usize,
    k: i64,
    sub: Subgroup,
    mut twisted: impl FnMut(Twist) -> Result<ClassFunction>,
) -> Result<ClassFunction> {
    let twists = subgroup_twists(sub);
    let mut total: Option<ClassFunction> = None;
    for &t in twists {
        let f = twisted(t)?;
        total = Some(match total {
            None => f,
            Some(acc) => acc.add(&f)?,
        });
    }
    let total = total.expect("at least one twist");
    let denom = BigRational::from_integer(BigInt::from(twists.len()));
    let mut entries = Vec::new();
    for (mu, v) in total.entries() {
        if sub.contains_class(mu) {
            let q = v / &denom;
            let q = to_integer(&q, || alloc::format!("r_{k}^{}(n={n}) at {mu}", sub.name()))?;
            entries.push((mu.clone(), BigRational::from_integer(q)));
        } else if !v.is_zero() {
            return Err(Error::Inconsistent(alloc::format!(
                "{}-combination is {v} at {mu}, outside the subgroup (n={n}, k={k})",
                sub.name()
            )));
        }
    }
    Ok(ClassFunction::new(GroupTag::Sub(sub), n, entries))
}

/// `r_k` on an index-2 or index-4 subgroup, by the half/quarter-sum of
/// twisted enumerators.
pub fn subgroup_root_enumerator(
    n: usize,
    k: i64,
    sub: Subgroup,
    bounds: &Bounds,
) -> Result<ClassFunction> {
    combine_for_subgroup(n, k, sub, |t| root_enumerator(n, k, t, bounds))
}

/// Literal count of `k`-th roots inside the subgroup, per element; asserts
/// the count is constant on each `B_n`-class inside `sub`, including across
/// the two halves of a class that splits.
pub fn brute_force_subgroup_root_enumerator(
    n: usize,
    k: i64,
    sub: Subgroup,
    bounds: &Bounds,
) -> Result<ClassFunction> {
    bounds::check("brute-force", bounds.brute_force, n)?;
    let unbounded = Bounds {
        group_enumeration: usize::MAX,
        ..*bounds
    };
    let total = (factorial(n) as usize) << n;
    let mut counts = vec![0i64; total];
    for h in enumerate_group(n, &unbounded)?.filter(|h| subgroup_member(h, sub)) {
        counts[h.power(k).index()] += 1;
    }
    let mut per_class: BTreeMap<Bipartition, i64> = BTreeMap::new();
    for y in enumerate_group(n, &unbounded)?.filter(|y| subgroup_member(y, sub)) {
        let v = counts[y.index()];
        let label = y.signed_cycle_type();
        if *per_class.entry(label.clone()).or_insert(v) != v {
            return Err(Error::Inconsistent(alloc::format!(
                "root count in {} not constant on class {label} (n={n}, k={k}) at {y}",
                sub.name()
            )));
        }
    }
    Ok(ClassFunction::from_integers(
        GroupTag::Sub(sub),
        n,
        enumerate_bipartitions(n)
            .into_iter()
            .filter(|mu| sub.contains_class(mu))
            .map(|mu| {
                let v = per_class[&mu];
                (mu, BigInt::from(v))
            })
            .collect(),
    ))
}

/// `r_k` on `S_n` via the cycle-type power map.
pub fn root_enumerator_s(n: usize, k: i64, bounds: &Bounds) -> Result<ClassFunction<Partition>> {
    bounds::check("class-level", bounds.class_level, n)?;
    let classes = enumerate_partitions(n);
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    for lambda in &classes {
        let mu = class_power_s(lambda, k);
        let ratio = BigRational::new(mu.z_value().into(), lambda.z_value().into());
        *acc.entry(mu).or_insert_with(BigRational::zero) += ratio;
    }
    let mut entries = Vec::with_capacity(classes.len());
    for mu in classes {
        let v = acc.remove(&mu).unwrap_or_else(BigRational::zero);
        let v = to_integer(&v, || {
            alloc::format!("root_enumerator_S(n={n}, k={k}) at {mu}")
        })?;
        entries.push((mu, BigRational::from_integer(v)));
    }
    Ok(ClassFunction::new(GroupTag::S, n, entries))
}

/// Literal root count over `S_n`.
pub fn brute_force_root_enumerator_s(
    n: usize,
    k: i64,
    bounds: &Bounds,
) -> Result<ClassFunction<Partition>> {
    let mut counts: BTreeMap<_, i64> = BTreeMap::new();
    for x in enumerate_symmetric(n, bounds)? {
        *counts.entry(x.power(k)).or_default() += 1;
    }
    let mut per_class: BTreeMap<Partition, i64> = BTreeMap::new();
    for y in enumerate_symmetric(n, bounds)? {
        let v = counts.get(&y).copied().unwrap_or(0);
        let label = y.cycle_type();
        if let Some(prev) = per_class.insert(label.clone(), v) {
            if prev != v {
                return Err(Error::Inconsistent(alloc::format!(
                    "S_n root count not constant on {label}"
                )));
            }
        }
    }
    Ok(ClassFunction::from_integers(
        GroupTag::S,
        n,
        enumerate_partitions(n)
            .into_iter()
            .map(|mu| {
                let v = per_class[&mu];
                (mu, BigInt::from(v))
            })
            .collect(),
    ))
}

/// `|C_μ|` as a rational, for weighting sums over classes.
pub fn class_size_q(mu: &Bipartition) -> BigRational {
    big(&class_data(mu).class_size)
}

/// The regular character of `B_n`: `|B_n|` at the identity, zero elsewhere.
pub fn regular_character(n: usize) -> ClassFunction {
    let order = crate::group::group_order(n);
    ClassFunction::new(
        GroupTag::B,
        n,
        enumerate_bipartitions(n)
            .into_iter()
            .map(|mu| {
                let v = if mu == Bipartition::identity(n) {
                    big(&order)
                } else {
                    BigRational::zero()
                };
                (mu, v)
            })
            .collect(),
    )
}

/// The constant function 1 on `B_n`.
pub fn trivial_character(n: usize) -> ClassFunction {
    ClassFunction::new(
        GroupTag::B,
        n,
        enumerate_bipartitions(n)
            .into_iter()
            .map(|mu| (mu, BigRational::one()))
            .collect(),
    )
}
