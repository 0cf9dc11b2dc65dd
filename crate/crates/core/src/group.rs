//! Signed permutations in window notation, signed cycle types, class data
//! and the linear characters `χ` (product of signs) and `χ′` (sign of the
//! underlying permutation).

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::bounds::{self, Bounds};
use crate::combinatorics::{factorial, Bipartition, Partition, Sign};
use crate::error::{Error, Result};

/// A bijection `w` of `{±1,…,±n}` with `w(-i) = -w(i)`, stored as the
/// window `[w(1),…,w(n)]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
}

impl SignedPermutation {
    pub fn identity(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).collect(),
        }
    }

    /// `w0 = [-1,…,-n]`.
    pub fn longest(n: usize) -> Self {
        SignedPermutation {
            window: (1..=n as i32).map(|i| -i).collect(),
        }
    }

    pub fn from_window(window: Vec<i32>) -> Result<Self> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &w in &window {
            let a = w.unsigned_abs() as usize;
            if a == 0 || a > n || seen[a] {
                return Err(Error::InvalidArgument(alloc::format!(
                    "{window:?} is not a signed permutation"
                )));
            }
            seen[a] = true;
        }
        Ok(SignedPermutation { window })
    }

    pub fn rank(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// `w(i)` for `i ∈ [±n]`.
    #[inline]
    pub fn apply(&self, i: i32) -> i32 {
        let w = self.window[i.unsigned_abs() as usize - 1];
        if i > 0 {
            w
        } else {
            -w
        }
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation> {
        same_rank(self, other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &SignedPermutation) -> SignedPermutation {
        SignedPermutation {
            window: other.window.iter().map(|&i| self.apply(i)).collect(),
        }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut window = vec![0; self.window.len()];
        for (idx, &w) in self.window.iter().enumerate() {
            let i = idx as i32 + 1;
            if w > 0 {
                window[w as usize - 1] = i;
            } else {
                window[(-w) as usize - 1] = -i;
            }
        }
        SignedPermutation { window }
    }

    /// `self^k` for any integer `k`.
    pub fn power(&self, k: i64) -> SignedPermutation {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = SignedPermutation::identity(self.rank());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.compose_unchecked(&base);
            }
        }
        acc
    }

    pub fn commutes_with(&self, other: &SignedPermutation) -> bool {
        other
            .window
            .iter()
            .zip(&self.window)
            .all(|(&o, &s)| self.apply(o) == other.apply(s))
    }

    /// Lengths of positive and negative cycles.
    pub fn signed_cycle_type(&self) -> Bipartition {
        let n = self.rank();
        let mut seen = vec![false; n + 1];
        let mut parts = Vec::new();
        for start in 1..=n as i32 {
            if seen[start as usize] {
                continue;
            }
            let mut len = 0;
            let mut cur = start;
            loop {
                seen[cur.unsigned_abs() as usize] = true;
                cur = self.apply(cur);
                len += 1;
                if cur.abs() == start {
                    break;
                }
            }
            let sign = if cur == start {
                Sign::Plus
            } else {
                Sign::Minus
            };
            parts.push((len, sign));
        }
        Bipartition::from_parts(parts)
    }

    /// Cycle type of the underlying permutation `|w|`.
    pub fn cycle_type(&self) -> Partition {
        self.signed_cycle_type().merge()
    }

    /// Product of the signs in the window.
    pub fn chi(&self) -> Sign {
        Sign::from_parity(self.window.iter().filter(|&&w| w < 0).count() % 2 == 1)
    }

    /// Sign of the underlying permutation.
    pub fn chi_prime(&self) -> Sign {
        let ct = self.cycle_type();
        Sign::from_parity((self.rank() - ct.len()) % 2 == 1)
    }

    pub fn is_unsigned(&self) -> bool {
        self.window.iter().all(|&w| w > 0)
    }

    /// Position of this element in the enumeration order of [`enumerate_group`].
    pub fn index(&self) -> usize {
        let n = self.rank();
        let mut perm_rank = 0;
        let mut used = vec![false; n + 1];
        for (pos, &w) in self.window.iter().enumerate() {
            let a = w.unsigned_abs() as usize;
            let smaller = (1..a).filter(|&b| !used[b]).count();
            perm_rank += smaller * factorial(n - 1 - pos) as usize;
            used[a] = true;
        }
        let mut signs = 0;
        for (pos, &w) in self.window.iter().enumerate() {
            if w < 0 {
                signs |= 1 << pos;
            }
        }
        (perm_rank << n) | signs
    }

    /// Inverse of [`SignedPermutation::index`].
    pub fn from_index(n: usize, index: usize) -> SignedPermutation {
        let signs = index & ((1 << n) - 1);
        let mut perm_rank = index >> n;
        let mut avail: Vec<i32> = (1..=n as i32).collect();
        let mut window = Vec::with_capacity(n);
        for pos in 0..n {
            let f = factorial(n - 1 - pos) as usize;
            let v = avail.remove(perm_rank / f);
            perm_rank %= f;
            window.push(if signs >> pos & 1 == 1 { -v } else { v });
        }
        SignedPermutation { window }
    }
}

fn same_rank(x: &SignedPermutation, y: &SignedPermutation) -> Result<()> {
    if x.rank() != y.rank() {
        Err(Error::RankMismatch {
            left: x.rank(),
            right: y.rank(),
        })
    } else {
        Ok(())
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, w) in self.window.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for SignedPermutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(alloc::format!("expected `[..]`, got `{s}`")))?;
        let window = if inner.trim().is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i32>()
                        .map_err(|_| Error::Parse(alloc::format!("bad entry `{t}`")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        SignedPermutation::from_window(window)
    }
}

/// Deterministic representative: cycles on consecutive integers, positive
/// parts first, each negative cycle closing with a single `-1` sign.
pub fn canonical_rep(lambda: &Bipartition) -> SignedPermutation {
    let mut window = Vec::with_capacity(lambda.size());
    let mut start = 1i32;
    for (len, sign) in lambda.parts() {
        let len = len as i32;
        for t in 0..len - 1 {
            window.push(start + t + 1);
        }
        window.push(if sign == Sign::Plus { start } else { -start });
        start += len;
    }
    SignedPermutation { window }
}

/// Canonical representative of an `S_n` cycle type, as an unsigned element.
pub fn canonical_rep_s(lambda: &Partition) -> SignedPermutation {
    canonical_rep(&Bipartition::new(lambda.clone(), Partition::empty()))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    pub label: Bipartition,
    pub class_size: BigUint,
    pub centralizer_order: BigUint,
    pub chi: Sign,
    pub chi_prime: Sign,
}

/// `|B_n| = 2^n · n!`.
pub fn group_order(n: usize) -> BigUint {
    (BigUint::one() << n) * BigUint::from(factorial(n))
}

/// `Π_{i,ε} a(i,ε)! · (2i)^{a(i,ε)}`.
pub fn centralizer_order(lambda: &Bipartition) -> BigUint {
    lambda
        .blocks()
        .into_iter()
        .map(|(i, _, a)| BigUint::from(factorial(a)) * BigUint::from(2 * i).pow(a as u32))
        .product()
}

pub fn class_chi(lambda: &Bipartition) -> Sign {
    Sign::from_parity(lambda.num_minus_parts() % 2 == 1)
}

pub fn class_chi_prime(lambda: &Bipartition) -> Sign {
    let odd = lambda.parts().filter(|&(i, _)| i % 2 == 0).count() % 2 == 1;
    Sign::from_parity(odd)
}

pub fn class_data(lambda: &Bipartition) -> ClassData {
    let centralizer_order = centralizer_order(lambda);
    let class_size = group_order(lambda.size()) / &centralizer_order;
    ClassData {
        label: lambda.clone(),
        class_size,
        centralizer_order,
        chi: class_chi(lambda),
        chi_prime: class_chi_prime(lambda),
    }
}

/// Every element of `B_n`, each once, in index order.
pub fn enumerate_group(
    n: usize,
    bounds: &Bounds,
) -> Result<impl Iterator<Item = SignedPermutation>> {
    bounds::check("group-enumeration", bounds.group_enumeration, n)?;
    let total = (factorial(n) as usize) << n;
    Ok((0..total).map(move |idx| SignedPermutation::from_index(n, idx)))
}

/// Every element of `S_n`, as unsigned signed permutations.
pub fn enumerate_symmetric(
    n: usize,
    bounds: &Bounds,
) -> Result<impl Iterator<Item = SignedPermutation>> {
    bounds::check("sn-brute", bounds.sn_brute, n)?;
    let total = factorial(n) as usize;
    Ok((0..total).map(move |p| SignedPermutation::from_index(n, p << n)))
}

/// The centralizer of `x` in `B_n`, by filtering the whole group.
pub fn centralizer_elements(
    x: &SignedPermutation,
    bounds: &Bounds,
) -> Result<Vec<SignedPermutation>> {
    bounds::check("centralizer", bounds.centralizer, x.rank())?;
    let all = enumerate_group(
        x.rank(),
        &Bounds {
            group_enumeration: usize::MAX,
            ..*bounds
        },
    )?;
    Ok(all.filter(|z| z.commutes_with(x)).collect())
}

/// The index-2 (and index-4) subgroups of `B_n` cut out by linear characters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Subgroup {
    /// `D_n = ker χ`.
    D,
    /// `Z₂ ≀ A(S_n) = ker χ′`.
    Z2A,
    /// `A(B_n) = ker χχ′`.
    AB,
    /// `A(D_n) = ker χ ∩ ker χ′`.
    AD,
}

impl Subgroup {
    pub const ALL: [Subgroup; 4] = [Subgroup::D, Subgroup::Z2A, Subgroup::AB, Subgroup::AD];

    pub fn name(self) -> &'static str {
        match self {
            Subgroup::D => "D",
            Subgroup::Z2A => "Z2A",
            Subgroup::AB => "AB",
            Subgroup::AD => "AD",
        }
    }

    pub fn from_values(self, chi: Sign, chi_prime: Sign) -> bool {
        match self {
            Subgroup::D => chi == Sign::Plus,
            Subgroup::Z2A => chi_prime == Sign::Plus,
            Subgroup::AB => chi * chi_prime == Sign::Plus,
            Subgroup::AD => chi == Sign::Plus && chi_prime == Sign::Plus,
        }
    }

    pub fn contains_class(self, lambda: &Bipartition) -> bool {
        self.from_values(class_chi(lambda), class_chi_prime(lambda))
    }

    /// Index of the subgroup in `B_n` for `n ≥ 2`.
    pub fn index(self) -> u32 {
        match self {
            Subgroup::AD => 4,
            _ => 2,
        }
    }
}

impl FromStr for Subgroup {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "D" => Ok(Subgroup::D),
            "Z2A" => Ok(Subgroup::Z2A),
            "AB" => Ok(Subgroup::AB),
            "AD" => Ok(Subgroup::AD),
            _ => Err(Error::Parse(alloc::format!("unknown subgroup `{s}`"))),
        }
    }
}

/// Membership computed from the element itself.
pub fn subgroup_member(x: &SignedPermutation, sub: Subgroup) -> bool {
    sub.from_values(x.chi(), x.chi_prime())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_bipartitions;
    use alloc::collections::BTreeMap;
    use alloc::string::ToString;

    fn sp(s: &str) -> SignedPermutation {
        s.parse().unwrap()
    }

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let id3 = SignedPermutation::identity(3);
        assert_eq!(id3.power(7), id3);
        let x = sp("[2,-1]");
        assert_eq!(x.power(2), sp("[-1,-2]"));
        assert_eq!(
            x.compose(&x.inverse()).unwrap(),
            SignedPermutation::identity(2)
        );
        assert_eq!(x.power(-3), x.power(3).inverse());
        assert_eq!(x.power(0), SignedPermutation::identity(2));
        assert!(x.compose(&id3).is_err());
    }

    #[test]
    fn window_validation() {
        assert!(SignedPermutation::from_window(vec![1, 1]).is_err());
        assert!(SignedPermutation::from_window(vec![3, 1]).is_err());
        assert!(SignedPermutation::from_window(vec![0]).is_err());
        assert_eq!(sp("[2,-1,3]").to_string(), "[2,-1,3]");
    }

    #[test]
    fn cycle_type_examples() {
        assert_eq!(
            SignedPermutation::identity(4).signed_cycle_type(),
            Bipartition::identity(4)
        );
        assert_eq!(
            SignedPermutation::longest(3).signed_cycle_type(),
            Bipartition::longest(3)
        );
        assert_eq!(sp("[2,-1]").signed_cycle_type(), bp("[|2]"));
        assert_eq!(sp("[-2,-1]").signed_cycle_type(), bp("[2|]"));
    }

    #[test]
    fn canonical_rep_examples() {
        assert_eq!(canonical_rep(&bp("[2|]")), sp("[2,1]"));
        assert_eq!(canonical_rep(&bp("[|2]")), sp("[2,-1]"));
        assert_eq!(canonical_rep(&bp("[1|1]")), sp("[1,-2]"));
        for n in 0..=6 {
            for lambda in enumerate_bipartitions(n) {
                assert_eq!(canonical_rep(&lambda).signed_cycle_type(), lambda);
            }
        }
    }

    #[test]
    fn class_data_examples() {
        let d = class_data(&bp("[1|]"));
        assert_eq!(d.centralizer_order, BigUint::from(2u32));
        assert_eq!(d.class_size, BigUint::from(1u32));
        let d = class_data(&bp("[|2]"));
        assert_eq!(d.centralizer_order, BigUint::from(4u32));
        assert_eq!(d.class_size, BigUint::from(2u32));
        let d = class_data(&bp("[1,1|]"));
        assert_eq!((d.chi, d.chi_prime), (Sign::Plus, Sign::Plus));
    }

    #[test]
    fn enumeration_counts() {
        let b = Bounds::default();
        assert_eq!(enumerate_group(0, &b).unwrap().count(), 1);
        assert_eq!(enumerate_group(2, &b).unwrap().count(), 8);
        assert_eq!(enumerate_group(6, &b).unwrap().count(), 46080);
        assert_eq!(enumerate_symmetric(4, &b).unwrap().count(), 24);
        assert!(matches!(
            enumerate_group(9, &b).err(),
            Some(Error::BoundExceeded {
                name: "group-enumeration",
                ..
            })
        ));
    }

    #[test]
    fn index_round_trip() {
        let b = Bounds::default();
        for (idx, x) in enumerate_group(4, &b).unwrap().enumerate() {
            assert_eq!(x.index(), idx);
        }
    }

    #[test]
    fn class_sizes_match_enumeration() {
        let b = Bounds::default();
        for n in 0..=5 {
            let mut counts: BTreeMap<Bipartition, u64> = BTreeMap::new();
            for x in enumerate_group(n, &b).unwrap() {
                *counts.entry(x.signed_cycle_type()).or_default() += 1;
            }
            let classes = enumerate_bipartitions(n);
            assert_eq!(counts.len(), classes.len());
            for lambda in classes {
                assert_eq!(
                    BigUint::from(counts[&lambda]),
                    class_data(&lambda).class_size
                );
            }
        }
    }

    #[test]
    fn centralizer_examples() {
        let b = Bounds::default();
        assert_eq!(
            centralizer_elements(&SignedPermutation::identity(2), &b)
                .unwrap()
                .len(),
            8
        );
        let x = sp("[2,-1]");
        let c = centralizer_elements(&x, &b).unwrap();
        assert_eq!(c.len(), 4);
        for p in 0..4 {
            assert!(c.contains(&x.power(p)));
        }
        assert_eq!(centralizer_elements(&sp("[2,1]"), &b).unwrap().len(), 4);
        assert!(centralizer_elements(&SignedPermutation::identity(7), &b).is_err());
    }

    #[test]
    fn centralizers_are_subgroups() {
        let b = Bounds::default();
        for n in 1..=4 {
            for lambda in enumerate_bipartitions(n) {
                let x = canonical_rep(&lambda);
                let c = centralizer_elements(&x, &b).unwrap();
                assert_eq!(BigUint::from(c.len()), centralizer_order(&lambda));
                for y in &c {
                    assert!(c.contains(&y.inverse()));
                    for z in &c {
                        assert!(c.contains(&y.compose(z).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn subgroup_examples() {
        for n in 1..=5 {
            let w0 = SignedPermutation::longest(n);
            assert_eq!(subgroup_member(&w0, Subgroup::D), n % 2 == 0);
        }
        let x = sp("[-1,2]");
        assert!(!subgroup_member(&x, Subgroup::D));
        assert!(subgroup_member(&x, Subgroup::Z2A));
        let y = sp("[2,1]");
        assert!(subgroup_member(&y, Subgroup::D));
        assert!(!subgroup_member(&y, Subgroup::Z2A));
    }

    #[test]
    fn power_type_depends_on_class_only() {
        let b = Bounds::default();
        for n in 1..=4 {
            let mut seen: BTreeMap<(Bipartition, i64), Bipartition> = BTreeMap::new();
            for x in enumerate_group(n, &b).unwrap() {
                let t = x.signed_cycle_type();
                for k in 0..=12 {
                    let p = x.power(k).signed_cycle_type();
                    let prev = seen.entry((t.clone(), k)).or_insert_with(|| p.clone());
                    assert_eq!(*prev, p);
                }
            }
        }
    }
}
