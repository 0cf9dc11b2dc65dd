//! Higher Lie characters of types A, B and D.
//!
//! `ψ^λ` is induced from a linear character `ω^x` of the centralizer of a
//! representative `x` of `λ`. On `Z_x ≅ ×_{i,ε} G_{i,ε} ≀ S_{a(i,ε)}`, `ω^x`
//! is trivial on the wreathing groups and on the `Z₂` factor of
//! `G_{i,+} ≅ Z₂ × Z_i`, and primitive on `Z_i` resp. `G_{i,-} ≅ Z_{2i}`.
//!
//! The brute-force route evaluates `ω^x(z)` for each `z ∈ Z_x` by following
//! `z` around the cycles of `x`: a cycle of length `ℓ` of the induced
//! permutation of `x`-cycles contributes `ω` of the holonomy `z^ℓ`
//! restricted to its first `x`-cycle. Sums of roots of unity are taken in
//! `f64` after reducing each angle exactly modulo 1, and the result must lie
//! within `1e-6` of an integer. The series route is exact and serves as the
//! oracle.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::bounds::{self, Bounds};
use crate::classfn::{ClassFunction, GroupTag};
use crate::combinatorics::{
    enumerate_bipartitions, enumerate_partitions, gcd, Bipartition, Partition, Sign,
};
use crate::error::{Error, Result};
use crate::group::{
    canonical_rep, canonical_rep_s, centralizer_elements, class_chi, enumerate_symmetric,
    SignedPermutation, Subgroup,
};
use crate::rootcount::{
    class_power, class_size_q, root_enumerator, root_enumerator_s, subgroup_root_enumerator, Twist,
};
use crate::series::{psi_series_character, specialized_character, HlcSelector};

const ROUNDING_TOLERANCE: f64 = 1e-6;

/// `λ ⊢_k n`: `x^k = 1` for `x` of type `λ`. Every `(i,+)` part divides
/// `k`; every `(i,-)` part divides `k` with even quotient.
pub fn divides_k(lambda: &Bipartition, k: i64) -> bool {
    let k = k.unsigned_abs();
    if k == 0 {
        return true;
    }
    lambda.parts().all(|(i, eps)| {
        let i = i as u64;
        k.is_multiple_of(i) && (eps == Sign::Plus || (k / i).is_multiple_of(2))
    })
}

/// `λ ⊢_{k,-} n`: `x^k = w₀` for `x` of type `λ`. No positive parts, and
/// every part divides `k` with odd quotient.
pub fn divides_k_minus(lambda: &Bipartition, k: i64) -> bool {
    let k = k.unsigned_abs();
    if k == 0 {
        return lambda.size() == 0;
    }
    lambda.side(Sign::Plus).is_empty()
        && lambda
            .side(Sign::Minus)
            .parts()
            .iter()
            .all(|&i| k.is_multiple_of(i as u64) && (k / i as u64) % 2 == 1)
}

/// Which primitive root of unity `ω` uses on each cyclic factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PrimitiveRoot {
    /// `exp(2πi/m)`.
    #[default]
    First,
    /// `exp(2πi·r/m)` with `r` the least integer `≥ 2` prime to `m`
    /// (`r = 1` when `m ≤ 2`).
    Alternate,
}

impl PrimitiveRoot {
    fn exponent(self, modulus: u64) -> u64 {
        match self {
            PrimitiveRoot::First => 1,
            PrimitiveRoot::Alternate if modulus <= 2 => 1,
            PrimitiveRoot::Alternate => (2..modulus).find(|r| gcd(*r, modulus) == 1).unwrap_or(1),
        }
    }
}

/// One cycle of the base element: its first point, length and sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct BaseCycle {
    start: i32,
    len: usize,
    sign: Sign,
}

/// The linear character `ω^x` of `Z_x` for the canonical representative `x`
/// of a cycle type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OmegaSpec {
    /// `(i, ε, a(i,ε))`.
    pub blocks: Vec<(usize, Sign, usize)>,
    pub root: PrimitiveRoot,
    cycles: Vec<BaseCycle>,
    /// Cycle index of each point `1..=n` (slot 0 unused).
    owner: Vec<usize>,
}

impl OmegaSpec {
    pub fn new(lambda: &Bipartition, root: PrimitiveRoot) -> Self {
        let mut cycles = Vec::new();
        let mut owner = alloc::vec![0; lambda.size() + 1];
        let mut start = 1i32;
        // same layout as canonical_rep
        for (len, sign) in lambda.parts() {
            for p in start..start + len as i32 {
                owner[p as usize] = cycles.len();
            }
            cycles.push(BaseCycle { start, len, sign });
            start += len as i32;
        }
        OmegaSpec {
            blocks: lambda.blocks(),
            root,
            cycles,
            owner,
        }
    }

    /// `ω^x(z)` as an angle in `[0,1)`, i.e. `ω = exp(2πi·angle)`, stored as
    /// a reduced fraction `(num, den)`. `z` must commute with `x`.
    pub fn angle(&self, z: &SignedPermutation) -> (u64, u64) {
        let mut seen = alloc::vec![false; self.cycles.len()];
        let (mut num, mut den) = (0u64, 1u64);
        for r0 in 0..self.cycles.len() {
            if seen[r0] {
                continue;
            }
            let c = self.cycles[r0];
            let mut r = r0;
            let mut ell = 0i64;
            loop {
                seen[r] = true;
                ell += 1;
                let img = z.apply(self.cycles[r].start).unsigned_abs() as usize;
                r = self.owner[img];
                if r == r0 {
                    break;
                }
            }
            let g = z.power(ell).apply(c.start);
            let offset = (g.unsigned_abs() as i32 - c.start) as u64;
            let (b, modulus) = match c.sign {
                Sign::Plus => (offset, c.len as u64),
                Sign::Minus if g > 0 => (offset, 2 * c.len as u64),
                Sign::Minus => (offset + c.len as u64, 2 * c.len as u64),
            };
            let b = (b * self.root.exponent(modulus)) % modulus;
            // num/den + b/modulus mod 1
            let l = den.lcm(&modulus);
            num = (num * (l / den) + b * (l / modulus)) % l;
            den = l;
            let g = gcd(num, den).max(1);
            num /= g;
            den /= g;
        }
        (num, den)
    }
}

/// Where an [`HlcResult`] came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Series,
    BruteForce,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Series => "series",
            Provenance::BruteForce => "brute-force",
        }
    }
}

/// The character `ψ^λ` of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HlcResult {
    pub lambda: Bipartition,
    pub values: ClassFunction,
    pub provenance: Provenance,
}

/// `Σ_{angle} count·exp(2πi·angle)`, times `scale`, rounded to an integer.
fn round_root_sum(
    hist: &BTreeMap<(u64, u64), u64>,
    scale: &BigRational,
    context: impl FnOnce() -> String,
) -> Result<BigInt> {
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (&(num, den), &count) in hist {
        let theta = 2.0 * core::f64::consts::PI * num as f64 / den as f64;
        re += count as f64 * libm::cos(theta);
        im += count as f64 * libm::sin(theta);
    }
    let s = scale.to_f64().unwrap_or(f64::NAN);
    let (re, im) = (re * s, im * s);
    let nearest = libm::round(re);
    let deviation = libm::fabs(re - nearest).max(libm::fabs(im));
    if deviation.is_nan() || deviation >= ROUNDING_TOLERANCE {
        return Err(Error::Precision {
            context: context(),
            deviation,
        });
    }
    Ok(BigInt::from(nearest as i64))
}

/// `ψ^λ` on every class of `B_n` by summing `ω^x` over the centralizer.
pub fn psi_bruteforce_character(
    lambda: &Bipartition,
    root: PrimitiveRoot,
    bounds: &Bounds,
) -> Result<HlcResult> {
    let n = lambda.size();
    bounds::check("psi-brute", bounds.psi_brute, n)?;
    let x = canonical_rep(lambda);
    let omega = OmegaSpec::new(lambda, root);
    let mut hists: BTreeMap<Bipartition, BTreeMap<(u64, u64), u64>> = BTreeMap::new();
    for z in centralizer_elements(&x, bounds)? {
        let h = hists.entry(z.signed_cycle_type()).or_default();
        *h.entry(omega.angle(&z)).or_default() += 1;
    }
    let size_lambda = class_size_q(lambda);
    let empty = BTreeMap::new();
    let mut entries = Vec::new();
    for mu in enumerate_bipartitions(n) {
        let scale = &size_lambda / class_size_q(&mu);
        let v = round_root_sum(hists.get(&mu).unwrap_or(&empty), &scale, || {
            alloc::format!("psi^{lambda}({mu})")
        })?;
        entries.push((mu, v));
    }
    Ok(HlcResult {
        lambda: lambda.clone(),
        values: ClassFunction::from_integers(GroupTag::B, n, entries),
        provenance: Provenance::BruteForce,
    })
}

/// `ψ^λ(μ)` by the centralizer sum.
pub fn psi_bruteforce(lambda: &Bipartition, mu: &Bipartition, bounds: &Bounds) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::RankMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let r = psi_bruteforce_character(lambda, PrimitiveRoot::First, bounds)?;
    Ok(r.values.get(mu).expect("all classes present").to_integer())
}

/// `ψ^λ` from the generating function.
pub fn psi_series(lambda: &Bipartition, bounds: &Bounds) -> Result<HlcResult> {
    Ok(HlcResult {
        lambda: lambda.clone(),
        values: psi_series_character(lambda, bounds)?,
        provenance: Provenance::Series,
    })
}

fn sum_rows(
    n: usize,
    rows: impl IntoIterator<Item = Result<ClassFunction>>,
) -> Result<ClassFunction> {
    let classes = enumerate_bipartitions(n);
    let mut total = ClassFunction::zero(GroupTag::B, n, &classes);
    for row in rows {
        total = total.add(&row?)?;
    }
    Ok(total)
}

fn aggregate(
    n: usize,
    rows: impl IntoIterator<Item = Result<ClassFunction>>,
    selector: HlcSelector,
    name: &str,
    bounds: &Bounds,
) -> Result<ClassFunction> {
    let by_rows = sum_rows(n, rows)?;
    let specialize = !matches!(selector, HlcSelector::DividesKMinus(0));
    if specialize {
        let by_specialization = specialized_character(&selector, n, bounds)?;
        if let Some((mu, a, b)) = by_rows.first_difference(&by_specialization) {
            return Err(Error::Inconsistent(alloc::format!(
                "{name}: sum of rows gives {a} at {mu}, specialized series gives {b}"
            )));
        }
    }
    Ok(by_rows)
}

fn selected_rows<'a>(
    n: usize,
    select: impl Fn(&Bipartition) -> bool + 'a,
    bounds: &'a Bounds,
) -> impl Iterator<Item = Result<ClassFunction>> + 'a {
    enumerate_bipartitions(n)
        .into_iter()
        .filter(move |l| select(l))
        .map(move |l| psi_series_character(&l, bounds))
}

/// `ψ_k = Σ_{λ ⊢_k n} ψ^λ`, computed row by row and by the specialized
/// series; the two must agree.
pub fn psi_k_sum(n: usize, k: i64, bounds: &Bounds) -> Result<ClassFunction> {
    let rows = selected_rows(n, move |l| divides_k(l, k), bounds);
    aggregate(n, rows, HlcSelector::DividesK(k), "psi_k", bounds)
}

/// `ψ̃_k = Σ_{λ ⊢_{k,-} n} ψ^λ`. For `k = 0` no `s_{i,ε}` is specialized
/// to 1, so only the row sum is available.
pub fn spsi_k_sum(n: usize, k: i64, bounds: &Bounds) -> Result<ClassFunction> {
    let rows = selected_rows(n, move |l| divides_k_minus(l, k), bounds);
    aggregate(n, rows, HlcSelector::DividesKMinus(k), "psi~_k", bounds)
}

/// Every `ψ^λ` of `B_n`, computed once for repeated aggregation.
#[derive(Debug, Clone)]
pub struct PsiRows {
    n: usize,
    rows: Vec<(Bipartition, ClassFunction)>,
}

impl PsiRows {
    pub fn new(n: usize, bounds: &Bounds) -> Result<Self> {
        let rows = enumerate_bipartitions(n)
            .into_iter()
            .map(|l| psi_series_character(&l, bounds).map(|c| (l, c)))
            .collect::<Result<_>>()?;
        Ok(PsiRows { n, rows })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[(Bipartition, ClassFunction)] {
        &self.rows
    }

    fn select<'a>(
        &'a self,
        pred: impl Fn(&Bipartition) -> bool + 'a,
    ) -> impl Iterator<Item = Result<ClassFunction>> + 'a {
        self.rows
            .iter()
            .filter(move |(l, _)| pred(l))
            .map(|(_, c)| Ok(c.clone()))
    }

    pub fn psi_k_sum(&self, k: i64, bounds: &Bounds) -> Result<ClassFunction> {
        let rows = self.select(move |l| divides_k(l, k));
        aggregate(self.n, rows, HlcSelector::DividesK(k), "psi_k", bounds)
    }

    pub fn spsi_k_sum(&self, k: i64, bounds: &Bounds) -> Result<ClassFunction> {
        let rows = self.select(move |l| divides_k_minus(l, k));
        aggregate(
            self.n,
            rows,
            HlcSelector::DividesKMinus(k),
            "psi~_k",
            bounds,
        )
    }
}

/// The higher Lie character `ψ^λ` of `S_n` on every class, by the
/// centralizer sum in `S_n`.
pub fn psi_s_character(lambda: &Partition, bounds: &Bounds) -> Result<ClassFunction<Partition>> {
    let n = lambda.size();
    let x = canonical_rep_s(lambda);
    let omega = OmegaSpec::new(
        &Bipartition::new(lambda.clone(), Partition::empty()),
        PrimitiveRoot::First,
    );
    let mut hists: BTreeMap<Partition, BTreeMap<(u64, u64), u64>> = BTreeMap::new();
    for z in enumerate_symmetric(n, bounds)?.filter(|z| z.commutes_with(&x)) {
        let h = hists.entry(z.cycle_type()).or_default();
        *h.entry(omega.angle(&z)).or_default() += 1;
    }
    let z_lambda = lambda.z_value();
    let empty = BTreeMap::new();
    let mut entries = Vec::new();
    for mu in enumerate_partitions(n) {
        // |C_λ|/|C_μ| = z_μ/z_λ
        let scale = BigRational::new(mu.z_value().into(), z_lambda.into());
        let v = round_root_sum(hists.get(&mu).unwrap_or(&empty), &scale, || {
            alloc::format!("psi^{lambda}({mu}) in S_{n}")
        })?;
        entries.push((mu, v));
    }
    Ok(ClassFunction::from_integers(GroupTag::S, n, entries))
}

pub fn psi_s(lambda: &Partition, mu: &Partition, bounds: &Bounds) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::RankMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let chi = psi_s_character(lambda, bounds)?;
    Ok(chi.get(mu).expect("all classes present").to_integer())
}

/// `r_k^{S_n} = Σ_{λ ⊢ n, parts dividing k} ψ^λ`.
pub fn scharf_check(n: usize, k: i64, bounds: &Bounds) -> Result<bool> {
    let r = root_enumerator_s(n, k, bounds)?;
    let kk = k.unsigned_abs();
    let classes = enumerate_partitions(n);
    let mut total = ClassFunction::zero(GroupTag::S, n, &classes);
    for lambda in &classes {
        if kk == 0 || lambda.parts().iter().all(|&i| kk.is_multiple_of(i as u64)) {
            total = total.add(&psi_s_character(lambda, bounds)?)?;
        }
    }
    Ok(total.first_difference(&r).is_none())
}

/// Whether the `B_n`-class `λ ⊆ D_n` splits into two `D_n`-classes: all
/// parts even and positive, `n ≥ 1`.
pub fn splits_in_d(lambda: &Bipartition) -> bool {
    lambda.size() > 0
        && lambda.side(Sign::Minus).is_empty()
        && lambda.parts().all(|(i, _)| i % 2 == 0)
}

fn check_in_d(lambda: &Bipartition) -> Result<()> {
    if class_chi(lambda) != Sign::Plus {
        return Err(Error::InvalidArgument(alloc::format!(
            "class {lambda} is not contained in D_n"
        )));
    }
    Ok(())
}

/// `ψ_{D_n}^C`, the restriction of `ψ^C` to `D_n`, on every `D_n` class
/// (keyed by `B_n` labels). Refused when `C` splits in `D_n`: the
/// restriction identity needs a representative whose `B_n`-centralizer
/// leaves `D_n`, and for split classes the two halves need a convention.
pub fn psi_d_character(c: &Bipartition, bounds: &Bounds) -> Result<ClassFunction> {
    check_in_d(c)?;
    if splits_in_d(c) {
        return Err(Error::SplitClass {
            class: alloc::format!("{c}"),
        });
    }
    Ok(psi_series_character(c, bounds)?
        .restrict(GroupTag::Sub(Subgroup::D), |mu| class_chi(mu) == Sign::Plus))
}

pub fn psi_d(c: &Bipartition, mu: &Bipartition, bounds: &Bounds) -> Result<BigInt> {
    check_in_d(mu)?;
    let chi = psi_d_character(c, bounds)?;
    chi.get(mu)
        .map(|v| v.to_integer())
        .ok_or(Error::RankMismatch {
            left: c.size(),
            right: mu.size(),
        })
}

/// `ψ_k + ψ̃_k` equals `2·r_k^{D_n}` on `D_n` and vanishes off `D_n`.
pub fn dn_half_sum_check(n: usize, k: i64, bounds: &Bounds) -> Result<bool> {
    let sum = psi_k_sum(n, k, bounds)?.add(&spsi_k_sum(n, k, bounds)?)?;
    let rd = subgroup_root_enumerator(n, k, Subgroup::D, bounds)?;
    Ok(sum.entries().iter().all(|(mu, v)| match rd.get(mu) {
        Some(r) => *v == r * BigRational::from_integer(2.into()),
        None => v.is_zero(),
    }))
}

/// For `n` or `k` odd, `r_k^{D_n} = Σ_{C ∈ Conj(D_n), C^k = 1} ψ_{D_n}^C`.
pub fn dn_odd_check(n: usize, k: i64, bounds: &Bounds) -> Result<bool> {
    if n.is_multiple_of(2) && k % 2 == 0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "needs n or k odd, got n={n}, k={k}"
        )));
    }
    let rd = subgroup_root_enumerator(n, k, Subgroup::D, bounds)?;
    let identity = Bipartition::identity(n);
    let d_classes: Vec<_> = rd.classes().cloned().collect();
    let mut total = ClassFunction::zero(GroupTag::Sub(Subgroup::D), n, &d_classes);
    for c in &d_classes {
        if class_power(c, k) == identity {
            total = total.add(&psi_d_character(c, bounds)?)?;
        }
    }
    Ok(total.first_difference(&rd).is_none())
}

/// `r_k = ψ_k` and `s̃r_k = ψ̃_k` on `B_n`.
pub fn roots_eq_psi_check(n: usize, k: i64, bounds: &Bounds) -> Result<bool> {
    let plain =
        psi_k_sum(n, k, bounds)?.first_difference(&root_enumerator(n, k, Twist::One, bounds)?);
    let signed =
        spsi_k_sum(n, k, bounds)?.first_difference(&root_enumerator(n, k, Twist::Chi, bounds)?);
    Ok(plain.is_none() && signed.is_none())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootcount::regular_character;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn predicate_examples() {
        assert!(divides_k(&bp("[2,1|]"), 2));
        assert!(divides_k(&bp("[|1]"), 2));
        assert!(!divides_k(&bp("[|2]"), 2));
        assert!(divides_k_minus(&bp("[|2]"), 2));
        assert!(!divides_k_minus(&bp("[1|]"), 3));
        assert!(!divides_k_minus(&bp("[|1]"), 2));
        assert!(divides_k_minus(&bp("[]"), 0));
        assert!(!divides_k_minus(&bp("[|1]"), 0));
        // odd k: no negative part qualifies
        assert!(!divides_k(&bp("[|1]"), 3));
    }

    #[test]
    fn predicates_match_power_map() {
        for n in 0..=8 {
            let id = Bipartition::identity(n);
            let w0 = Bipartition::longest(n);
            for lambda in enumerate_bipartitions(n) {
                for k in 0..=12 {
                    let p = class_power(&lambda, k);
                    assert_eq!(divides_k(&lambda, k), p == id, "{lambda} k={k}");
                    assert_eq!(divides_k_minus(&lambda, k), p == w0, "{lambda} k={k}");
                }
            }
        }
    }

    #[test]
    fn brute_force_examples() {
        let b = Bounds::default();
        let triv = psi_bruteforce_character(&bp("[1,1|]"), PrimitiveRoot::First, &b).unwrap();
        assert!(triv.values.values().all(|v| *v == q(1)));
        let chi = psi_bruteforce_character(&bp("[|1,1]"), PrimitiveRoot::First, &b).unwrap();
        for (mu, v) in chi.values.entries() {
            assert_eq!(*v, q(class_chi(mu).value()));
        }
        assert_eq!(
            psi_bruteforce(&bp("[2|]"), &bp("[1,1|]"), &b).unwrap(),
            BigInt::from(2)
        );
        assert!(
            psi_bruteforce_character(&Bipartition::identity(6), PrimitiveRoot::First, &b).is_err()
        );
    }

    #[test]
    fn brute_force_matches_series_small() {
        let b = Bounds::default();
        for n in 0..=4 {
            for lambda in enumerate_bipartitions(n) {
                let brute = psi_bruteforce_character(&lambda, PrimitiveRoot::First, &b).unwrap();
                let series = psi_series(&lambda, &b).unwrap();
                assert_eq!(brute.values, series.values, "{lambda}");
            }
        }
    }

    #[test]
    fn primitive_root_choice_is_irrelevant() {
        let b = Bounds::default();
        for n in 0..=3 {
            for lambda in enumerate_bipartitions(n) {
                let a = psi_bruteforce_character(&lambda, PrimitiveRoot::First, &b).unwrap();
                let c = psi_bruteforce_character(&lambda, PrimitiveRoot::Alternate, &b).unwrap();
                assert_eq!(a.values, c.values);
            }
        }
    }

    #[test]
    fn aggregates() {
        let b = Bounds::default();
        for n in 0..=4 {
            assert_eq!(psi_k_sum(n, 0, &b).unwrap(), regular_character(n));
            for k in [0, 1, 2, 3, 4, 6] {
                assert!(roots_eq_psi_check(n, k, &b).unwrap(), "n={n} k={k}");
                assert!(dn_half_sum_check(n, k, &b).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn symmetric_group() {
        let b = Bounds::default();
        for n in 0..=4 {
            let triv = psi_s_character(&Partition::ones(n), &b).unwrap();
            assert!(triv.values().all(|v| *v == q(1)));
        }
        let lie3 = Partition::new(alloc::vec![3]);
        assert_eq!(
            psi_s(&lie3, &Partition::ones(3), &b).unwrap(),
            BigInt::from(2)
        );
        for n in 0..=5 {
            for k in 1..=6 {
                assert!(scharf_check(n, k, &b).unwrap(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn type_d() {
        let b = Bounds::default();
        let c = psi_d_character(&bp("[1,1|]"), &b).unwrap();
        assert!(c.values().all(|v| *v == q(1)));
        assert!(matches!(
            psi_d_character(&bp("[2,2|]"), &b),
            Err(Error::SplitClass { .. })
        ));
        assert!(psi_d_character(&bp("[1|1]"), &b).is_err());
        assert!(dn_odd_check(3, 2, &b).unwrap());
        assert!(dn_odd_check(4, 3, &b).unwrap());
        assert!(dn_odd_check(2, 2, &b).is_err());
    }
}
