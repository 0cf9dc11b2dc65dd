//! Truncated exponential generating functions over the rationals.
//!
//! Monomials are indexed by bipartitions: `t^{c(μ)} = Π t_{j,θ}^{j·b_{j,θ}}`
//! is stored as `μ` itself, so multiplying monomials is the multiset union
//! of parts and reading off a class-function value is a lookup. Two-alphabet
//! series (`s` and `t`) use a pair of bipartitions.
//!
//! Every argument built here is diagonal (equal `s`- and `t`-weight in each
//! term), hence so is its exponential; [`TruncatedSeries::is_diagonal`]
//! checks this.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::{self, Write};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bounds::{self, Bounds};
use crate::classfn::{to_integer, ClassFunction, GroupTag};
use crate::combinatorics::{
    divisors, enumerate_bipartitions, gcd, k_coeff, roots_z2, signed_roots_z2, Bipartition,
    Partition, Sign,
};
use crate::error::{Error, Result};
use crate::group::centralizer_order;
use crate::rootcount::Twist;

pub trait Monomial: Clone + Ord + fmt::Display {
    fn one() -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// Largest per-alphabet weight.
    fn weight(&self) -> usize;
}

impl Monomial for Bipartition {
    fn one() -> Self {
        Bipartition::default()
    }
    fn mul(&self, other: &Self) -> Self {
        self.union(other)
    }
    fn weight(&self) -> usize {
        self.size()
    }
}

/// `s^{c(λ)} t^{c(μ)}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PairMonomial {
    pub s: Bipartition,
    pub t: Bipartition,
}

impl PairMonomial {
    pub fn new(s: Bipartition, t: Bipartition) -> Self {
        PairMonomial { s, t }
    }
}

impl fmt::Display for PairMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.s, self.t)
    }
}

impl Monomial for PairMonomial {
    fn one() -> Self {
        PairMonomial::default()
    }
    fn mul(&self, other: &Self) -> Self {
        PairMonomial {
            s: self.s.union(&other.s),
            t: self.t.union(&other.t),
        }
    }
    fn weight(&self) -> usize {
        self.s.size().max(self.t.size())
    }
}

/// A power series with every monomial of weight above `truncation` dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries<M: Monomial> {
    truncation: usize,
    terms: BTreeMap<M, BigRational>,
}

impl<M: Monomial> TruncatedSeries<M> {
    pub fn zero(truncation: usize) -> Self {
        TruncatedSeries {
            truncation,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(truncation: usize) -> Self {
        let mut s = Self::zero(truncation);
        s.add_term(M::one(), BigRational::one());
        s
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn terms(&self) -> &BTreeMap<M, BigRational> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c·m`, ignoring it if `m` is beyond the truncation.
    pub fn add_term(&mut self, m: M, c: BigRational) {
        if m.weight() > self.truncation || c.is_zero() {
            return;
        }
        let sum = self.coefficient(&m) + c;
        if sum.is_zero() {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, sum);
        }
    }

    pub fn coefficient(&self, m: &M) -> BigRational {
        self.terms.get(m).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn constant_term(&self) -> BigRational {
        self.coefficient(&M::one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = Self {
            truncation: self.truncation.min(other.truncation),
            terms: BTreeMap::new(),
        };
        for (m, c) in self.terms.iter().chain(&other.terms) {
            if m.weight() <= out.truncation {
                *out.terms.entry(m.clone()).or_insert_with(BigRational::zero) += c;
            }
        }
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.truncation);
        if c.is_zero() {
            return out;
        }
        out.terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        out
    }

    /// Truncated product.
    pub fn mul(&self, other: &Self) -> Self {
        self.mul_filtered(other, |_| true)
    }

    /// Truncated product keeping only monomials accepted by `keep`. `keep`
    /// must be closed downward under division (if a product is rejected, so
    /// is every multiple of it) for the pruning to be exact.
    pub fn mul_filtered(&self, other: &Self, keep: impl Fn(&M) -> bool) -> Self {
        let truncation = self.truncation.min(other.truncation);
        let mut terms: BTreeMap<M, BigRational> = BTreeMap::new();
        for (a, ca) in &self.terms {
            let wa = a.weight();
            if wa > truncation {
                continue;
            }
            for (b, cb) in &other.terms {
                let m = a.mul(b);
                if m.weight() > truncation || !keep(&m) {
                    continue;
                }
                *terms.entry(m).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        terms.retain(|_, v| !v.is_zero());
        TruncatedSeries { truncation, terms }
    }

    /// `exp(f) = Σ_{m≥0} f^m/m!`, stopping once `f^m` vanishes under the
    /// truncation.
    pub fn exp(&self) -> Result<Self> {
        self.exp_filtered(|_| true)
    }

    pub fn exp_filtered(&self, keep: impl Fn(&M) -> bool) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::InvalidArgument(String::from(
                "exp needs a series with zero constant term",
            )));
        }
        let mut total = Self::one(self.truncation);
        let mut power = Self::one(self.truncation);
        let mut m: i64 = 1;
        loop {
            power = power
                .mul_filtered(self, &keep)
                .scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
            if power.is_empty() {
                break;
            }
            for (mono, c) in &power.terms {
                *total
                    .terms
                    .entry(mono.clone())
                    .or_insert_with(BigRational::zero) += c;
            }
            m += 1;
        }
        total.terms.retain(|_, v| !v.is_zero());
        Ok(total)
    }

    /// One line per monomial, `<monomial> -> p/q`, in monomial order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for (m, c) in &self.terms {
            let _ = writeln!(out, "{m} -> {c}");
        }
        out
    }
}

impl TruncatedSeries<PairMonomial> {
    pub fn is_diagonal(&self) -> bool {
        self.terms.keys().all(|m| m.s.size() == m.t.size())
    }
}

/// `b` parts of size `len` and sign `s`.
fn block(len: usize, s: Sign, b: usize) -> Bipartition {
    Bipartition::from_parts(core::iter::repeat_n((len, s), b))
}

fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// The argument of the exponential generating function for the `k`-th
/// (twisted) root enumerator of `B_n`:
/// `Σ_{j,θ} Σ_{h|k, gcd(h,j)=1} c(h,θ)·t_{j,θ}^{jk/h} / (2jk/h)` where `c`
/// counts (or signs) the `h`-th roots of `θ` in `Z₂`; twists with `χ′`
/// replace `t` by `-(-t)`.
pub fn gf_roots_argument(
    k: i64,
    twist: Twist,
    truncation: usize,
) -> Result<TruncatedSeries<Bipartition>> {
    if k <= 0 {
        return Err(Error::InvalidArgument(alloc::format!(
            "generating function needs k >= 1, got {k}"
        )));
    }
    let mut arg = TruncatedSeries::zero(truncation);
    for h in divisors(k)? {
        let parts = (k as u64 / h) as usize;
        for j in 1..=truncation {
            let w = j * parts;
            if w > truncation {
                break;
            }
            if gcd(h, j as u64) != 1 {
                continue;
            }
            for theta in Sign::BOTH {
                let mut c = if twist.has_chi() {
                    signed_roots_z2(h as i64, theta)
                } else {
                    roots_z2(h as i64, theta)
                };
                if twist.has_chi_prime() && w.is_multiple_of(2) {
                    c = -c;
                }
                arg.add_term(block(j, theta, parts), frac(c, 2 * w as i64));
            }
        }
    }
    Ok(arg)
}

/// Reads a class function off the weight-`n` coefficients: the value at
/// `μ` is `coefficient(μ) · |Z_μ|`.
pub fn coefficients_to_classfunction(
    series: &TruncatedSeries<Bipartition>,
    n: usize,
) -> Result<ClassFunction> {
    if n > series.truncation() {
        return Err(Error::InvalidArgument(alloc::format!(
            "weight {n} is beyond the truncation {}",
            series.truncation()
        )));
    }
    Ok(ClassFunction::new(
        GroupTag::B,
        n,
        enumerate_bipartitions(n)
            .into_iter()
            .map(|mu| {
                let z = BigRational::from_integer(centralizer_order(&mu).into());
                let v = series.coefficient(&mu) * z;
                (mu, v)
            })
            .collect(),
    ))
}

/// `exp(gf_roots_argument(k, twist, n))` read as a class function on `B_n`.
pub fn root_enumerator_from_series(
    n: usize,
    k: i64,
    twist: Twist,
    bounds: &Bounds,
) -> Result<ClassFunction> {
    bounds::check("series", bounds.series, n)?;
    let k = k.abs();
    let f = gf_roots_argument(k, twist, n)?.exp()?;
    coefficients_to_classfunction(&f, n)
}

/// Which part of the higher-Lie-character generating function to build.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HlcSelector {
    /// Both alphabets, all terms.
    Full,
    /// Both alphabets, only the `s_{i,ε}` occurring in the given bipartition.
    Targeted(Bipartition),
    /// `s_{i,ε} := 1` when `i | k` and `ε^{k/i} = +1`, else 0.
    DividesK(i64),
    /// `s_{i,ε} := 1` when `i | k` and `ε^{k/i} = -1`, else 0.
    DividesKMinus(i64),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HlcArgument {
    TwoAlphabet(TruncatedSeries<PairMonomial>),
    Specialized(TruncatedSeries<Bipartition>),
}

/// Whether `s_{i,ε}` is set to 1 by `λ ⊢_k n`.
pub fn selects_divides_k(i: usize, eps: Sign, k: i64) -> bool {
    let k = k.unsigned_abs();
    if k == 0 {
        return true;
    }
    k.is_multiple_of(i as u64) && eps.pow((k / i as u64) as i64) == Sign::Plus
}

/// Whether `s_{i,ε}` is set to 1 by `λ ⊢_{k,-} n`.
pub fn selects_divides_k_minus(i: usize, eps: Sign, k: i64) -> bool {
    let k = k.unsigned_abs();
    if k == 0 {
        return false;
    }
    k.is_multiple_of(i as u64) && eps.pow((k / i as u64) as i64) == Sign::Minus
}

/// Terms `K_{ε,θ}(e)·(s_{i,ε} t_{j,θ})^{ij/e} / (2ij/e)` with `ij/e ≤ N`,
/// restricted to the `(i,ε)` accepted by `use_s`.
fn hlc_terms(
    truncation: usize,
    use_s: impl Fn(usize, Sign) -> bool,
) -> Vec<(PairMonomial, BigRational)> {
    let mut out = Vec::new();
    for i in 1..=truncation {
        for eps in Sign::BOTH {
            if !use_s(i, eps) {
                continue;
            }
            for j in 1..=truncation {
                let g = gcd(i as u64, j as u64);
                for theta in Sign::BOTH {
                    for e in divisors(g as i64).expect("gcd is positive") {
                        let e = e as usize;
                        let w = i * j / e;
                        if w > truncation {
                            continue;
                        }
                        let kc = k_coeff(eps, theta, e as u64).expect("e >= 1");
                        if kc == 0 {
                            continue;
                        }
                        let mono = PairMonomial::new(block(i, eps, j / e), block(j, theta, i / e));
                        out.push((mono, frac(kc, 2 * w as i64)));
                    }
                }
            }
        }
    }
    out
}

pub fn hlc_argument(selector: &HlcSelector, truncation: usize) -> HlcArgument {
    match selector {
        HlcSelector::Full => {
            let mut s = TruncatedSeries::zero(truncation);
            for (m, c) in hlc_terms(truncation, |_, _| true) {
                s.add_term(m, c);
            }
            HlcArgument::TwoAlphabet(s)
        }
        HlcSelector::Targeted(lambda) => {
            let mut s = TruncatedSeries::zero(truncation);
            for (m, c) in hlc_terms(truncation, |i, eps| lambda.multiplicity(i, eps) > 0) {
                s.add_term(m, c);
            }
            HlcArgument::TwoAlphabet(s)
        }
        HlcSelector::DividesK(k) => {
            HlcArgument::Specialized(specialize(truncation, |i, e| selects_divides_k(i, e, *k)))
        }
        HlcSelector::DividesKMinus(k) => {
            HlcArgument::Specialized(specialize(truncation, |i, e| {
                selects_divides_k_minus(i, e, *k)
            }))
        }
    }
}

fn specialize(
    truncation: usize,
    use_s: impl Fn(usize, Sign) -> bool,
) -> TruncatedSeries<Bipartition> {
    let mut s = TruncatedSeries::zero(truncation);
    for (m, c) in hlc_terms(truncation, use_s) {
        s.add_term(m.t, c);
    }
    s
}

/// The exponential of the `λ`-targeted argument at weight `|λ|`, keeping
/// only `s`-monomials that divide `s^{c(λ)}`.
fn targeted_exp(lambda: &Bipartition) -> Result<TruncatedSeries<PairMonomial>> {
    let n = lambda.size();
    let HlcArgument::TwoAlphabet(arg) = hlc_argument(&HlcSelector::Targeted(lambda.clone()), n)
    else {
        unreachable!("targeted selector is two-alphabet")
    };
    arg.exp_filtered(|m| lambda.contains(&m.s))
}

/// `ψ^λ` on every class of `B_n`, read from the generating function.
pub fn psi_series_character(lambda: &Bipartition, bounds: &Bounds) -> Result<ClassFunction> {
    let n = lambda.size();
    bounds::check("series", bounds.series, n)?;
    let f = targeted_exp(lambda)?;
    let mut entries = Vec::new();
    for mu in enumerate_bipartitions(n) {
        let z = BigRational::from_integer(centralizer_order(&mu).into());
        let v = f.coefficient(&PairMonomial::new(lambda.clone(), mu.clone())) * z;
        let v = to_integer(&v, || alloc::format!("psi^{lambda}({mu}) from series"))?;
        entries.push((mu, BigRational::from_integer(v)));
    }
    Ok(ClassFunction::new(GroupTag::B, n, entries))
}

/// `ψ^λ(μ)` from the generating function.
pub fn psi_from_series(lambda: &Bipartition, mu: &Bipartition, bounds: &Bounds) -> Result<BigInt> {
    if lambda.size() != mu.size() {
        return Err(Error::RankMismatch {
            left: lambda.size(),
            right: mu.size(),
        });
    }
    let chi = psi_series_character(lambda, bounds)?;
    Ok(chi.get(mu).expect("all classes present").to_integer())
}

/// Every `ψ^λ(μ)` with `|λ| = |μ| = n` from one exponential of the full
/// two-alphabet argument, rows in class order.
pub fn psi_table_from_full_series(n: usize, bounds: &Bounds) -> Result<Vec<ClassFunction>> {
    bounds::check("series", bounds.series, n)?;
    let HlcArgument::TwoAlphabet(arg) = hlc_argument(&HlcSelector::Full, n) else {
        unreachable!("full selector is two-alphabet")
    };
    let f = arg.exp()?;
    if !f.is_diagonal() {
        return Err(Error::Inconsistent(String::from(
            "off-diagonal monomial in the higher Lie character series",
        )));
    }
    let classes = enumerate_bipartitions(n);
    let mut rows = Vec::with_capacity(classes.len());
    for lambda in &classes {
        let mut entries = Vec::with_capacity(classes.len());
        for mu in &classes {
            let z = BigRational::from_integer(centralizer_order(mu).into());
            let v = f.coefficient(&PairMonomial::new(lambda.clone(), mu.clone())) * z;
            let v = to_integer(&v, || alloc::format!("psi^{lambda}({mu}) from full series"))?;
            entries.push((mu.clone(), BigRational::from_integer(v)));
        }
        rows.push(ClassFunction::new(GroupTag::B, n, entries));
    }
    Ok(rows)
}

/// Class function read from an `s`-specialized argument.
pub fn specialized_character(
    selector: &HlcSelector,
    n: usize,
    bounds: &Bounds,
) -> Result<ClassFunction> {
    bounds::check("series", bounds.series, n)?;
    match hlc_argument(selector, n) {
        HlcArgument::Specialized(arg) => coefficients_to_classfunction(&arg.exp()?, n),
        HlcArgument::TwoAlphabet(_) => Err(Error::InvalidArgument(String::from(
            "selector is not an s-specialization",
        ))),
    }
}

/// Partition with `b` parts equal to `len`.
pub fn rectangle(len: usize, b: usize) -> Partition {
    Partition::new(core::iter::repeat_n(len, b).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootcount::root_enumerator;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    fn q(a: i64, b: i64) -> BigRational {
        frac(a, b)
    }

    #[test]
    fn exp_examples() {
        let zero: TruncatedSeries<Bipartition> = TruncatedSeries::zero(4);
        assert_eq!(zero.exp().unwrap(), TruncatedSeries::one(4));

        let c = q(3, 5);
        let mut f = TruncatedSeries::zero(3);
        f.add_term(bp("[1|]"), c.clone());
        let e = f.exp().unwrap();
        assert_eq!(e.coefficient(&bp("[1|]")), c.clone());
        assert_eq!(e.coefficient(&bp("[1,1|]")), &c * &c / q(2, 1));
        assert_eq!(e.coefficient(&bp("[1,1,1|]")), &c * &c * &c / q(6, 1));
        assert_eq!(e.len(), 4);

        let mut g = TruncatedSeries::one(2);
        g.add_term(bp("[1|]"), q(1, 1));
        assert!(g.exp().is_err());
    }

    #[test]
    fn argument_examples() {
        let a = gf_roots_argument(1, Twist::One, 1).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.coefficient(&bp("[1|]")), q(1, 2));
        assert_eq!(a.coefficient(&bp("[|1]")), q(1, 2));

        let a = gf_roots_argument(2, Twist::One, 4).unwrap();
        assert_eq!(a.coefficient(&bp("[1|]")), q(1, 1));

        let a = gf_roots_argument(2, Twist::Chi, 6).unwrap();
        assert_eq!(a.coefficient(&bp("[|1,1]")), q(-1, 4));
        assert_eq!(a.coefficient(&bp("[|1]")), q(0, 1));
        assert!(gf_roots_argument(0, Twist::One, 3).is_err());
    }

    #[test]
    fn extraction_examples() {
        let b = Bounds::default();
        let f = gf_roots_argument(1, Twist::One, 3).unwrap().exp().unwrap();
        let c = coefficients_to_classfunction(&f, 1).unwrap();
        assert!(c.values().all(|v| *v == q(1, 1)));

        let f = gf_roots_argument(2, Twist::One, 2).unwrap().exp().unwrap();
        let c = coefficients_to_classfunction(&f, 2).unwrap();
        assert_eq!(c, root_enumerator(2, 2, Twist::One, &b).unwrap());
        let vals: Vec<_> = c.values().cloned().collect();
        assert_eq!(vals, [q(6, 1), q(0, 1), q(0, 1), q(2, 1), q(0, 1)]);

        let zero = TruncatedSeries::zero(3);
        let c = coefficients_to_classfunction(&zero, 2).unwrap();
        assert!(c.values().all(|v| v.is_zero()));
        assert!(coefficients_to_classfunction(&zero, 4).is_err());
    }

    #[test]
    fn hlc_argument_examples() {
        let HlcArgument::TwoAlphabet(full) = hlc_argument(&HlcSelector::Full, 3) else {
            panic!()
        };
        let m = PairMonomial::new(bp("[1|]"), bp("[1|]"));
        assert_eq!(full.coefficient(&m), q(1, 2));
        assert!(full.is_diagonal());

        let HlcArgument::Specialized(specialized) = hlc_argument(&HlcSelector::DividesK(1), 7) else {
            panic!()
        };
        assert_eq!(specialized, gf_roots_argument(1, Twist::One, 7).unwrap());
    }

    #[test]
    fn psi_examples() {
        let b = Bounds::default();
        for n in 1..=4 {
            let triv = psi_series_character(&Bipartition::identity(n), &b).unwrap();
            assert!(triv.values().all(|v| *v == q(1, 1)));
            let chi = psi_series_character(&Bipartition::longest(n), &b).unwrap();
            for (mu, v) in chi.entries() {
                assert_eq!(*v, q(crate::group::class_chi(mu).value(), 1));
            }
        }
        assert_eq!(
            psi_from_series(&bp("[2|]"), &bp("[1,1|]"), &b).unwrap(),
            BigInt::from(2)
        );
        assert!(psi_from_series(&bp("[2|]"), &bp("[1|]"), &b).is_err());
    }

    #[test]
    fn full_series_matches_targeted() {
        let b = Bounds::default();
        for n in 0..=4 {
            let rows = psi_table_from_full_series(n, &b).unwrap();
            for (lambda, row) in enumerate_bipartitions(n).iter().zip(&rows) {
                assert_eq!(*row, psi_series_character(lambda, &b).unwrap());
            }
        }
    }
}
