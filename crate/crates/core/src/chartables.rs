//! Irreducible character tables of `S_n` and `B_n`, decompositions, and
//! multiplicities over the subgroups of `B_n` cut out by linear characters.
//!
//! `S_n` tables come from the Murnaghan–Nakayama rule, built bottom-up so
//! that `χ^λ(ρ)` only looks up tables of smaller rank. The `B_n` row of
//! `(α, β)` with `|α| = a` is induced from `χ^α ⊗ χ^β·η` on `B_a × B_b`,
//! where `η = (-1)^{#negative cycles}`. Both are certified by row and column
//! orthogonality before use.
//!
//! Subgroup multiplicities use Clifford theory over `G/H`, which is `Z₂` or
//! `Z₂ × Z₂`. A `B_n`-irreducible `χ` with stabilizer of order `s` in the
//! twisting group restricts to `e(θ₁ + … + θ_t)` with `e²t = s`. Since every
//! function decomposed here is constant on `B_n`-classes, the `θ_j` share a
//! multiplicity, which is `⟨f, χ⟩_H / (e t)`. Only `s = 4` leaves `e`
//! undetermined; there the report keeps both candidates, which have the
//! same sign.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::bounds::{self, Bounds};
use crate::classfn::{to_integer, ClassFunction, ClassLabel, GroupTag};
use crate::combinatorics::{
    enumerate_bipartitions, enumerate_partitions, factorial, Bipartition, Partition, Sign,
};
use crate::error::{Error, Result};
use crate::group::{centralizer_order, class_chi, class_chi_prime, group_order, Subgroup};
use crate::hlc::{psi_k_sum, spsi_k_sum};
use crate::rootcount::{root_enumerator, root_enumerator_s, subgroup_root_enumerator, Twist};

/// An integer character table with rows and columns labeled alike.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable<L: ClassLabel> {
    pub group: GroupTag,
    pub n: usize,
    labels: Vec<L>,
    class_sizes: Vec<i128>,
    values: Vec<Vec<i128>>,
    index: BTreeMap<L, usize>,
    identity: usize,
}

impl<L: ClassLabel> CharacterTable<L> {
    fn new(
        group: GroupTag,
        n: usize,
        labels: Vec<L>,
        identity: L,
        class_sizes: Vec<i128>,
        values: Vec<Vec<i128>>,
    ) -> Self {
        let index: BTreeMap<L, usize> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, l)| (l, i))
            .collect();
        let identity = index[&identity];
        CharacterTable {
            identity,
            group,
            n,
            labels,
            class_sizes,
            values,
            index,
        }
    }

    /// Row labels (irreducibles); also the column labels (classes).
    pub fn labels(&self) -> &[L] {
        &self.labels
    }

    pub fn class_sizes(&self) -> &[i128] {
        &self.class_sizes
    }

    pub fn order(&self) -> i128 {
        self.class_sizes.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn rows(&self) -> &[Vec<i128>] {
        &self.values
    }

    pub fn row(&self, label: &L) -> Option<&[i128]> {
        self.index.get(label).map(|&i| self.values[i].as_slice())
    }

    pub fn value(&self, row: &L, class: &L) -> Option<i128> {
        Some(self.values[*self.index.get(row)?][*self.index.get(class)?])
    }

    /// `χ(1)` for each row.
    pub fn degrees(&self) -> Vec<i128> {
        self.values.iter().map(|r| r[self.identity]).collect()
    }

    pub fn position(&self, label: &L) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn row_function(&self, r: usize) -> ClassFunction<L> {
        ClassFunction::from_integers(
            self.group,
            self.n,
            self.labels
                .iter()
                .zip(&self.values[r])
                .map(|(l, v)| (l.clone(), BigInt::from(*v)))
                .collect(),
        )
    }

    /// Row and column orthogonality, and `Σ χ(1)² = |G|`.
    pub fn certify(&self) -> Result<()> {
        let order = self.order();
        let m = self.len();
        for a in 0..m {
            for b in a..m {
                let s: i128 = (0..m)
                    .map(|c| self.class_sizes[c] * self.values[a][c] * self.values[b][c])
                    .sum();
                let expected = if a == b { order } else { 0 };
                if s != expected {
                    return Err(Error::Inconsistent(alloc::format!(
                        "{} table for n={}: rows {} and {} have inner product {s}/{order}",
                        self.group,
                        self.n,
                        self.labels[a],
                        self.labels[b]
                    )));
                }
            }
        }
        for c in 0..m {
            for d in c..m {
                let s: i128 = (0..m).map(|r| self.values[r][c] * self.values[r][d]).sum();
                let expected = if c == d {
                    order / self.class_sizes[c]
                } else {
                    0
                };
                if s != expected {
                    return Err(Error::Inconsistent(alloc::format!(
                        "{} table for n={}: columns {} and {} fail orthogonality",
                        self.group,
                        self.n,
                        self.labels[c],
                        self.labels[d]
                    )));
                }
            }
        }
        let degrees: i128 = self
            .values
            .iter()
            .map(|r| r[self.identity] * r[self.identity])
            .sum();
        if degrees != order {
            return Err(Error::Inconsistent(alloc::format!(
                "degree squares sum to {degrees}, group order is {order}"
            )));
        }
        Ok(())
    }
}

/// Beta-set of `λ` with `len` beads.
fn beta_set(lambda: &Partition, len: usize) -> Vec<usize> {
    (0..len)
        .map(|j| lambda.parts().get(j).copied().unwrap_or(0) + len - 1 - j)
        .collect()
}

/// Every `(sign, λ ∖ hook)` over rim hooks of length `r`.
fn remove_rim_hooks(lambda: &Partition, r: usize) -> Vec<(i128, Partition)> {
    let len = lambda.len();
    let beta = beta_set(lambda, len);
    let mut out = Vec::new();
    for (j, &b) in beta.iter().enumerate() {
        if b < r || beta.contains(&(b - r)) {
            continue;
        }
        let crossed = beta.iter().filter(|&&c| c > b - r && c < b).count();
        let mut nb = beta.clone();
        nb[j] = b - r;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let parts = nb
            .iter()
            .enumerate()
            .map(|(k, &c)| c - (len - 1 - k))
            .collect();
        let sign = if crossed % 2 == 0 { 1 } else { -1 };
        out.push((sign, Partition::new(parts)));
    }
    out
}

/// `S_m` tables for every `m ≤ n`.
fn sn_tables_upto(n: usize) -> Vec<CharacterTable<Partition>> {
    let mut tables: Vec<CharacterTable<Partition>> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let labels = enumerate_partitions(m);
        let fact = factorial(m) as i128;
        let class_sizes = labels.iter().map(|p| fact / p.z_value() as i128).collect();
        let mut values = vec![vec![0i128; labels.len()]; labels.len()];
        for (r, lambda) in labels.iter().enumerate() {
            for (c, rho) in labels.iter().enumerate() {
                values[r][c] = if m == 0 {
                    1
                } else {
                    let first = rho.parts()[0];
                    let rest = Partition::new(rho.parts()[1..].to_vec());
                    let smaller = &tables[m - first];
                    remove_rim_hooks(lambda, first)
                        .into_iter()
                        .map(|(s, mu)| s * smaller.value(&mu, &rest).expect("smaller table"))
                        .sum()
                };
            }
        }
        tables.push(CharacterTable::new(
            GroupTag::S,
            m,
            labels,
            Partition::ones(m),
            class_sizes,
            values,
        ));
    }
    tables
}

/// Irreducible characters of `S_n`, certified.
pub fn sn_table(n: usize, bounds: &Bounds) -> Result<CharacterTable<Partition>> {
    bounds::check("table", bounds.table, n)?;
    let t = sn_tables_upto(n).pop().expect("n+1 tables");
    t.certify()?;
    Ok(t)
}

/// Every way to split the parts of `μ` into `(μ₁, μ₂)`, with the
/// coefficient `Π binom(a, c)` and the sign `η(μ₂)`.
fn splittings(mu: &Bipartition) -> Vec<(Bipartition, Bipartition, i128)> {
    let mut out = vec![(Bipartition::default(), Bipartition::default(), 1i128)];
    for (i, eps, a) in mu.blocks() {
        let mut next = Vec::with_capacity(out.len() * (a + 1));
        for (m1, m2, coef) in &out {
            let mut binom = 1i128;
            for c in 0..=a {
                if c > 0 {
                    binom = binom * (a - c + 1) as i128 / c as i128;
                }
                let take = |k: usize| Bipartition::from_parts(core::iter::repeat_n((i, eps), k));
                let n1 = m1.union(&take(c));
                let n2 = m2.union(&take(a - c));
                let sign = if eps == Sign::Minus && (a - c) % 2 == 1 {
                    -1
                } else {
                    1
                };
                next.push((n1, n2, coef * binom * sign));
            }
        }
        out = next;
    }
    out
}

/// Irreducible characters of `B_n`, rows labeled by bipartitions `(α, β)`
/// in class order, certified.
pub fn bn_table(n: usize, bounds: &Bounds) -> Result<CharacterTable<Bipartition>> {
    bounds::check("table", bounds.table, n)?;
    let sn = sn_tables_upto(n);
    let labels = enumerate_bipartitions(n);
    let order = to_i128(&BigInt::from(group_order(n)))?;
    let class_sizes: Vec<i128> = labels
        .iter()
        .map(|mu| Ok(order / to_i128(&BigInt::from(centralizer_order(mu)))?))
        .collect::<Result<_>>()?;
    let mut values = vec![vec![0i128; labels.len()]; labels.len()];
    for (c, mu) in labels.iter().enumerate() {
        let split = splittings(mu);
        for (r, row) in labels.iter().enumerate() {
            let (alpha, beta) = (row.side(Sign::Plus), row.side(Sign::Minus));
            let a = alpha.size();
            values[r][c] = split
                .iter()
                .filter(|(m1, _, _)| m1.size() == a)
                .map(|(m1, m2, coef)| {
                    let x = sn[a].value(alpha, &m1.merge()).expect("S_a table");
                    let y = sn[n - a].value(beta, &m2.merge()).expect("S_b table");
                    coef * x * y
                })
                .sum();
        }
    }
    let t = CharacterTable::new(
        GroupTag::B,
        n,
        labels,
        Bipartition::identity(n),
        class_sizes,
        values,
    );
    t.certify()?;
    Ok(t)
}

fn to_i128(v: &BigInt) -> Result<i128> {
    i128::try_from(v).map_err(|_| Error::Inconsistent(alloc::format!("{v} does not fit in i128")))
}

/// `(1/|G|) Σ_μ |C_μ| f(μ) χ_r(μ)` over the classes of `f`; `order` is
/// `|G|` (or `|H|` for a subgroup).
fn pairing<L: ClassLabel>(
    f: &ClassFunction<L>,
    table: &CharacterTable<L>,
    r: usize,
    order: i128,
) -> Result<BigRational> {
    let mut s = BigRational::zero();
    for (mu, v) in f.entries() {
        let c = table.position(mu).ok_or_else(|| {
            Error::InvalidArgument(alloc::format!("class {mu} is not a column of the table"))
        })?;
        s += v * BigRational::from_integer(BigInt::from(table.class_sizes[c] * table.values[r][c]));
    }
    Ok(s / BigRational::from_integer(order.into()))
}

/// `⟨f, χ_row⟩` on the whole group.
pub fn inner_product<L: ClassLabel>(
    f: &ClassFunction<L>,
    table: &CharacterTable<L>,
    row: &L,
) -> Result<BigRational> {
    if f.n != table.n {
        return Err(Error::RankMismatch {
            left: f.n,
            right: table.n,
        });
    }
    let r = table
        .position(row)
        .ok_or_else(|| Error::InvalidArgument(alloc::format!("no row labeled {row}")))?;
    pairing(f, table, r, table.order())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Proper,
    NotProper,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Proper => "proper",
            Verdict::NotProper => "not-proper",
        }
    }
}

/// Multiplicity of one irreducible constituent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Multiplicity {
    Exact(BigInt),
    /// Several candidates of equal sign; arises only for index-4 subgroups.
    Ambiguous(Vec<BigInt>),
}

impl Multiplicity {
    pub fn is_negative(&self) -> bool {
        match self {
            Multiplicity::Exact(m) => m.is_negative(),
            Multiplicity::Ambiguous(c) => c.iter().all(|m| m.is_negative()),
        }
    }

    pub fn exact(&self) -> Option<&BigInt> {
        match self {
            Multiplicity::Exact(m) => Some(m),
            Multiplicity::Ambiguous(_) => None,
        }
    }
}

impl core::fmt::Display for Multiplicity {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            Multiplicity::Exact(m) => write!(f, "{m}"),
            Multiplicity::Ambiguous(c) => {
                let parts: Vec<String> = c.iter().map(|m| m.to_string()).collect();
                f.write_str(&parts.join("|"))
            }
        }
    }
}

/// An irreducible constituent of the decomposed group, named after the
/// `B_n` (or `S_n`) rows whose restrictions contain it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constituent {
    pub label: String,
    pub multiplicity: Multiplicity,
    /// Whether this is one of several constituents of a single restricted row.
    pub split: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicityReport {
    pub group: GroupTag,
    pub n: usize,
    pub k: Option<i64>,
    pub constituents: Vec<Constituent>,
    pub verdict: Verdict,
}

impl MultiplicityReport {
    fn new(group: GroupTag, n: usize, constituents: Vec<Constituent>) -> Self {
        let verdict = if constituents.iter().any(|c| c.multiplicity.is_negative()) {
            Verdict::NotProper
        } else {
            Verdict::Proper
        };
        MultiplicityReport {
            group,
            n,
            k: None,
            constituents,
            verdict,
        }
    }

    pub fn with_k(mut self, k: i64) -> Self {
        self.k = Some(k);
        self
    }

    pub fn negative_witnesses(&self) -> impl Iterator<Item = &Constituent> {
        self.constituents
            .iter()
            .filter(|c| c.multiplicity.is_negative())
    }

    /// Whether every constituent has exactly multiplicity `m`.
    pub fn all_exactly(&self, m: i64) -> bool {
        let m = BigInt::from(m);
        self.constituents
            .iter()
            .all(|c| c.multiplicity.exact() == Some(&m))
    }
}

/// Decomposes `f` over the irreducibles of the whole group. Multiplicities
/// must be integers and must reconstruct `f`.
pub fn decompose<L: ClassLabel>(
    f: &ClassFunction<L>,
    table: &CharacterTable<L>,
) -> Result<MultiplicityReport> {
    if f.n != table.n || f.len() != table.len() {
        return Err(Error::RankMismatch {
            left: f.n,
            right: table.n,
        });
    }
    let mut constituents = Vec::with_capacity(table.len());
    let mut rebuilt = vec![BigRational::zero(); table.len()];
    for (r, label) in table.labels.iter().enumerate() {
        let m = pairing(f, table, r, table.order())?;
        let m = to_integer(&m, || alloc::format!("multiplicity of {label}"))?;
        for (c, slot) in rebuilt.iter_mut().enumerate() {
            *slot += BigRational::from_integer(&m * BigInt::from(table.values[r][c]));
        }
        constituents.push(Constituent {
            label: label.to_string(),
            multiplicity: Multiplicity::Exact(m),
            split: false,
        });
    }
    for (mu, v) in f.entries() {
        let c = table.position(mu).expect("checked by pairing");
        if rebuilt[c] != *v {
            return Err(Error::Inconsistent(alloc::format!(
                "decomposition does not reconstruct the input at {mu}"
            )));
        }
    }
    Ok(MultiplicityReport::new(table.group, table.n, constituents))
}

/// The linear characters of `B_n` whose common kernel is `sub`, besides 1.
/// The distinct nontrivial linear characters of `B_n` whose common kernel
/// is `sub`. For `n ≤ 1` some of them are trivial or coincide, and the
/// subgroup has smaller index than its name suggests.
fn twisting_characters(sub: Subgroup, classes: &[Bipartition]) -> Vec<Twist> {
    let candidates: &[Twist] = match sub {
        Subgroup::D => &[Twist::Chi],
        Subgroup::Z2A => &[Twist::ChiPrime],
        Subgroup::AB => &[Twist::ChiChiPrime],
        Subgroup::AD => &[Twist::Chi, Twist::ChiPrime, Twist::ChiChiPrime],
    };
    let values = |t: Twist| {
        classes
            .iter()
            .map(|mu| twist_value(t, mu))
            .collect::<Vec<_>>()
    };
    let mut seen = vec![values(Twist::One)];
    let mut out = Vec::new();
    for &t in candidates {
        let v = values(t);
        if !seen.contains(&v) {
            seen.push(v);
            out.push(t);
        }
    }
    out
}

fn twist_value(t: Twist, mu: &Bipartition) -> i128 {
    t.from_values(class_chi(mu), class_chi_prime(mu)).value() as i128
}

/// Decomposes a `B_n`-class-constant function on the subgroup `sub` (keyed
/// by the `B_n` classes inside it) over the irreducibles of `sub`.
pub fn subgroup_multiplicities(
    f: &ClassFunction,
    sub: Subgroup,
    table: &CharacterTable<Bipartition>,
) -> Result<MultiplicityReport> {
    let n = table.n;
    if f.n != n {
        return Err(Error::RankMismatch {
            left: f.n,
            right: n,
        });
    }
    if let Some(mu) = f.classes().find(|mu| !sub.contains_class(mu)) {
        return Err(Error::InvalidArgument(alloc::format!(
            "class {mu} is not inside {}",
            sub.name()
        )));
    }
    let twists = twisting_characters(sub, &table.labels);
    let group_size = (twists.len() + 1) as i128;
    let h_order = table.order() / group_size;

    // orbit of each row under twisting
    let mut orbit_of: Vec<Vec<usize>> = Vec::with_capacity(table.len());
    for r in 0..table.len() {
        let mut orbit = vec![r];
        for &t in &twists {
            let twisted: Vec<i128> = table
                .labels
                .iter()
                .zip(&table.values[r])
                .map(|(mu, v)| v * twist_value(t, mu))
                .collect();
            let s = table
                .values
                .iter()
                .position(|row| *row == twisted)
                .ok_or_else(|| {
                    Error::Inconsistent(alloc::format!(
                        "twist of row {} by {t} is not a row",
                        table.labels[r]
                    ))
                })?;
            if !orbit.contains(&s) {
                orbit.push(s);
            }
        }
        orbit.sort_unstable();
        orbit_of.push(orbit);
    }

    let masses: Vec<BigRational> = (0..table.len())
        .map(|r| pairing(f, table, r, h_order))
        .collect::<Result<_>>()?;

    // f = (1/|T|) Σ_χ m(χ) χ on the subgroup
    for (mu, v) in f.entries() {
        let c = table.position(mu).expect("checked by pairing");
        let mut s = BigRational::zero();
        for (r, m) in masses.iter().enumerate() {
            s += m * BigRational::from_integer(table.values[r][c].into());
        }
        if s / BigRational::from_integer(group_size.into()) != *v {
            return Err(Error::Inconsistent(alloc::format!(
                "subgroup decomposition does not reconstruct the input at {mu}"
            )));
        }
    }

    let mut constituents = Vec::new();
    for r in 0..table.len() {
        let orbit = &orbit_of[r];
        if orbit[0] != r {
            continue;
        }
        let m = &masses[r];
        for &o in orbit {
            if masses[o] != *m {
                return Err(Error::Inconsistent(alloc::format!(
                    "rows {} and {} are conjugate under twisting but have masses {m} and {}",
                    table.labels[r],
                    table.labels[o],
                    masses[o]
                )));
            }
        }
        let m = to_integer(m, || {
            alloc::format!("mass of {} on {}", table.labels[r], sub.name())
        })?;
        let stabilizer = group_size as usize / orbit.len();
        // e²t = stabilizer; candidates for e·t
        let divisors: &[i64] = match stabilizer {
            1 => &[1],
            2 => &[2],
            _ => &[4, 2],
        };
        let candidates: Vec<BigInt> = divisors
            .iter()
            .filter(|d| (&m % BigInt::from(**d)).is_zero())
            .map(|d| &m / BigInt::from(*d))
            .collect();
        let (multiplicity, count) = match (stabilizer, candidates.len()) {
            (1, 1) => (Multiplicity::Exact(candidates[0].clone()), 1),
            (2, 1) => (Multiplicity::Exact(candidates[0].clone()), 2),
            // m ≡ 2 mod 4 forces e·t = 2, hence e = 2 and t = 1
            (4, 1) => (Multiplicity::Exact(candidates[0].clone()), 1),
            (4, 2) if m.is_zero() => (Multiplicity::Exact(BigInt::zero()), 1),
            (4, 2) => (Multiplicity::Ambiguous(candidates), 1),
            _ => {
                return Err(Error::NonIntegral {
                    context: alloc::format!(
                        "constituent multiplicity of {} on {}",
                        table.labels[r],
                        sub.name()
                    ),
                    value: alloc::format!("{m}/{}", divisors[0]),
                })
            }
        };
        let base: Vec<String> = orbit.iter().map(|&o| table.labels[o].to_string()).collect();
        let base = base.join("~");
        if count == 1 {
            constituents.push(Constituent {
                label: base,
                multiplicity,
                split: stabilizer > 1,
            });
        } else {
            for j in 1..=count {
                constituents.push(Constituent {
                    label: alloc::format!("{base}.{j}"),
                    multiplicity: multiplicity.clone(),
                    split: true,
                });
            }
        }
    }
    Ok(MultiplicityReport::new(GroupTag::Sub(sub), n, constituents))
}

/// The constituents of `f↓H` for an index-2 subgroup, read off a `B_n`
/// decomposition of `f`: a non-split pair `{χ, χ⊗ν}` gives one constituent
/// with multiplicity `m(χ) + m(χ⊗ν)`, a split row gives two constituents
/// with multiplicity `m(χ)` each.
pub fn restrict_report(
    report: &MultiplicityReport,
    sub: Subgroup,
    table: &CharacterTable<Bipartition>,
) -> Result<MultiplicityReport> {
    if sub.index() != 2 {
        return Err(Error::InvalidArgument(String::from(
            "restriction rule implemented for index-2 subgroups",
        )));
    }
    let Some(&nu) = twisting_characters(sub, &table.labels).first() else {
        // the subgroup is the whole group
        return Ok(MultiplicityReport::new(
            GroupTag::Sub(sub),
            table.n,
            report.constituents.clone(),
        ));
    };
    let mult: BTreeMap<&str, BigInt> = report
        .constituents
        .iter()
        .map(|c| {
            (
                c.label.as_str(),
                c.multiplicity.exact().cloned().unwrap_or_default(),
            )
        })
        .collect();
    let mut constituents = Vec::new();
    for (r, label) in table.labels.iter().enumerate() {
        let twisted: Vec<i128> = table
            .labels
            .iter()
            .zip(&table.values[r])
            .map(|(mu, v)| v * twist_value(nu, mu))
            .collect();
        let s = table
            .values
            .iter()
            .position(|row| *row == twisted)
            .expect("twist is a row");
        let own = mult
            .get(label.to_string().as_str())
            .cloned()
            .unwrap_or_default();
        if s == r {
            for j in 1..=2 {
                constituents.push(Constituent {
                    label: alloc::format!("{label}.{j}"),
                    multiplicity: Multiplicity::Exact(own.clone()),
                    split: true,
                });
            }
        } else if r < s {
            let other = mult
                .get(table.labels[s].to_string().as_str())
                .cloned()
                .unwrap_or_default();
            constituents.push(Constituent {
                label: alloc::format!("{label}~{}", table.labels[s]),
                multiplicity: Multiplicity::Exact(own + other),
                split: false,
            });
        }
    }
    Ok(MultiplicityReport::new(
        GroupTag::Sub(sub),
        table.n,
        constituents,
    ))
}

/// `Σ_{λ ⊢₂ n} ψ^λ` is multiplicity-free over `Irr(B_n)`.
pub fn gelfand_check_b(n: usize, bounds: &Bounds) -> Result<bool> {
    let table = bn_table(n, bounds)?;
    Ok(decompose(&psi_k_sum(n, 2, bounds)?, &table)?.all_exactly(1))
}

/// `ψ₂ + ψ̃₂` restricted to `D_n` contains every irreducible of `D_n`
/// exactly twice.
pub fn gelfand_check_d(n: usize, bounds: &Bounds) -> Result<bool> {
    let table = bn_table(n, bounds)?;
    let sum = psi_k_sum(n, 2, bounds)?.add(&spsi_k_sum(n, 2, bounds)?)?;
    let on_d = sum.restrict(GroupTag::Sub(Subgroup::D), |mu| {
        Subgroup::D.contains_class(mu)
    });
    Ok(subgroup_multiplicities(&on_d, Subgroup::D, &table)?.all_exactly(2))
}

/// Properness reports of the `k`-th root enumerator of `group` for every
/// `k` in `ks`.
pub fn properness_sweep(
    group: GroupTag,
    n: usize,
    ks: &[i64],
    bounds: &Bounds,
) -> Result<Vec<MultiplicityReport>> {
    let mut out = Vec::with_capacity(ks.len());
    match group {
        GroupTag::S => {
            let table = sn_table(n, bounds)?;
            for &k in ks {
                out.push(decompose(&root_enumerator_s(n, k, bounds)?, &table)?.with_k(k));
            }
        }
        GroupTag::B => {
            let table = bn_table(n, bounds)?;
            for &k in ks {
                out.push(decompose(&root_enumerator(n, k, Twist::One, bounds)?, &table)?.with_k(k));
            }
        }
        GroupTag::Sub(sub) => {
            let table = bn_table(n, bounds)?;
            for &k in ks {
                let f = subgroup_root_enumerator(n, k, sub, bounds)?;
                out.push(subgroup_multiplicities(&f, sub, &table)?.with_k(k));
            }
        }
    }
    Ok(out)
}

/// `Σ_χ χ(μ)` for every class, i.e. the Frobenius–Schur count when all
/// indicators are `+1`.
pub fn row_sum<L: ClassLabel>(table: &CharacterTable<L>) -> ClassFunction<L> {
    ClassFunction::from_integers(
        table.group,
        table.n,
        table
            .labels
            .iter()
            .enumerate()
            .map(|(c, l)| {
                (
                    l.clone(),
                    BigInt::from(table.values.iter().map(|r| r[c]).sum::<i128>()),
                )
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hlc::psi_series;
    use crate::rootcount::regular_character;
    use num_traits::One;

    fn bp(s: &str) -> Bipartition {
        s.parse().unwrap()
    }

    #[test]
    fn degenerate_subgroups_of_small_rank() {
        let b = Bounds::default();
        for n in 0..=1 {
            let table = bn_table(n, &b).unwrap();
            for sub in Subgroup::ALL {
                let f = subgroup_root_enumerator(n, 0, sub, &b).unwrap();
                let rep = subgroup_multiplicities(&f, sub, &table).unwrap();
                // r_0 is the regular character; these subgroups are abelian
                let h: usize = f.classes().count();
                assert_eq!(rep.constituents.len(), h, "{sub:?} n={n}");
                assert!(rep.all_exactly(1), "{sub:?} n={n}");
            }
        }
    }

    #[test]
    fn symmetric_tables() {
        let b = Bounds::default();
        let t = sn_table(2, &b).unwrap();
        let (two, ones) = (Partition::new(vec![2]), Partition::ones(2));
        assert_eq!(t.value(&two, &ones), Some(1));
        assert_eq!(t.value(&two, &two), Some(1));
        assert_eq!(t.value(&ones, &ones), Some(1));
        assert_eq!(t.value(&ones, &two), Some(-1));
        let mut deg = sn_table(3, &b).unwrap().degrees();
        deg.sort_unstable();
        assert_eq!(deg, [1, 1, 2]);
        assert_eq!(
            sn_table(5, &b)
                .unwrap()
                .degrees()
                .iter()
                .map(|d| d * d)
                .sum::<i128>(),
            120
        );
        for n in 0..=8 {
            sn_table(n, &b).unwrap();
        }
    }

    #[test]
    fn hyperoctahedral_tables() {
        let b = Bounds::default();
        let t = bn_table(1, &b).unwrap();
        assert_eq!(t.row(&bp("[1|]")), Some(&[1, 1][..]));
        assert_eq!(t.row(&bp("[|1]")), Some(&[1, -1][..]));
        let t = bn_table(2, &b).unwrap();
        let mut deg = t.degrees();
        deg.sort_unstable();
        assert_eq!(deg, [1, 1, 1, 1, 2]);
        for n in 0..=6 {
            let t = bn_table(n, &b).unwrap();
            let triv = t
                .row(&Bipartition::new(
                    Partition::new(vec![n]),
                    Partition::empty(),
                ))
                .unwrap();
            assert!(triv.iter().all(|v| *v == 1));
            // all indicators are +1
            assert_eq!(row_sum(&t), root_enumerator(n, 2, Twist::One, &b).unwrap());
        }
    }

    #[test]
    fn rows_on_positive_classes_follow_symmetric_group() {
        let b = Bounds::default();
        for n in 0..=5 {
            let bt = bn_table(n, &b).unwrap();
            let st = sn_table(n, &b).unwrap();
            for alpha in enumerate_partitions(n) {
                let row = Bipartition::new(alpha.clone(), Partition::empty());
                for mu in enumerate_bipartitions(n) {
                    assert_eq!(
                        bt.value(&row, &mu),
                        st.value(&alpha, &mu.merge()),
                        "{row} at {mu}"
                    );
                }
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let b = Bounds::default();
        let t = bn_table(2, &b).unwrap();
        let r2 = root_enumerator(2, 2, Twist::One, &b).unwrap();
        assert_eq!(
            inner_product(&r2, &t, &bp("[2|]")).unwrap(),
            BigRational::one()
        );
        for n in 0..=5 {
            let t = bn_table(n, &b).unwrap();
            assert!(
                decompose(&root_enumerator(n, 2, Twist::One, &b).unwrap(), &t)
                    .unwrap()
                    .all_exactly(1)
            );
            let reg = decompose(&regular_character(n), &t).unwrap();
            for (c, d) in reg.constituents.iter().zip(t.degrees()) {
                assert_eq!(c.multiplicity, Multiplicity::Exact(d.into()));
            }
            for lambda in enumerate_bipartitions(n) {
                let psi = psi_series(&lambda, &b).unwrap();
                assert_eq!(decompose(&psi.values, &t).unwrap().verdict, Verdict::Proper);
            }
        }
    }

    #[test]
    fn type_d_square_roots() {
        let b = Bounds::default();
        for n in 2..=5 {
            let t = bn_table(n, &b).unwrap();
            let f = subgroup_root_enumerator(n, 2, Subgroup::D, &b).unwrap();
            let rep = subgroup_multiplicities(&f, Subgroup::D, &t).unwrap();
            assert!(rep.all_exactly(1), "n={n}");
            assert!(gelfand_check_d(n, &b).unwrap());
            assert!(gelfand_check_b(n, &b).unwrap());
        }
    }

    #[test]
    fn odd_k_restriction_rule() {
        let b = Bounds::default();
        for n in 1..=5 {
            let t = bn_table(n, &b).unwrap();
            for k in [1, 3, 5] {
                let full = decompose(&root_enumerator(n, k, Twist::One, &b).unwrap(), &t).unwrap();
                for sub in [Subgroup::D, Subgroup::Z2A, Subgroup::AB] {
                    let f = subgroup_root_enumerator(n, k, sub, &b).unwrap();
                    let direct = subgroup_multiplicities(&f, sub, &t).unwrap();
                    let pushed = restrict_report(&full, sub, &t).unwrap();
                    let mut a: Vec<_> = direct
                        .constituents
                        .iter()
                        .map(|c| c.multiplicity.clone())
                        .collect();
                    let mut p: Vec<_> = pushed
                        .constituents
                        .iter()
                        .map(|c| c.multiplicity.clone())
                        .collect();
                    a.sort_by_key(|m| m.to_string());
                    p.sort_by_key(|m| m.to_string());
                    assert_eq!(a, p, "n={n} k={k} {sub:?}");
                }
            }
        }
    }

    #[test]
    fn small_sweeps_are_proper() {
        let b = Bounds::default();
        let ks: Vec<i64> = (1..=6).collect();
        for n in 1..=4 {
            for g in [GroupTag::S, GroupTag::B, GroupTag::Sub(Subgroup::D)] {
                for r in properness_sweep(g, n, &ks, &b).unwrap() {
                    assert_eq!(r.verdict, Verdict::Proper, "{g} n={n} k={:?}", r.k);
                }
            }
        }
    }
}
