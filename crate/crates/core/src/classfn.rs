//! Exact rational-valued class functions keyed by class labels.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::combinatorics::{Bipartition, Partition};
use crate::error::{Error, Result};
use crate::group::Subgroup;

/// Labels of conjugacy classes: partitions for `S_n`, bipartitions for `B_n`
/// and its subgroups.
pub trait ClassLabel: Clone + Ord + fmt::Display + fmt::Debug {}
impl ClassLabel for Partition {}
impl ClassLabel for Bipartition {}

/// Which group a class function lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GroupTag {
    S,
    B,
    Sub(Subgroup),
}

impl GroupTag {
    pub fn name(self) -> &'static str {
        match self {
            GroupTag::S => "S",
            GroupTag::B => "B",
            GroupTag::Sub(s) => s.name(),
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for GroupTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" => Ok(GroupTag::S),
            "B" => Ok(GroupTag::B),
            other => other.parse().map(GroupTag::Sub),
        }
    }
}

/// A class function with values in the rationals.
///
/// Entries keep the canonical class order they were built with. Functions
/// on a subgroup of `B_n` are keyed by the `B_n` classes contained in the
/// subgroup; every function built here is a rational combination of `B_n`
/// class functions, so it takes equal values on the two halves of a class
/// that splits in the subgroup.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction<L: ClassLabel = Bipartition> {
    pub group: GroupTag,
    pub n: usize,
    entries: Vec<(L, BigRational)>,
    index: BTreeMap<L, usize>,
}

impl<L: ClassLabel> ClassFunction<L> {
    pub fn new(group: GroupTag, n: usize, entries: Vec<(L, BigRational)>) -> Self {
        let index = entries
            .iter()
            .enumerate()
            .map(|(i, (l, _))| (l.clone(), i))
            .collect();
        ClassFunction {
            group,
            n,
            entries,
            index,
        }
    }

    pub fn from_integers(group: GroupTag, n: usize, entries: Vec<(L, BigInt)>) -> Self {
        Self::new(
            group,
            n,
            entries
                .into_iter()
                .map(|(l, v)| (l, BigRational::from_integer(v)))
                .collect(),
        )
    }

    pub fn zero(group: GroupTag, n: usize, classes: &[L]) -> Self {
        Self::new(
            group,
            n,
            classes
                .iter()
                .map(|l| (l.clone(), BigRational::zero()))
                .collect(),
        )
    }

    pub fn entries(&self) -> &[(L, BigRational)] {
        &self.entries
    }

    pub fn classes(&self) -> impl Iterator<Item = &L> {
        self.entries.iter().map(|(l, _)| l)
    }

    pub fn values(&self) -> impl Iterator<Item = &BigRational> {
        self.entries.iter().map(|(_, v)| v)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, label: &L) -> Option<&BigRational> {
        self.index.get(label).map(|&i| &self.entries[i].1)
    }

    pub fn map_values(&self, f: impl Fn(&L, &BigRational) -> BigRational) -> Self {
        Self::new(
            self.group,
            self.n,
            self.entries
                .iter()
                .map(|(l, v)| (l.clone(), f(l, v)))
                .collect(),
        )
    }

    /// Pointwise sum; both sides must share the same classes.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        self.map_values(|_, v| v * c)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&BigRational, &BigRational) -> BigRational,
    ) -> Result<Self> {
        if self.n != other.n || self.len() != other.len() {
            return Err(Error::RankMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let mut entries = Vec::with_capacity(self.len());
        for ((l, a), (m, b)) in self.entries.iter().zip(&other.entries) {
            if l != m {
                return Err(Error::Inconsistent(alloc::format!(
                    "class lists differ at {l} vs {m}"
                )));
            }
            entries.push((l.clone(), f(a, b)));
        }
        Ok(Self::new(self.group, self.n, entries))
    }

    /// Restricts to the classes selected by `keep`, retagging the group.
    pub fn restrict(&self, group: GroupTag, keep: impl Fn(&L) -> bool) -> Self {
        Self::new(
            group,
            self.n,
            self.entries
                .iter()
                .filter(|(l, _)| keep(l))
                .cloned()
                .collect(),
        )
    }

    /// Same classes and values, ignoring the group tag.
    pub fn same_values(&self, other: &Self) -> bool {
        self.entries == other.entries
    }

    /// First class at which two functions disagree.
    pub fn first_difference(&self, other: &Self) -> Option<(L, BigRational, BigRational)> {
        for (l, v) in &self.entries {
            let w = other.get(l).cloned().unwrap_or_else(BigRational::zero);
            if *v != w {
                return Some((l.clone(), v.clone(), w));
            }
        }
        other
            .entries
            .iter()
            .find(|(l, v)| self.get(l).is_none() && !v.is_zero())
            .map(|(l, v)| (l.clone(), BigRational::zero(), v.clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.values().all(|v| v.is_integer())
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values().all(|v| !v.is_negative())
    }
}

/// Returns the integer value of `q`, or a `NonIntegral` error naming `context`.
pub fn to_integer(q: &BigRational, context: impl FnOnce() -> String) -> Result<BigInt> {
    if q.is_integer() {
        Ok(q.to_integer())
    } else {
        Err(Error::NonIntegral {
            context: context(),
            value: q.to_string(),
        })
    }
}
