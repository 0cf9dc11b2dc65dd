//! Partitions, bipartitions, signs and the small number-theoretic helpers
//! used by the generating functions.
//!
//! Ordering conventions, fixed so that every serialized class function is
//! byte-stable:
//!
//! * [`enumerate_partitions`] lists partitions in lexicographically
//!   descending order, `[n]` first and `[1,…,1]` last.
//! * [`enumerate_bipartitions`] lists classes of `B_n` by decreasing size of
//!   the positive side; within a fixed split both sides run in
//!   lexicographically ascending order. The identity class `[1,…,1|]` comes
//!   first and the longest element `[|1,…,1]` is the last class of the final
//!   block.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::Mul;
use core::str::FromStr;

use crate::error::{Error, Result};

/// An element of the multiplicative group `{+1, -1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    /// `self^h`; only the parity of `h` matters and `h = 0` gives `+1`.
    pub fn pow(self, h: i64) -> Sign {
        match self {
            Sign::Plus => Sign::Plus,
            Sign::Minus => Sign::from_parity(h.rem_euclid(2) == 1),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// An integer partition, parts stored weakly decreasing.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// The partition `(1^n)`.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `(part, multiplicity)` pairs, smallest part first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in self.0.iter().rev() {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Whether `other` is a sub-multiset of the parts of `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        let mut i = 0;
        for &p in &other.0 {
            while i < self.0.len() && self.0[i] > p {
                i += 1;
            }
            if i == self.0.len() || self.0[i] != p {
                return false;
            }
            i += 1;
        }
        true
    }

    /// `z_λ = Π_i a_i! · i^{a_i}`, the order of the centralizer in `S_n`.
    pub fn z_value(&self) -> u128 {
        self.multiplicities()
            .into_iter()
            .map(|(i, a)| factorial(a) * (i as u128).pow(a as u32))
            .product()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_parts(f, &self.0)?;
        f.write_str("]")
    }
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(alloc::format!("expected `[..]`, got `{s}`")))?;
        parse_parts(inner)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (idx, p) in parts.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_parts(s: &str) -> Result<Partition> {
    if s.trim().is_empty() {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for tok in s.split(',') {
        let p: usize = tok
            .trim()
            .parse()
            .map_err(|_| Error::Parse(alloc::format!("bad part `{tok}`")))?;
        if p == 0 {
            return Err(Error::Parse(String::from("parts must be positive")));
        }
        parts.push(p);
    }
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::Parse(alloc::format!(
            "parts must be weakly decreasing: `{s}`"
        )));
    }
    Ok(Partition(parts))
}

/// A signed cycle type `(λ⁺, λ⁻)`, labelling a conjugacy class of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Bipartition {
    pub plus: Partition,
    pub minus: Partition,
}

impl Bipartition {
    pub fn new(plus: Partition, minus: Partition) -> Self {
        Bipartition { plus, minus }
    }

    /// Collects `(length, sign)` parts into canonical form.
    pub fn from_parts<I: IntoIterator<Item = (usize, Sign)>>(parts: I) -> Self {
        let (mut plus, mut minus) = (Vec::new(), Vec::new());
        for (len, s) in parts {
            match s {
                Sign::Plus => plus.push(len),
                Sign::Minus => minus.push(len),
            }
        }
        Bipartition::new(Partition::new(plus), Partition::new(minus))
    }

    /// Class of the identity, `((1^n), ∅)`.
    pub fn identity(n: usize) -> Self {
        Bipartition::new(Partition::ones(n), Partition::empty())
    }

    /// Class of the longest element `w0 = [-1,…,-n]`, `(∅, (1^n))`.
    pub fn longest(n: usize) -> Self {
        Bipartition::new(Partition::empty(), Partition::ones(n))
    }

    pub fn size(&self) -> usize {
        self.plus.size() + self.minus.size()
    }

    pub fn side(&self, s: Sign) -> &Partition {
        match s {
            Sign::Plus => &self.plus,
            Sign::Minus => &self.minus,
        }
    }

    /// All parts as `(length, sign)`, positive side first.
    pub fn parts(&self) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.plus
            .parts()
            .iter()
            .map(|&p| (p, Sign::Plus))
            .chain(self.minus.parts().iter().map(|&p| (p, Sign::Minus)))
    }

    /// Blocks `(i, ε, a(i,ε))` with `a > 0`, ordered by `(i, ε)`.
    pub fn blocks(&self) -> Vec<(usize, Sign, usize)> {
        let mut out: Vec<(usize, Sign, usize)> = self
            .plus
            .multiplicities()
            .into_iter()
            .map(|(i, a)| (i, Sign::Plus, a))
            .chain(
                self.minus
                    .multiplicities()
                    .into_iter()
                    .map(|(i, a)| (i, Sign::Minus, a)),
            )
            .collect();
        out.sort_unstable();
        out
    }

    /// `a(i, ε)`: number of parts of size `i` in `λ^ε`.
    pub fn multiplicity(&self, i: usize, s: Sign) -> usize {
        self.side(s).parts().iter().filter(|&&p| p == i).count()
    }

    pub fn num_minus_parts(&self) -> usize {
        self.minus.len()
    }

    /// The cycle type of the underlying permutation of `[n]`.
    pub fn merge(&self) -> Partition {
        self.plus.union(&self.minus)
    }

    pub fn union(&self, other: &Bipartition) -> Bipartition {
        Bipartition::new(self.plus.union(&other.plus), self.minus.union(&other.minus))
    }

    pub fn contains(&self, other: &Bipartition) -> bool {
        self.plus.contains(&other.plus) && self.minus.contains(&other.minus)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.plus.is_empty() && self.minus.is_empty() {
            return f.write_str("[]");
        }
        f.write_str("[")?;
        write_parts(f, self.plus.parts())?;
        f.write_str("|")?;
        write_parts(f, self.minus.parts())?;
        f.write_str("]")
    }
}

impl FromStr for Bipartition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(alloc::format!("expected `[..|..]`, got `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Bipartition::default());
        }
        let (plus, minus) = inner
            .split_once('|')
            .ok_or_else(|| Error::Parse(alloc::format!("missing `|` in `{s}`")))?;
        Ok(Bipartition::new(parse_parts(plus)?, parse_parts(minus)?))
    }
}

/// All partitions of `n`, lexicographically descending.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All bipartitions of `n` in canonical class order (see module docs).
pub fn enumerate_bipartitions(n: usize) -> Vec<Bipartition> {
    let ascending: Vec<Vec<Partition>> = (0..=n)
        .map(|m| {
            let mut v = enumerate_partitions(m);
            v.reverse();
            v
        })
        .collect();
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for plus in &ascending[a] {
            for minus in &ascending[n - a] {
                out.push(Bipartition::new(plus.clone(), minus.clone()));
            }
        }
    }
    out
}

/// The classical Möbius function, by trial division.
pub fn mobius(m: u64) -> Result<i64> {
    if m == 0 {
        return Err(Error::InvalidArgument(String::from(
            "mobius(0) is undefined",
        )));
    }
    let mut rest = m;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= rest {
        if rest.is_multiple_of(p) {
            rest /= p;
            if rest.is_multiple_of(p) {
                return Ok(0);
            }
            sign = -sign;
        }
        p += 1;
    }
    if rest > 1 {
        sign = -sign;
    }
    Ok(sign)
}

fn mu(m: u64) -> i64 {
    mobius(m).expect("positive argument")
}

/// `K_{ε,θ}(e) = εθ·μ(2e) + ((1+ε)(1+θ)/2)·μ(e)`.
pub fn k_coeff(eps: Sign, theta: Sign, e: u64) -> Result<i64> {
    if e == 0 {
        return Err(Error::InvalidArgument(String::from("k_coeff needs e >= 1")));
    }
    let both_plus = if eps == Sign::Plus && theta == Sign::Plus {
        2
    } else {
        0
    };
    Ok((eps * theta).value() * mu(2 * e) + both_plus * mu(e))
}

/// `#{ε ∈ Z₂ : ε^h = θ}`.
pub fn roots_z2(h: i64, theta: Sign) -> i64 {
    Sign::BOTH.iter().filter(|e| e.pow(h) == theta).count() as i64
}

/// `Σ_{ε^h = θ} ε`.
pub fn signed_roots_z2(h: i64, theta: Sign) -> i64 {
    Sign::BOTH
        .iter()
        .filter(|e| e.pow(h) == theta)
        .map(|e| e.value())
        .sum()
}

/// Positive divisors of `|k|`, ascending.
pub fn divisors(k: i64) -> Result<Vec<u64>> {
    if k == 0 {
        return Err(Error::InvalidArgument(String::from(
            "divisors(0) is undefined",
        )));
    }
    let m = k.unsigned_abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
