//! Integer partitions in multiplicity form `n_1^{m_1} ... n_r^{m_r}`, the
//! statistics attached to them, and brute-force evaluators for the two
//! alternating split sums that drive the vertical generating functions.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{factorial, Rational};

/// Multiset of positive integers, stored as part value -> multiplicity.
/// Absent parts are not stored, so every stored multiplicity is at least 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: BTreeMap<u32, u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("part values must be at least 1")]
    ZeroPart,
    #[error("multiplicity of part {0} must be at least 1")]
    ZeroMultiplicity(u32),
    #[error("part {0} appears more than once")]
    DuplicatePart(u32),
    #[error("malformed token {0:?}, expected n^m")]
    BadToken(String),
    #[error("the split sum is only defined for nonempty partitions")]
    Empty,
}

impl Partition {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Builds a partition from `(part, multiplicity)` pairs. Zero parts,
    /// zero multiplicities and repeated part values are rejected.
    pub fn from_multiplicities<I>(pairs: I) -> Result<Self, PartitionError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        let mut parts = BTreeMap::new();
        for (n, m) in pairs {
            if n == 0 {
                return Err(PartitionError::ZeroPart);
            }
            if m == 0 {
                return Err(PartitionError::ZeroMultiplicity(n));
            }
            if parts.insert(n, m).is_some() {
                return Err(PartitionError::DuplicatePart(n));
            }
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from a plain list of parts in any order.
    pub fn from_parts(list: &[u32]) -> Result<Self, PartitionError> {
        let mut parts = BTreeMap::new();
        for &n in list {
            if n == 0 {
                return Err(PartitionError::ZeroPart);
            }
            *parts.entry(n).or_insert(0) += 1;
        }
        Ok(Partition { parts })
    }

    /// The single-part partition `(n)`.
    pub fn single(n: u32) -> Self {
        Self::from_multiplicities([(n, 1)]).expect("part must be positive")
    }

    /// `(part, multiplicity)` pairs in increasing part order.
    pub fn multiplicities(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts.iter().map(|(&n, &m)| (n, m))
    }

    pub fn multiplicity(&self, part: u32) -> u32 {
        self.parts.get(&part).copied().unwrap_or(0)
    }

    /// Parts listed with repetition, largest first.
    pub fn parts_desc(&self) -> Vec<u32> {
        self.parts
            .iter()
            .rev()
            .flat_map(|(&n, &m)| std::iter::repeat_n(n, m as usize))
            .collect()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|eta|`, the integer being partitioned.
    pub fn size(&self) -> u64 {
        self.multiplicities()
            .map(|(n, m)| u64::from(n) * u64::from(m))
            .sum()
    }

    /// `l(eta)`, the number of parts.
    pub fn len(&self) -> u64 {
        self.multiplicities().map(|(_, m)| u64::from(m)).sum()
    }

    /// `Aut(eta) = prod m_k!`.
    pub fn aut(&self) -> BigInt {
        self.multiplicities()
            .map(|(_, m)| factorial(m as usize))
            .product()
    }

    /// Order of the centralizer in the symmetric group of a permutation with
    /// cycle type `eta`: `prod m_k! n_k^{m_k}`.
    pub fn zeta(&self) -> Rational {
        let z: BigInt = self
            .multiplicities()
            .map(|(n, m)| factorial(m as usize) * num_traits::pow(BigInt::from(n), m as usize))
            .product();
        Rational::from_integer(z)
    }

    /// Every ordered pair `(first, second)` whose multiset union is `self`.
    ///
    /// The sub-multiplicity of each part value in `first` runs independently
    /// from 0 to its full multiplicity; pairs are listed lexicographically in
    /// those sub-multiplicities, smallest part value most significant.
    pub fn splits(&self) -> Vec<SplitPair> {
        let entries: Vec<(u32, u32)> = self.multiplicities().collect();
        let count: usize = entries.iter().map(|&(_, m)| m as usize + 1).product();
        let mut out = Vec::with_capacity(count);
        let mut ks = vec![0u32; entries.len()];
        loop {
            let mut first = BTreeMap::new();
            let mut second = BTreeMap::new();
            for (&(n, m), &k) in entries.iter().zip(&ks) {
                if k > 0 {
                    first.insert(n, k);
                }
                if m > k {
                    second.insert(n, m - k);
                }
            }
            out.push(SplitPair {
                first: Partition { parts: first },
                second: Partition { parts: second },
            });
            // odometer step, last digit fastest
            let mut pos = entries.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if ks[pos] < entries[pos].1 {
                    ks[pos] += 1;
                    break;
                }
                ks[pos] = 0;
            }
        }
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        for (&n, &m) in &other.parts {
            *parts.entry(n).or_insert(0) += m;
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    /// `1^2 3^1` style, increasing part order; the empty partition is `∅`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        let mut sep = "";
        for (n, m) in self.multiplicities() {
            write!(f, "{sep}{n}^{m}")?;
            sep = " ";
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Parses space-separated `n^m` tokens. An empty string or `∅` is the
    /// empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let pairs = s
            .split_whitespace()
            .map(|tok| {
                let bad = || PartitionError::BadToken(tok.to_string());
                let (n, m) = tok.split_once('^').ok_or_else(bad)?;
                let n: u32 = n.parse().map_err(|_| bad())?;
                let m: u32 = m.parse().map_err(|_| bad())?;
                Ok((n, m))
            })
            .collect::<Result<Vec<_>, PartitionError>>()?;
        Partition::from_multiplicities(pairs)
    }
}

/// Ordered pair of sub-multisets of a parent partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPair {
    pub first: Partition,
    pub second: Partition,
}

/// All partitions of `n`, each once, in decreasing lexicographic order of
/// their part lists (`[4], [3,1], [2,2], [2,1,1], [1,1,1,1]` for `n = 4`).
pub fn enumerate(n: u32) -> Vec<Partition> {
    fn walk(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts(prefix).expect("parts are positive"));
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            walk(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    walk(n, n, &mut Vec::new(), &mut out);
    out
}

fn sign(exponent: u64) -> Rational {
    if exponent.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn aut_weight(split: &SplitPair) -> Rational {
    Rational::new(BigInt::one(), split.first.aut() * split.second.aut())
}

/// `sum over splits of (-1)^{l(second)} / (Aut(first) Aut(second))`.
///
/// Vanishes for every nonempty partition; the single split of the empty
/// partition contributes 1.
pub fn lemma1_sum(eta: &Partition) -> Rational {
    eta.splits()
        .iter()
        .map(|sp| sign(sp.second.len()) * aut_weight(sp))
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// `sum over splits of (-1)^{l(second)} (|first| + l(first)) / (Aut(first) Aut(second))`.
///
/// Equals `i + 1` for the single part `(i)` and zero for every other
/// nonempty partition. The empty partition is rejected.
pub fn lemma2_sum(eta: &Partition) -> Result<Rational, PartitionError> {
    if eta.is_empty() {
        return Err(PartitionError::Empty);
    }
    Ok(eta
        .splits()
        .iter()
        .map(|sp| {
            let weight = BigInt::from(sp.first.size() + sp.first.len());
            sign(sp.second.len()) * aut_weight(sp) * weight
        })
        .fold(Rational::zero(), |acc, t| acc + t))
}

/// The value [`lemma2_sum`] must take: `|eta| + 1` on a single part, else 0.
pub fn lemma2_expected(eta: &Partition) -> Rational {
    if eta.len() == 1 {
        Rational::from_integer(BigInt::from(eta.size() + 1))
    } else {
        Rational::zero()
    }
}

/// `sum_{k=0}^{m} (-1)^{m-k} / (k! (m-k)!)`, which is `(1-1)^m / m!`.
pub fn alternating_binomial_sum(m: usize) -> Rational {
    (0..=m)
        .map(|k| {
            sign((m - k) as u64) * Rational::new(BigInt::one(), factorial(k) * factorial(m - k))
        })
        .fold(Rational::zero(), |acc, t| acc + t)
}

/// `sum_{k=0}^{m} (-1)^{m-k} k / (k! (m-k)!)`, the derivative of
/// `(x-1)^m / m!` at `x = 1`; zero for `m >= 2`.
pub fn binomial_derivative_sum(m: usize) -> Rational {
    (0..=m)
        .map(|k| {
            sign((m - k) as u64) * Rational::new(BigInt::from(k), factorial(k) * factorial(m - k))
        })
        .fold(Rational::zero(), |acc, t| acc + t)
}
