//! Integer partitions and the combinatorial statistics attached to them.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::fmt;
use std::str::FromStr;

/// A partition: weakly decreasing positive parts.  Trailing zeros are never
/// stored, so equality of the part vectors is equality of partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting increasing or nonpositive parts.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts an arbitrary multiset of positive parts into a partition.
    /// Zero parts are dropped.
    pub fn from_composition(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|mu|`, the number being partitioned.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// The column partition `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition { parts: vec![1; n as usize] }
    }

    /// The row partition `(n)`; empty for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![n] }
        }
    }

    /// Conjugate (transposed diagram): `mu'_j = #{i : mu_i >= j}`.
    pub fn conjugate(&self) -> Partition {
        let ncols = self.part(0) as usize;
        let mut parts = vec![0u32; ncols];
        for j in 0..ncols {
            parts[j] = self.parts.iter().filter(|&&p| p as usize >= j + 1).count() as u32;
        }
        Partition { parts }
    }

    /// `n(mu) = sum_i (i-1) mu_i`.
    pub fn nstat(&self) -> u64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| i as u64 * p as u64)
            .sum()
    }

    /// Hook lengths, one per cell, row by row: `h(i,j) = mu_i - j + mu'_j - i + 1`
    /// with 1-based coordinates.
    pub fn hooks(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                out.push(row - j as u32 + conj.part(j) - i as u32 - 1);
            }
        }
        out
    }

    /// Dominance order: `self <= other` iff every partial sum of `self` is at
    /// most the corresponding partial sum of `other`.  Requires equal sizes.
    pub fn dominance_leq(&self, other: &Partition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch(self.to_string(), other.to_string()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..len {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, in the reverse-lexicographic order starting
    /// from `(n)`.
    pub fn all(n: u32) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur: Vec<u32> = Vec::new();
        fn rec(remaining: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            let hi = remaining.min(max);
            for p in (1..=hi).rev() {
                cur.push(p);
                rec(remaining - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// Partitions of `n` with at most `max_len` parts.
    pub fn all_with_max_len(n: u32, max_len: usize) -> Vec<Partition> {
        Partition::all(n).into_iter().filter(|p| p.len() <= max_len).collect()
    }
}

/// Dimension of the irreducible `sl_n`-module with highest weight `lambda`
/// (as a partition with at most `n` parts), by the Weyl dimension formula
/// `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn sln_irrep_dim(lambda: &Partition, n: usize) -> Result<u64> {
    if lambda.len() > n {
        return Err(Error::LengthExceedsRank { len: lambda.len(), rank: n });
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in (i + 1)..n {
            let li = lambda.part(i) as i64;
            let lj = lambda.part(j) as i64;
            num *= BigInt::from(li - lj + (j as i64 - i as i64));
            den *= BigInt::from(j as i64 - i as i64);
        }
    }
    let q = &num / &den;
    debug_assert!((&q * &den - &num).is_zero());
    Ok(u64::try_from(q.magnitude().clone()).expect("dimension fits in u64"))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses "3,2,1"; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<u32> = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

/// Parses a comma-separated composition (positive parts, any order).
pub fn parse_composition(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let parts: Vec<u32> = s
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| Error::InvalidPartition(format!("bad part {t:?} in {s:?}")))
        })
        .collect::<Result<_>>()?;
    if parts.iter().any(|&p| p == 0) {
        return Err(Error::InvalidPartition(format!("{s:?} has a zero part")));
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[5]).conjugate(), p(&[1, 1, 1, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_is_involution_up_to_10() {
        for n in 0..=10 {
            for mu in Partition::all(n) {
                assert_eq!(mu.conjugate().conjugate(), mu);
            }
        }
    }

    #[test]
    fn nstat_examples() {
        assert_eq!(p(&[1, 1, 1]).nstat(), 3);
        assert_eq!(p(&[2, 1]).nstat(), 1);
        assert_eq!(p(&[7]).nstat(), 0);
    }

    #[test]
    fn hook_examples() {
        assert_eq!(p(&[1]).hooks(), vec![1]);
        let mut h = p(&[2, 1]).hooks();
        h.sort_unstable();
        assert_eq!(h, vec![1, 1, 3]);
        assert_eq!(p(&[3]).hooks(), vec![3, 2, 1]);
    }

    #[test]
    fn hook_count_is_size() {
        for n in 0..=8 {
            for mu in Partition::all(n) {
                assert_eq!(mu.hooks().len() as u32, mu.size());
            }
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(p(&[1, 1, 1]).dominance_leq(&p(&[3])).unwrap());
        assert!(!p(&[3]).dominance_leq(&p(&[1, 1, 1])).unwrap());
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(p(&[2, 1]).dominance_leq(&p(&[2, 1])).unwrap());
        assert!(matches!(
            p(&[2, 1]).dominance_leq(&p(&[2, 2])),
            Err(Error::SizeMismatch(..))
        ));
    }

    #[test]
    fn partition_counts() {
        // p(0..10) = 1,1,2,3,5,7,11,15,22,30,42
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(Partition::all(n as u32).len(), e);
        }
    }

    #[test]
    fn sln_dims() {
        assert_eq!(sln_irrep_dim(&p(&[1]), 4).unwrap(), 4);
        assert_eq!(sln_irrep_dim(&p(&[2]), 2).unwrap(), 3);
        assert_eq!(sln_irrep_dim(&p(&[1, 1]), 2).unwrap(), 1);
        assert_eq!(sln_irrep_dim(&p(&[2, 1]), 3).unwrap(), 8);
        assert!(sln_irrep_dim(&p(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,2,1".parse::<Partition>().unwrap(), p(&[3, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 2, 1]).to_string(), "3,2,1");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("0".parse::<Partition>().is_err());
        assert_eq!(parse_composition("1,2").unwrap(), vec![1, 2]);
    }
}
