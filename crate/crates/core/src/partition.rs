//! Integer partitions in weakly decreasing form, their canonical enumeration
//! order and conjugation.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `n`: a non-empty, weakly decreasing sequence of positive
/// parts summing to `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
    n: usize,
}

/// Position of a partition in the canonical enumeration of `Par(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PartitionIndex {
    pub n: usize,
    pub index: usize,
}

impl Partition {
    /// Validates `parts` and builds the partition. Parts must be positive and
    /// weakly decreasing; no sorting is done on the caller's behalf.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("empty part list".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("zero part in {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "parts {parts:?} are not weakly decreasing"
            )));
        }
        let n = parts.iter().sum();
        Ok(Self { parts, n })
    }

    /// Sorts arbitrary positive parts into a partition, dropping zeros.
    /// Used by the transfer move, where reordering is part of the definition.
    pub(crate) fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let n = parts.iter().sum();
        Self { parts, n }
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        Self { parts: vec![n], n }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self { parts: vec![1; n], n }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Largest part, `λ_1`.
    pub fn largest_part(&self) -> usize {
        self.parts[0]
    }

    /// Number of parts, `ℓ(λ)`.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Reflection of the Ferrers diagram across the main diagonal:
    /// part `j` of the result counts the parts of `self` that are `>= j`.
    pub fn conjugate(&self) -> Self {
        let mut out = Vec::with_capacity(self.largest_part());
        for j in 1..=self.largest_part() {
            out.push(self.parts.iter().take_while(|&&p| p >= j).count());
        }
        Self {
            parts: out,
            n: self.n,
        }
    }

    pub fn is_self_conjugate(&self) -> bool {
        self.conjugate() == *self
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let err = |token: &str, reason| Error::Parse {
            text: text.to_string(),
            token: token.to_string(),
            reason,
        };
        let mut parts = Vec::new();
        for token in text.split(',') {
            let value: usize = token
                .parse()
                .map_err(|_| err(token, "not a positive integer"))?;
            if value == 0 {
                return Err(err(token, "parts must be positive"));
            }
            if let Some(&prev) = parts.last() {
                if value > prev {
                    return Err(err(token, "parts must be weakly decreasing"));
                }
            }
            parts.push(value);
        }
        let n = parts.iter().sum();
        Ok(Self { parts, n })
    }
}

impl Serialize for Partition {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// All partitions of `n` in reverse-lexicographic order: `(n)` first and
/// `(1^n)` last.
pub fn enumerate_partitions(n: usize) -> Result<Vec<Partition>> {
    if n == 0 {
        return Err(Error::InvalidSize(0));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(n);
    descend(n, n, &mut prefix, &mut out);
    Ok(out)
}

fn descend(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_unsorted(prefix.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        prefix.push(part);
        descend(remaining - part, part, prefix, out);
        prefix.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerates_small_cases_in_canonical_order() {
        assert_eq!(enumerate_partitions(1).unwrap(), vec![p(&[1])]);
        assert_eq!(
            enumerate_partitions(4).unwrap(),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn rejects_zero() {
        assert!(matches!(enumerate_partitions(0), Err(Error::InvalidSize(0))));
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
        assert_eq!(p(&[3, 3, 1]).conjugate(), p(&[3, 2, 2]));
    }

    #[test]
    fn self_conjugacy() {
        assert!(p(&[2, 1]).is_self_conjugate());
        assert!(!p(&[4]).is_self_conjugate());
        assert!(p(&[3, 2, 1]).is_self_conjugate());
        let fixed: Vec<_> = enumerate_partitions(6)
            .unwrap()
            .into_iter()
            .filter(Partition::is_self_conjugate)
            .collect();
        assert_eq!(fixed, vec![p(&[3, 2, 1])]);
    }

    #[test]
    fn parses_and_formats() {
        assert_eq!("4,2,1".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!("1".parse::<Partition>().unwrap(), p(&[1]));
        assert_eq!(p(&[4, 2, 1]).to_string(), "4,2,1");
    }

    #[test]
    fn parse_errors_name_the_token() {
        match "2,3".parse::<Partition>() {
            Err(Error::Parse { token, .. }) => assert_eq!(token, "3"),
            other => panic!("unexpected {other:?}"),
        }
        for bad in ["", "0", "3,,1", "3, 1", "-1", "a"] {
            assert!(bad.parse::<Partition>().is_err(), "{bad:?} accepted");
        }
    }

    #[test]
    fn new_rejects_unsorted() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }
}
