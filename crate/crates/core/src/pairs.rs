//! Canonical indexing of unordered point pairs.
//!
//! Pairs are stored 0-based with `i < j` and enumerated lexicographically:
//! `{1,2}, {1,3}, …, {1,n}, {2,3}, …` in 1-based notation.

use std::fmt;

use crate::error::{Error, Result};

/// An unordered pair `{i, j}` of distinct 0-based point indices, stored with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PairIndex {
    i: usize,
    j: usize,
}

impl PairIndex {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { i: a, j: b }),
            std::cmp::Ordering::Greater => Ok(Self { i: b, j: a }),
            std::cmp::Ordering::Equal => Err(Error::DegeneratePair(a)),
        }
    }

    /// Smaller index.
    pub fn i(&self) -> usize {
        self.i
    }

    /// Larger index.
    pub fn j(&self) -> usize {
        self.j
    }

    pub fn contains(&self, k: usize) -> bool {
        self.i == k || self.j == k
    }

    /// The index shared with `other`, when the pairs overlap in exactly one point.
    pub fn shared_with(&self, other: &PairIndex) -> Option<usize> {
        if self == other {
            return None;
        }
        [self.i, self.j].into_iter().find(|&k| other.contains(k))
    }

    /// The member that is not `k`. Panics if `k` is not in the pair.
    pub fn other(&self, k: usize) -> usize {
        if self.i == k {
            self.j
        } else {
            assert_eq!(self.j, k, "{k} is not a member of {self}");
            self.i
        }
    }
}

impl fmt::Display for PairIndex {
    /// 1-based `"i,j"`, the key format used in distance JSON.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.i + 1, self.j + 1)
    }
}

impl std::str::FromStr for PairIndex {
    type Err = Error;

    /// Parses the 1-based `"i,j"` form.
    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| Error::Parse(format!("pair key {s:?} is not of the form \"i,j\"")))?;
        let parse = |t: &str| -> Result<usize> {
            let v: usize = t
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("pair key {s:?} has a non-integer index")))?;
            v.checked_sub(1)
                .ok_or_else(|| Error::Parse(format!("pair key {s:?} uses 1-based indices")))
        };
        PairIndex::new(parse(a)?, parse(b)?)
    }
}

/// All `n(n-1)/2` pairs of an `n`-point configuration in lexicographic order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PairSpace {
    n: usize,
}

impl PairSpace {
    pub fn new(n: usize) -> Self {
        Self { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Position of `pair` in the enumeration.
    pub fn rank(&self, pair: PairIndex) -> Result<usize> {
        if pair.j >= self.n {
            return Err(Error::IndexOutOfRange {
                what: "point index",
                index: pair.j,
                size: self.n,
            });
        }
        let i = pair.i;
        Ok(i * self.n - i * (i + 1) / 2 + (pair.j - i - 1))
    }

    /// Rank of `{a, b}` without constructing the pair first.
    pub fn rank_of(&self, a: usize, b: usize) -> Result<usize> {
        self.rank(PairIndex::new(a, b)?)
    }

    pub fn unrank(&self, k: usize) -> Result<PairIndex> {
        if k >= self.len() {
            return Err(Error::IndexOutOfRange {
                what: "pair rank",
                index: k,
                size: self.len(),
            });
        }
        let mut rest = k;
        let mut i = 0;
        loop {
            let row = self.n - i - 1;
            if rest < row {
                return Ok(PairIndex { i, j: i + 1 + rest });
            }
            rest -= row;
            i += 1;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = PairIndex> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| PairIndex { i, j }))
    }

    /// Inverse of [`PairSpace::len`]: the `n` with `n(n-1)/2 == pairs`.
    pub fn points_for_pairs(pairs: usize) -> Option<usize> {
        let mut n = 1;
        while n * (n - 1) / 2 < pairs {
            n += 1;
        }
        (n * (n - 1) / 2 == pairs).then_some(n)
    }
}
