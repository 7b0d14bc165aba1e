//! The binary vector value type and the elementwise operations every
//! generator builds on.
//!
//! Positions are **1-indexed** throughout the public API: `v.get(1)` is the
//! leftmost component, and the textual form writes position 1 first. Storage
//! is packed into `u64` words with unused high bits of the last word kept at
//! zero, so derived equality and hashing are by value.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

const WORD_BITS: usize = u64::BITS as usize;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryVector {
    len: usize,
    words: Vec<u64>,
}

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

#[inline]
fn locate(j: usize) -> (usize, u64) {
    let i = j - 1;
    (i / WORD_BITS, 1u64 << (i % WORD_BITS))
}

impl BinaryVector {
    /// All-zero vector of length `n`.
    ///
    /// Panics if `n == 0`.
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "binary vectors have at least one component");
        BinaryVector {
            len: n,
            words: vec![0; words_for(n)],
        }
    }

    /// All-one vector of length `n`. Panics if `n == 0`.
    pub fn ones(n: usize) -> Self {
        let mut v = Self::zeros(n);
        v.words.iter_mut().for_each(|w| *w = !0);
        v.clear_tail();
        v
    }

    /// Builds a vector from a predicate over positions `1..=n`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut v = Self::zeros(n);
        for j in 1..=n {
            if f(j) {
                v.set(j, true);
            }
        }
        v
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        if bits.is_empty() {
            return Err(Error::EmptyVector);
        }
        Ok(Self::from_fn(bits.len(), |j| bits[j - 1]))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    /// Always false; kept for the usual `len`/`is_empty` pairing.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Component at 1-indexed position `j`.
    #[inline]
    pub fn get(&self, j: usize) -> bool {
        assert!(j >= 1 && j <= self.len, "position {j} outside 1..={}", self.len);
        let (w, m) = locate(j);
        self.words[w] & m != 0
    }

    #[inline]
    pub fn set(&mut self, j: usize, bit: bool) {
        assert!(j >= 1 && j <= self.len, "position {j} outside 1..={}", self.len);
        let (w, m) = locate(j);
        if bit {
            self.words[w] |= m;
        } else {
            self.words[w] &= !m;
        }
    }

    #[inline]
    pub fn flip(&mut self, j: usize) {
        assert!(j >= 1 && j <= self.len, "position {j} outside 1..={}", self.len);
        let (w, m) = locate(j);
        self.words[w] ^= m;
    }

    /// Sets positions `first..=last` to one. An empty range (`first > last`) is a no-op.
    pub fn set_range(&mut self, first: usize, last: usize) {
        for j in first..=last {
            self.set(j, true);
        }
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn count_zeros(&self) -> usize {
        self.len - self.count_ones()
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len).map(move |j| self.get(j))
    }

    /// Ascending 1-indexed positions holding `bit`.
    pub fn positions(&self, bit: bool) -> Vec<usize> {
        (1..=self.len).filter(|&j| self.get(j) == bit).collect()
    }

    pub fn complement(&self) -> Self {
        let mut out = BinaryVector {
            len: self.len,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_tail();
        out
    }

    pub fn hamming(&self, other: &Self) -> Result<usize> {
        self.check_len(other)?;
        Ok(self.hamming_unchecked(other))
    }

    #[inline]
    pub(crate) fn hamming_unchecked(&self, other: &Self) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a ^ b).count_ones() as usize)
            .sum()
    }

    pub fn xor(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(BinaryVector {
            len: self.len,
            words: self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect(),
        })
    }

    /// True when `self` lies on the hypercube interval between `a` and `b`:
    /// it agrees with both wherever `a` and `b` agree.
    pub fn is_between(&self, a: &Self, b: &Self) -> Result<bool> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(self
            .words
            .iter()
            .zip(a.words.iter().zip(&b.words))
            .all(|(z, (x, y))| (z ^ x) & !(x ^ y) == 0))
    }

    /// Repeats `self` end to end and truncates the result to `n` components.
    pub fn tile(&self, n: usize) -> Self {
        BinaryVector::from_fn(n, |j| self.get((j - 1) % self.len + 1))
    }

    /// Concatenation of `self` followed by `other`.
    pub fn concat(&self, other: &Self) -> Self {
        let n = self.len + other.len;
        BinaryVector::from_fn(n, |j| {
            if j <= self.len {
                self.get(j)
            } else {
                other.get(j - self.len)
            }
        })
    }

    pub(crate) fn check_len(&self, other: &Self) -> Result<()> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                left: self.len,
                right: other.len,
            });
        }
        Ok(())
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD_BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }
}

impl fmt::Display for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.iter().map(|b| if b { '1' } else { '0' }).collect();
        f.write_str(&s)
    }
}

impl fmt::Debug for BinaryVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryVector({self})")
    }
}

impl FromStr for BinaryVector {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::EmptyVector);
        }
        let mut v = BinaryVector::zeros(s.chars().count());
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => v.set(i + 1, true),
                found => return Err(Error::InvalidBit { position: i + 1, found }),
            }
        }
        Ok(v)
    }
}

impl Serialize for BinaryVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BinaryVector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn complement(v: &BinaryVector) -> BinaryVector {
    v.complement()
}

pub fn hamming(a: &BinaryVector, b: &BinaryVector) -> Result<usize> {
    a.hamming(b)
}

/// Complements the components of `seed` where `mask` holds a one.
pub fn apply_seed(seed: &BinaryVector, mask: &BinaryVector) -> Result<BinaryVector> {
    seed.xor(mask)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RebalanceTarget {
    /// Flip some of the ones (complemented components) back to zero.
    Complemented,
    /// Flip some of the zeros (uncomplemented components) to one.
    Uncomplemented,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Stride {
    Two,
    Three,
}

impl Stride {
    pub fn get(self) -> usize {
        match self {
            Stride::Two => 2,
            Stride::Three => 3,
        }
    }
}

impl TryFrom<usize> for Stride {
    type Error = Error;

    fn try_from(value: usize) -> Result<Self> {
        match value {
            2 => Ok(Stride::Two),
            3 => Ok(Stride::Three),
            other => Err(Error::param("stride", format!("must be 2 or 3, got {other}"))),
        }
    }
}

/// Changes the treatment of every second or third targeted component.
///
/// The targeted positions are the ones (`Complemented`) or zeros
/// (`Uncomplemented`) of `mask` in ascending order; the members at ranks
/// `stride, 2*stride, ...` of that list are flipped.
pub fn rebalance(mask: &BinaryVector, target: RebalanceTarget, stride: Stride) -> BinaryVector {
    let bit = matches!(target, RebalanceTarget::Complemented);
    let mut out = mask.clone();
    for &j in mask.positions(bit).iter().skip(stride.get() - 1).step_by(stride.get()) {
        out.flip(j);
    }
    out
}
