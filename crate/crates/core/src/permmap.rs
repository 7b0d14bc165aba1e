//! Permutation mappings over vector positions.
//!
//! A [`PermutationMap`] `M = (m(1), ..., m(n))` maps a vector `x` to `y` with
//! `y[j] = x[m(j)]`. Powers of `M` are applied recursively until the powers
//! cycle back to the identity.

use std::fmt;
use std::str::FromStr;

use crate::collection::{params, Collection, Provenance};
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

/// A bijection on `{1..n}`, stored 1-based as written.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PermutationMap {
    m: Vec<usize>,
}

impl PermutationMap {
    /// Validates that `m` holds every index of `1..=m.len()` exactly once.
    pub fn new(m: Vec<usize>) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::param("permutation", "must not be empty"));
        }
        let mut seen = vec![false; n + 1];
        for &index in &m {
            if index == 0 || index > n {
                return Err(Error::IndexOutOfRange { index, n });
            }
            if std::mem::replace(&mut seen[index], true) {
                return Err(Error::DuplicateIndex { index, n });
            }
        }
        Ok(PermutationMap { m })
    }

    pub fn identity(n: usize) -> Self {
        PermutationMap { m: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.m.len()
    }

    pub fn is_empty(&self) -> bool {
        self.m.is_empty()
    }

    /// `m(j)` for 1-indexed `j`.
    pub fn at(&self, j: usize) -> usize {
        self.m[j - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.m
    }

    pub fn is_identity(&self) -> bool {
        self.m.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// `y[j] = v[m(j)]`.
    pub fn apply(&self, v: &BinaryVector) -> Result<BinaryVector> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: v.len(),
            });
        }
        Ok(BinaryVector::from_fn(v.len(), |j| v.get(self.at(j))))
    }

    /// `M(P)` with `p'(j) = p(m(j))`.
    pub fn compose(&self, p: &PermutationMap) -> Result<PermutationMap> {
        if p.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: p.len(),
            });
        }
        Ok(PermutationMap {
            m: self.m.iter().map(|&mj| p.at(mj)).collect(),
        })
    }

    /// `m^-1(m(j)) = j`.
    pub fn invert(&self) -> PermutationMap {
        let mut inv = vec![0; self.len()];
        for (j, &i) in self.m.iter().enumerate() {
            inv[i - 1] = j + 1;
        }
        PermutationMap { m: inv }
    }

    /// Smallest `k >= 1` with `M^k` the identity.
    pub fn order(&self) -> usize {
        let mut power = self.clone();
        let mut k = 1;
        while !power.is_identity() {
            power = self.compose(&power).expect("equal lengths");
            k += 1;
        }
        k
    }
}

impl fmt::Display for PermutationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.m {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for PermutationMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PermutationMap({self})")
    }
}

impl FromStr for PermutationMap {
    type Err = Error;

    /// Space-separated 1-based indices, e.g. `3 6 9 2 5 8 1 4 7`.
    fn from_str(s: &str) -> Result<Self> {
        let m = s
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| Error::Parse {
                    line: 1,
                    message: format!("invalid permutation index {tok:?}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        PermutationMap::new(m)
    }
}

pub fn compose(m: &PermutationMap, p: &PermutationMap) -> Result<PermutationMap> {
    m.compose(p)
}

pub fn invert(m: &PermutationMap) -> PermutationMap {
    m.invert()
}

pub fn apply_mapping(m: &PermutationMap, v: &BinaryVector) -> Result<BinaryVector> {
    m.apply(v)
}

/// Recommended gap `floor(n/2) - 1`. For `n <= 5` this is degenerate and
/// [`build_pn_g`] rejects it.
pub fn default_gap(n: usize) -> usize {
    (n / 2).saturating_sub(1)
}

/// Assembles `P_n(g)` from the progressions `(s, s+g, s+2g, ...)` for
/// `s = g, g-1, ..., 1`.
pub fn build_pn_g(n: usize, g: usize) -> Result<PermutationMap> {
    if n < 2 || g < 1 || g > n - 1 {
        return Err(Error::GapOutOfRange {
            g,
            n,
            max: n.saturating_sub(1),
        });
    }
    if g == 1 {
        return Err(Error::DegenerateMapping);
    }
    let m: Vec<usize> = (1..=g).rev().flat_map(|s| (s..=n).step_by(g)).collect();
    PermutationMap::new(m)
}

/// Appends `M^h(v)` for `h = 1, 2, ...` and every `v` of `base`, stopping
/// before the power that returns to the identity or once the total reaches
/// `rlim`. Ordinals continue from the base.
pub fn recursive_expand(base: &Collection, m: &PermutationMap, rlim: usize) -> Result<Collection> {
    if m.len() != base.n() {
        return Err(Error::LengthMismatch {
            left: base.n(),
            right: m.len(),
        });
    }
    if m.is_identity() {
        return Err(Error::DegenerateMapping);
    }
    let mut out = base.clone();
    let record = params([("perm", m.to_string()), ("rlim", rlim.to_string())]);
    let mut power = m.clone();
    let mut h = 1;
    'powers: while !power.is_identity() {
        for (r, v) in base.vectors().enumerate() {
            if out.len() >= rlim {
                break 'powers;
            }
            out.push(
                power.apply(v)?,
                Provenance::new("map", record.clone(), format!("h={h} r={r}")),
            )?;
        }
        if base.is_empty() {
            break;
        }
        power = m.compose(&power)?;
        h += 1;
    }
    Ok(out)
}
