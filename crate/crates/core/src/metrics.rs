//! Diversity statistics over a collection.
//!
//! * mean diversity: average Hamming distance over all index pairs;
//! * gap pairs: pairs of distinct values with no other member on the
//!   hypercube interval between them; mean gap averages their distances;
//! * coverage: mean diversity divided by mean gap.
//!
//! Everything is exact; [`format_decimal`] renders to fixed places.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use num_rational::Ratio;

use crate::collection::Collection;
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

pub type Rational = Ratio<u128>;

fn require_pairs(c: &Collection) -> Result<()> {
    if c.len() < 2 {
        return Err(Error::TooFewVectors { count: c.len() });
    }
    Ok(())
}

fn pair_count(k: usize) -> u128 {
    (k as u128) * (k as u128 - 1) / 2
}

/// Sum of Hamming distances over all unordered index pairs.
fn distance_sum(vs: &[&BinaryVector]) -> u128 {
    let mut sum = 0u128;
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            sum += a.hamming_unchecked(b) as u128;
        }
    }
    sum
}

pub fn mean_diversity(c: &Collection) -> Result<Rational> {
    require_pairs(c)?;
    let vs: Vec<&BinaryVector> = c.vectors().collect();
    Ok(Rational::new(distance_sum(&vs), pair_count(vs.len())))
}

pub fn min_pairwise(c: &Collection) -> Result<usize> {
    require_pairs(c)?;
    let vs: Vec<&BinaryVector> = c.vectors().collect();
    let mut best = usize::MAX;
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            best = best.min(a.hamming_unchecked(b));
        }
    }
    Ok(best)
}

/// Index of the first occurrence of every distinct value, in order.
fn distinct_indices(c: &Collection) -> Vec<usize> {
    let mut seen = HashSet::new();
    c.vectors()
        .enumerate()
        .filter(|(_, v)| seen.insert(*v))
        .map(|(i, _)| i)
        .collect()
}

/// Unordered gap pairs as `(r, r')` ordinals of first occurrences, `r < r'`.
pub fn gap_pairs(c: &Collection) -> Result<Vec<(usize, usize)>> {
    require_pairs(c)?;
    let idx = distinct_indices(c);
    let v = |i: usize| &c.entries()[i].vector;
    let mut out = Vec::new();
    for (a, &i) in idx.iter().enumerate() {
        for &j in &idx[a + 1..] {
            let (x, y) = (v(i), v(j));
            let blocked = idx.iter().any(|&k| {
                if k == i || k == j {
                    return false;
                }
                let z = v(k);
                let between = z.is_between(x, y).expect("collection members share a length");
                if between {
                    debug_assert_eq!(
                        x.hamming_unchecked(z) + z.hamming_unchecked(y),
                        x.hamming_unchecked(y)
                    );
                }
                between
            });
            if !blocked {
                out.push((i, j));
            }
        }
    }
    Ok(out)
}

pub fn mean_gap(c: &Collection) -> Result<Rational> {
    let pairs = gap_pairs(c)?;
    if pairs.is_empty() {
        return Err(Error::UndefinedGap);
    }
    let e = c.entries();
    let sum: u128 = pairs
        .iter()
        .map(|&(i, j)| e[i].vector.hamming_unchecked(&e[j].vector) as u128)
        .sum();
    Ok(Rational::new(sum, pairs.len() as u128))
}

pub fn coverage(c: &Collection) -> Result<Rational> {
    let gap = mean_gap(c)?;
    Ok(mean_diversity(c)? / gap)
}

/// Number of members by count of ones.
pub fn balance_histogram(c: &Collection) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for v in c.vectors() {
        *hist.entry(v.count_ones()).or_insert(0) += 1;
    }
    hist
}

/// Keeps the first occurrence of every value, with its provenance.
pub fn dedup(c: &Collection) -> Collection {
    let mut out = Collection::new(c.n());
    for i in distinct_indices(c) {
        let e = &c.entries()[i];
        out.push(e.vector.clone(), e.provenance.clone())
            .expect("same length as the source collection");
    }
    out
}

/// `r` rounded half-up to `places` decimals.
pub fn format_decimal(r: &Rational, places: u32) -> String {
    let scale = 10u128.pow(places);
    let scaled = (2 * r.numer() * scale + r.denom()) / (2 * r.denom());
    if places == 0 {
        return scaled.to_string();
    }
    format!(
        "{}.{:0width$}",
        scaled / scale,
        scaled % scale,
        width = places as usize
    )
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiversityReport {
    pub n: usize,
    pub count: usize,
    pub distinct: usize,
    pub mean_diversity: Rational,
    pub min_pairwise: usize,
    /// `None` when fewer than two distinct values exist.
    pub mean_gap: Option<Rational>,
    pub gap_pairs: usize,
    pub coverage: Option<Rational>,
    pub balance_histogram: BTreeMap<usize, usize>,
}

impl DiversityReport {
    pub fn compute(c: &Collection) -> Result<Self> {
        let mean_diversity = mean_diversity(c)?;
        let pairs = gap_pairs(c)?;
        let mean_gap = match mean_gap(c) {
            Ok(g) => Some(g),
            Err(Error::UndefinedGap) => None,
            Err(e) => return Err(e),
        };
        Ok(DiversityReport {
            n: c.n(),
            count: c.len(),
            distinct: distinct_indices(c).len(),
            mean_diversity,
            min_pairwise: min_pairwise(c)?,
            coverage: mean_gap.map(|g| mean_diversity / g),
            mean_gap,
            gap_pairs: pairs.len(),
            balance_histogram: balance_histogram(c),
        })
    }

    /// `key: value` lines; exact values as `num/den`, decimals to 6 places.
    pub fn render(&self) -> String {
        fn exact(r: &Rational) -> String {
            format!("{}/{}", r.numer(), r.denom())
        }
        let mut s = String::new();
        let _ = writeln!(s, "n: {}", self.n);
        let _ = writeln!(s, "count: {}", self.count);
        let _ = writeln!(s, "distinct: {}", self.distinct);
        let _ = writeln!(s, "mean_diversity: {}", format_decimal(&self.mean_diversity, 6));
        let _ = writeln!(s, "mean_diversity_exact: {}", exact(&self.mean_diversity));
        let _ = writeln!(s, "min_pairwise: {}", self.min_pairwise);
        let _ = writeln!(s, "gap_pairs: {}", self.gap_pairs);
        for (key, value) in [("mean_gap", &self.mean_gap), ("coverage", &self.coverage)] {
            match value {
                Some(r) => {
                    let _ = writeln!(s, "{key}: {}", format_decimal(r, 6));
                    let _ = writeln!(s, "{key}_exact: {}", exact(r));
                }
                None => {
                    let _ = writeln!(s, "{key}: undefined");
                    let _ = writeln!(s, "{key}_exact: undefined");
                }
            }
        }
        let hist: Vec<String> = self
            .balance_histogram
            .iter()
            .map(|(ones, count)| format!("{ones}:{count}"))
            .collect();
        let _ = writeln!(s, "balance_histogram: {}", hist.join(" "));
        s
    }
}
