//! Augmented-Max/Min: alternating runs of `s` ones and `s` zeros for a
//! schedule of run sizes, optionally with half-run shifted copies.

use crate::collection::{params, Collection, PairEmitter};
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Rounding {
    /// `s = floor(n/k + 1/2)`.
    #[default]
    HalfRound,
    /// `s = floor(n/k)`.
    Floor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum RunSchedule {
    /// `k = 2, 3, 4, 6, 8, 12, ...` down to the `sLim` cutoff, then the tail
    /// `sLim - 1, ..., 1`.
    #[default]
    Mixed,
    /// `k = 2, 4, 8, ...` while `k <= n`, with no cutoff.
    PowersOfTwo,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentedParams {
    pub n: usize,
    pub rlim: usize,
    pub include_shift: bool,
    pub rounding: Rounding,
    pub schedule: RunSchedule,
}

impl AugmentedParams {
    pub fn new(n: usize) -> Self {
        AugmentedParams {
            n,
            rlim: 1000,
            include_shift: false,
            rounding: Rounding::HalfRound,
            schedule: RunSchedule::Mixed,
        }
    }

    pub fn with_shift(mut self) -> Self {
        self.include_shift = true;
        self
    }
}

/// `floor(sqrt(n) + 1/2)` in integer arithmetic.
pub fn round_sqrt(n: usize) -> usize {
    // largest m with (2m - 1)^2 <= 4n
    let mut m = (n as f64).sqrt() as usize + 1;
    while m > 0 && (2 * m - 1) * (2 * m - 1) > 4 * n {
        m -= 1;
    }
    m
}

fn run_size(n: usize, k: usize, rounding: Rounding) -> usize {
    match rounding {
        Rounding::HalfRound => (2 * n + k) / (2 * k),
        Rounding::Floor => n / k,
    }
}

/// `2, 3, 4, 6, 8, 12, 16, ...`
fn mixed_divisors() -> impl Iterator<Item = usize> {
    (1..usize::BITS - 2).flat_map(|p| {
        let hi = 1usize << p;
        let mid = hi + (hi >> 1);
        [hi, mid]
    })
}

/// Run sizes in emission order under the default mixed schedule.
pub fn k_sequence(n: usize, rounding: Rounding) -> Vec<usize> {
    let s_lim = round_sqrt(n);
    let mut out: Vec<usize> = Vec::new();
    for k in mixed_divisors() {
        let s = run_size(n, k, rounding);
        if s <= s_lim {
            break;
        }
        if !out.contains(&s) {
            out.push(s);
        }
    }
    out.extend((1..s_lim).rev());
    out
}

/// Run sizes `round(n/k)` for `k = 2, 4, 8, ...` while `k <= n`.
pub fn power_of_two_run_sizes(n: usize, rounding: Rounding) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    let mut k = 2;
    while k <= n {
        let s = run_size(n, k, rounding);
        if !out.contains(&s) {
            out.push(s);
        }
        k *= 2;
    }
    out
}

/// `s` ones, `s` zeros, alternating; the last run is cut to `n mod s`.
pub fn run_vector(n: usize, s: usize) -> Result<BinaryVector> {
    if s == 0 || s > n {
        return Err(Error::RunSizeOutOfRange { s, n });
    }
    Ok(BinaryVector::from_fn(n, |j| ((j - 1) / s).is_multiple_of(2)))
}

/// Shifts `v` right by `floor(s/2)`: zeros enter at the front, the tail drops.
pub fn shift_vector(v: &BinaryVector, s: usize) -> Result<BinaryVector> {
    if s < 2 {
        return Err(Error::ShiftTooSmall { s });
    }
    let by = s / 2;
    Ok(BinaryVector::from_fn(v.len(), |j| j > by && v.get(j - by)))
}

pub fn generate_augmented(p: &AugmentedParams) -> Result<Collection> {
    if p.n < 2 {
        return Err(Error::param("n", "must be at least 2"));
    }
    if p.rlim < 2 {
        return Err(Error::param("rlim", "must be at least 2"));
    }
    let sizes = match p.schedule {
        RunSchedule::Mixed => k_sequence(p.n, p.rounding),
        RunSchedule::PowersOfTwo => power_of_two_run_sizes(p.n, p.rounding),
    };
    let record = params([
        ("n", p.n.to_string()),
        ("rlim", p.rlim.to_string()),
        ("shift", p.include_shift.to_string()),
        (
            "rounding",
            match p.rounding {
                Rounding::HalfRound => "half-round",
                Rounding::Floor => "floor",
            }
            .to_string(),
        ),
        (
            "schedule",
            match p.schedule {
                RunSchedule::Mixed => "mixed",
                RunSchedule::PowersOfTwo => "powers-of-two",
            }
            .to_string(),
        ),
    ]);
    let mut out = PairEmitter::new(p.n, "augmented", record, p.rlim);
    for s in sizes {
        let run = run_vector(p.n, s)?;
        let shifted = if p.include_shift && s >= 2 {
            Some(shift_vector(&run, s)?)
        } else {
            None
        };
        if out.pair(run, &format!("s={s}")) {
            break;
        }
        if let Some(shifted) = shifted {
            if out.pair(shifted, &format!("s={s} shifted")) {
                break;
            }
        }
    }
    Ok(out.finish())
}
