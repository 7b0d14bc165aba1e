//! Progressive Gap generation.
//!
//! Basic mode complements the comb `s, s+g, s+2g, ...` for every gap
//! `g = 1..=gMax` and start `s = 1..=sLim`. Extended mode always starts at
//! position 1 and widens each tooth to `Δg + 1` positions.

use crate::augmented::round_sqrt;
use crate::collection::{params, Collection, PairEmitter};
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PgMode {
    #[default]
    Basic,
    Extended,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PgParams {
    pub n: usize,
    pub rlim: usize,
    pub mode: PgMode,
    /// Drop the complement of the first vector (it equals the seed).
    pub skip_first_complement: bool,
}

impl PgParams {
    pub fn new(n: usize, mode: PgMode) -> Self {
        PgParams {
            n,
            rlim: 1000,
            mode,
            skip_first_complement: false,
        }
    }
}

/// Largest gap: `floor(sqrt(n) + 1/2)`.
pub fn g_max(n: usize) -> usize {
    round_sqrt(n)
}

/// Number of starts tried for gap `g`; gap 2 uses a single start.
pub fn s_lim(g: usize) -> usize {
    if g == 2 {
        1
    } else {
        g
    }
}

/// Mask with positions `s + k*g` complemented for `k = 0..=floor((n - s)/g)`.
pub fn comb(n: usize, g: usize, s: usize) -> BinaryVector {
    assert!(g >= 1 && s >= 1 && s <= n);
    let mut v = BinaryVector::zeros(n);
    for j in (s..=n).step_by(g) {
        v.set(j, true);
    }
    v
}

/// Mask with runs `j1..=min(j1 + delta, n)` complemented for
/// `j1 = 1, 1 + g, 1 + 2g, ...`.
pub fn filled_comb(n: usize, g: usize, delta: usize) -> BinaryVector {
    assert!(g >= 1);
    let mut v = BinaryVector::zeros(n);
    for j1 in (1..=n).step_by(g) {
        v.set_range(j1, (j1 + delta).min(n));
    }
    v
}

pub fn generate_pg(p: &PgParams) -> Result<Collection> {
    if p.n == 0 {
        return Err(Error::param("n", "must be at least 1"));
    }
    if p.rlim < 1 {
        return Err(Error::param("rlim", "must be at least 1"));
    }
    let name = match p.mode {
        PgMode::Basic => "pg",
        PgMode::Extended => "pg-extended",
    };
    let record = params([
        ("n", p.n.to_string()),
        ("rlim", p.rlim.to_string()),
        ("skip_first_complement", p.skip_first_complement.to_string()),
    ]);
    let mut out = PairEmitter::new(p.n, name, record, p.rlim);
    let mut first = true;
    let mut emit = |out: &mut PairEmitter, v: BinaryVector, label: String| -> bool {
        if std::mem::take(&mut first) && p.skip_first_complement {
            out.single(v, format!("{label} x'"));
            out.full()
        } else {
            out.pair(v, &label)
        }
    };

    'gaps: for g in 1..=g_max(p.n) {
        match p.mode {
            PgMode::Basic => {
                for s in 1..=s_lim(g).min(p.n) {
                    if emit(&mut out, comb(p.n, g, s), format!("g={g} s={s}")) {
                        break 'gaps;
                    }
                }
            }
            PgMode::Extended => {
                let delta_max = if g == 1 { 0 } else { g - 2 };
                for delta in 0..=delta_max {
                    if emit(&mut out, filled_comb(p.n, g, delta), format!("g={g} dg={delta}")) {
                        break 'gaps;
                    }
                }
            }
        }
    }
    Ok(out.finish())
}
