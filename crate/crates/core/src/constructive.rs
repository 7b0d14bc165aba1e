//! Constructive generators built from short balanced blocks.
//!
//! Sub-vector generation pairs every `p`-bit vector `y'` with its complement
//! `y''` (optionally adding a third block mixing the two) and tiles the block
//! to length `n`. Strongly balanced generation recursively pairs blocks whose
//! every aligned bit pair is `10` or `01`.

use crate::collection::{params, Collection, Provenance};
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

const MAX_SUBVECTOR_DIM: u32 = 20;

/// Highest strongly balanced level materialized (65536 vectors of length 32).
pub const MAX_STRONGLY_BALANCED_LEVEL: u32 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BlockForm {
    /// `(y', y'')`
    #[default]
    Double,
    /// `(y', y'', y°)`
    Triple,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubvectorParams {
    pub p: u32,
    pub n: usize,
    pub form: BlockForm,
    pub rlim: usize,
}

impl SubvectorParams {
    pub fn new(p: u32, n: usize, form: BlockForm) -> Self {
        SubvectorParams {
            p,
            n,
            form,
            rlim: 1000,
        }
    }
}

/// All `2^p` pairs `(y', y'')`, with `y'` counting down from all ones.
pub fn enumerate_pairs(p: u32) -> Vec<(BinaryVector, BinaryVector)> {
    assert!((1..=MAX_SUBVECTOR_DIM).contains(&p), "p outside 1..={MAX_SUBVECTOR_DIM}");
    let width = p as usize;
    (0..1u64 << p)
        .rev()
        .map(|value| {
            // position 1 holds the most significant bit
            let y = BinaryVector::from_fn(width, |j| value >> (width - j) & 1 == 1);
            let comp = y.complement();
            (y, comp)
        })
        .collect()
}

/// `(y', y'')` tiled to `n` components.
pub fn build_doubled(pair: &(BinaryVector, BinaryVector), n: usize) -> BinaryVector {
    pair.0.concat(&pair.1).tile(n)
}

/// Third block: the first `floor(p/2)` components of `y'`, the rest of `y''`.
pub fn mixed_block(pair: &(BinaryVector, BinaryVector)) -> BinaryVector {
    let p = pair.0.len();
    let half = p / 2;
    BinaryVector::from_fn(p, |j| if j <= half { pair.0.get(j) } else { pair.1.get(j) })
}

/// The `3p`-bit block `(y', y'', y°)`.
pub fn tripled_block(pair: &(BinaryVector, BinaryVector)) -> BinaryVector {
    pair.0.concat(&pair.1).concat(&mixed_block(pair))
}

/// `(y', y'', y°)` tiled to `n` components.
pub fn build_tripled(pair: &(BinaryVector, BinaryVector), n: usize) -> BinaryVector {
    tripled_block(pair).tile(n)
}

pub fn generate_subvector(params_: &SubvectorParams) -> Result<Collection> {
    let SubvectorParams { p, n, form, rlim } = *params_;
    if !(1..=MAX_SUBVECTOR_DIM).contains(&p) {
        return Err(Error::param("p", format!("must be in 1..={MAX_SUBVECTOR_DIM}, got {p}")));
    }
    if n == 0 {
        return Err(Error::param("n", "must be at least 1"));
    }
    let form_name = match form {
        BlockForm::Double => "double",
        BlockForm::Triple => "triple",
    };
    let record = params([
        ("p", p.to_string()),
        ("n", n.to_string()),
        ("form", form_name.to_string()),
        ("rlim", rlim.to_string()),
    ]);
    let mut out = Collection::new(n);
    for (h, pair) in enumerate_pairs(p).iter().enumerate().take(rlim) {
        let v = match form {
            BlockForm::Double => build_doubled(pair, n),
            BlockForm::Triple => build_tripled(pair, n),
        };
        out.push(
            v,
            Provenance::new("subvector", record.clone(), format!("h={} y'={}", h + 1, pair.0)),
        )?;
    }
    Ok(out)
}

/// Order in which level-`L` blocks are paired to form level `L+1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairingOrder {
    /// Basis is the first block followed by the remaining blocks in reverse;
    /// reproduces the published level-2 list and level-3 table.
    #[default]
    Published,
    /// Basis is the previous level in its own order.
    RowMajor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StronglyBalancedParams {
    pub level: u32,
    pub n: usize,
    pub rlim: usize,
    pub order: PairingOrder,
}

impl StronglyBalancedParams {
    pub fn new(level: u32, n: usize) -> Self {
        StronglyBalancedParams {
            level,
            n,
            rlim: 1000,
            order: PairingOrder::Published,
        }
    }
}

/// Blocks of length `2^level`, before tiling.
pub fn strongly_balanced_blocks(level: u32, order: PairingOrder) -> Result<Vec<BinaryVector>> {
    if level == 0 {
        return Err(Error::param("level", "must be at least 1"));
    }
    if level > MAX_STRONGLY_BALANCED_LEVEL {
        return Err(Error::LevelTooLarge {
            level,
            count: format!("2^{}", 1u64 << (level - 1)),
            max: MAX_STRONGLY_BALANCED_LEVEL,
        });
    }
    let mut blocks: Vec<BinaryVector> = vec!["10".parse()?, "01".parse()?];
    for _ in 1..level {
        let basis: Vec<&BinaryVector> = match order {
            PairingOrder::RowMajor => blocks.iter().collect(),
            PairingOrder::Published => blocks[..1].iter().chain(blocks[1..].iter().rev()).collect(),
        };
        blocks = basis
            .iter()
            .flat_map(|a| basis.iter().map(move |b| a.concat(b)))
            .collect();
    }
    Ok(blocks)
}

pub fn generate_strongly_balanced(p: &StronglyBalancedParams) -> Result<Collection> {
    if p.n == 0 {
        return Err(Error::param("n", "must be at least 1"));
    }
    let blocks = strongly_balanced_blocks(p.level, p.order)?;
    let record = params([
        ("level", p.level.to_string()),
        ("n", p.n.to_string()),
        ("rlim", p.rlim.to_string()),
    ]);
    let mut out = Collection::new(p.n);
    for (h, block) in blocks.iter().enumerate().take(p.rlim) {
        out.push(
            block.tile(p.n),
            Provenance::new("strongly-balanced", record.clone(), format!("h={}", h + 1)),
        )?;
    }
    Ok(out)
}

/// Every aligned pair `(2i-1, 2i)` holds exactly one 1; a dangling last
/// position is ignored.
pub fn is_strongly_balanced(v: &BinaryVector) -> bool {
    (1..v.len()).step_by(2).all(|j| v.get(j) != v.get(j + 1))
}
