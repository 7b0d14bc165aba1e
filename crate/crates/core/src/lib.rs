//! Generators of diversified zero-one vector collections for seeding
//! metaheuristic search, plus the diversity statistics used to compare them.
//!
//! All generators emit *masks* relative to the zero seed: a one marks a
//! component to complement. [`Collection::apply_seed`] turns masks into
//! vectors around any seed. Vector positions are 1-indexed.
//!
//! | module | produces |
//! |---|---|
//! | [`maxmin`] | recursive halving masks, standard and balanced |
//! | [`augmented`] | alternating runs of size `s`, with shifted copies |
//! | [`pg`] | progressive-gap combs, basic and filled |
//! | [`constructive`] | tiled balanced sub-vectors, strongly balanced blocks |
//! | [`permmap`] | permutation mappings and their recursive expansion |
//! | [`metrics`] | mean diversity, gap pairs, coverage, dedup |
//!
//! ```
//! use diversify::maxmin::{generate_maxmin, MaxMinParams};
//! use diversify::metrics::mean_diversity;
//!
//! let masks = generate_maxmin(&MaxMinParams::new(8)).unwrap();
//! assert_eq!(masks.len(), 8);
//! assert_eq!(mean_diversity(&masks).unwrap().to_string(), "32/7");
//! ```

pub mod augmented;
pub mod collection;
pub mod constructive;
pub mod error;
pub mod format;
pub mod maxmin;
pub mod metrics;
pub mod permmap;
pub mod pg;
pub mod vector;

pub use collection::{Collection, Entry, ParamRecord, Provenance};
pub use error::{Error, Result};
pub use permmap::PermutationMap;
pub use vector::{apply_seed, complement, hamming, rebalance, BinaryVector, RebalanceTarget, Stride};
