//! Max/Min generation: recursive halving of the index set `{1..n}`.
//!
//! Every iteration splits each interval of the current partition into a left
//! and right part, emits the mask complementing all left parts, and its
//! complement. Intervals are kept as `First`/`Last` bounds and the partition
//! order is tracked through a `Location` indirection so the split halves can
//! be written in place.
//!
//! Masks are relative to the zero seed; use
//! [`Collection::apply_seed`](crate::Collection::apply_seed) for other seeds.

use crate::collection::{params, Collection, PairEmitter};
use crate::error::{Error, Result};
use crate::vector::BinaryVector;

/// Redundant iteration bound; handles any `n` below `2^99`.
const MAX_ITER: usize = 100;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    /// Alternating odd/even rule on the partition index.
    Standard,
    /// Odd-sized sets alternate floor/ceil, restarting each iteration, with the
    /// odd-position shortcut as the final split.
    Balanced,
}

/// How the left size of a split is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParityRule {
    /// Odd partition index: left gets `ceil(size/2)`.
    OddIndex,
    /// Even partition index: left gets `floor(size/2)`.
    EvenIndex,
    BalancedFloor,
    BalancedCeil,
}

/// Inclusive 1-indexed bounds; `first == last + 1` encodes the empty set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Interval {
    pub first: usize,
    pub last: usize,
}

impl Interval {
    pub fn new(first: usize, last: usize) -> Self {
        debug_assert!(first <= last + 1);
        Interval { first, last }
    }

    pub fn len(&self) -> usize {
        self.last + 1 - self.first
    }

    pub fn is_empty(&self) -> bool {
        self.first > self.last
    }
}

/// Splits `first..=last` into a left and right interval under `rule`.
pub fn split_set(first: usize, last: usize, rule: ParityRule) -> (Interval, Interval) {
    let size = last + 1 - first;
    let split = match rule {
        ParityRule::OddIndex | ParityRule::BalancedCeil => size.div_ceil(2),
        ParityRule::EvenIndex | ParityRule::BalancedFloor => size / 2,
    };
    let split_point = first + split - 1;
    (Interval::new(first, split_point), Interval::new(split_point + 1, last))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxMinParams {
    pub n: usize,
    pub rlim: usize,
    pub threshold: usize,
    pub variant: Variant,
    /// Emit the seed-relative pair (all zeros, all ones) before the loop.
    pub include_seed_pair: bool,
}

impl MaxMinParams {
    /// Standard variant with `rlim = 1000` and the default threshold `n / 16`.
    pub fn new(n: usize) -> Self {
        MaxMinParams {
            n,
            rlim: 1000,
            threshold: default_threshold(n),
            variant: Variant::Standard,
            include_seed_pair: true,
        }
    }

    pub fn balanced(n: usize) -> Self {
        MaxMinParams {
            variant: Variant::Balanced,
            ..Self::new(n)
        }
    }

    pub fn with_threshold(mut self, threshold: usize) -> Self {
        self.threshold = threshold;
        self
    }

    pub fn with_rlim(mut self, rlim: usize) -> Self {
        self.rlim = rlim;
        self
    }

    pub fn without_seed_pair(mut self) -> Self {
        self.include_seed_pair = false;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::param("n", "must be at least 1"));
        }
        if self.rlim < 2 {
            return Err(Error::param("rlim", "must be at least 2"));
        }
        Ok(())
    }
}

pub fn default_threshold(n: usize) -> usize {
    n / 16
}

/// Partition bookkeeping. Slot arrays are 1-indexed; slot 0 is unused.
#[derive(Debug, Clone)]
pub struct PartitionState {
    n: usize,
    first: Vec<usize>,
    last: Vec<usize>,
    location: Vec<usize>,
    i_last: usize,
}

impl PartitionState {
    pub fn new(n: usize) -> Self {
        let mut first = vec![0; 2];
        let mut last = vec![0; 2];
        first[1] = 1;
        last[1] = n;
        PartitionState {
            n,
            first,
            last,
            location: vec![0, 1],
            i_last: 1,
        }
    }

    pub fn set_count(&self) -> usize {
        self.i_last
    }

    /// The `i`-th set of the current partition (1-indexed).
    pub fn set(&self, i: usize) -> Interval {
        let loc = self.location[i];
        Interval::new(self.first[loc], self.last[loc])
    }

    pub fn sets(&self) -> Vec<Interval> {
        (1..=self.i_last).map(|i| self.set(i)).collect()
    }

    /// Largest set size. Under the standard rule this is always `|N(1)|`; the
    /// balanced rule can leave `N(1)` one smaller than its neighbours.
    pub fn max_num(&self) -> usize {
        (1..=self.i_last).map(|i| self.set(i).len()).max().unwrap_or(0)
    }

    /// Number of sets of size two; only meaningful once `max_num() == 2`.
    pub fn num2(&self) -> usize {
        (1..=self.i_last).filter(|&i| self.set(i).len() == 2).count()
    }

    /// Splits every set, writing left halves in place and right halves at
    /// `Loc + iLast`, and returns the mask complementing every left half.
    fn split_all(&mut self, variant: Variant) -> BinaryVector {
        let i_last = self.i_last;
        let slots = 2 * i_last + 1;
        if self.first.len() < slots {
            self.first.resize(slots, 0);
            self.last.resize(slots, 0);
        }
        let mut mask = BinaryVector::zeros(self.n);
        let mut odd_set = true;
        for i in 1..=i_last {
            let loc = self.location[i];
            let set = Interval::new(self.first[loc], self.last[loc]);
            let rule = match variant {
                Variant::Standard if i % 2 == 1 => ParityRule::OddIndex,
                Variant::Standard => ParityRule::EvenIndex,
                Variant::Balanced if set.len().is_multiple_of(2) => ParityRule::BalancedFloor,
                Variant::Balanced => {
                    odd_set = !odd_set;
                    if odd_set {
                        ParityRule::BalancedCeil
                    } else {
                        ParityRule::BalancedFloor
                    }
                }
            };
            let (left, right) = split_set(set.first, set.last, rule);
            mask.set_range(left.first, left.last);
            self.last[loc] = left.last;
            self.first[loc + i_last] = right.first;
            self.last[loc + i_last] = right.last;
        }
        mask
    }

    /// Reorders `Location` so that `N(2i-1)` and `N(2i)` are the halves of the
    /// old `N(i)`, then doubles `iLast`.
    fn relocate(&mut self) {
        let i_last = self.i_last;
        self.location.resize(2 * i_last + 1, 0);
        for i in (1..=i_last).rev() {
            let loc = self.location[i];
            self.location[2 * i - 1] = loc;
            self.location[2 * i] = loc + i_last;
        }
        self.i_last = 2 * i_last;
    }

    /// Checks that the current sets are well formed and partition `{1..n}` in order.
    pub fn is_partition(&self) -> bool {
        if self.location[1] != 1 {
            return false;
        }
        let mut covered = vec![false; self.n + 1];
        for set in self.sets() {
            if set.first < 1 || set.first > set.last + 1 || set.last > self.n {
                return false;
            }
            for slot in &mut covered[set.first..=set.last] {
                if std::mem::replace(slot, true) {
                    return false;
                }
            }
        }
        covered[1..].iter().all(|&c| c)
    }
}

/// Runs the Max/Min method and returns the zero-seed masks.
pub fn generate_maxmin(p: &MaxMinParams) -> Result<Collection> {
    run(p, |_| {})
}

/// Like [`generate_maxmin`], also returning the partition after each iteration.
pub fn trace_maxmin(p: &MaxMinParams) -> Result<(Collection, Vec<Vec<Interval>>)> {
    let mut snaps = Vec::new();
    let c = run(p, |state| snaps.push(state.sets()))?;
    Ok((c, snaps))
}

fn run(
    p: &MaxMinParams,
    mut observe: impl FnMut(&PartitionState),
) -> Result<Collection> {
    p.validate()?;
    let name = match p.variant {
        Variant::Standard => "maxmin",
        Variant::Balanced => "maxmin-balanced",
    };
    let record = params([
        ("n", p.n.to_string()),
        ("rlim", p.rlim.to_string()),
        ("threshold", p.threshold.to_string()),
        ("seed_pair", p.include_seed_pair.to_string()),
    ]);
    let mut out = PairEmitter::new(p.n, name, record, p.rlim);
    if p.include_seed_pair && out.pair(BinaryVector::zeros(p.n), "seed") {
        return Ok(out.finish());
    }

    let mut state = PartitionState::new(p.n);
    for iter in 1..=MAX_ITER {
        let mask = state.split_all(p.variant);
        if out.pair(mask, &format!("iter={iter}")) {
            break;
        }
        state.relocate();
        observe(&state);
        let max_num = state.max_num();
        if max_num == 1 {
            break;
        }
        if max_num == 2 {
            if state.num2() <= p.threshold {
                break;
            }
            if p.variant == Variant::Balanced {
                let shortcut = BinaryVector::from_fn(p.n, |j| j % 2 == 1);
                out.pair(shortcut, &format!("iter={} shortcut", iter + 1));
                break;
            }
        }
    }
    Ok(out.finish())
}
