use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vector::BinaryVector;

/// Parameter echo carried by every generated vector.
pub type ParamRecord = BTreeMap<String, String>;

/// Where a vector came from: the generator, its parameters, and a short
/// label locating the vector inside the generator's run (e.g. `iter=2 x''`).
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: String,
    #[serde(default)]
    pub params: ParamRecord,
    #[serde(default)]
    pub label: String,
}

impl Provenance {
    pub fn new(generator: impl Into<String>, params: ParamRecord, label: impl Into<String>) -> Self {
        Provenance {
            generator: generator.into(),
            params,
            label: label.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub vector: BinaryVector,
    pub provenance: Provenance,
}

/// Ordered vectors of one common length. The ordinal `r` of an entry is its
/// 0-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Collection {
    n: usize,
    entries: Vec<Entry>,
}

impl Collection {
    pub fn new(n: usize) -> Self {
        Collection {
            n,
            entries: Vec::new(),
        }
    }

    pub fn from_vectors(
        n: usize,
        vectors: impl IntoIterator<Item = BinaryVector>,
        provenance: Provenance,
    ) -> Result<Self> {
        let mut c = Collection::new(n);
        for v in vectors {
            c.push(v, provenance.clone())?;
        }
        Ok(c)
    }

    /// Vector length shared by every member.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn push(&mut self, vector: BinaryVector, provenance: Provenance) -> Result<()> {
        if vector.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: vector.len(),
            });
        }
        self.entries.push(Entry { vector, provenance });
        Ok(())
    }

    pub fn entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn get(&self, r: usize) -> Option<&Entry> {
        self.entries.get(r)
    }

    pub fn vectors(&self) -> impl Iterator<Item = &BinaryVector> + '_ {
        self.entries.iter().map(|e| &e.vector)
    }

    pub fn to_vectors(&self) -> Vec<BinaryVector> {
        self.vectors().cloned().collect()
    }

    pub fn truncate(&mut self, len: usize) {
        self.entries.truncate(len);
    }

    pub fn extend(&mut self, other: Collection) -> Result<()> {
        if other.n != self.n && !other.is_empty() {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: other.n,
            });
        }
        self.entries.extend(other.entries);
        Ok(())
    }

    /// Applies every member as a mask onto `seed`, keeping provenance.
    pub fn apply_seed(&self, seed: &BinaryVector) -> Result<Collection> {
        if seed.len() != self.n {
            return Err(Error::LengthMismatch {
                left: self.n,
                right: seed.len(),
            });
        }
        let entries = self
            .entries
            .iter()
            .map(|e| {
                Ok(Entry {
                    vector: crate::vector::apply_seed(seed, &e.vector)?,
                    provenance: e.provenance.clone(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Collection { n: self.n, entries })
    }

    /// True when the complement of every member is also a member.
    pub fn is_closed_under_complement(&self) -> bool {
        let members: std::collections::HashSet<&BinaryVector> = self.vectors().collect();
        self.vectors().all(|v| members.contains(&v.complement()))
    }
}

impl<'a> IntoIterator for &'a Collection {
    type Item = &'a Entry;
    type IntoIter = std::slice::Iter<'a, Entry>;

    fn into_iter(self) -> Self::IntoIter {
        self.entries.iter()
    }
}

/// Accumulates complementary pairs under an emission cap.
pub(crate) struct PairEmitter {
    collection: Collection,
    generator: &'static str,
    params: ParamRecord,
    limit: usize,
}

impl PairEmitter {
    pub(crate) fn new(n: usize, generator: &'static str, params: ParamRecord, limit: usize) -> Self {
        PairEmitter {
            collection: Collection::new(n),
            generator,
            params,
            limit,
        }
    }

    pub(crate) fn single(&mut self, v: BinaryVector, label: impl Into<String>) {
        let prov = Provenance::new(self.generator, self.params.clone(), label);
        self.collection
            .push(v, prov)
            .expect("generators emit vectors of the configured length");
    }

    /// Emits `x'` followed by its complement. Returns `true` once the cap is
    /// reached; the pair is never split, so the total may exceed the cap by one.
    pub(crate) fn pair(&mut self, primary: BinaryVector, label: &str) -> bool {
        let comp = primary.complement();
        self.single(primary, format!("{label} x'"));
        self.single(comp, format!("{label} x''"));
        self.full()
    }

    pub(crate) fn full(&self) -> bool {
        self.collection.len() >= self.limit
    }

    pub(crate) fn finish(self) -> Collection {
        self.collection
    }
}

/// Shorthand for building a [`ParamRecord`].
pub(crate) fn params<const N: usize>(pairs: [(&str, String); N]) -> ParamRecord {
    pairs.into_iter().map(|(k, v)| (k.to_string(), v)).collect()
}
