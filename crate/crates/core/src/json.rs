//! Wire forms shared with the command-line tools.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multiword::{validate_word, PartialMultiKrewerasWord};
use crate::poset::{make_v, product_with_chain, Poset};
use crate::ppartition::PPartition;
use crate::pstrict::PStrictLabeling;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[allow(non_snake_case)]
pub struct Fibers {
    pub A: Vec<usize>,
    pub B: Vec<usize>,
    pub C: Vec<usize>,
}

/// `{ell, q, fibers: {A: [...], B: [...], C: [...]}}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingJson {
    pub ell: usize,
    pub q: usize,
    pub fibers: Fibers,
}

impl From<PStrictLabeling> for LabelingJson {
    fn from(f: PStrictLabeling) -> Self {
        let [a, b, c] = f.fibers().clone();
        LabelingJson {
            ell: f.ell(),
            q: f.q(),
            fibers: Fibers { A: a, B: b, C: c },
        }
    }
}

impl TryFrom<LabelingJson> for PStrictLabeling {
    type Error = Error;

    fn try_from(j: LabelingJson) -> Result<Self> {
        if j.fibers.A.len() != j.ell {
            return Err(Error::InvalidLabeling(format!("ell = {} but fiber A has {} labels", j.ell, j.fibers.A.len())));
        }
        PStrictLabeling::new(j.q, j.fibers.A, j.fibers.B, j.fibers.C)
    }
}

/// `{ell, q, blocks: [[nA, nB, nC], ...]}`
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordJson {
    pub ell: usize,
    pub q: usize,
    pub blocks: Vec<[usize; 3]>,
}

impl From<PartialMultiKrewerasWord> for WordJson {
    fn from(w: PartialMultiKrewerasWord) -> Self {
        WordJson {
            ell: w.ell(),
            q: w.q(),
            blocks: w.blocks().to_vec(),
        }
    }
}

impl TryFrom<WordJson> for PartialMultiKrewerasWord {
    type Error = Error;

    fn try_from(j: WordJson) -> Result<Self> {
        validate_word(j.blocks, j.ell, j.q)
    }
}

/// `{poset: "VxK", k, ell, values: {"(p,i)": v, ...}}`; the bare V is
/// written as `"V"` with `k` null.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PPartitionJson {
    pub poset: String,
    pub k: Option<usize>,
    pub ell: usize,
    pub values: BTreeMap<String, usize>,
}

impl PPartitionJson {
    pub fn from_ppartition(f: &PPartition) -> Result<Self> {
        let poset = f.poset();
        let (name, k) = match poset.v_chain_length() {
            Some(k) => (format!("Vx{k}"), Some(k)),
            None if **poset == make_v() => ("V".to_string(), None),
            None => return Err(Error::NotVProduct),
        };
        let values = poset
            .ids()
            .iter()
            .zip(f.values())
            .map(|(id, &v)| (id.to_string(), v))
            .collect();
        Ok(PPartitionJson {
            poset: name,
            k,
            ell: f.ell(),
            values,
        })
    }

    pub fn to_ppartition(&self) -> Result<PPartition> {
        let poset: Poset = match self.k {
            Some(k) if self.poset == format!("Vx{k}") => product_with_chain(&make_v(), k)?,
            None if self.poset == "V" => make_v(),
            _ => return Err(Error::NotVProduct),
        };
        let values = poset
            .ids()
            .iter()
            .map(|id| {
                self.values
                    .get(&id.to_string())
                    .copied()
                    .ok_or_else(|| Error::UnknownElement(id.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        if self.values.len() != poset.len() {
            return Err(Error::InvalidPPartition("unexpected keys in values".into()));
        }
        PPartition::new(Arc::new(poset), self.ell, values)
    }
}
