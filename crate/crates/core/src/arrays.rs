//! Arrays on window blocks.
//!
//! A continuous array is constant on `N_s` for each `s` of some block, so
//! it is recorded as a finite map from the block's members to values: an
//! index into a relation's carrier, or a sequence for arrays into a family
//! of sequences. Good pairs are searched among members related by `◁`,
//! since `s ◁ t` says exactly that some `X ∈ N_s` has `X` minus its least
//! element in `N_t`.
//!
//! Badness here is window badness: no good pair among the window's
//! `◁`-pairs. It under-approximates the real notion, which quantifies over
//! all infinite sets; perfection is likewise checked on window pairs only.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{smooth_check, SeqFamily, SmoothViolation};
use crate::pouzet::RelationMatrix;
use crate::seqcore::{shift_rel, FinSeq};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrayValues {
    Index(BTreeMap<FinSeq, usize>),
    Seq(BTreeMap<FinSeq, FinSeq>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawArray", into = "RawArray")]
pub struct BlockArray {
    family: SeqFamily,
    values: ArrayValues,
}

#[derive(Serialize, Deserialize)]
struct RawArray {
    family: SeqFamily,
    values: Vec<RawEntry>,
}

#[derive(Serialize, Deserialize)]
struct RawEntry {
    s: FinSeq,
    q: RawValue,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawValue {
    Index(usize),
    Seq(FinSeq),
}

impl TryFrom<RawArray> for BlockArray {
    type Error = Error;

    fn try_from(raw: RawArray) -> Result<Self> {
        let all_index = raw.values.iter().all(|e| matches!(e.q, RawValue::Index(_)));
        let all_seq = raw.values.iter().all(|e| matches!(e.q, RawValue::Seq(_)));
        let values = match (all_index, all_seq) {
            (true, _) => ArrayValues::Index(
                raw.values
                    .into_iter()
                    .map(|e| match e.q {
                        RawValue::Index(q) => (e.s, q),
                        RawValue::Seq(_) => unreachable!(),
                    })
                    .collect(),
            ),
            (false, true) => ArrayValues::Seq(
                raw.values
                    .into_iter()
                    .map(|e| match e.q {
                        RawValue::Seq(q) => (e.s, q),
                        RawValue::Index(_) => unreachable!(),
                    })
                    .collect(),
            ),
            (false, false) => return Err(Error::MixedArrayValues),
        };
        BlockArray::new(raw.family, values)
    }
}

impl From<BlockArray> for RawArray {
    fn from(a: BlockArray) -> Self {
        let values = match a.values {
            ArrayValues::Index(m) => m
                .into_iter()
                .map(|(s, q)| RawEntry {
                    s,
                    q: RawValue::Index(q),
                })
                .collect(),
            ArrayValues::Seq(m) => m
                .into_iter()
                .map(|(s, q)| RawEntry {
                    s,
                    q: RawValue::Seq(q),
                })
                .collect(),
        };
        RawArray {
            family: a.family,
            values,
        }
    }
}

impl BlockArray {
    /// Checks that the values cover the family exactly.
    pub fn new(family: SeqFamily, values: ArrayValues) -> Result<Self> {
        let keys: Vec<&FinSeq> = match &values {
            ArrayValues::Index(m) => m.keys().collect(),
            ArrayValues::Seq(m) => m.keys().collect(),
        };
        if let Some(stray) = keys.iter().find(|k| !family.contains(k)) {
            return Err(Error::StrayValue((*stray).clone()));
        }
        if keys.len() != family.len() {
            let missing = family
                .iter()
                .find(|s| !keys.contains(s))
                .expect("sizes differ");
            return Err(Error::MissingValue(missing.clone()));
        }
        Ok(BlockArray { family, values })
    }

    pub fn with_indices(family: SeqFamily, f: impl Fn(&FinSeq) -> usize) -> Self {
        let values = family.iter().map(|s| (s.clone(), f(s))).collect();
        BlockArray {
            family,
            values: ArrayValues::Index(values),
        }
    }

    pub fn with_sequences(family: SeqFamily, f: impl Fn(&FinSeq) -> FinSeq) -> Self {
        let values = family.iter().map(|s| (s.clone(), f(s))).collect();
        BlockArray {
            family,
            values: ArrayValues::Seq(values),
        }
    }

    pub fn family(&self) -> &SeqFamily {
        &self.family
    }

    pub fn values(&self) -> &ArrayValues {
        &self.values
    }

    pub fn index_values(&self) -> Result<&BTreeMap<FinSeq, usize>> {
        match &self.values {
            ArrayValues::Index(m) => Ok(m),
            ArrayValues::Seq(_) => Err(Error::WrongValueKind {
                expected: "carrier indices",
            }),
        }
    }

    pub fn seq_values(&self) -> Result<&BTreeMap<FinSeq, FinSeq>> {
        match &self.values {
            ArrayValues::Seq(m) => Ok(m),
            ArrayValues::Index(_) => Err(Error::WrongValueKind {
                expected: "sequences",
            }),
        }
    }

    /// Replaces one value, keeping the kind. Used to build corrupted arrays.
    pub fn with_seq_value(&self, s: &FinSeq, v: FinSeq) -> Result<Self> {
        let mut m = self.seq_values()?.clone();
        if !m.contains_key(s) {
            return Err(Error::StrayValue(s.clone()));
        }
        m.insert(s.clone(), v);
        Ok(BlockArray {
            family: self.family.clone(),
            values: ArrayValues::Seq(m),
        })
    }
}

/// Every pair of members with `s ◁ t`, in length-lex order on `(s, t)`.
pub fn shift_pairs(family: &SeqFamily) -> impl Iterator<Item = (&FinSeq, &FinSeq)> {
    family
        .iter()
        .flat_map(move |s| family.iter().map(move |t| (s, t)))
        .filter(|(s, t)| shift_rel(s, t))
}

pub fn shift_pair_count(family: &SeqFamily) -> usize {
    shift_pairs(family).count()
}

fn checked_indices<'a>(arr: &'a BlockArray, r: &RelationMatrix) -> Result<&'a BTreeMap<FinSeq, usize>> {
    let values = arr.index_values()?;
    for &q in values.values() {
        r.check_index(q)?;
    }
    Ok(values)
}

/// First `◁`-pair whose values are related, by an arbitrary relation.
pub fn find_good_pair_by<V>(
    family: &SeqFamily,
    values: &BTreeMap<FinSeq, V>,
    related: impl Fn(&V, &V) -> bool,
) -> Option<(FinSeq, FinSeq)> {
    shift_pairs(family)
        .find(|(s, t)| related(&values[*s], &values[*t]))
        .map(|(s, t)| (s.clone(), t.clone()))
}

/// First `◁`-pair whose values are not related.
pub fn perfect_check_by<V>(
    family: &SeqFamily,
    values: &BTreeMap<FinSeq, V>,
    related: impl Fn(&V, &V) -> bool,
) -> Option<(FinSeq, FinSeq)> {
    shift_pairs(family)
        .find(|(s, t)| !related(&values[*s], &values[*t]))
        .map(|(s, t)| (s.clone(), t.clone()))
}

/// The length-lex least `(s, t)` with `s ◁ t` and `arr(s) R arr(t)`.
///
/// `None` means the array is bad within the window.
pub fn find_good_pair(arr: &BlockArray, r: &RelationMatrix) -> Result<Option<(FinSeq, FinSeq)>> {
    let values = checked_indices(arr, r)?;
    Ok(find_good_pair_by(arr.family(), values, |&a, &b| r.get(a, b)))
}

/// `None` when every window `◁`-pair has related values; otherwise the
/// first pair that does not.
pub fn perfect_check(arr: &BlockArray, r: &RelationMatrix) -> Result<Option<(FinSeq, FinSeq)>> {
    let values = checked_indices(arr, r)?;
    Ok(perfect_check_by(arr.family(), values, |&a, &b| r.get(a, b)))
}

/// Perfection of a sequence-valued array with respect to `◁` itself.
pub fn perfect_check_shift(arr: &BlockArray) -> Result<Option<(FinSeq, FinSeq)>> {
    let values = arr.seq_values()?;
    Ok(perfect_check_by(arr.family(), values, shift_rel))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "verdict")]
pub enum TriPresVerdict {
    Holds,
    /// Precondition: the codomain family is not smooth.
    NotSmooth { violation: SmoothViolation },
    /// Precondition: a value is not a member of the codomain family.
    ValueOutsideCodomain { s: FinSeq, value: FinSeq },
    /// Precondition: `s ◁ t` but not `arr(s) ◁ arr(t)`.
    NotPerfect { s: FinSeq, t: FinSeq },
    /// `lh(arr(s)) > lh(s)`.
    LengthGrows { s: FinSeq, value: FinSeq },
    /// `s[lh(arr(s))] ⪻ arr(s)` fails.
    NotDominated { s: FinSeq, value: FinSeq },
}

impl TriPresVerdict {
    pub fn holds(&self) -> bool {
        matches!(self, TriPresVerdict::Holds)
    }

    pub fn is_precondition_failure(&self) -> bool {
        matches!(
            self,
            TriPresVerdict::NotSmooth { .. }
                | TriPresVerdict::ValueOutsideCodomain { .. }
                | TriPresVerdict::NotPerfect { .. }
        )
    }
}

/// For a smooth `C` and an array into `C` that is perfect for `◁`, every
/// `s` satisfies `lh(arr(s)) <= lh(s)` and `s(i) <= arr(s)(i)` below that
/// length. Preconditions are checked first and reported separately.
pub fn tri_pres_check(codomain: &SeqFamily, arr: &BlockArray) -> Result<TriPresVerdict> {
    let values = arr.seq_values()?;
    if let Some(violation) = smooth_check(codomain) {
        return Ok(TriPresVerdict::NotSmooth { violation });
    }
    if let Some((s, v)) = values.iter().find(|(_, v)| !codomain.contains(v)) {
        return Ok(TriPresVerdict::ValueOutsideCodomain {
            s: s.clone(),
            value: v.clone(),
        });
    }
    if let Some((s, t)) = perfect_check_by(arr.family(), values, shift_rel) {
        return Ok(TriPresVerdict::NotPerfect { s, t });
    }
    Ok(conclusions(values))
}

/// Only the two conclusions, without the preconditions.
pub fn tri_pres_conclusions(arr: &BlockArray) -> Result<TriPresVerdict> {
    Ok(conclusions(arr.seq_values()?))
}

fn conclusions(values: &BTreeMap<FinSeq, FinSeq>) -> TriPresVerdict {
    for (s, v) in values {
        if v.len() > s.len() {
            return TriPresVerdict::LengthGrows {
                s: s.clone(),
                value: v.clone(),
            };
        }
        let cut = s.restrict(v.len()).expect("checked length");
        if !cut.is_dominated_by(v) {
            return TriPresVerdict::NotDominated {
                s: s.clone(),
                value: v.clone(),
            };
        }
    }
    TriPresVerdict::Holds
}
