//! Finite sequences of naturals and the relations between them.
//!
//! [`FinSeq`] is a strictly increasing sequence, i.e. a finite subset of
//! the naturals listed in increasing order. [`FreeSeq`] carries no
//! monotonicity constraint and is used for prefixes of points of Baire
//! space and Cantor space.
//!
//! Both types order themselves length-lexicographically: shorter sequences
//! first, ties broken lexicographically. Every set of sequences this crate
//! emits is sorted that way.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A strictly increasing finite sequence of naturals.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct FinSeq(Vec<u32>);

/// A finite sequence of naturals with no ordering constraint.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "Vec<u32>", into = "Vec<u32>")]
pub struct FreeSeq(Vec<u32>);

fn length_lex(a: &[u32], b: &[u32]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}

fn write_angled(f: &mut fmt::Formatter<'_>, entries: &[u32]) -> fmt::Result {
    f.write_str("<")?;
    for (i, e) in entries.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
    }
    f.write_str(">")
}

impl FinSeq {
    /// The empty sequence.
    pub fn empty() -> Self {
        FinSeq(Vec::new())
    }

    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if let Some(index) = entries.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::NotIncreasing { index });
        }
        Ok(FinSeq(entries))
    }

    /// Builds a sequence from a slice the caller knows to be increasing.
    ///
    /// Panics if it is not; meant for literals in tests and generators.
    pub fn from_slice(entries: &[u32]) -> Self {
        Self::new(entries.to_vec()).expect("entries must be strictly increasing")
    }

    pub fn singleton(n: u32) -> Self {
        FinSeq(vec![n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Option<u32> {
        self.0.get(i).copied()
    }

    pub fn first(&self) -> Option<u32> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// The initial segment of length `i`.
    pub fn restrict(&self, i: usize) -> Result<FinSeq> {
        if i > self.len() {
            return Err(Error::OutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(FinSeq(self.0[..i].to_vec()))
    }

    /// All proper initial segments, shortest first.
    pub fn proper_prefixes(&self) -> impl Iterator<Item = FinSeq> + '_ {
        (0..self.len()).map(move |i| FinSeq(self.0[..i].to_vec()))
    }

    pub fn concat(&self, other: &FinSeq) -> Result<FinSeq> {
        if let (Some(left), Some(right)) = (self.last(), other.first()) {
            if left >= right {
                return Err(Error::InvalidConcat { left, right });
            }
        }
        let mut entries = self.0.clone();
        entries.extend_from_slice(&other.0);
        Ok(FinSeq(entries))
    }

    /// Appends `n`, which must exceed the last entry.
    pub fn push(&self, n: u32) -> Result<FinSeq> {
        self.concat(&FinSeq::singleton(n))
    }

    /// The sequence with its least element removed (empty stays empty).
    pub fn tail(&self) -> FinSeq {
        FinSeq(self.0.iter().skip(1).copied().collect())
    }

    pub fn is_initial_segment_of(&self, other: &FinSeq) -> bool {
        is_initial_segment(&self.0, &other.0)
    }

    pub fn is_proper_initial_segment_of(&self, other: &FinSeq) -> bool {
        is_proper_initial_segment(&self.0, &other.0)
    }

    /// `self ⪻ other`: equal length and pointwise `self(i) <= other(i)`.
    pub fn is_dominated_by(&self, other: &FinSeq) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Every increasing sequence pointwise below `self`, in lexicographic order.
    pub fn dominated_below(&self) -> Vec<FinSeq> {
        dominated_below(self)
    }
}

impl FreeSeq {
    pub fn new(entries: Vec<u32>) -> Self {
        FreeSeq(entries)
    }

    pub fn from_slice(entries: &[u32]) -> Self {
        FreeSeq(entries.to_vec())
    }

    pub fn empty() -> Self {
        FreeSeq(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn restrict(&self, i: usize) -> Result<FreeSeq> {
        if i > self.len() {
            return Err(Error::OutOfRange {
                index: i,
                len: self.len(),
            });
        }
        Ok(FreeSeq(self.0[..i].to_vec()))
    }

    pub fn is_initial_segment_of(&self, other: &FreeSeq) -> bool {
        is_initial_segment(&self.0, &other.0)
    }

    pub fn is_proper_initial_segment_of(&self, other: &FreeSeq) -> bool {
        is_proper_initial_segment(&self.0, &other.0)
    }

    pub fn is_binary(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }
}

/// `s ⊑ t` on raw entry slices.
pub fn is_initial_segment(s: &[u32], t: &[u32]) -> bool {
    s.len() <= t.len() && s == &t[..s.len()]
}

/// `s ⊏ t` on raw entry slices.
pub fn is_proper_initial_segment(s: &[u32], t: &[u32]) -> bool {
    s.len() < t.len() && s == &t[..s.len()]
}

/// Enumerates `{ t : lh(t) = lh(s), t increasing, t(i) <= s(i) }`.
///
/// The set is finite and always contains `s`. Output is lexicographic.
pub fn dominated_below(s: &FinSeq) -> Vec<FinSeq> {
    fn extend(bound: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<FinSeq>) {
        let i = prefix.len();
        if i == bound.len() {
            out.push(FinSeq(prefix.clone()));
            return;
        }
        let lo = prefix.last().map_or(0, |&p| p + 1);
        for v in lo..=bound[i] {
            prefix.push(v);
            extend(bound, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(&s.0, &mut Vec::with_capacity(s.len()), &mut out);
    out
}

/// The shift relation `s ◁ t`: some increasing `u` has `s ⊑ u` and `t ⊑ u`
/// with its least element removed.
///
/// Decided directly. `s` fixes `u` on `0..lh(s)` and `t` fixes it on
/// `1..=lh(t)`; the two must agree on the overlap and the combined values
/// must increase. When `s` is empty `u(0)` is free, which only needs a
/// natural below `t(0)`.
pub fn shift_rel(s: &FinSeq, t: &FinSeq) -> bool {
    let len = s.len().max(t.len() + 1);
    let mut u: Vec<Option<u32>> = vec![None; len];
    for (slot, &v) in u.iter_mut().zip(&s.0) {
        *slot = Some(v);
    }
    for (i, &v) in t.0.iter().enumerate() {
        match u[i + 1] {
            Some(w) if w != v => return false,
            _ => u[i + 1] = Some(v),
        }
    }
    match (u[0], u.get(1).copied().flatten()) {
        (None, Some(0)) => return false,
        (Some(a), Some(b)) if a >= b => return false,
        _ => {}
    }
    // entries from index 1 on come from s or t and agree, so they increase
    // iff both sources increase, which the invariant guarantees.
    true
}

impl Ord for FinSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        length_lex(&self.0, &other.0)
    }
}

impl PartialOrd for FinSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FreeSeq {
    fn cmp(&self, other: &Self) -> Ordering {
        length_lex(&self.0, &other.0)
    }
}

impl PartialOrd for FreeSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<u32>> for FinSeq {
    type Error = Error;

    fn try_from(entries: Vec<u32>) -> Result<Self> {
        FinSeq::new(entries)
    }
}

impl From<FinSeq> for Vec<u32> {
    fn from(s: FinSeq) -> Self {
        s.0
    }
}

impl From<Vec<u32>> for FreeSeq {
    fn from(entries: Vec<u32>) -> Self {
        FreeSeq(entries)
    }
}

impl From<FreeSeq> for Vec<u32> {
    fn from(s: FreeSeq) -> Self {
        s.0
    }
}

impl From<FinSeq> for FreeSeq {
    fn from(s: FinSeq) -> Self {
        FreeSeq(s.0)
    }
}

impl AsRef<[u32]> for FinSeq {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl AsRef<[u32]> for FreeSeq {
    fn as_ref(&self) -> &[u32] {
        &self.0
    }
}

impl fmt::Display for FinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_angled(f, &self.0)
    }
}

impl fmt::Debug for FinSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_angled(f, &self.0)
    }
}

impl fmt::Display for FreeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_angled(f, &self.0)
    }
}

impl fmt::Debug for FreeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_angled(f, &self.0)
    }
}
