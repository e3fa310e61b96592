//! Finite sequence families read as window truncations of blocks.
//!
//! A [`SeqFamily`] lives inside a [`Window`]: entries below `N`, lengths at
//! most `L`. The smoothing operator `C ↦ C*` is computed through the trees
//! `T(C)` (sequences with no initial segment in `C`) and `T*(C)` (sequences
//! pointwise dominating some member of `T(C)`); `C*` collects the minimal
//! sequences that leave `T*(C)`.
//!
//! Sequences are drawn from an [`Alphabet`]. The definition works over
//! `base(C)`; the reduction needs the whole window instead, since a family
//! whose base misses small numbers would otherwise smooth to sequences that
//! still dominate uncovered ones.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::seqcore::{dominated_below, FinSeq};

/// Truncation bounds: entries `< n`, lengths `<= l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Window {
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "L")]
    pub l: usize,
}

impl Window {
    pub fn new(n: u32, l: usize) -> Self {
        Window { n, l }
    }

    pub fn contains(&self, s: &FinSeq) -> bool {
        s.len() <= self.l && s.last().is_none_or(|e| e < self.n)
    }

    pub fn check(&self, s: &FinSeq) -> Result<()> {
        if self.contains(s) {
            Ok(())
        } else {
            Err(Error::OutsideWindow {
                seq: s.clone(),
                n: self.n,
                l: self.l,
            })
        }
    }

    /// Every increasing sequence inside the window, length-lex ordered.
    pub fn all_sequences(&self) -> Vec<FinSeq> {
        let alphabet: Vec<u32> = (0..self.n).collect();
        (0..=self.l)
            .flat_map(|k| increasing_sequences(&alphabet, k))
            .collect()
    }
}

/// All increasing sequences of length `len` over a sorted alphabet, in
/// lexicographic order.
pub fn increasing_sequences(alphabet: &[u32], len: usize) -> Vec<FinSeq> {
    fn go(alphabet: &[u32], from: usize, len: usize, cur: &mut Vec<u32>, out: &mut Vec<FinSeq>) {
        if cur.len() == len {
            out.push(FinSeq::new(cur.clone()).expect("alphabet is sorted"));
            return;
        }
        let need = len - cur.len();
        for i in from..alphabet.len() {
            if alphabet.len() - i < need {
                break;
            }
            cur.push(alphabet[i]);
            go(alphabet, i + 1, len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(alphabet, 0, len, &mut Vec::with_capacity(len), &mut out);
    out
}

/// A finite set of increasing sequences inside a window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawFamily", into = "RawFamily")]
pub struct SeqFamily {
    window: Window,
    members: BTreeSet<FinSeq>,
}

#[derive(Serialize, Deserialize)]
struct RawFamily {
    window: Window,
    members: Vec<FinSeq>,
}

impl TryFrom<RawFamily> for SeqFamily {
    type Error = Error;

    fn try_from(raw: RawFamily) -> Result<Self> {
        let mut family = SeqFamily::empty(raw.window);
        for s in raw.members {
            raw.window.check(&s)?;
            if !family.members.insert(s.clone()) {
                return Err(Error::InvalidWindow(format!("duplicate member {s}")));
            }
        }
        Ok(family)
    }
}

impl From<SeqFamily> for RawFamily {
    fn from(f: SeqFamily) -> Self {
        RawFamily {
            window: f.window,
            members: f.members.into_iter().collect(),
        }
    }
}

impl SeqFamily {
    pub fn empty(window: Window) -> Self {
        SeqFamily {
            window,
            members: BTreeSet::new(),
        }
    }

    pub fn new(window: Window, members: impl IntoIterator<Item = FinSeq>) -> Result<Self> {
        let mut family = SeqFamily::empty(window);
        for s in members {
            family.insert(s)?;
        }
        Ok(family)
    }

    /// `[N]^n`: every increasing sequence of length `n` inside the window.
    pub fn uniform(window: Window, n: usize) -> Result<Self> {
        if n > window.l {
            return Err(Error::InvalidWindow(format!(
                "uniform length {n} exceeds L={}",
                window.l
            )));
        }
        let alphabet: Vec<u32> = (0..window.n).collect();
        SeqFamily::new(window, increasing_sequences(&alphabet, n))
    }

    pub fn insert(&mut self, s: FinSeq) -> Result<bool> {
        self.window.check(&s)?;
        Ok(self.members.insert(s))
    }

    pub fn window(&self) -> Window {
        self.window
    }

    /// Same members, different window. Fails if a member falls outside.
    pub fn with_window(&self, window: Window) -> Result<Self> {
        SeqFamily::new(window, self.members.iter().cloned())
    }

    pub fn members(&self) -> &BTreeSet<FinSeq> {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = &FinSeq> {
        self.members.iter()
    }

    pub fn contains(&self, s: &FinSeq) -> bool {
        self.members.contains(s)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn max_len(&self) -> Option<usize> {
        self.members.iter().map(FinSeq::len).max()
    }

    pub fn base(&self) -> BTreeSet<u32> {
        base(self)
    }
}

/// Every natural occurring in some member.
pub fn base(c: &SeqFamily) -> BTreeSet<u32> {
    c.iter().flat_map(|s| s.entries().iter().copied()).collect()
}

/// A pair `s, t ∈ C` with `lh(s) < lh(t)` and `t[lh(s)] ⪻ s`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SmoothViolation {
    pub shorter: FinSeq,
    pub longer: FinSeq,
}

/// Smoothness check. `None` means smooth; otherwise the first violating
/// pair in length-lex order.
pub fn smooth_check(c: &SeqFamily) -> Option<SmoothViolation> {
    for s in c.iter() {
        for t in c.iter().filter(|t| t.len() > s.len()) {
            let cut = t.restrict(s.len()).expect("t is longer than s");
            if cut.is_dominated_by(s) {
                return Some(SmoothViolation {
                    shorter: s.clone(),
                    longer: t.clone(),
                });
            }
        }
    }
    None
}

pub fn is_smooth(c: &SeqFamily) -> bool {
    smooth_check(c).is_none()
}

fn over_base(c: &SeqFamily, s: &FinSeq) -> bool {
    let base = base(c);
    s.entries().iter().all(|e| base.contains(e))
}

/// `s ∈ T(C)`: drawn from `base(C)` with no initial segment in `C`.
pub fn in_tc(c: &SeqFamily, s: &FinSeq) -> bool {
    over_base(c, s) && (0..=s.len()).all(|i| !c.contains(&s.restrict(i).expect("i <= lh(s)")))
}

/// `s ∈ T*(C)`: some `t ⪻ s` lies in `T(C)`.
pub fn in_tstar(c: &SeqFamily, s: &FinSeq) -> bool {
    over_base(c, s) && dominated_below(s).iter().any(|t| in_tc(c, t))
}

/// `s ∈ C*`: `s` leaves `T*(C)` while all its proper initial segments stay in.
pub fn in_cstar(c: &SeqFamily, s: &FinSeq) -> bool {
    over_base(c, s) && !in_tstar(c, s) && s.proper_prefixes().all(|p| in_tstar(c, &p))
}

/// Where the sequences of `T(C)`, `T*(C)` and `C*` take their entries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// `base(C)`, as in the definition of the smoothing.
    Base,
    /// Every natural below the window bound `N`.
    Window,
}

/// Memoized smoothing of one family over a fixed alphabet.
///
/// `T*` membership is computed by unit decrements: the naturals `t ⪻ s`
/// are all reachable from `s` by lowering one coordinate at a time while
/// staying increasing, so `s ∈ T*` iff `s ∈ T` or some one-step decrement
/// is in `T*`.
pub struct Smoothing<'a> {
    family: &'a SeqFamily,
    allowed: Vec<bool>,
    alphabet: Vec<u32>,
    tree: RefCell<HashMap<FinSeq, bool>>,
    star_tree: RefCell<HashMap<FinSeq, bool>>,
}

impl<'a> Smoothing<'a> {
    pub fn new(family: &'a SeqFamily, alphabet: Alphabet) -> Self {
        let n = family.window().n;
        let alphabet: Vec<u32> = match alphabet {
            Alphabet::Base => base(family).into_iter().collect(),
            Alphabet::Window => (0..n).collect(),
        };
        let mut allowed = vec![false; n as usize];
        for &a in &alphabet {
            allowed[a as usize] = true;
        }
        Smoothing {
            family,
            allowed,
            alphabet,
            tree: RefCell::new(HashMap::new()),
            star_tree: RefCell::new(HashMap::new()),
        }
    }

    pub fn over_base(family: &'a SeqFamily) -> Self {
        Self::new(family, Alphabet::Base)
    }

    pub fn over_window(family: &'a SeqFamily) -> Self {
        Self::new(family, Alphabet::Window)
    }

    pub fn family(&self) -> &SeqFamily {
        self.family
    }

    pub fn alphabet(&self) -> &[u32] {
        &self.alphabet
    }

    pub fn in_alphabet(&self, s: &FinSeq) -> bool {
        s.entries()
            .iter()
            .all(|&e| self.allowed.get(e as usize).copied().unwrap_or(false))
    }

    pub fn in_tc(&self, s: &FinSeq) -> bool {
        self.in_alphabet(s) && self.tree_member(s)
    }

    fn tree_member(&self, s: &FinSeq) -> bool {
        if let Some(&v) = self.tree.borrow().get(s) {
            return v;
        }
        let v = !self.family.contains(s)
            && (s.is_empty() || self.tree_member(&s.restrict(s.len() - 1).expect("nonempty")));
        self.tree.borrow_mut().insert(s.clone(), v);
        v
    }

    pub fn in_tstar(&self, s: &FinSeq) -> bool {
        self.in_alphabet(s) && self.star_member(s)
    }

    fn star_member(&self, s: &FinSeq) -> bool {
        if let Some(&v) = self.star_tree.borrow().get(s) {
            return v;
        }
        let v = self.tree_member(s) || self.decrements(s).any(|d| self.star_member(&d));
        self.star_tree.borrow_mut().insert(s.clone(), v);
        v
    }

    // one-step decrements that stay increasing and inside the alphabet
    fn decrements<'s>(&'s self, s: &'s FinSeq) -> impl Iterator<Item = FinSeq> + 's {
        let e = s.entries();
        (0..e.len()).filter_map(move |i| {
            let floor = if i == 0 { 0 } else { e[i - 1] + 1 };
            let lower = self.alphabet.iter().rev().find(|&&a| a < e[i] && a >= floor)?;
            let mut v = e.to_vec();
            v[i] = *lower;
            Some(FinSeq::new(v).expect("still increasing"))
        })
    }

    pub fn in_cstar(&self, s: &FinSeq) -> bool {
        self.in_alphabet(s)
            && !self.star_member(s)
            && s.proper_prefixes().all(|p| self.star_member(&p))
    }

    /// Enumerates `C*` inside the window, breadth first by length.
    ///
    /// Fails with [`Error::WindowExhaustion`] if `T*(C)` still contains a
    /// sequence of length `L`, or if nothing ever leaves `T*(C)`.
    pub fn star(&self) -> Result<SeqFamily> {
        let window = self.family.window();
        let mut out = SeqFamily::empty(window);
        let root = FinSeq::empty();
        if !self.star_member(&root) {
            out.insert(root)?;
            return Ok(out);
        }
        let mut frontier = vec![root];
        for _ in 0..window.l {
            let mut next = Vec::new();
            for s in &frontier {
                let lo = s.last().map_or(0, |e| e + 1);
                for &a in self.alphabet.iter().filter(|&&a| a >= lo) {
                    let child = s.push(a)?;
                    if self.star_member(&child) {
                        next.push(child);
                    } else {
                        out.insert(child)?;
                    }
                }
            }
            next.sort();
            frontier = next;
        }
        if !frontier.is_empty() || out.is_empty() {
            return Err(Error::WindowExhaustion { l: window.l });
        }
        Ok(out)
    }
}

/// `C*` over `base(C)`.
pub fn star(c: &SeqFamily) -> Result<SeqFamily> {
    Smoothing::over_base(c).star()
}

/// The length-lex least member of `C*` extending `t ∈ C`.
///
/// Meant for window blocks. Fails with [`Error::ExtensionLeavesWindow`]
/// when every branch of `T*(C)` above `t` runs out of window before
/// reaching `C*`; that happens at the top edge, e.g. for `<N-1>`.
pub fn extension_to_star(c: &SeqFamily, t: &FinSeq) -> Result<FinSeq> {
    if !c.contains(t) {
        return Err(Error::StrayValue(t.clone()));
    }
    let starred = star(c)?;
    let found = starred.iter().find(|s| t.is_initial_segment_of(s)).cloned();
    found.ok_or_else(|| Error::ExtensionLeavesWindow(t.clone()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockStatus {
    BlockInWindow,
    NotBlock,
    IndeterminateAtBoundary,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BlockWitness {
    /// Two members with `shorter ⊏ longer`.
    Comparable { shorter: FinSeq, longer: FinSeq },
    /// A sequence over the window alphabet with no initial segment in `C`.
    Uncovered(FinSeq),
    /// The family has no entries at all, so its base cannot be infinite.
    EmptyBase,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockVerdict {
    pub status: BlockStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<BlockWitness>,
}

impl BlockVerdict {
    fn block() -> Self {
        BlockVerdict {
            status: BlockStatus::BlockInWindow,
            witness: None,
        }
    }

    fn not_block(w: BlockWitness) -> Self {
        BlockVerdict {
            status: BlockStatus::NotBlock,
            witness: Some(w),
        }
    }

    pub fn is_block(&self) -> bool {
        self.status == BlockStatus::BlockInWindow
    }
}

/// Window rendering of the block property.
///
/// Incomparability is exact. Coverage walks every increasing sequence over
/// `base(C)` up to length `maxlen(C)`: one of full length with no initial
/// segment in `C` refutes the block property. A shorter uncovered sequence
/// that cannot reach full length over the base is a dead end. If it could
/// not reach full length below `N` either, it sits on the window's top edge
/// and is ignored. Otherwise the base has gaps inside the window and the
/// verdict is indeterminate, with the first such dead end as witness.
pub fn block_check(c: &SeqFamily) -> BlockVerdict {
    let members: Vec<&FinSeq> = c.iter().collect();
    for (i, s) in members.iter().enumerate() {
        for t in &members[i + 1..] {
            if s.is_proper_initial_segment_of(t) {
                return BlockVerdict::not_block(BlockWitness::Comparable {
                    shorter: (*s).clone(),
                    longer: (*t).clone(),
                });
            }
        }
    }
    if c.is_empty() {
        return BlockVerdict::not_block(BlockWitness::Uncovered(FinSeq::empty()));
    }
    let alphabet: Vec<u32> = base(c).into_iter().collect();
    if alphabet.is_empty() {
        return BlockVerdict::not_block(BlockWitness::EmptyBase);
    }
    let depth = c.max_len().expect("nonempty");

    struct Walk<'a> {
        family: &'a SeqFamily,
        alphabet: &'a [u32],
        depth: usize,
        bound: u32,
        dead_end: Option<FinSeq>,
    }

    impl Walk<'_> {
        // Returns an uncovered full-depth sequence below `u`, if any.
        fn visit(&mut self, u: &mut Vec<u32>) -> Option<FinSeq> {
            let seq = FinSeq::new(u.clone()).expect("walk stays increasing");
            if self.family.contains(&seq) {
                return None;
            }
            if u.len() == self.depth {
                return Some(seq);
            }
            let start = match u.last() {
                Some(&l) => self.alphabet.partition_point(|&a| a <= l),
                None => 0,
            };
            let missing = self.depth - u.len();
            if self.alphabet.len() - start < missing {
                let room = match u.last() {
                    Some(&l) => (self.bound - 1 - l) as usize,
                    None => self.bound as usize,
                };
                if room >= missing {
                    self.dead_end.get_or_insert(seq);
                }
                return None;
            }
            for i in start..self.alphabet.len() {
                u.push(self.alphabet[i]);
                let found = self.visit(u);
                u.pop();
                if found.is_some() {
                    return found;
                }
            }
            None
        }
    }

    let mut walk = Walk {
        family: c,
        alphabet: &alphabet,
        depth,
        bound: c.window().n,
        dead_end: None,
    };
    if let Some(u) = walk.visit(&mut Vec::new()) {
        return BlockVerdict::not_block(BlockWitness::Uncovered(u));
    }
    if let Some(u) = walk.dead_end {
        return BlockVerdict {
            status: BlockStatus::IndeterminateAtBoundary,
            witness: Some(BlockWitness::Uncovered(u)),
        };
    }
    BlockVerdict::block()
}

/// Members pairwise incomparable under `⊏`.
pub fn is_antichain(c: &SeqFamily) -> bool {
    let seen: HashSet<&FinSeq> = c.iter().collect();
    c.iter()
        .all(|s| s.proper_prefixes().all(|p| !seen.contains(&p)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fs(e: &[u32]) -> FinSeq {
        FinSeq::from_slice(e)
    }

    fn w(n: u32, l: usize) -> Window {
        Window::new(n, l)
    }

    /// `{<n> : 1 <= n < N} ∪ {<0,m> : 1 <= m < N}`
    fn nonuniform(n: u32, l: usize) -> SeqFamily {
        let singles = (1..n).map(FinSeq::singleton);
        let pairs = (1..n).map(|m| fs(&[0, m]));
        SeqFamily::new(w(n, l), singles.chain(pairs)).unwrap()
    }

    /// `{<0>} ∪ {<n,m> : 1 <= n < m < N}`
    fn zero_then_pairs(n: u32, l: usize) -> SeqFamily {
        let pairs = (1..n).flat_map(|a| (a + 1..n).map(move |b| fs(&[a, b])));
        SeqFamily::new(w(n, l), std::iter::once(fs(&[0])).chain(pairs)).unwrap()
    }

    #[test]
    fn base_cases() {
        let c = SeqFamily::new(w(8, 3), [fs(&[0]), fs(&[1, 3])]).unwrap();
        assert_eq!(base(&c), BTreeSet::from([0, 1, 3]));
        assert!(base(&SeqFamily::empty(w(8, 3))).is_empty());
        let c = SeqFamily::new(w(8, 3), [fs(&[2, 5]), fs(&[2, 7])]).unwrap();
        assert_eq!(base(&c), BTreeSet::from([2, 5, 7]));
    }

    #[test]
    fn window_rejects_outsiders() {
        let mut c = SeqFamily::empty(w(5, 2));
        assert!(c.insert(fs(&[1, 5])).is_err());
        assert!(c.insert(fs(&[0, 1, 2])).is_err());
        assert!(c.insert(fs(&[0, 4])).unwrap());
    }

    #[test]
    fn smooth_cases() {
        let c = SeqFamily::new(w(10, 3), [fs(&[0, 1]), fs(&[2, 9])]).unwrap();
        assert_eq!(smooth_check(&c), None);
        let c = SeqFamily::new(w(10, 3), [fs(&[1]), fs(&[0, 4])]).unwrap();
        assert_eq!(
            smooth_check(&c),
            Some(SmoothViolation {
                shorter: fs(&[1]),
                longer: fs(&[0, 4])
            })
        );
        assert!(is_smooth(&zero_then_pairs(8, 3)));
    }

    #[test]
    fn tree_membership() {
        let c = zero_then_pairs(8, 3);
        assert!(in_tc(&c, &fs(&[])));
        assert!(in_tc(&c, &fs(&[3])));
        assert!(!in_tc(&c, &fs(&[3, 5])));
        assert!(!in_tc(&c, &fs(&[0, 5])));
    }

    #[test]
    fn tstar_membership() {
        let uniform = SeqFamily::uniform(w(8, 3), 2).unwrap();
        assert!(in_tstar(&uniform, &fs(&[4])));
        let c = nonuniform(8, 3);
        assert!(in_tstar(&c, &fs(&[3])));
        assert!(!in_tstar(&c, &fs(&[0, 4])));
    }

    #[test]
    fn cstar_membership() {
        for n in 1..=3 {
            let c = SeqFamily::uniform(w(8, 3), n).unwrap();
            for s in c.iter() {
                assert!(in_cstar(&c, s));
            }
        }
        assert!(in_cstar(&nonuniform(8, 3), &fs(&[2, 6])));
        let c = SeqFamily::new(w(8, 3), [fs(&[0])]).unwrap();
        assert!(in_cstar(&c, &fs(&[0])));
    }

    #[test]
    fn star_cases() {
        let uniform = SeqFamily::uniform(w(8, 3), 2).unwrap();
        assert_eq!(star(&uniform).unwrap(), uniform);
        assert_eq!(star(&nonuniform(8, 3)).unwrap(), uniform);
        assert_eq!(
            star(&SeqFamily::empty(w(8, 3))),
            Err(Error::WindowExhaustion { l: 3 })
        );
    }

    #[test]
    fn star_exhaustion_over_window_alphabet() {
        // T*({<1>}) over the window keeps <0> and everything above it
        let c = SeqFamily::new(w(6, 3), [fs(&[1])]).unwrap();
        assert_eq!(
            Smoothing::over_window(&c).star(),
            Err(Error::WindowExhaustion { l: 3 })
        );
    }

    #[test]
    fn memo_agrees_with_definition() {
        let families = [
            nonuniform(7, 3),
            zero_then_pairs(7, 3),
            SeqFamily::new(w(7, 3), [fs(&[1]), fs(&[0, 4]), fs(&[2, 3, 6])]).unwrap(),
        ];
        for c in &families {
            let memo = Smoothing::over_base(c);
            for s in c.window().all_sequences() {
                assert_eq!(memo.in_tc(&s), in_tc(c, &s), "T at {s}");
                assert_eq!(memo.in_tstar(&s), in_tstar(c, &s), "T* at {s}");
                assert_eq!(memo.in_cstar(&s), in_cstar(c, &s), "C* at {s}");
            }
        }
    }

    #[test]
    fn block_cases() {
        let one = SeqFamily::uniform(w(8, 3), 1).unwrap();
        assert!(block_check(&one).is_block());

        let comparable = SeqFamily::new(w(8, 3), [fs(&[0]), fs(&[0, 1])]).unwrap();
        assert_eq!(
            block_check(&comparable),
            BlockVerdict::not_block(BlockWitness::Comparable {
                shorter: fs(&[0]),
                longer: fs(&[0, 1])
            })
        );

        assert!(block_check(&zero_then_pairs(8, 3)).is_block());
        assert!(block_check(&nonuniform(8, 3)).is_block());
    }

    #[test]
    fn block_uncovered_and_indeterminate() {
        let c = SeqFamily::new(w(8, 3), [fs(&[0, 1]), fs(&[1]), fs(&[2])]).unwrap();
        assert_eq!(
            block_check(&c),
            BlockVerdict::not_block(BlockWitness::Uncovered(fs(&[0, 2])))
        );
        let single = SeqFamily::new(w(8, 3), [fs(&[5])]).unwrap();
        assert!(block_check(&single).is_block());
        // <5> could only continue with 6 or 7, which the base lacks
        let c = SeqFamily::new(w(8, 3), [fs(&[0, 5])]).unwrap();
        assert_eq!(
            block_check(&c),
            BlockVerdict {
                status: BlockStatus::IndeterminateAtBoundary,
                witness: Some(BlockWitness::Uncovered(fs(&[5])))
            }
        );
        // same shape pushed to the top edge is fine
        let c = SeqFamily::new(w(6, 3), [fs(&[0, 5]), fs(&[5])]).unwrap();
        assert!(block_check(&c).is_block());
        assert_eq!(
            block_check(&SeqFamily::new(w(8, 3), [fs(&[])]).unwrap()),
            BlockVerdict::not_block(BlockWitness::EmptyBase)
        );
        assert_eq!(
            block_check(&SeqFamily::empty(w(8, 3))),
            BlockVerdict::not_block(BlockWitness::Uncovered(fs(&[])))
        );
    }

    #[test]
    fn extension_cases() {
        let uniform = SeqFamily::uniform(w(8, 3), 2).unwrap();
        assert_eq!(extension_to_star(&uniform, &fs(&[1, 4])).unwrap(), fs(&[1, 4]));
        let c = nonuniform(8, 3);
        assert_eq!(extension_to_star(&c, &fs(&[1])).unwrap(), fs(&[1, 2]));
        assert_eq!(extension_to_star(&c, &fs(&[0, 3])).unwrap(), fs(&[0, 3]));
        assert_eq!(
            extension_to_star(&c, &fs(&[7])),
            Err(Error::ExtensionLeavesWindow(fs(&[7])))
        );
    }

    #[test]
    fn uniform_fixed_point() {
        for n in 1..=3 {
            let c = SeqFamily::uniform(w(10, 3), n).unwrap();
            assert_eq!(star(&c).unwrap(), c);
        }
    }

    #[test]
    fn json_shape() {
        let c = SeqFamily::new(w(4, 2), [fs(&[1, 3]), fs(&[0])]).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"window":{"N":4,"L":2},"members":[[0],[1,3]]}"#);
        assert_eq!(serde_json::from_str::<SeqFamily>(&text).unwrap(), c);
        assert!(serde_json::from_str::<SeqFamily>(r#"{"window":{"N":4,"L":2},"members":[[0,4]]}"#).is_err());
        assert!(serde_json::from_str::<SeqFamily>(r#"{"window":{"N":4,"L":2},"members":[[0],[0]]}"#).is_err());
    }
}
