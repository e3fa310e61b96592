//! The reduction from a code of a co-analytic-over-analytic set to
//! relations on countable sets.
//!
//! A [`SigmaCode`] is a finite set of equal-length triples `(x', y', s)`.
//! For a point `x` of Baire space it yields
//!
//! - `C_x = {(σ, s) : (x[lh σ], σ, s) ∈ C}`,
//! - `D_x`: pairs `(σ, s)` of equal length such that every `t ⪻ s` has some
//!   `i <= lh(s)` with `(σ[i], t[i]) ∈ C_x`,
//! - `Q_x`: members of `D_x` with no proper initial pair in `D_x`,
//! - `R_x`: `(σ, s) R_x (τ, t)` iff `σ ⋢ τ` or `s ⋪ t`.
//!
//! Only finitely many triples are consulted, so everything depends on a
//! prefix of `x` of length at most the longest triple. Whether `x` lies in
//! the coded set is never decided here.

use std::cell::RefCell;
use std::collections::{BTreeSet, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::arrays::{find_good_pair, shift_pair_count, BlockArray};
use crate::error::{Error, Result};
use crate::families::{block_check, is_antichain, BlockVerdict, SeqFamily, Smoothing, Window};
use crate::pouzet::RelationMatrix;
use crate::seqcore::{dominated_below, shift_rel, FinSeq, FreeSeq};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Triple {
    pub x: FreeSeq,
    pub y: FreeSeq,
    pub s: FinSeq,
}

impl Triple {
    pub fn new(x: FreeSeq, y: FreeSeq, s: FinSeq) -> Self {
        Triple { x, y, s }
    }

    pub fn len(&self) -> usize {
        self.s.len()
    }

    pub fn is_empty(&self) -> bool {
        self.s.is_empty()
    }

    /// Componentwise `⊏`.
    pub fn is_proper_initial_segment_of(&self, other: &Triple) -> bool {
        self.x.is_proper_initial_segment_of(&other.x)
            && self.y.is_proper_initial_segment_of(&other.y)
            && self.s.is_proper_initial_segment_of(&other.s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCode", into = "RawCode")]
pub struct SigmaCode {
    window: Window,
    triples: BTreeSet<Triple>,
}

#[derive(Serialize, Deserialize)]
struct RawCode {
    window: Window,
    triples: Vec<Triple>,
}

impl TryFrom<RawCode> for SigmaCode {
    type Error = Error;

    fn try_from(raw: RawCode) -> Result<Self> {
        SigmaCode::new(raw.window, raw.triples)
    }
}

impl From<SigmaCode> for RawCode {
    fn from(c: SigmaCode) -> Self {
        RawCode {
            window: c.window,
            triples: c.triples.into_iter().collect(),
        }
    }
}

impl SigmaCode {
    pub fn empty(window: Window) -> Self {
        SigmaCode {
            window,
            triples: BTreeSet::new(),
        }
    }

    /// Validates lengths, binarity, the window, absence of the empty triple
    /// and componentwise incomparability.
    pub fn new(window: Window, triples: impl IntoIterator<Item = Triple>) -> Result<Self> {
        let mut code = SigmaCode::empty(window);
        for t in triples {
            code.insert(t)?;
        }
        Ok(code)
    }

    pub fn insert(&mut self, t: Triple) -> Result<bool> {
        if t.x.len() != t.s.len() || t.y.len() != t.s.len() {
            return Err(Error::InvalidCode(format!(
                "triple ({}, {}, {}) has unequal lengths",
                t.x, t.y, t.s
            )));
        }
        if t.is_empty() {
            return Err(Error::InvalidCode("the empty triple is not allowed".into()));
        }
        if let Some(&bad) = t.y.entries().iter().find(|&&e| e > 1) {
            return Err(Error::NonBinary(bad));
        }
        self.window.check(&t.s)?;
        if let Some(other) = self
            .triples
            .iter()
            .find(|o| o.is_proper_initial_segment_of(&t) || t.is_proper_initial_segment_of(o))
        {
            return Err(Error::InvalidCode(format!(
                "triples ({}, {}, {}) and ({}, {}, {}) are comparable",
                other.x, other.y, other.s, t.x, t.y, t.s
            )));
        }
        Ok(self.triples.insert(t))
    }

    /// Like [`insert`](Self::insert) but reports rejection as `false`.
    pub fn try_insert(&mut self, t: Triple) -> bool {
        self.insert(t).unwrap_or(false)
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn triples(&self) -> &BTreeSet<Triple> {
        &self.triples
    }

    pub fn len(&self) -> usize {
        self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.triples.is_empty()
    }

    /// How much of `x` the code can ever consult.
    pub fn max_len(&self) -> usize {
        self.triples.iter().map(Triple::len).max().unwrap_or(0)
    }
}

/// A point `(σ, s)` of `Q_x`; `σ` is binary.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QxPoint {
    pub y: FreeSeq,
    pub s: FinSeq,
}

impl QxPoint {
    pub fn new(y: FreeSeq, s: FinSeq) -> Self {
        QxPoint { y, s }
    }
}

/// `(σ, s) R_x (τ, t)` iff `σ ⋢ τ` or `s ⋪ t`.
pub fn rx(p: &QxPoint, q: &QxPoint) -> bool {
    !p.y.is_initial_segment_of(&q.y) || !shift_rel(&p.s, &q.s)
}

/// `Q_x` inside the window, length-lex ordered. `R_x` is [`rx`] and is
/// recomputed on demand rather than stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReducedRelation {
    pub carrier: Vec<QxPoint>,
}

impl ReducedRelation {
    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn related(&self, i: usize, j: usize) -> bool {
        rx(&self.carrier[i], &self.carrier[j])
    }

    /// `R_x` restricted to the carrier, as a matrix.
    pub fn matrix(&self) -> RelationMatrix {
        relation_on(&self.carrier)
    }
}

/// `R_x` on an arbitrary list of points.
pub fn relation_on(points: &[QxPoint]) -> RelationMatrix {
    RelationMatrix::from_fn(points.len(), |i, j| rx(&points[i], &points[j]))
}

fn binary_words(len: usize) -> impl Iterator<Item = FreeSeq> {
    (0u32..1 << len).map(move |bits| {
        FreeSeq::new((0..len).map(|i| (bits >> (len - 1 - i)) & 1).collect())
    })
}

/// `C_x` and the membership tests that depend on it, for one `(code, x)`.
///
/// `D_x` is memoized: with `U(σ, s)` meaning some `t ⪻ s` avoids `C_x`
/// along `σ`, `U(σ, s)` holds iff `s` itself avoids or some one-step
/// decrement of `s` satisfies `U`.
pub struct Reduction<'a> {
    code: &'a SigmaCode,
    x: FreeSeq,
    cx: HashSet<(FreeSeq, FinSeq)>,
    avoids: RefCell<HashMap<(FreeSeq, FinSeq), bool>>,
    escapes: RefCell<HashMap<(FreeSeq, FinSeq), bool>>,
}

impl<'a> Reduction<'a> {
    pub fn new(code: &'a SigmaCode, x: &FreeSeq) -> Result<Self> {
        let need = code.max_len();
        if x.len() < need {
            return Err(Error::InsufficientPrefix {
                have: x.len(),
                need,
            });
        }
        let cx = code
            .triples()
            .iter()
            .filter(|t| t.x.is_initial_segment_of(x))
            .map(|t| (t.y.clone(), t.s.clone()))
            .collect();
        Ok(Reduction {
            code,
            x: x.restrict(need).expect("checked length"),
            cx,
            avoids: RefCell::new(HashMap::new()),
            escapes: RefCell::new(HashMap::new()),
        })
    }

    pub fn code(&self) -> &SigmaCode {
        self.code
    }

    /// The consulted prefix of `x`.
    pub fn x_prefix(&self) -> &FreeSeq {
        &self.x
    }

    pub fn in_cx(&self, sigma: &FreeSeq, s: &FinSeq) -> bool {
        self.cx.contains(&(sigma.clone(), s.clone()))
    }

    /// `C_x`, length-lex ordered.
    pub fn cx(&self) -> Vec<QxPoint> {
        let mut v: Vec<QxPoint> = self
            .cx
            .iter()
            .map(|(y, s)| QxPoint::new(y.clone(), s.clone()))
            .collect();
        v.sort();
        v
    }

    /// `D_x` by its definition: every `t ⪻ s` meets `C_x` along `σ`.
    pub fn in_dx_direct(&self, sigma: &FreeSeq, s: &FinSeq) -> bool {
        sigma.len() == s.len()
            && dominated_below(s).iter().all(|t| {
                (0..=t.len()).any(|i| {
                    self.in_cx(
                        &sigma.restrict(i).expect("i <= lh"),
                        &t.restrict(i).expect("i <= lh"),
                    )
                })
            })
    }

    pub fn in_dx(&self, sigma: &FreeSeq, s: &FinSeq) -> bool {
        sigma.len() == s.len() && !self.escapes(sigma, s)
    }

    // no i <= lh(t) puts (σ[i], t[i]) into C_x
    fn avoids(&self, sigma: &FreeSeq, t: &FinSeq) -> bool {
        let key = (sigma.clone(), t.clone());
        if let Some(&v) = self.avoids.borrow().get(&key) {
            return v;
        }
        let k = t.len();
        let v = !self.cx.contains(&key)
            && (k == 0
                || self.avoids(
                    &sigma.restrict(k - 1).expect("k >= 1"),
                    &t.restrict(k - 1).expect("k >= 1"),
                ));
        self.avoids.borrow_mut().insert(key, v);
        v
    }

    // some t ⪻ s avoids C_x along σ
    fn escapes(&self, sigma: &FreeSeq, s: &FinSeq) -> bool {
        let key = (sigma.clone(), s.clone());
        if let Some(&v) = self.escapes.borrow().get(&key) {
            return v;
        }
        let e = s.entries();
        let v = self.avoids(sigma, s)
            || (0..e.len()).any(|i| {
                let floor = if i == 0 { 0 } else { e[i - 1] + 1 };
                if e[i] == floor {
                    return false;
                }
                let mut d = e.to_vec();
                d[i] -= 1;
                self.escapes(sigma, &FinSeq::new(d).expect("still increasing"))
            });
        self.escapes.borrow_mut().insert(key, v);
        v
    }

    /// `(σ, s) ∈ D_x` and no proper initial pair is.
    pub fn in_qx(&self, sigma: &FreeSeq, s: &FinSeq) -> bool {
        self.in_dx(sigma, s)
            && (0..s.len()).all(|i| {
                !self.in_dx(
                    &sigma.restrict(i).expect("i < lh"),
                    &s.restrict(i).expect("i < lh"),
                )
            })
    }

    pub fn in_qx_direct(&self, sigma: &FreeSeq, s: &FinSeq) -> bool {
        self.in_dx_direct(sigma, s)
            && (0..s.len()).all(|i| {
                !self.in_dx_direct(
                    &sigma.restrict(i).expect("i < lh"),
                    &s.restrict(i).expect("i < lh"),
                )
            })
    }

    /// All of `Q_x` inside the code's window.
    pub fn enumerate_qx(&self) -> ReducedRelation {
        let mut carrier = Vec::new();
        for s in self.code.window().all_sequences() {
            for sigma in binary_words(s.len()) {
                if self.in_qx(&sigma, &s) {
                    carrier.push(QxPoint::new(sigma, s.clone()));
                }
            }
        }
        carrier.sort();
        ReducedRelation { carrier }
    }

    /// `C_{x,y} = {s : (y[lh s], s) ∈ C_x}`.
    pub fn cxy(&self, y: &FreeSeq) -> Result<SeqFamily> {
        let window = self.code.window();
        check_y(y, window.l)?;
        let members = self
            .cx
            .iter()
            .filter(|(sigma, _)| sigma.is_initial_segment_of(y))
            .map(|(_, s)| s.clone());
        let family = SeqFamily::new(window, members)?;
        if !is_antichain(&family) {
            return Err(Error::InvalidCode(
                "C_{x,y} has comparable members".into(),
            ));
        }
        Ok(family)
    }

    /// First `s` in the window where `(y[lh s], s) ∈ Q_x` and `s ∈ C*_{x,y}`
    /// disagree. `C*` is taken over the whole window alphabet.
    pub fn sublemma_verify(&self, y: &FreeSeq) -> Result<Option<FinSeq>> {
        let family = self.cxy(y)?;
        let smoothing = Smoothing::over_window(&family);
        for s in self.code.window().all_sequences() {
            let sigma = y.restrict(s.len()).expect("checked y length");
            if self.in_qx(&sigma, &s) != smoothing.in_cstar(&s) {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// The array `s ↦ (y[lh s], s)` on `C*_{x,y}`, checked for window badness
    /// against `R_x`.
    pub fn bad_array_witness(&self, y: &FreeSeq) -> Result<BadArrayReport> {
        let family = self.cxy(y)?;
        let starred = Smoothing::over_window(&family)
            .star()
            .map_err(|e| Error::NotABlock(format!("C*_{{x,y}} is not available: {e}")))?;
        let block = block_check(&starred);
        if !block.is_block() {
            return Err(Error::NotABlock(format!(
                "C*_{{x,y}} has verdict {:?}",
                block.status
            )));
        }
        let points: Vec<QxPoint> = starred
            .iter()
            .map(|s| QxPoint::new(y.restrict(s.len()).expect("checked y length"), s.clone()))
            .collect();
        let values_in_qx = points.iter().all(|p| self.in_qx(&p.y, &p.s));
        let relation = relation_on(&points);
        let array = BlockArray::with_indices(starred.clone(), |s| {
            starred.iter().position(|m| m == s).expect("member")
        });
        let good_pair = find_good_pair(&array, &relation)?;
        Ok(BadArrayReport {
            block,
            pairs_checked: shift_pair_count(&starred),
            values_in_qx,
            good_pair,
            carrier: points,
            array,
        })
    }
}

fn check_y(y: &FreeSeq, need: usize) -> Result<()> {
    if y.len() < need {
        return Err(Error::InsufficientPrefix {
            have: y.len(),
            need,
        });
    }
    if let Some(&bad) = y.entries().iter().find(|&&e| e > 1) {
        return Err(Error::NonBinary(bad));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BadArrayReport {
    /// Verdict for `C*_{x,y}`.
    pub block: BlockVerdict,
    /// Number of `◁`-pairs of the block that were examined.
    pub pairs_checked: usize,
    /// Every array value is a point of `Q_x`.
    pub values_in_qx: bool,
    /// A good pair, which would contradict badness.
    pub good_pair: Option<(FinSeq, FinSeq)>,
    /// Array values, indexed by the array.
    pub carrier: Vec<QxPoint>,
    pub array: BlockArray,
}

impl BadArrayReport {
    pub fn is_bad(&self) -> bool {
        self.good_pair.is_none() && self.values_in_qx
    }
}

pub fn cx(code: &SigmaCode, x: &FreeSeq) -> Result<Vec<QxPoint>> {
    Ok(Reduction::new(code, x)?.cx())
}

pub fn in_dx(code: &SigmaCode, x: &FreeSeq, sigma: &FreeSeq, s: &FinSeq) -> Result<bool> {
    Ok(Reduction::new(code, x)?.in_dx_direct(sigma, s))
}

pub fn in_qx(code: &SigmaCode, x: &FreeSeq, sigma: &FreeSeq, s: &FinSeq) -> Result<bool> {
    Ok(Reduction::new(code, x)?.in_qx_direct(sigma, s))
}

pub fn enumerate_qx(code: &SigmaCode, x: &FreeSeq) -> Result<ReducedRelation> {
    Ok(Reduction::new(code, x)?.enumerate_qx())
}

pub fn cxy(code: &SigmaCode, x: &FreeSeq, y: &FreeSeq) -> Result<SeqFamily> {
    Reduction::new(code, x)?.cxy(y)
}

pub fn sublemma_verify(code: &SigmaCode, x: &FreeSeq, y: &FreeSeq) -> Result<Option<FinSeq>> {
    Reduction::new(code, x)?.sublemma_verify(y)
}

pub fn bad_array_witness(code: &SigmaCode, x: &FreeSeq, y: &FreeSeq) -> Result<BadArrayReport> {
    Reduction::new(code, x)?.bad_array_witness(y)
}
