//! Seeded generators for test corpora and named fixtures.
//!
//! Schematic families such as `[ℕ]²` or `{<0>} ∪ {<n,m> : 1 <= n < m}` are
//! materialized inside a window here. Random generators take a caller's
//! RNG so every corpus is reproducible from a seed.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arrays::{perfect_check_shift, BlockArray};
use crate::families::{is_smooth, SeqFamily, Window};
use crate::pouzet::RelationMatrix;
use crate::reduction::{SigmaCode, Triple};
use crate::seqcore::{FinSeq, FreeSeq};

pub const DEFAULT_SEED: u64 = 0x5eed_b00c;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `{<n> : 1 <= n < N} ∪ {<0,m> : 1 <= m < N}`
pub fn nonuniform_block(window: Window) -> SeqFamily {
    let singles = (1..window.n).map(FinSeq::singleton);
    let pairs = (1..window.n).map(|m| FinSeq::from_slice(&[0, m]));
    SeqFamily::new(window, singles.chain(pairs)).expect("fits a window with L >= 2")
}

/// `{<0>} ∪ {<n,m> : 1 <= n < m < N}`
pub fn zero_then_pairs(window: Window) -> SeqFamily {
    let pairs = (1..window.n).flat_map(|a| (a + 1..window.n).map(move |b| FinSeq::from_slice(&[a, b])));
    SeqFamily::new(window, std::iter::once(FinSeq::singleton(0)).chain(pairs))
        .expect("fits a window with L >= 2")
}

/// The window blocks every suite runs over, with their names.
pub fn fixture_blocks(window: Window) -> Vec<(String, SeqFamily)> {
    let mut out = Vec::new();
    for n in 1..=window.l.min(3) {
        out.push((format!("uniform{n}"), SeqFamily::uniform(window, n).expect("n <= L")));
    }
    if window.l >= 2 {
        out.push(("nonuniform".into(), nonuniform_block(window)));
        out.push(("zero-then-pairs".into(), zero_then_pairs(window)));
    }
    out
}

pub fn random_increasing<R: Rng>(rng: &mut R, n: u32, len: usize) -> FinSeq {
    let mut v: Vec<u32> = sample(rng, n as usize, len).into_iter().map(|i| i as u32).collect();
    v.sort_unstable();
    FinSeq::new(v).expect("distinct sorted")
}

/// A window block grown from `[N]^1` by repeatedly replacing a member with
/// all its one-step extensions, stopping before `max_members` is passed.
pub fn random_block<R: Rng>(rng: &mut R, window: Window, max_members: usize) -> SeqFamily {
    let mut family = SeqFamily::uniform(window, 1).expect("L >= 1");
    let splits = rng.gen_range(0..=6);
    for _ in 0..splits {
        let candidates: Vec<FinSeq> = family
            .iter()
            .filter(|s| s.len() < window.l && s.last().is_some_and(|e| e + 1 < window.n))
            .cloned()
            .collect();
        if candidates.is_empty() {
            break;
        }
        let s = &candidates[rng.gen_range(0..candidates.len())];
        let last = s.last().expect("nonempty");
        let children: Vec<FinSeq> = (last + 1..window.n)
            .map(|a| s.push(a).expect("a > last"))
            .collect();
        if family.len() - 1 + children.len() > max_members {
            continue;
        }
        let mut next: Vec<FinSeq> = family.iter().filter(|m| *m != s).cloned().collect();
        next.extend(children);
        family = SeqFamily::new(window, next).expect("children stay in window");
    }
    family
}

/// An arbitrary family: a random handful of window sequences.
pub fn random_family<R: Rng>(rng: &mut R, window: Window) -> SeqFamily {
    let mut family = SeqFamily::empty(window);
    let count = rng.gen_range(1..=2 * window.n as usize);
    for _ in 0..count {
        let len = rng.gen_range(1..=window.l.min(window.n as usize));
        let s = random_increasing(rng, window.n, len);
        family.insert(s).expect("inside window");
    }
    family
}

/// Reflexive relation with off-diagonal density `p`.
pub fn random_reflexive<R: Rng>(rng: &mut R, n: usize, p: f64) -> RelationMatrix {
    let mut r = RelationMatrix::identity(n);
    for m in 0..n {
        for k in 0..n {
            if m != k && rng.gen_bool(p) {
                r.set(m, k, true);
            }
        }
    }
    r
}

fn random_word<R: Rng>(rng: &mut R, len: usize, alphabet: u32) -> FreeSeq {
    FreeSeq::new((0..len).map(|_| rng.gen_range(0..alphabet)).collect())
}

/// A code together with the point and the y-prefixes to test it at.
#[derive(Debug, Clone)]
pub struct CodeCase {
    pub code: SigmaCode,
    pub x: FreeSeq,
    pub ys: Vec<FreeSeq>,
}

/// A random code of at most `max_triples` triples.
///
/// Usually a random window block is planted along one `(x, y)` branch, so
/// that `C_{x,y}` is a block for the first y-prefix; the rest are random
/// triples, mostly agreeing with `x`, kept when incomparable with what is
/// already there.
pub fn random_code<R: Rng>(rng: &mut R, window: Window, max_triples: usize, y_count: usize) -> CodeCase {
    let l = window.l;
    let x0 = random_word(rng, l + 2, 3);
    let y0 = random_word(rng, l, 2);
    let mut code = SigmaCode::empty(window);
    if rng.gen_bool(0.6) {
        let block = random_block(rng, window, max_triples);
        for s in block.iter() {
            let k = s.len();
            code.try_insert(Triple::new(
                x0.restrict(k).expect("k <= L"),
                y0.restrict(k).expect("k <= L"),
                s.clone(),
            ));
        }
    }
    let noise = rng.gen_range(0..=max_triples.saturating_sub(code.len()));
    for _ in 0..noise {
        let k = rng.gen_range(1..=l.min(window.n as usize));
        let x = if rng.gen_bool(0.7) {
            x0.restrict(k).expect("k <= L")
        } else {
            random_word(rng, k, 3)
        };
        let y = if rng.gen_bool(0.4) {
            y0.restrict(k).expect("k <= L")
        } else {
            random_word(rng, k, 2)
        };
        code.try_insert(Triple::new(x, y, random_increasing(rng, window.n, k)));
    }
    let mut ys = vec![y0.clone()];
    while ys.len() < y_count {
        ys.push(random_word(rng, l, 2));
    }
    CodeCase { code, x: x0, ys }
}

/// A sequence-valued array on a block together with a smooth codomain
/// containing its values, built so it is perfect for `◁`.
#[derive(Debug, Clone)]
pub struct ProjectionCase {
    pub name: String,
    pub codomain: SeqFamily,
    pub array: BlockArray,
}

/// Perfect arrays on `block`: projections `s ↦ s[min(k, lh s)]` and the
/// tail map `s ↦ s` minus its least element, kept when the range is smooth
/// and the array is window-perfect.
pub fn projection_cases(block: &SeqFamily) -> Vec<ProjectionCase> {
    let mut raw: Vec<(String, BlockArray)> = Vec::new();
    for k in 0..=block.max_len().unwrap_or(0) {
        raw.push((
            format!("project{k}"),
            BlockArray::with_sequences(block.clone(), |s| s.restrict(k.min(s.len())).expect("k <= lh")),
        ));
    }
    raw.push(("tail".into(), BlockArray::with_sequences(block.clone(), FinSeq::tail)));
    raw.push(("identity".into(), BlockArray::with_sequences(block.clone(), FinSeq::clone)));

    raw.into_iter()
        .filter_map(|(name, array)| {
            let values = array.seq_values().expect("sequence valued");
            let codomain = SeqFamily::new(block.window(), values.values().cloned()).ok()?;
            let perfect = perfect_check_shift(&array).expect("sequence valued").is_none();
            (is_smooth(&codomain) && perfect).then_some(ProjectionCase {
                name,
                codomain,
                array,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{block_check, star};

    #[test]
    fn random_blocks_are_window_blocks() {
        let mut rng = seeded(7);
        for _ in 0..100 {
            let n = rng.gen_range(3..=10);
            let l = rng.gen_range(1..=3);
            let b = random_block(&mut rng, Window::new(n, l), 40);
            assert!(block_check(&b).is_block(), "{b:?}");
            assert!(b.len() <= 40.max(n as usize));
        }
    }

    #[test]
    fn codes_respect_invariants() {
        let mut rng = seeded(11);
        for _ in 0..50 {
            let case = random_code(&mut rng, Window::new(8, 3), 40, 4);
            assert!(case.code.len() <= 40 + 8);
            assert_eq!(case.ys.len(), 4);
            assert!(case.x.len() >= case.code.max_len());
            let text = serde_json::to_string(&case.code).unwrap();
            assert_eq!(serde_json::from_str::<SigmaCode>(&text).unwrap(), case.code);
        }
    }

    #[test]
    fn fixtures_smooth_to_blocks() {
        for (name, c) in fixture_blocks(Window::new(8, 3)) {
            assert!(block_check(&c).is_block(), "{name}");
            assert!(block_check(&star(&c).unwrap()).is_block(), "{name}");
        }
    }

    #[test]
    fn projections_exist() {
        let b = SeqFamily::uniform(Window::new(7, 3), 3).unwrap();
        let names: Vec<String> = projection_cases(&b).into_iter().map(|c| c.name).collect();
        assert!(names.contains(&"project1".to_string()), "{names:?}");
        assert!(names.contains(&"tail".to_string()), "{names:?}");
    }
}
