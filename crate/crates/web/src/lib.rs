//! WebAssembly bindings for the demo page in `www/`.
//!
//! Every export takes and returns JSON text so the page needs no glue
//! beyond `JSON.parse`. The plain `*_json` functions hold the logic and
//! are what the native tests call.

use bqo_core::families::{block_check, smooth_check, star, BlockVerdict, SmoothViolation};
use bqo_core::pouzet::{pouzet_order, verify_order_axioms};
use bqo_core::seqcore::shift_rel;
use bqo_core::{FinSeq, OrderMatrix, RelationMatrix, SeqFamily};
use serde::Serialize;
use wasm_bindgen::prelude::*;

#[derive(Serialize)]
struct SmoothView {
    input_violation: Option<SmoothViolation>,
    star: SeqFamily,
    star_block: BlockVerdict,
}

pub fn smooth_json(family: &str) -> Result<String, String> {
    let c: SeqFamily = serde_json::from_str(family).map_err(|e| e.to_string())?;
    let starred = star(&c).map_err(|e| e.to_string())?;
    let view = SmoothView {
        input_violation: smooth_check(&c),
        star_block: block_check(&starred),
        star: starred,
    };
    Ok(serde_json::to_string(&view).expect("serializable"))
}

#[derive(Serialize)]
struct PouzetView {
    order: OrderMatrix,
    /// Related pairs of `R` that the order drops.
    dropped: Vec<(usize, usize)>,
    is_order: bool,
}

pub fn pouzet_json(relation: &str) -> Result<String, String> {
    let r: RelationMatrix = serde_json::from_str(relation).map_err(|e| e.to_string())?;
    let order = pouzet_order(&r).map_err(|e| e.to_string())?;
    let n = r.size();
    let dropped = (0..n)
        .flat_map(|m| (0..n).map(move |k| (m, k)))
        .filter(|&(m, k)| r.get(m, k) && !order.get(m, k))
        .collect();
    let view = PouzetView {
        is_order: verify_order_axioms(&order).is_none(),
        dropped,
        order,
    };
    Ok(serde_json::to_string(&view).expect("serializable"))
}

#[derive(Serialize)]
struct ShiftView {
    related: bool,
    /// The shortest witness `u` when `s ◁ t`.
    witness: Option<Vec<u32>>,
}

pub fn shift_json(s: &str, t: &str) -> Result<String, String> {
    let s: FinSeq = serde_json::from_str(s).map_err(|e| e.to_string())?;
    let t: FinSeq = serde_json::from_str(t).map_err(|e| e.to_string())?;
    let related = shift_rel(&s, &t);
    // u(i) = s(i) and u(i+1) = t(i); with s empty any u(0) below t(0) will do
    let witness = related.then(|| {
        (0..s.len().max(t.len() + 1))
            .map(|i| s.get(i).or_else(|| i.checked_sub(1).and_then(|j| t.get(j))).unwrap_or(0))
            .collect()
    });
    Ok(serde_json::to_string(&ShiftView { related, witness }).expect("serializable"))
}

#[wasm_bindgen]
pub fn smooth(family: &str) -> Result<String, JsError> {
    smooth_json(family).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn pouzet(relation: &str) -> Result<String, JsError> {
    pouzet_json(relation).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn shift(s: &str, t: &str) -> Result<String, JsError> {
    shift_json(s, t).map_err(|e| JsError::new(&e))
}
