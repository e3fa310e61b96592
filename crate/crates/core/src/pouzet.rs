//! Pouzet's partial order inside a binary relation.
//!
//! The carrier is always an initial segment `q_0, …, q_{n-1}` of a fixed
//! enumeration, so elements are their indices. The order is defined row
//! by row: `q_m ⪯ q_k` holds iff `m <= k`, `q_m R q_k`, and every earlier
//! `q_i ⪯ q_m` also has `q_i ⪯ q_k`. Row `m` only reads rows `< m`, which
//! makes the result on the first `k` elements independent of the rest.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Square boolean matrix; `bits[m][k]` means `q_m R q_k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct RelationMatrix {
    n: usize,
    bits: Vec<Vec<bool>>,
}

/// A partial order on indices, compatible with the enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct OrderMatrix {
    n: usize,
    bits: Vec<Vec<bool>>,
}

#[derive(Serialize, Deserialize)]
struct RawMatrix {
    n: usize,
    bits: Vec<Vec<bool>>,
}

fn check_square(n: usize, bits: &[Vec<bool>]) -> Result<()> {
    if bits.len() != n {
        return Err(Error::SizeMismatch {
            left: n,
            right: bits.len(),
        });
    }
    for (row, r) in bits.iter().enumerate() {
        if r.len() != n {
            return Err(Error::RaggedMatrix {
                row,
                found: r.len(),
                expected: n,
            });
        }
    }
    Ok(())
}

impl TryFrom<RawMatrix> for RelationMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        check_square(raw.n, &raw.bits)?;
        Ok(RelationMatrix {
            n: raw.n,
            bits: raw.bits,
        })
    }
}

impl From<RelationMatrix> for RawMatrix {
    fn from(m: RelationMatrix) -> Self {
        RawMatrix { n: m.n, bits: m.bits }
    }
}

impl TryFrom<RawMatrix> for OrderMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        check_square(raw.n, &raw.bits)?;
        Ok(OrderMatrix {
            n: raw.n,
            bits: raw.bits,
        })
    }
}

impl From<OrderMatrix> for RawMatrix {
    fn from(m: OrderMatrix) -> Self {
        RawMatrix { n: m.n, bits: m.bits }
    }
}

impl RelationMatrix {
    pub fn from_bits(bits: Vec<Vec<bool>>) -> Result<Self> {
        let n = bits.len();
        check_square(n, &bits)?;
        Ok(RelationMatrix { n, bits })
    }

    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let bits = (0..n).map(|m| (0..n).map(|k| f(m, k)).collect()).collect();
        RelationMatrix { n, bits }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |m, k| m == k)
    }

    pub fn full(n: usize) -> Self {
        Self::from_fn(n, |_, _| true)
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, m: usize, k: usize) -> bool {
        self.bits[m][k]
    }

    pub fn set(&mut self, m: usize, k: usize, v: bool) {
        self.bits[m][k] = v;
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.bits
    }

    /// The first index where the diagonal is false.
    pub fn first_irreflexive(&self) -> Option<usize> {
        (0..self.n).find(|&i| !self.bits[i][i])
    }

    pub fn is_reflexive(&self) -> bool {
        self.first_irreflexive().is_none()
    }

    /// The relation on the first `k` elements.
    pub fn restrict(&self, k: usize) -> Self {
        let k = k.min(self.n);
        Self::from_fn(k, |m, j| self.bits[m][j])
    }

    pub fn check_index(&self, index: usize) -> Result<()> {
        if index < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfCarrier {
                index,
                size: self.n,
            })
        }
    }
}

impl OrderMatrix {
    pub fn from_bits(bits: Vec<Vec<bool>>) -> Result<Self> {
        let n = bits.len();
        check_square(n, &bits)?;
        Ok(OrderMatrix { n, bits })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, m: usize, k: usize) -> bool {
        self.bits[m][k]
    }

    pub fn rows(&self) -> &[Vec<bool>] {
        &self.bits
    }

    /// Top-left `k × k` block.
    pub fn restrict(&self, k: usize) -> Self {
        let k = k.min(self.n);
        OrderMatrix {
            n: k,
            bits: self.bits[..k].iter().map(|r| r[..k].to_vec()).collect(),
        }
    }

    pub fn as_relation(&self) -> RelationMatrix {
        RelationMatrix {
            n: self.n,
            bits: self.bits.clone(),
        }
    }
}

/// Builds `⪯ ⊆ R`. `R` must be reflexive.
pub fn pouzet_order(r: &RelationMatrix) -> Result<OrderMatrix> {
    if let Some(i) = r.first_irreflexive() {
        return Err(Error::NotReflexive(i));
    }
    let n = r.size();
    let mut bits = vec![vec![false; n]; n];
    for m in 0..n {
        for k in m..n {
            let inherited = (0..m).all(|i| !bits[i][m] || bits[i][k]);
            bits[m][k] = r.get(m, k) && inherited;
        }
    }
    Ok(OrderMatrix { n, bits })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OrderViolation {
    NotReflexive(usize),
    NotAntisymmetric(usize, usize),
    NotTransitive(usize, usize, usize),
}

/// `None` when the matrix is a partial order.
pub fn verify_order_axioms(m: &OrderMatrix) -> Option<OrderViolation> {
    let n = m.size();
    if let Some(i) = (0..n).find(|&i| !m.get(i, i)) {
        return Some(OrderViolation::NotReflexive(i));
    }
    for i in 0..n {
        for j in i + 1..n {
            if m.get(i, j) && m.get(j, i) {
                return Some(OrderViolation::NotAntisymmetric(i, j));
            }
        }
    }
    for i in 0..n {
        for j in (0..n).filter(|&j| m.get(i, j)) {
            if let Some(k) = (0..n).find(|&k| m.get(j, k) && !m.get(i, k)) {
                return Some(OrderViolation::NotTransitive(i, j, k));
            }
        }
    }
    None
}

/// Every pair of `m` is a pair of `r`.
pub fn verify_contained(m: &OrderMatrix, r: &RelationMatrix) -> Result<bool> {
    if m.size() != r.size() {
        return Err(Error::SizeMismatch {
            left: m.size(),
            right: r.size(),
        });
    }
    Ok(m.rows()
        .iter()
        .zip(r.rows())
        .all(|(a, b)| a.iter().zip(b).all(|(&x, &y)| !x || y)))
}

/// `m[i][k]` only for `i <= k`.
pub fn respects_enumeration(m: &OrderMatrix) -> bool {
    (0..m.size()).all(|i| (0..i).all(|k| !m.get(i, k)))
}
