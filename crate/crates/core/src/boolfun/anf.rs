// SPDX-License-Identifier: Apache-2.0

//! Algebraic normal form and the binary Möbius transform.

use serde::{Deserialize, Serialize};

use super::table::{check_arity, TruthTable, LOW_HALF};
use crate::error::{Error, Result};

/// XOR of monomials, each monomial a subset mask (bit `i-1` set means `x_i` appears).
///
/// Monomials are kept sorted and duplicate-free, so derived equality is
/// equality of functions. The empty set is the zero function.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "AnfRepr")]
pub struct AnfPoly {
    n: u32,
    monomials: Vec<u64>,
}

#[derive(Deserialize)]
struct AnfRepr {
    n: u32,
    monomials: Vec<u64>,
}

impl TryFrom<AnfRepr> for AnfPoly {
    type Error = Error;

    fn try_from(r: AnfRepr) -> Result<Self> {
        AnfPoly::new(r.n, r.monomials)
    }
}

impl AnfPoly {
    /// Builds the XOR of the given monomials; repeated masks cancel in pairs.
    pub fn new(n: u32, mut monomials: Vec<u64>) -> Result<Self> {
        check_arity(n)?;
        if let Some(&bad) = monomials.iter().find(|&&m| m >= 1 << n) {
            return Err(Error::PointOutOfRange { n, point: bad });
        }
        monomials.sort_unstable();
        let mut kept: Vec<u64> = Vec::with_capacity(monomials.len());
        for m in monomials {
            if kept.last() == Some(&m) {
                kept.pop();
            } else {
                kept.push(m);
            }
        }
        Ok(AnfPoly { n, monomials: kept })
    }

    pub fn zero(n: u32) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn monomials(&self) -> &[u64] {
        &self.monomials
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// Algebraic degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.monomials.iter().map(|m| m.count_ones()).max()
    }
}

/// In-place binary Möbius transform: `t[x] ← ⊕_{y ⊆ x} t[y]`. It is an involution.
fn mobius_in_place(t: &mut TruthTable) {
    let n = t.arity();
    let words = t.words_mut();
    for axis in 0..n.min(6) {
        let s = 1u32 << axis;
        let lo = LOW_HALF[axis as usize];
        for w in words.iter_mut() {
            *w ^= (*w & lo) << s;
        }
    }
    for axis in 6..n {
        let stride = 1usize << (axis - 6);
        for j in 0..words.len() {
            if j & stride != 0 {
                words[j] ^= words[j ^ stride];
            }
        }
    }
}

pub fn anf_of(t: &TruthTable) -> AnfPoly {
    let mut coeffs = t.clone();
    mobius_in_place(&mut coeffs);
    AnfPoly {
        n: t.arity(),
        monomials: coeffs.support().collect(),
    }
}

pub fn table_of(a: &AnfPoly) -> TruthTable {
    let mut t = TruthTable::zero(a.n).expect("arity validated at construction");
    for &m in &a.monomials {
        t.set(m, true);
    }
    mobius_in_place(&mut t);
    t
}
