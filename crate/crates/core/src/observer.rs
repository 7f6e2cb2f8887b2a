// SPDX-License-Identifier: Apache-2.0

//! The observation operator `O_n`: `O_n(f)(x) = ⊕_{i=1..n} f(x ⊕ e_i)`.
//!
//! Over GF(2) this is the neighbor sum of the `n`-cube. Each flip `σ_i` is a
//! block swap of stride `2^i` on the packed table, so one application costs
//! `n` word-level passes.

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::boolfun::{check_arity, TruthTable};
use crate::error::{Error, Result};
use crate::gf2::{Gf2Matrix, DEFAULT_DENSE_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Observer {
    n: u32,
}

/// Ordering of atoms when a table is written as a coordinate vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AtomOrder {
    /// Index `i` is point `i`.
    Ascending,
    /// Index `i` is point `2^n - 1 - i`; for `n = 3` this is `p_1 … p_8`.
    Descending,
}

impl AtomOrder {
    #[inline]
    pub fn point(self, n: u32, index: usize) -> u64 {
        match self {
            AtomOrder::Ascending => index as u64,
            AtomOrder::Descending => ((1u64 << n) - 1) ^ index as u64,
        }
    }

    /// The same map inverts itself.
    #[inline]
    pub fn index(self, n: u32, point: u64) -> usize {
        self.point(n, point as usize) as usize
    }

    pub fn to_vector(self, f: &TruthTable) -> BitVector {
        match self {
            AtomOrder::Ascending => f.bits().clone(),
            AtomOrder::Descending => {
                let n = f.arity();
                BitVector::from_fn(f.size(), |i| f.get(self.point(n, i)))
            }
        }
    }

    pub fn from_vector(self, n: u32, v: &BitVector) -> Result<TruthTable> {
        TruthTable::from_fn(n, |x| v.get(self.index(n, x)))
    }
}

/// Cycle structure of `f, O f, O² f, …`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitReport {
    pub seed: TruthTable,
    /// `None` when no repeat was found within the step budget.
    pub period: Option<u64>,
    pub preperiod: u64,
    /// Distinct elements of the orbit; a lower bound when `period` is `None`.
    pub orbit_size: u64,
}

impl Observer {
    pub fn new(n: u32) -> Result<Self> {
        check_arity(n)?;
        Ok(Observer { n })
    }

    pub fn arity(&self) -> u32 {
        self.n
    }

    pub fn apply(&self, f: &TruthTable) -> Result<TruthTable> {
        f.ensure_arity(self.n)?;
        Ok(self.apply_unchecked(f))
    }

    pub(crate) fn apply_unchecked(&self, f: &TruthTable) -> TruthTable {
        let mut out = TruthTable::zero(self.n).expect("arity validated");
        for axis in 0..self.n {
            f.xor_axis_shift_into(axis, &mut out);
        }
        out
    }

    /// One point and one bit at a time. Reference for tests and benchmarks.
    pub fn apply_pointwise(&self, f: &TruthTable) -> Result<TruthTable> {
        f.ensure_arity(self.n)?;
        let mut out = TruthTable::zero(self.n)?;
        for x in 0..f.size() as u64 {
            let mut v = false;
            for i in 0..self.n {
                v ^= f.get(x ^ (1 << i));
            }
            if v {
                out.set(x, true);
            }
        }
        Ok(out)
    }

    /// `O^k f`.
    pub fn power(&self, f: &TruthTable, k: u64) -> Result<TruthTable> {
        f.ensure_arity(self.n)?;
        let mut cur = f.clone();
        for _ in 0..k {
            if cur.is_zero() {
                break;
            }
            cur = self.apply_unchecked(&cur);
        }
        Ok(cur)
    }

    /// Dense matrix in the descending atom order used by the printed `n = 3` example.
    pub fn matrix(&self) -> Result<Gf2Matrix> {
        self.matrix_in(AtomOrder::Descending, DEFAULT_DENSE_CAP)
    }

    /// Entry `(g, f)` is 1 iff atom `g` occurs in `O(atom f)`.
    pub fn matrix_in(&self, order: AtomOrder, dense_cap: u32) -> Result<Gf2Matrix> {
        if self.n > dense_cap {
            return Err(Error::CapExceeded {
                what: "dense matrix arity",
                value: self.n as u64,
                cap: dense_cap as u64,
            });
        }
        let size = 1usize << self.n;
        let mut m = Gf2Matrix::zeros(size, size);
        for col in 0..size {
            let x = order.point(self.n, col);
            for i in 0..self.n {
                m.set(order.index(self.n, x ^ (1 << i)), col, true);
            }
        }
        Ok(m)
    }

    pub fn is_invariant(&self, f: &TruthTable) -> Result<bool> {
        Ok(self.apply(f)? == *f)
    }

    /// Brent cycle detection on `O^k(f)`; `max_steps` bounds the applications
    /// spent searching for a repeat.
    pub fn orbit(&self, f: &TruthTable, max_steps: u64) -> Result<OrbitReport> {
        f.ensure_arity(self.n)?;
        if max_steps == 0 {
            return Err(Error::InvalidArgument(
                "max_steps must be at least 1".into(),
            ));
        }
        let step = |t: &TruthTable| self.apply_unchecked(t);

        let mut power = 1u64;
        let mut lam = 1u64;
        let mut tortoise = f.clone();
        let mut hare = step(f);
        let mut used = 1u64;
        while tortoise != hare {
            if used >= max_steps {
                return Ok(OrbitReport {
                    seed: f.clone(),
                    period: None,
                    preperiod: 0,
                    orbit_size: used,
                });
            }
            if power == lam {
                tortoise = hare.clone();
                power *= 2;
                lam = 0;
            }
            hare = step(&hare);
            lam += 1;
            used += 1;
        }

        let mut tortoise = f.clone();
        let mut hare = f.clone();
        for _ in 0..lam {
            hare = step(&hare);
        }
        let mut mu = 0u64;
        while tortoise != hare {
            tortoise = step(&tortoise);
            hare = step(&hare);
            mu += 1;
        }
        Ok(OrbitReport {
            seed: f.clone(),
            period: Some(lam),
            preperiod: mu,
            orbit_size: mu + lam,
        })
    }

    /// The orbit `f, O f, …` up to its first repeat, at most `cap` elements.
    pub fn orbit_elements(&self, f: &TruthTable, cap: usize) -> Result<Vec<TruthTable>> {
        f.ensure_arity(self.n)?;
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let mut cur = f.clone();
        while seen.insert(cur.clone()) {
            if out.len() == cap {
                return Err(Error::CapExceeded {
                    what: "orbit length",
                    value: cap as u64 + 1,
                    cap: cap as u64,
                });
            }
            out.push(cur.clone());
            cur = self.apply_unchecked(&cur);
        }
        Ok(out)
    }
}

/// `x ↦ f(x ⊕ v)`.
pub fn translate(f: &TruthTable, v: u64) -> Result<TruthTable> {
    let n = f.arity();
    if v >= 1 << n {
        return Err(Error::PointOutOfRange { n, point: v });
    }
    let mut cur = f.clone();
    for axis in 0..n {
        if v >> axis & 1 == 1 {
            cur = cur.axis_shift(axis);
        }
    }
    Ok(cur)
}
