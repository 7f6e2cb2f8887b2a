// SPDX-License-Identifier: Apache-2.0

//! The three explicitly printed predicate families.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::anf::{anf_of, AnfPoly};
use super::table::{check_arity, TruthTable};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// XOR of all monomials `∏_{i∈I} x_i` with `|I| ≡ 1, 2 (mod 4)`.
    Pi1,
    /// The mod-2 sum, over `k`, of the sums over `|I| = 2k` of
    /// `∏_{i∈I} x_i ∏_{j∉I} (1 - x_j)`.
    Pi2,
    /// `⊕ x_{(2k+1)^2}` over odd squares not exceeding `n`.
    Delta,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Pi1, Family::Pi2, Family::Delta];

    pub fn name(self) -> &'static str {
        match self {
            Family::Pi1 => "pi1",
            Family::Pi2 => "pi2",
            Family::Delta => "delta",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "pi1" => Ok(Family::Pi1),
            "pi2" => Ok(Family::Pi2),
            "delta" => Ok(Family::Delta),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

pub fn predicate_family_by_name(name: &str, n: u32) -> Result<AnfPoly> {
    predicate_family(name.parse()?, n)
}

pub fn predicate_family(family: Family, n: u32) -> Result<AnfPoly> {
    check_arity(n)?;
    match family {
        Family::Pi1 => {
            let monomials = (1..1u64 << n)
                .filter(|m| matches!(m.count_ones() % 4, 1 | 2))
                .collect();
            AnfPoly::new(n, monomials)
        }
        Family::Pi2 => Ok(anf_of(&pi2_table(n)?)),
        Family::Delta => {
            let monomials = (0u64..)
                .map(|k| (2 * k + 1) * (2 * k + 1))
                .take_while(|&sq| sq <= n as u64)
                .map(|sq| 1u64 << (sq - 1))
                .collect();
            AnfPoly::new(n, monomials)
        }
    }
}

/// Literal evaluation of the printed double sum. Each inner product is the
/// atom at `I`, and each `I` occurs for exactly one `k`.
fn pi2_table(n: u32) -> Result<TruthTable> {
    let mut t = TruthTable::zero(n)?;
    for k in 0..=n / 2 {
        for subset in 0..1u64 << n {
            if subset.count_ones() == 2 * k {
                t.flip(subset);
            }
        }
    }
    Ok(t)
}
