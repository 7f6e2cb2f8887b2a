// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest degree for irreducible enumeration.
pub const IRREDUCIBLE_DEGREE_CAP: u32 = 20;

/// Monic polynomial in `F_2[t]` of degree at least 1; bit `i` is the coefficient of `t^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u64", into = "u64")]
pub struct MonicPoly2(u64);

impl MonicPoly2 {
    pub fn new(bits: u64) -> Result<Self> {
        if bits < 2 {
            return Err(Error::InvalidArgument(format!(
                "{bits:#b} is not a polynomial of degree at least 1"
            )));
        }
        Ok(MonicPoly2(bits))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn degree(self) -> u32 {
        63 - self.0.leading_zeros()
    }

    /// `|p| = 2^{deg p}`.
    pub fn norm(self) -> u64 {
        1 << self.degree()
    }

    /// All monic polynomials of degree `d ≥ 1`, in increasing bit order.
    pub fn all_of_degree(d: u32) -> impl Iterator<Item = MonicPoly2> {
        let lead = 1u64 << d;
        (0..lead).map(move |low| MonicPoly2(lead | low))
    }

    pub fn divides(self, other: MonicPoly2) -> bool {
        poly_rem(other.0, self.0) == 0
    }
}

impl TryFrom<u64> for MonicPoly2 {
    type Error = Error;

    fn try_from(bits: u64) -> Result<Self> {
        MonicPoly2::new(bits)
    }
}

impl From<MonicPoly2> for u64 {
    fn from(p: MonicPoly2) -> u64 {
        p.0
    }
}

impl fmt::Debug for MonicPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonicPoly2({self})")
    }
}

impl fmt::Display for MonicPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = (0..=self.degree())
            .rev()
            .filter(|&i| (self.0 >> i) & 1 == 1)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = 63 - b.leading_zeros();
    while a != 0 {
        let da = 63 - a.leading_zeros();
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Monic irreducibles of each degree `1..=max_degree`, index `d - 1`, by trial division.
pub fn irreducibles_up_to(max_degree: u32) -> Result<Vec<Vec<MonicPoly2>>> {
    if max_degree > IRREDUCIBLE_DEGREE_CAP {
        return Err(Error::CapExceeded {
            what: "irreducible degree",
            value: max_degree as u64,
            cap: IRREDUCIBLE_DEGREE_CAP as u64,
        });
    }
    let mut by_degree: Vec<Vec<MonicPoly2>> = Vec::new();
    for d in 1..=max_degree {
        let divisors: Vec<MonicPoly2> = by_degree
            .iter()
            .take((d / 2) as usize)
            .flatten()
            .copied()
            .collect();
        let lead = 1u64 << d;
        let found: Vec<MonicPoly2> = (0..lead)
            .into_par_iter()
            .map(|low| MonicPoly2(lead | low))
            .filter(|&f| !divisors.iter().any(|p| p.divides(f)))
            .collect();
        by_degree.push(found);
    }
    Ok(by_degree)
}

pub fn irreducibles(d: u32) -> Result<Vec<MonicPoly2>> {
    if d == 0 {
        return Ok(Vec::new());
    }
    Ok(irreducibles_up_to(d)?.pop().unwrap_or_default())
}

fn mobius(mut n: u32) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// `(1/d) Σ_{e | d} μ(e) 2^{d/e}`.
pub fn necklace_count(d: u32) -> u64 {
    if d == 0 {
        return 0;
    }
    let total: i64 = (1..=d)
        .filter(|e| d.is_multiple_of(*e))
        .map(|e| mobius(e) * (1i64 << (d / e)))
        .sum();
    (total / d as i64) as u64
}
