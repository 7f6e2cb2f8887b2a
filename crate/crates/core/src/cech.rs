// SPDX-License-Identifier: Apache-2.0

//! Cochains built from a predicate `A` and the join `x ∨ y` (bitwise OR of points).
//!
//! The triple cochain `c(x,y,z) = A(x∨y) + A(y∨z) + A(x∨z) + A(x∨y∨z)` is tested
//! for closure under `δc(w,x,y,z) = c(x,y,z) + c(w,y,z) + c(w,x,z) + c(w,x,y)`
//! on the nerve of the full point set. Triviality is tested with the pair system
//! `b(x) + b(y) + b(x∨y) = A(x∨y)`.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::boolfun::TruthTable;
use crate::error::{Error, Result};

/// Largest arity for the pair system.
pub const COBOUNDARY_ARITY_CAP: u32 = 10;
/// Largest arity for the quadruple enumeration.
pub const COCYCLE_ARITY_CAP: u32 = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle3 {
    a: TruthTable,
}

pub fn cocycle3(a: &TruthTable) -> Cocycle3 {
    Cocycle3 { a: a.clone() }
}

impl Cocycle3 {
    pub fn arity(&self) -> u32 {
        self.a.arity()
    }

    pub fn eval(&self, x: u64, y: u64, z: u64) -> bool {
        let a = &self.a;
        a.get(x | y) ^ a.get(y | z) ^ a.get(x | z) ^ a.get(x | y | z)
    }

    pub fn coboundary(&self, w: u64, x: u64, y: u64, z: u64) -> bool {
        self.eval(x, y, z) ^ self.eval(w, y, z) ^ self.eval(w, x, z) ^ self.eval(w, x, y)
    }
}

/// Equation `b(x) + b(y) + b(x∨y) = A(x∨y)` for the pair `(x, y)`, `x ≤ y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEquation {
    pub x: u64,
    pub y: u64,
}

impl PairEquation {
    fn lhs(self, size: usize) -> BitVector {
        let mut v = BitVector::zeros(size);
        for p in [self.x, self.y, self.x | self.y] {
            v.flip(p as usize);
        }
        v
    }
}

/// A set of pair equations whose left sides cancel while the right sides sum to 1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InconsistencyCertificate {
    pub equations: Vec<PairEquation>,
}

impl InconsistencyCertificate {
    pub fn verify(&self, a: &TruthTable) -> bool {
        let size = a.size();
        let mut lhs = BitVector::zeros(size);
        let mut rhs = false;
        for &e in &self.equations {
            lhs.xor_assign(&e.lhs(size));
            rhs ^= a.get(e.x | e.y);
        }
        lhs.is_zero() && rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum CoboundaryResult {
    Solvable {
        b: TruthTable,
    },
    Unsolvable {
        certificate: InconsistencyCertificate,
    },
}

impl CoboundaryResult {
    pub fn is_solvable(&self) -> bool {
        matches!(self, CoboundaryResult::Solvable { .. })
    }
}

struct Row {
    lhs: BitVector,
    rhs: bool,
    /// Over the indices of `pivot_equations`.
    origin: BitVector,
}

/// Incremental elimination over the diagonal pairs first, then all `x < y`.
pub fn coboundary_solve(a: &TruthTable) -> Result<CoboundaryResult> {
    let n = a.arity();
    if n > COBOUNDARY_ARITY_CAP {
        return Err(Error::CapExceeded {
            what: "coboundary arity",
            value: n as u64,
            cap: COBOUNDARY_ARITY_CAP as u64,
        });
    }
    let size = a.size();
    let mut rows: Vec<Row> = Vec::new();
    let mut pivot_row: Vec<Option<usize>> = vec![None; size];
    let mut pivot_equations: Vec<PairEquation> = Vec::new();

    let equations = (0..size as u64).map(|x| PairEquation { x, y: x }).chain(
        (0..size as u64).flat_map(|x| (x + 1..size as u64).map(move |y| PairEquation { x, y })),
    );

    for eq in equations {
        let mut lhs = eq.lhs(size);
        let mut rhs = a.get(eq.x | eq.y);
        let mut origin = BitVector::zeros(size);
        while let Some(c) = lhs.first_one() {
            match pivot_row[c] {
                Some(r) => {
                    lhs.xor_assign(&rows[r].lhs);
                    rhs ^= rows[r].rhs;
                    origin.xor_assign(&rows[r].origin);
                }
                None => break,
            }
        }
        match lhs.first_one() {
            Some(c) => {
                origin.set(pivot_equations.len(), true);
                pivot_equations.push(eq);
                pivot_row[c] = Some(rows.len());
                rows.push(Row { lhs, rhs, origin });
            }
            None if rhs => {
                let mut equations: Vec<PairEquation> =
                    origin.iter_ones().map(|i| pivot_equations[i]).collect();
                equations.push(eq);
                let certificate = InconsistencyCertificate { equations };
                if !certificate.verify(a) {
                    return Err(Error::Consistency(
                        "inconsistency certificate does not verify".into(),
                    ));
                }
                return Ok(CoboundaryResult::Unsolvable { certificate });
            }
            None => {}
        }
    }

    // back substitution from the highest pivot down; free unknowns are 0
    let mut b = TruthTable::zero(n)?;
    for c in (0..size).rev() {
        if let Some(r) = pivot_row[c] {
            let row = &rows[r];
            let mut v = row.rhs;
            for j in row.lhs.iter_ones().filter(|&j| j != c) {
                v ^= b.get(j as u64);
            }
            b.set(c as u64, v);
        }
    }
    if !reproduces(a, &b) {
        return Err(Error::Consistency(
            "coboundary solution fails substitution".into(),
        ));
    }
    Ok(CoboundaryResult::Solvable { b })
}

/// `b(x) + b(y) + b(x∨y) = A(x∨y)` on every pair.
pub fn reproduces(a: &TruthTable, b: &TruthTable) -> bool {
    let size = a.size() as u64;
    (0..size)
        .into_par_iter()
        .all(|x| (0..size).all(|y| b.get(x) ^ b.get(y) ^ b.get(x | y) == a.get(x | y)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CocycleReport {
    pub n: u32,
    pub predicate: TruthTable,
    pub quadruples_checked: u64,
    pub coboundary_violations: u64,
    /// First `(w, x, y, z)` with `δc ≠ 0` in lexicographic order.
    pub first_violation: Option<[u64; 4]>,
    pub cocycle_vanishes_identically: bool,
    pub symmetric: bool,
    pub pair_system: CoboundaryResult,
}

impl CocycleReport {
    pub fn is_cocycle(&self) -> bool {
        self.coboundary_violations == 0
    }
}

pub fn cocycle_audit(a: &TruthTable) -> Result<CocycleReport> {
    let n = a.arity();
    if n > COCYCLE_ARITY_CAP {
        return Err(Error::CapExceeded {
            what: "cocycle arity",
            value: n as u64,
            cap: COCYCLE_ARITY_CAP as u64,
        });
    }
    let c = cocycle3(a);
    let size = a.size() as u64;
    let per_w: Vec<(u64, Option<[u64; 4]>)> = (0..size)
        .into_par_iter()
        .map(|w| {
            let mut count = 0;
            let mut first = None;
            for x in 0..size {
                for y in 0..size {
                    for z in 0..size {
                        if c.coboundary(w, x, y, z) {
                            count += 1;
                            first.get_or_insert([w, x, y, z]);
                        }
                    }
                }
            }
            (count, first)
        })
        .collect();
    let violations = per_w.iter().map(|p| p.0).sum();
    let first_violation = per_w.iter().find_map(|p| p.1);
    let (mut zero, mut symmetric) = (true, true);
    for x in 0..size {
        for y in 0..size {
            for z in 0..size {
                let v = c.eval(x, y, z);
                zero &= !v;
                symmetric &= [(y, x, z), (x, z, y), (z, y, x), (y, z, x), (z, x, y)]
                    .iter()
                    .all(|&(p, q, r)| c.eval(p, q, r) == v);
            }
        }
    }
    Ok(CocycleReport {
        n,
        predicate: a.clone(),
        quadruples_checked: size.pow(4),
        coboundary_violations: violations,
        first_violation,
        cocycle_vanishes_identically: zero,
        symmetric,
        pair_system: coboundary_solve(a)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn identity_predicate() -> TruthTable {
        TruthTable::variable(1, 1).unwrap()
    }

    #[test]
    fn cocycle_values() {
        let c = cocycle3(&identity_predicate());
        assert!(c.eval(1, 0, 0));
        assert!(!c.eval(0, 0, 0));
        for x in 0..2 {
            assert!(!c.eval(x, x, x));
        }
    }

    #[test]
    fn identity_predicate_is_unsolvable() {
        let a = identity_predicate();
        match coboundary_solve(&a).unwrap() {
            CoboundaryResult::Unsolvable { certificate } => {
                assert!(certificate.verify(&a));
                assert_eq!(
                    certificate.equations,
                    vec![PairEquation { x: 0, y: 0 }, PairEquation { x: 0, y: 1 }]
                );
            }
            other => panic!("expected unsolvable, got {other:?}"),
        }
    }

    #[test]
    fn constants_are_solvable() {
        for n in 1..=4 {
            match coboundary_solve(&TruthTable::zero(n).unwrap()).unwrap() {
                CoboundaryResult::Solvable { b } => assert!(b.is_zero()),
                other => panic!("{other:?}"),
            }
            let ones = TruthTable::ones(n).unwrap();
            match coboundary_solve(&ones).unwrap() {
                CoboundaryResult::Solvable { b } => assert!(reproduces(&ones, &b)),
                other => panic!("{other:?}"),
            }
        }
    }

    #[test]
    fn constant_predicate_cocycle_is_zero() {
        let r = cocycle_audit(&TruthTable::ones(2).unwrap()).unwrap();
        assert!(r.cocycle_vanishes_identically && r.is_cocycle() && r.symmetric);
    }

    #[test]
    fn caps() {
        assert!(cocycle_audit(&TruthTable::zero(6).unwrap())
            .unwrap_err()
            .is_cap_exceeded());
        assert!(coboundary_solve(&TruthTable::zero(11).unwrap())
            .unwrap_err()
            .is_cap_exceeded());
    }
}
