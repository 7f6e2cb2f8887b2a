// SPDX-License-Identifier: Apache-2.0

//! Lifts from level `n` to level `m ≥ n` and checks of how they interact with
//! the observation operator.
//!
//! Both lifts satisfy `O_m(lift f) = lift(O_n f) ⊕ ((m - n) mod 2)·lift f`, so
//! the two sides commute exactly when the gap is even.

use serde::{Deserialize, Serialize};

use crate::boolfun::{check_arity, TruthTable};
use crate::error::{Error, Result};
use crate::gf2::{basis_tables, fixed_space_capped, Gf2Matrix, DEFAULT_DENSE_CAP};
use crate::observer::{AtomOrder, Observer};

/// Largest level handled by the audits in this module.
pub const TOWER_LEVEL_CAP: u32 = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum LiftKind {
    /// `g(x_1..x_m) = f(x_1..x_n)`.
    PrefixIgnore,
    /// `g(x_1..x_m) = f(x_{m-n+1}..x_m)`.
    SuffixEmbed,
}

impl LiftKind {
    pub const ALL: [LiftKind; 2] = [LiftKind::PrefixIgnore, LiftKind::SuffixEmbed];

    pub fn name(self) -> &'static str {
        match self {
            LiftKind::PrefixIgnore => "prefix_ignore",
            LiftKind::SuffixEmbed => "suffix_embed",
        }
    }
}

impl std::fmt::Display for LiftKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for LiftKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "prefix_ignore" | "prefix" => Ok(LiftKind::PrefixIgnore),
            "suffix_embed" | "suffix" => Ok(LiftKind::SuffixEmbed),
            other => Err(Error::InvalidArgument(format!(
                "unknown lift kind {other:?}"
            ))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LiftMap {
    pub kind: LiftKind,
    pub n: u32,
    pub m: u32,
}

impl LiftMap {
    pub fn new(kind: LiftKind, n: u32, m: u32) -> Result<Self> {
        check_arity(n)?;
        check_arity(m)?;
        if n > m {
            return Err(Error::InvalidArgument(format!(
                "lift source level {n} exceeds target level {m}"
            )));
        }
        Ok(LiftMap { kind, n, m })
    }

    pub fn gap(&self) -> u32 {
        self.m - self.n
    }

    pub fn lift(&self, f: &TruthTable) -> Result<TruthTable> {
        f.ensure_arity(self.n)?;
        let low = (1u64 << self.n) - 1;
        let shift = self.gap();
        match self.kind {
            LiftKind::PrefixIgnore => TruthTable::from_fn(self.m, |x| f.get(x & low)),
            LiftKind::SuffixEmbed => TruthTable::from_fn(self.m, |x| f.get(x >> shift)),
        }
    }
}

/// Outcome of comparing `O_m ∘ lift` with `lift ∘ O_n` on every atom of level `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompatibilityReport {
    pub kind: LiftKind,
    pub n: u32,
    pub m: u32,
    /// `O_m ∘ lift = lift ∘ O_n` on all atoms.
    pub commutes: bool,
    /// First failing atom, scanning points from `2^n - 1` down to 0.
    pub witness: Option<Witness>,
    /// The parity-corrected identity holds on all atoms.
    pub corrected_identity_holds: bool,
    pub atoms_checked: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    /// 1-based position in descending point order.
    pub label: String,
    pub point: u64,
}

pub fn compatibility_audit(l: &LiftMap) -> Result<CompatibilityReport> {
    for level in [l.n, l.m] {
        if level > TOWER_LEVEL_CAP {
            return Err(Error::CapExceeded {
                what: "tower level",
                value: level as u64,
                cap: TOWER_LEVEL_CAP as u64,
            });
        }
    }
    let on = Observer::new(l.n)?;
    let om = Observer::new(l.m)?;
    let odd_gap = l.gap() % 2 == 1;
    let mut witness = None;
    let mut corrected = true;
    let size = 1u64 << l.n;
    for idx in 0..size as usize {
        let point = AtomOrder::Descending.point(l.n, idx);
        let f = TruthTable::atom(l.n, point)?;
        let lf = l.lift(&f)?;
        let left = om.apply(&lf)?;
        let right = l.lift(&on.apply(&f)?)?;
        if witness.is_none() && left != right {
            witness = Some(Witness {
                label: format!("p{}", idx + 1),
                point,
            });
        }
        let corrected_right = if odd_gap { &right ^ &lf } else { right };
        corrected &= left == corrected_right;
    }
    Ok(CompatibilityReport {
        kind: l.kind,
        n: l.n,
        m: l.m,
        commutes: witness.is_none(),
        witness,
        corrected_identity_holds: corrected,
        atoms_checked: size,
    })
}

/// Which fixed points of level `n` lift to fixed points of level `m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceRow {
    pub lift_kind: LiftKind,
    pub n: u32,
    pub m: u32,
    pub fixed_dim_n: usize,
    pub fixed_dim_m: usize,
    /// Dimension of the subspace of the level-`n` fixed space whose lift is fixed.
    pub lifting_dim: usize,
    pub all_ones_lifts: bool,
    pub nonconstant_lifts: bool,
    /// A nonconstant fixed point that lifts to a fixed point, as hex.
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceReport {
    pub n_max: u32,
    pub rows: Vec<SequenceRow>,
}

impl SequenceReport {
    /// True when some gap-1 row lets a nonzero fixed point through.
    pub fn consecutive_levels_compatible(&self) -> bool {
        self.rows
            .iter()
            .filter(|r| r.m == r.n + 1)
            .any(|r| r.lifting_dim > 0)
    }
}

/// Rows for gap 1 (`n → n+1`) and gap 2 (`n → n+2`) with `m ≤ n_max`, both lift kinds.
pub fn compatible_sequence_audit(n_max: u32) -> Result<SequenceReport> {
    if n_max > TOWER_LEVEL_CAP {
        return Err(Error::CapExceeded {
            what: "tower level",
            value: n_max as u64,
            cap: TOWER_LEVEL_CAP as u64,
        });
    }
    let mut fixed = Vec::new();
    for n in 1..=n_max {
        let k = fixed_space_capped(n, DEFAULT_DENSE_CAP)?;
        fixed.push(basis_tables(n, &k)?);
    }
    let mut rows = Vec::new();
    for n in 1..n_max {
        for gap in [1u32, 2] {
            let m = n + gap;
            if m > n_max {
                continue;
            }
            for kind in LiftKind::ALL {
                let l = LiftMap::new(kind, n, m)?;
                rows.push(sequence_row(
                    &l,
                    &fixed[n as usize - 1],
                    fixed[m as usize - 1].len(),
                )?);
            }
        }
    }
    Ok(SequenceReport { n_max, rows })
}

fn sequence_row(l: &LiftMap, basis: &[TruthTable], fixed_dim_m: usize) -> Result<SequenceRow> {
    let om = Observer::new(l.m)?;
    let lifted: Vec<TruthTable> = basis.iter().map(|b| l.lift(b)).collect::<Result<_>>()?;
    // combinations c with (O_m + I) Σ c_i lift(b_i) = 0
    let defects: Vec<_> = lifted
        .iter()
        .map(|g| (&om.apply(g).expect("arity matches") ^ g).into_bits())
        .collect();
    let lifting: Vec<TruthTable> = if basis.is_empty() {
        Vec::new()
    } else {
        let a = Gf2Matrix::from_rows(defects, 1usize << l.m)?.transpose();
        a.kernel()
            .vectors
            .iter()
            .map(|c| {
                let mut acc = TruthTable::zero(l.n).expect("arity validated");
                for i in c.iter_ones() {
                    acc ^= &basis[i];
                }
                acc
            })
            .collect()
    };
    let ones_n = TruthTable::ones(l.n)?;
    let ones_m = TruthTable::ones(l.m)?;
    let all_ones_fixed_n = Observer::new(l.n)?.apply(&ones_n)? == ones_n;
    let all_ones_lifts = all_ones_fixed_n && om.apply(&ones_m)? == ones_m;
    let constant_part = all_ones_lifts as usize;
    let witness = lifting
        .iter()
        .find(|t| !t.is_constant())
        .map(TruthTable::to_hex);
    Ok(SequenceRow {
        lift_kind: l.kind,
        n: l.n,
        m: l.m,
        fixed_dim_n: basis.len(),
        fixed_dim_m,
        lifting_dim: lifting.len(),
        all_ones_lifts,
        nonconstant_lifts: lifting.len() > constant_part,
        witness,
    })
}
