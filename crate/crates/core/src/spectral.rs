// SPDX-License-Identifier: Apache-2.0

//! Real spectrum of the integer lift of `O_n`.
//!
//! With the 0/1 lift, `O_n` becomes the adjacency matrix of the `n`-cube. It is
//! diagonalized by the Walsh characters: `χ_S` has eigenvalue `n - 2|S|`.

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::observer::{AtomOrder, Observer};

/// Largest arity for the exact spectrum.
pub const SPECTRUM_CAP: u32 = 24;
/// Largest arity for the floating-point cross-check.
pub const DENSE_EIGEN_CAP: u32 = 10;
/// Dimension the fixed eigenspace is claimed to have.
pub const CLAIMED_DIM_E1: u64 = 2;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixLift {
    /// Entry 0 ↦ 0, 1 ↦ 1: the hypercube adjacency matrix `A`.
    #[default]
    ZeroOne,
    /// Entry `e ↦ (-1)^e`: the matrix `J - 2A`.
    PlusMinus,
}

impl std::str::FromStr for MatrixLift {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "zero_one" | "01" => Ok(MatrixLift::ZeroOne),
            "plus_minus" | "pm" => Ok(MatrixLift::PlusMinus),
            other => Err(Error::InvalidArgument(format!("unknown lift {other:?}"))),
        }
    }
}

/// `|λ| ≤ 2^{-k/4}` for the eigenvalue attached to Walsh weight `k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub walsh_weight: u32,
    pub eigenvalue: i64,
    pub bound: f64,
    /// `None` for eigenvalue 1, which the bound does not cover.
    pub within: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub n: u32,
    pub lift: MatrixLift,
    /// `(eigenvalue, multiplicity)`, eigenvalues strictly decreasing.
    pub pairs: Vec<(i64, u64)>,
    pub dim_e1: u64,
    pub claimed_bound_check: Vec<BoundCheck>,
}

impl SpectrumReport {
    pub fn spectral_radius(&self) -> i64 {
        self.pairs.iter().map(|(l, _)| l.abs()).max().unwrap_or(0)
    }

    /// `(Σ mult, Σ λ·mult, Σ λ²·mult)`.
    pub fn moments(&self) -> (u128, i128, i128) {
        self.pairs.iter().fold((0, 0, 0), |(c, s1, s2), &(l, m)| {
            let (l, m) = (l as i128, m as i128);
            (c + m as u128, s1 + l * m, s2 + l * l * m)
        })
    }

    /// Eigenvalues with multiplicity, decreasing.
    pub fn expanded(&self) -> Vec<i64> {
        self.pairs
            .iter()
            .flat_map(|&(l, m)| std::iter::repeat_n(l, m as usize))
            .collect()
    }
}

fn binomial(n: u32, k: u32) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

fn walsh_eigenvalue(n: u32, k: u32, lift: MatrixLift) -> i64 {
    let adj = n as i64 - 2 * k as i64;
    match lift {
        MatrixLift::ZeroOne => adj,
        MatrixLift::PlusMinus if k == 0 => (1i64 << n) - 2 * n as i64,
        MatrixLift::PlusMinus => -2 * adj,
    }
}

pub fn spectrum(n: u32) -> Result<SpectrumReport> {
    spectrum_with(n, MatrixLift::ZeroOne)
}

pub fn spectrum_with(n: u32, lift: MatrixLift) -> Result<SpectrumReport> {
    if n == 0 || n > SPECTRUM_CAP {
        return Err(Error::CapExceeded {
            what: "spectrum arity",
            value: n as u64,
            cap: SPECTRUM_CAP as u64,
        });
    }
    let mut pairs: Vec<(i64, u64)> = Vec::new();
    let mut checks = Vec::new();
    for k in 0..=n {
        let l = walsh_eigenvalue(n, k, lift);
        let mult = binomial(n, k);
        match pairs.iter_mut().find(|(v, _)| *v == l) {
            Some(p) => p.1 += mult,
            None => pairs.push((l, mult)),
        }
        let bound = 2f64.powf(-(k as f64) / 4.0);
        checks.push(BoundCheck {
            walsh_weight: k,
            eigenvalue: l,
            bound,
            within: (l != 1).then(|| (l.abs() as f64) <= bound),
        });
    }
    pairs.sort_by_key(|p| std::cmp::Reverse(p.0));
    let dim_e1 = pairs.iter().find(|(l, _)| *l == 1).map_or(0, |p| p.1);
    Ok(SpectrumReport {
        n,
        lift,
        pairs,
        dim_e1,
        claimed_bound_check: checks,
    })
}

/// Largest deviation between the exact eigenvalues and a dense symmetric eigensolve.
pub fn dense_cross_check(n: u32, lift: MatrixLift) -> Result<f64> {
    if n > DENSE_EIGEN_CAP {
        return Err(Error::CapExceeded {
            what: "dense eigensolve arity",
            value: n as u64,
            cap: DENSE_EIGEN_CAP as u64,
        });
    }
    let exact = spectrum_with(n, lift)?.expanded();
    let m = Observer::new(n)?.matrix_in(AtomOrder::Ascending, DENSE_EIGEN_CAP)?;
    let size = m.rows();
    let dense = DMatrix::from_fn(size, size, |i, j| match (lift, m.get(i, j)) {
        (MatrixLift::ZeroOne, e) => e as u8 as f64,
        (MatrixLift::PlusMinus, false) => 1.0,
        (MatrixLift::PlusMinus, true) => -1.0,
    });
    let mut computed: Vec<f64> = SymmetricEigen::new(dense)
        .eigenvalues
        .iter()
        .copied()
        .collect();
    computed.sort_by(|a, b| b.total_cmp(a));
    Ok(exact
        .iter()
        .zip(&computed)
        .map(|(&e, &c)| (e as f64 - c).abs())
        .fold(0.0, f64::max))
}

/// Per-claim comparison of the finite-level spectrum with the stated properties.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectralAudit {
    pub n: u32,
    pub lift: MatrixLift,
    /// A finite matrix has a pure point spectrum.
    pub pure_point: bool,
    pub decay_bound_holds: bool,
    pub decay_violations: Vec<BoundCheck>,
    pub dim_e1: u64,
    pub dim_e1_claimed: u64,
    pub spectral_radius: i64,
    pub radius_bound: f64,
    pub radius_bound_holds: bool,
}

pub fn spectral_audit(n: u32, lift: MatrixLift) -> Result<SpectralAudit> {
    let rep = spectrum_with(n, lift)?;
    let violations: Vec<BoundCheck> = rep
        .claimed_bound_check
        .iter()
        .filter(|c| c.within == Some(false))
        .cloned()
        .collect();
    let radius = rep.spectral_radius();
    let radius_bound = (n as f64).sqrt();
    Ok(SpectralAudit {
        n,
        lift,
        pure_point: true,
        decay_bound_holds: violations.is_empty(),
        decay_violations: violations,
        dim_e1: rep.dim_e1,
        dim_e1_claimed: CLAIMED_DIM_E1,
        spectral_radius: radius,
        radius_bound,
        radius_bound_holds: radius as f64 <= radius_bound,
    })
}
