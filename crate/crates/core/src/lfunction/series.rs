// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::sync::Arc;

use num::{BigInt, BigRational, One, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use super::poly2::{irreducibles_up_to, MonicPoly2};
use crate::error::{Error, Result};

/// Largest truncation order for series.
pub const SERIES_DEGREE_CAP: u32 = 16;

type Rule = Arc<dyn Fn(MonicPoly2) -> i64 + Send + Sync>;

/// A named function on monic polynomials of degree at least 1.
///
/// Values are integers so that `±1` sign rules fit alongside 0/1 predicates.
#[derive(Clone)]
pub struct PredicateCharacter {
    name: String,
    rule: Rule,
}

impl PredicateCharacter {
    pub fn new(
        name: impl Into<String>,
        rule: impl Fn(MonicPoly2) -> i64 + Send + Sync + 'static,
    ) -> Self {
        PredicateCharacter {
            name: name.into(),
            rule: Arc::new(rule),
        }
    }

    pub fn constant(value: i64) -> Self {
        PredicateCharacter::new(format!("constant-{value}"), move |_| value)
    }

    /// 1 when the degree is an odd perfect square, else 0.
    pub fn delta() -> Self {
        PredicateCharacter::new("delta", |f| is_odd_square(f.degree()) as i64)
    }

    /// `+1` on residue class 1, `-1` on residue class 3, 0 otherwise.
    ///
    /// Polynomials carry no canonical residue mod 4, so the classifier is supplied
    /// by the caller; no default is provided.
    pub fn hecke_sign(
        name: impl Into<String>,
        residue_mod4: impl Fn(MonicPoly2) -> Option<u8> + Send + Sync + 'static,
    ) -> Self {
        PredicateCharacter::new(name, move |f| match residue_mod4(f) {
            Some(1) => 1,
            Some(3) => -1,
            _ => 0,
        })
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "delta" => Ok(PredicateCharacter::delta()),
            "one" | "constant-1" => Ok(PredicateCharacter::constant(1)),
            "zero" | "constant-0" => Ok(PredicateCharacter::constant(0)),
            other => Err(Error::InvalidArgument(format!(
                "unknown character {other:?} (expected delta, one or zero)"
            ))),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, f: MonicPoly2) -> i64 {
        (self.rule)(f)
    }
}

impl fmt::Debug for PredicateCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PredicateCharacter")
            .field("name", &self.name)
            .finish()
    }
}

fn is_odd_square(d: u32) -> bool {
    let r = (d as f64).sqrt().round() as u32;
    r * r == d && r % 2 == 1
}

/// `Σ_{d ≤ D} a_d u^d` with exact rational coefficients, `u = 2^{-s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    pub max_degree: u32,
    pub coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn one(max_degree: u32) -> Self {
        let mut coeffs = vec![BigRational::zero(); max_degree as usize + 1];
        coeffs[0] = BigRational::one();
        TruncatedSeries { max_degree, coeffs }
    }

    pub fn from_integers(values: &[i64]) -> Self {
        TruncatedSeries {
            max_degree: values.len().saturating_sub(1) as u32,
            coeffs: values
                .iter()
                .map(|&v| BigRational::from_integer(v.into()))
                .collect(),
        }
    }

    /// Coefficients as integers, when all denominators are 1 and values fit.
    pub fn integer_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer().to_i64()).flatten())
            .collect()
    }

    pub fn mul_truncated(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let d = self.max_degree.min(other.max_degree) as usize;
        let mut coeffs = vec![BigRational::zero(); d + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(d + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(d + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncatedSeries {
            max_degree: d as u32,
            coeffs,
        }
    }

    /// `Σ a_d z^d`, evaluated at complex `z`.
    pub fn eval(&self, z: num::complex::Complex64) -> num::complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num::complex::Complex64::new(0.0, 0.0), |acc, c| {
                acc * z + c.to_f64().unwrap_or(f64::NAN)
            })
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Coeff {
            num: String,
            den: String,
        }
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&Coeff {
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })?;
        }
        seq.end()
    }
}

fn check_degree(d: u32) -> Result<()> {
    if d > SERIES_DEGREE_CAP {
        return Err(Error::CapExceeded {
            what: "series degree",
            value: d as u64,
            cap: SERIES_DEGREE_CAP as u64,
        });
    }
    Ok(())
}

/// `∏_{deg p ≤ D} (1 - χ(p) u^{deg p})^{-1}` to order `D`.
pub fn euler_product(chi: &PredicateCharacter, max_degree: u32) -> Result<TruncatedSeries> {
    check_degree(max_degree)?;
    let mut acc = TruncatedSeries::one(max_degree);
    for (idx, primes) in irreducibles_up_to(max_degree)?.iter().enumerate() {
        let d = idx + 1;
        for &p in primes {
            let a = chi.eval(p);
            if a == 0 {
                continue;
            }
            // geometric series in a·u^d
            let mut factor = TruncatedSeries::one(max_degree);
            let mut pow = BigInt::one();
            for j in 1..=(max_degree as usize / d) {
                pow *= a;
                factor.coeffs[j * d] = BigRational::from_integer(pow.clone());
            }
            acc = acc.mul_truncated(&factor);
        }
    }
    Ok(acc)
}

/// `Σ_{deg f ≤ D, f monic} χ(f) u^{deg f}`, with the constant polynomial contributing 1.
pub fn dirichlet_series(chi: &PredicateCharacter, max_degree: u32) -> Result<TruncatedSeries> {
    check_degree(max_degree)?;
    let mut out = TruncatedSeries::one(max_degree);
    for d in 1..=max_degree {
        let total: i64 = MonicPoly2::all_of_degree(d).map(|f| chi.eval(f)).sum();
        out.coeffs[d as usize] = BigRational::from_integer(total.into());
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComparisonRow {
    pub degree: u32,
    pub euler_coeff: String,
    pub dirichlet_coeff: String,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesComparison {
    pub character: String,
    pub max_degree: u32,
    pub euler: TruncatedSeries,
    pub dirichlet: TruncatedSeries,
    pub rows: Vec<ComparisonRow>,
}

impl SeriesComparison {
    pub fn all_equal(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }

    pub fn first_divergence(&self) -> Option<u32> {
        self.rows.iter().find(|r| !r.equal).map(|r| r.degree)
    }
}

pub fn compare_series(chi: &PredicateCharacter, max_degree: u32) -> Result<SeriesComparison> {
    let euler = euler_product(chi, max_degree)?;
    let dirichlet = dirichlet_series(chi, max_degree)?;
    let rows = euler
        .coeffs
        .iter()
        .zip(&dirichlet.coeffs)
        .enumerate()
        .map(|(d, (e, r))| ComparisonRow {
            degree: d as u32,
            euler_coeff: e.to_string(),
            dirichlet_coeff: r.to_string(),
            equal: e == r,
        })
        .collect();
    Ok(SeriesComparison {
        character: chi.name().to_string(),
        max_degree,
        euler,
        dirichlet,
        rows,
    })
}
