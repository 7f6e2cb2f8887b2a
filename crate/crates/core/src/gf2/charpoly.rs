// SPDX-License-Identifier: Apache-2.0

//! Characteristic polynomial of the 0/1 integer lift of a GF(2) matrix.
//!
//! Fraction-free (Bareiss) elimination on `xI - A` with entries in `Z[x]`.
//! The pivot at step `k` is the leading principal minor of order `k + 1`,
//! a monic polynomial, so every division is exact and no pivoting is needed.

use super::matrix::Gf2Matrix;
use super::poly::IntPoly;
use crate::error::{Error, Result};

type P = Vec<i128>;

fn trim(mut p: P) -> P {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

fn sub(a: &P, b: &P) -> Result<P> {
    let len = a.len().max(b.len());
    let mut out = vec![0i128; len];
    for (i, o) in out.iter_mut().enumerate() {
        let x = a.get(i).copied().unwrap_or(0);
        let y = b.get(i).copied().unwrap_or(0);
        *o = x.checked_sub(y).ok_or(Error::Overflow("char_poly_lift"))?;
    }
    Ok(trim(out))
}

fn mul(a: &P, b: &P) -> Result<P> {
    if a.is_empty() || b.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            let t = x.checked_mul(y).ok_or(Error::Overflow("char_poly_lift"))?;
            out[i + j] = out[i + j]
                .checked_add(t)
                .ok_or(Error::Overflow("char_poly_lift"))?;
        }
    }
    Ok(trim(out))
}

/// Exact division by a monic polynomial.
fn div_exact_monic(a: &P, d: &P) -> Result<P> {
    let dd = d.len() - 1;
    debug_assert_eq!(d[dd], 1);
    if a.len() <= dd {
        if a.is_empty() {
            return Ok(Vec::new());
        }
        return Err(Error::Overflow("inexact Bareiss division"));
    }
    let mut rem = a.clone();
    let mut q = vec![0i128; a.len() - dd];
    for k in (0..q.len()).rev() {
        let c = rem[k + dd];
        q[k] = c;
        if c != 0 {
            for (j, &dj) in d.iter().enumerate() {
                let t = c.checked_mul(dj).ok_or(Error::Overflow("char_poly_lift"))?;
                rem[k + j] = rem[k + j]
                    .checked_sub(t)
                    .ok_or(Error::Overflow("char_poly_lift"))?;
            }
        }
    }
    if rem.iter().any(|&r| r != 0) {
        return Err(Error::Overflow("inexact Bareiss division"));
    }
    Ok(trim(q))
}

/// `det(xI - A)` where `A` is the restriction with entries lifted to the integers 0 and 1.
pub fn char_poly_lift(restriction: &Gf2Matrix) -> Result<IntPoly> {
    if !restriction.is_square() {
        return Err(Error::DimensionMismatch(
            "characteristic polynomial of a non-square matrix".into(),
        ));
    }
    let n = restriction.rows();
    if n == 0 {
        return Ok(IntPoly::one());
    }
    let mut m: Vec<Vec<P>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let a = restriction.get(i, j) as i128;
                    if i == j {
                        trim(vec![-a, 1])
                    } else {
                        trim(vec![-a])
                    }
                })
                .collect()
        })
        .collect();
    let mut prev: P = vec![1];
    for k in 0..n - 1 {
        for i in k + 1..n {
            for j in k + 1..n {
                let num = sub(&mul(&m[k][k], &m[i][j])?, &mul(&m[i][k], &m[k][j])?)?;
                m[i][j] = div_exact_monic(&num, &prev)?;
            }
        }
        prev = m[k][k].clone();
    }
    let det = std::mem::take(&mut m[n - 1][n - 1]);
    det.into_iter()
        .map(|c| i64::try_from(c).map_err(|_| Error::Overflow("char_poly_lift")))
        .collect::<Result<Vec<i64>>>()
        .map(IntPoly::new)
}
