// SPDX-License-Identifier: Apache-2.0

//! Univariate polynomials over GF(2) and over the integers, lowest degree first.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Polynomial over GF(2); bit `i` of `bits` is the coefficient of `x^i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Gf2Poly {
    bits: Vec<u64>,
}

impl Gf2Poly {
    pub fn zero() -> Self {
        Gf2Poly { bits: Vec::new() }
    }

    pub fn one() -> Self {
        Gf2Poly { bits: vec![1] }
    }

    pub fn x_pow(k: usize) -> Self {
        let mut p = Gf2Poly {
            bits: vec![0; k / 64 + 1],
        };
        p.bits[k / 64] = 1 << (k % 64);
        p
    }

    /// `x + c`.
    pub fn linear(c: bool) -> Self {
        Gf2Poly {
            bits: vec![0b10 | c as u64],
        }
    }

    pub fn from_coeffs(coeffs: &[u8]) -> Self {
        let mut p = Gf2Poly {
            bits: vec![0; coeffs.len().div_ceil(64)],
        };
        for (i, &c) in coeffs.iter().enumerate() {
            if c & 1 == 1 {
                p.bits[i / 64] |= 1 << (i % 64);
            }
        }
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.bits.last() == Some(&0) {
            self.bits.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let last = *self.bits.last()?;
        Some((self.bits.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.bits
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn coeffs(&self) -> Vec<u8> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|i| self.coeff(i) as u8).collect(),
        }
    }

    pub fn add(&self, other: &Gf2Poly) -> Gf2Poly {
        let len = self.bits.len().max(other.bits.len());
        let mut bits = vec![0; len];
        for (i, b) in bits.iter_mut().enumerate() {
            *b = self.bits.get(i).copied().unwrap_or(0) ^ other.bits.get(i).copied().unwrap_or(0);
        }
        let mut p = Gf2Poly { bits };
        p.trim();
        p
    }

    fn shl(&self, k: usize) -> Gf2Poly {
        let Some(d) = self.degree() else {
            return Gf2Poly::zero();
        };
        let mut out = Gf2Poly {
            bits: vec![0; (d + k) / 64 + 1],
        };
        for i in (0..=d).filter(|&i| self.coeff(i)) {
            let j = i + k;
            out.bits[j / 64] |= 1 << (j % 64);
        }
        out
    }

    pub fn mul(&self, other: &Gf2Poly) -> Gf2Poly {
        let mut acc = Gf2Poly::zero();
        if let Some(d) = other.degree() {
            for i in (0..=d).filter(|&i| other.coeff(i)) {
                acc = acc.add(&self.shl(i));
            }
        }
        acc
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn div_rem(&self, divisor: &Gf2Poly) -> (Gf2Poly, Gf2Poly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Gf2Poly::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            rem = rem.add(&divisor.shl(shift));
            quot = quot.add(&Gf2Poly::x_pow(shift));
        }
        (quot, rem)
    }

    pub fn gcd(&self, other: &Gf2Poly) -> Gf2Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a
    }

    pub fn lcm(&self, other: &Gf2Poly) -> Gf2Poly {
        if self.is_zero() || other.is_zero() {
            return Gf2Poly::zero();
        }
        let g = self.gcd(other);
        self.div_rem(&g).0.mul(other)
    }
}

impl fmt::Debug for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf2Poly({self})")
    }
}

impl fmt::Display for Gf2Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let Some(d) = self.degree() else {
            return f.write_str("0");
        };
        let terms: Vec<String> = (0..=d)
            .rev()
            .filter(|&i| self.coeff(i))
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "x".to_string(),
                _ => format!("x^{i}"),
            })
            .collect();
        f.write_str(&terms.join(" + "))
    }
}

impl Serialize for Gf2Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.coeffs().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gf2Poly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let c = Vec::<u8>::deserialize(d)?;
        if c.iter().any(|&v| v > 1) {
            return Err(serde::de::Error::custom(
                "GF(2) coefficients must be 0 or 1",
            ));
        }
        Ok(Gf2Poly::from_coeffs(&c))
    }
}

/// Integer polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPoly {
    coeffs: Vec<i64>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn one() -> Self {
        IntPoly { coeffs: vec![1] }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// Reduction of every coefficient mod 2.
    pub fn mod2(&self) -> Gf2Poly {
        let c: Vec<u8> = self.coeffs.iter().map(|&v| v.rem_euclid(2) as u8).collect();
        Gf2Poly::from_coeffs(&c)
    }

    /// `x^d p(1/x)` for `d = deg p`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::new(c)
    }

    pub fn eval_complex(&self, z: num::complex::Complex64) -> num::complex::Complex64 {
        self.coeffs
            .iter()
            .rev()
            .fold(num::complex::Complex64::new(0.0, 0.0), |acc, &c| {
                acc * z + c as f64
            })
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({:?})", self.coeffs)
    }
}

impl IntPoly {
    /// Renders the polynomial in the named variable, e.g. `1 - u^2`.
    pub fn format_in(&self, var: &str) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let mag = c.unsigned_abs();
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            let term = match (i, mag) {
                (0, m) => m.to_string(),
                (1, 1) => var.to_string(),
                (1, m) => format!("{m}{var}"),
                (k, 1) => format!("{var}^{k}"),
                (k, m) => format!("{m}{var}^{k}"),
            };
            out.push_str(&term);
        }
        out
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format_in("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_and_coeffs() {
        let p = Gf2Poly::from_coeffs(&[1, 0, 1, 0, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.coeffs(), vec![1, 0, 1]);
        assert_eq!(Gf2Poly::zero().degree(), None);
        assert_eq!(Gf2Poly::x_pow(70).degree(), Some(70));
    }

    #[test]
    fn gcd_lcm() {
        // (x+1)^2 and x(x+1)
        let a = Gf2Poly::from_coeffs(&[1, 0, 1]);
        let b = Gf2Poly::from_coeffs(&[0, 1, 1]);
        assert_eq!(a.gcd(&b), Gf2Poly::from_coeffs(&[1, 1]));
        assert_eq!(a.lcm(&b), Gf2Poly::from_coeffs(&[0, 1, 0, 1]));
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = Gf2Poly::from_coeffs(&[1, 1, 0, 1, 1, 0, 1]);
        let b = Gf2Poly::from_coeffs(&[1, 0, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn int_poly_display_and_mod2() {
        let p = IntPoly::new(vec![1, 0, -1, 0]);
        assert_eq!(p.format_in("u"), "1 - u^2");
        assert_eq!(IntPoly::new(vec![-1, 0, 1]).to_string(), "-1 + x^2");
        assert_eq!(p.mod2(), Gf2Poly::from_coeffs(&[1, 0, 1]));
        assert_eq!(IntPoly::new(vec![-1, 1]).reversed().coeffs(), &[1, -1]);
    }
}
