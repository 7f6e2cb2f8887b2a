// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::poly::Gf2Poly;
use crate::bits::BitVector;
use crate::error::{Error, Result};

/// Dense matrix over GF(2), one packed bitset per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<BitVector>,
}

/// Right nullspace basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KernelBasis {
    pub dimension: usize,
    pub rank: usize,
    #[serde(skip)]
    pub vectors: Vec<BitVector>,
}

/// Reduced row echelon form; `pivots[r]` is the pivot column of row `r`.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub reduced: Gf2Matrix,
    pub pivots: Vec<usize>,
}

impl Gf2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Gf2Matrix {
            rows,
            cols,
            data: vec![BitVector::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<BitVector>, cols: usize) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch(format!(
                "row of length {} in matrix with {cols} columns",
                bad.len()
            )));
        }
        Ok(Gf2Matrix {
            rows: rows.len(),
            cols,
            data: rows,
        })
    }

    pub fn from_rows_bool(rows: &[Vec<bool>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let packed = rows
            .iter()
            .map(|r| {
                if r.len() != cols {
                    return Err(Error::DimensionMismatch("ragged rows".into()));
                }
                Ok(BitVector::from_fn(cols, |j| r[j]))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(packed, cols)
    }

    /// Parses rows written as `0`/`1` characters, column 0 first.
    pub fn from_bit_strings(rows: &[&str]) -> Result<Self> {
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        _ => Err(Error::InvalidArgument(format!("bad matrix entry `{c}`"))),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?;
        Self::from_rows_bool(&parsed)
    }

    pub fn from_hex_rows(rows: &[String], cols: usize) -> Result<Self> {
        let packed = rows
            .iter()
            .map(|h| BitVector::from_hex(cols, h))
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(packed, cols)
    }

    pub fn to_hex_rows(&self) -> Vec<String> {
        self.data.iter().map(BitVector::to_hex).collect()
    }

    pub fn to_rows_bool(&self) -> Vec<Vec<bool>> {
        self.data
            .iter()
            .map(|r| (0..self.cols).map(|j| r.get(j)).collect())
            .collect()
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.data[r].set(c, v)
    }

    pub fn row(&self, r: usize) -> &BitVector {
        &self.data[r]
    }

    pub fn column(&self, c: usize) -> BitVector {
        BitVector::from_fn(self.rows, |r| self.get(r, c))
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut t = Gf2Matrix::zeros(self.cols, self.rows);
        for (r, row) in self.data.iter().enumerate() {
            for c in row.iter_ones() {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.xor(b))
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// `self + I`, which over GF(2) is also `self - I`.
    pub fn plus_identity(&self) -> Result<Gf2Matrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "plus_identity of non-square matrix".into(),
            ));
        }
        let mut m = self.clone();
        for i in 0..self.rows {
            m.data[i].flip(i);
        }
        Ok(m)
    }

    pub fn mul_vec(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok(BitVector::from_fn(self.rows, |r| self.data[r].dot(v)))
    }

    pub fn mul(&self, other: &Gf2Matrix) -> Result<Gf2Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let data = self
            .data
            .iter()
            .map(|row| {
                let mut acc = BitVector::zeros(other.cols);
                for k in row.iter_ones() {
                    acc.xor_assign(&other.data[k]);
                }
                acc
            })
            .collect();
        Ok(Gf2Matrix {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    /// Gauss–Jordan elimination with the leftmost available pivot in each step.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| m.data[i].get(c)) else {
                continue;
            };
            m.data.swap(r, p);
            let pivot_row = m.data[r].clone();
            let first_word = c / 64;
            for (i, row) in m.data.iter_mut().enumerate() {
                if i != r && row.get(c) {
                    let dst = row.words_mut();
                    for (d, s) in dst[first_word..]
                        .iter_mut()
                        .zip(&pivot_row.words()[first_word..])
                    {
                        *d ^= *s;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    pub fn kernel(&self) -> KernelBasis {
        let ech = self.echelon();
        let mut is_pivot = vec![false; self.cols];
        for &p in &ech.pivots {
            is_pivot[p] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let mut slot = vec![usize::MAX; self.cols];
        for (k, &f) in free.iter().enumerate() {
            slot[f] = k;
        }
        let mut vectors: Vec<BitVector> = free
            .iter()
            .map(|&f| BitVector::unit(self.cols, f))
            .collect();
        for (r, &p) in ech.pivots.iter().enumerate() {
            for c in ech.reduced.data[r].iter_ones() {
                if c != p {
                    vectors[slot[c]].set(p, true);
                }
            }
        }
        KernelBasis {
            dimension: vectors.len(),
            rank: ech.pivots.len(),
            vectors,
        }
    }

    /// Characteristic polynomial over GF(2) by reduction to Hessenberg form.
    pub fn char_poly(&self) -> Result<Gf2Poly> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch(
                "char_poly of non-square matrix".into(),
            ));
        }
        let n = self.rows;
        let mut h: Vec<Vec<bool>> = self.to_rows_bool();
        for m in 1..n.saturating_sub(1) {
            let Some(i) = (m..n).find(|&i| h[i][m - 1]) else {
                continue;
            };
            if i != m {
                h.swap(i, m);
                for row in h.iter_mut() {
                    row.swap(i, m);
                }
            }
            for i in m + 1..n {
                if h[i][m - 1] {
                    // row_i -= row_m, then col_m += col_i to keep the similarity
                    for j in 0..n {
                        let v = h[m][j];
                        h[i][j] ^= v;
                    }
                    for row in h.iter_mut() {
                        let v = row[i];
                        row[m] ^= v;
                    }
                }
            }
        }
        let mut p: Vec<Gf2Poly> = vec![Gf2Poly::one()];
        for m in 0..n {
            let mut next = p[m].mul(&Gf2Poly::linear(h[m][m]));
            let mut sub = true;
            for i in (0..m).rev() {
                sub &= h[i + 1][i];
                if !sub {
                    break;
                }
                if h[i][m] {
                    next = next.add(&p[i]);
                }
            }
            p.push(next);
        }
        Ok(p.pop().unwrap())
    }
}

impl std::fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for row in &self.data {
            let s: String = (0..self.cols)
                .map(|j| if row.get(j) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

impl std::fmt::Display for Gf2Matrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for row in &self.data {
            let cells: Vec<&str> = (0..self.cols)
                .map(|j| if row.get(j) { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    hex_rows: Vec<String>,
}

impl Serialize for Gf2Matrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            hex_rows: self.to_hex_rows(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Gf2Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = MatrixRepr::deserialize(d)?;
        let m = Gf2Matrix::from_hex_rows(&r.hex_rows, r.cols).map_err(serde::de::Error::custom)?;
        if m.rows != r.rows {
            return Err(serde::de::Error::custom("row count mismatch"));
        }
        Ok(m)
    }
}
