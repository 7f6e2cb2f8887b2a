// SPDX-License-Identifier: Apache-2.0

use std::ops::{BitXor, BitXorAssign, Not};

use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{Error, Result};

/// Largest arity a truth table may have (2^28 bits = 32 MiB).
pub const ARITY_LIMIT: u32 = 28;

/// `LOW_HALF[i]` selects the bits of a word whose in-word index has bit `i` clear.
pub(crate) const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0f0f_0f0f_0f0f_0f0f,
    0x00ff_00ff_00ff_00ff,
    0x0000_ffff_0000_ffff,
    0x0000_0000_ffff_ffff,
];

/// A Boolean function on `{0,1}^n` stored as its packed value vector.
///
/// Point `x` is read as an `n`-bit integer with `x_1` in the least significant
/// bit, so `get(0b011)` is `f(x_1 = 1, x_2 = 1, x_3 = 0)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TruthTable {
    n: u32,
    bits: BitVector,
}

pub(crate) fn check_arity(n: u32) -> Result<()> {
    if n == 0 || n > ARITY_LIMIT {
        return Err(Error::ArityOutOfRange {
            n,
            cap: ARITY_LIMIT,
        });
    }
    Ok(())
}

impl TruthTable {
    pub fn zero(n: u32) -> Result<Self> {
        check_arity(n)?;
        Ok(TruthTable {
            n,
            bits: BitVector::zeros(1 << n),
        })
    }

    pub fn ones(n: u32) -> Result<Self> {
        check_arity(n)?;
        Ok(TruthTable {
            n,
            bits: BitVector::ones(1 << n),
        })
    }

    /// Indicator of a single point.
    pub fn atom(n: u32, point: u64) -> Result<Self> {
        let mut t = Self::zero(n)?;
        if point >= 1 << n {
            return Err(Error::PointOutOfRange { n, point });
        }
        t.bits.set(point as usize, true);
        Ok(t)
    }

    /// The coordinate function `x_i`, with `i` counted from 1.
    pub fn variable(n: u32, i: u32) -> Result<Self> {
        check_arity(n)?;
        if i == 0 || i > n {
            return Err(Error::InvalidArgument(format!(
                "variable x_{i} with n = {n}"
            )));
        }
        Self::from_fn(n, |x| (x >> (i - 1)) & 1 == 1)
    }

    pub fn from_fn(n: u32, mut f: impl FnMut(u64) -> bool) -> Result<Self> {
        check_arity(n)?;
        Ok(TruthTable {
            n,
            bits: BitVector::from_fn(1 << n, |i| f(i as u64)),
        })
    }

    pub fn from_bits(n: u32, bits: BitVector) -> Result<Self> {
        check_arity(n)?;
        if bits.len() != 1 << n {
            return Err(Error::DimensionMismatch(format!(
                "{} bits for arity {n}",
                bits.len()
            )));
        }
        Ok(TruthTable { n, bits })
    }

    pub fn from_hex(n: u32, hex: &str) -> Result<Self> {
        check_arity(n)?;
        Ok(TruthTable {
            n,
            bits: BitVector::from_hex(1 << n, hex)?,
        })
    }

    pub fn to_hex(&self) -> String {
        self.bits.to_hex()
    }

    #[inline]
    pub fn arity(&self) -> u32 {
        self.n
    }

    /// Number of points, `2^n`.
    #[inline]
    pub fn size(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn get(&self, point: u64) -> bool {
        self.bits.get(point as usize)
    }

    #[inline]
    pub fn set(&mut self, point: u64, value: bool) {
        self.bits.set(point as usize, value)
    }

    #[inline]
    pub fn flip(&mut self, point: u64) {
        self.bits.flip(point as usize)
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    pub fn into_bits(self) -> BitVector {
        self.bits
    }

    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        self.bits.words_mut()
    }

    pub fn weight(&self) -> u64 {
        self.bits.count_ones()
    }

    pub fn is_zero(&self) -> bool {
        self.bits.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        let w = self.weight();
        w == 0 || w == self.size() as u64
    }

    pub fn support(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.iter_ones().map(|i| i as u64)
    }

    pub fn ensure_arity(&self, n: u32) -> Result<()> {
        if self.n != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: self.n,
            });
        }
        Ok(())
    }

    /// `out ^= x ↦ self(x ⊕ e_axis)`, word-level.
    pub(crate) fn xor_axis_shift_into(&self, axis: u32, out: &mut TruthTable) {
        debug_assert!(axis < self.n);
        let src = self.bits.words();
        let dst = out.bits.words_mut();
        if axis < 6 {
            let s = 1u32 << axis;
            let lo = LOW_HALF[axis as usize];
            for (d, &w) in dst.iter_mut().zip(src) {
                *d ^= ((w & lo) << s) | ((w >> s) & lo);
            }
        } else {
            let stride = 1usize << (axis - 6);
            for (j, d) in dst.iter_mut().enumerate() {
                *d ^= src[j ^ stride];
            }
        }
    }

    /// `x ↦ self(x ⊕ e_axis)` for a 0-based axis.
    pub(crate) fn axis_shift(&self, axis: u32) -> TruthTable {
        let mut out = TruthTable {
            n: self.n,
            bits: BitVector::zeros(self.size()),
        };
        self.xor_axis_shift_into(axis, &mut out);
        out
    }
}

impl BitXorAssign<&TruthTable> for TruthTable {
    fn bitxor_assign(&mut self, rhs: &TruthTable) {
        assert_eq!(self.n, rhs.n, "xor of truth tables with different arity");
        self.bits.xor_assign(&rhs.bits);
    }
}

impl BitXor<&TruthTable> for &TruthTable {
    type Output = TruthTable;

    fn bitxor(self, rhs: &TruthTable) -> TruthTable {
        let mut out = self.clone();
        out ^= rhs;
        out
    }
}

impl Not for &TruthTable {
    type Output = TruthTable;

    fn not(self) -> TruthTable {
        let mut out = self.clone();
        out.bits.xor_assign(&BitVector::ones(self.size()));
        out
    }
}

impl std::fmt::Debug for TruthTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "TruthTable(n={}, 0x{})", self.n, self.to_hex())
    }
}

#[derive(Serialize, Deserialize)]
struct TableRepr {
    n: u32,
    hex: String,
}

impl Serialize for TruthTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        TableRepr {
            n: self.n,
            hex: self.to_hex(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruthTable {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = TableRepr::deserialize(d)?;
        TruthTable::from_hex(repr.n, &repr.hex).map_err(serde::de::Error::custom)
    }
}
