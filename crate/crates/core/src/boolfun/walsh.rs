// SPDX-License-Identifier: Apache-2.0

//! Integer Walsh–Hadamard transform over the character group of `{0,1}^n`.

use serde::{Deserialize, Serialize};

use super::table::TruthTable;

/// How a 0/1 table is lifted to integers before transforming.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Lift {
    /// `g(x) = f(x)`
    ZeroOne,
    /// `g(x) = (-1)^{f(x)}`
    PlusMinus,
}

/// `coefficients[S] = Σ_x (-1)^{<S,x>} g(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalshSpectrum {
    pub n: u32,
    pub coefficients: Vec<i64>,
}

/// Unnormalized butterfly; applying it twice multiplies by `2^n`.
pub fn fwht_in_place(v: &mut [i64]) {
    let len = v.len();
    debug_assert!(len.is_power_of_two());
    let mut h = 1;
    while h < len {
        for block in v.chunks_exact_mut(2 * h) {
            let (a, b) = block.split_at_mut(h);
            for (x, y) in a.iter_mut().zip(b.iter_mut()) {
                let (s, d) = (*x + *y, *x - *y);
                *x = s;
                *y = d;
            }
        }
        h *= 2;
    }
}

pub fn lift_values(t: &TruthTable, lift: Lift) -> Vec<i64> {
    (0..t.size() as u64)
        .map(|x| match (lift, t.get(x)) {
            (Lift::ZeroOne, b) => b as i64,
            (Lift::PlusMinus, false) => 1,
            (Lift::PlusMinus, true) => -1,
        })
        .collect()
}

pub fn walsh(t: &TruthTable, lift: Lift) -> WalshSpectrum {
    let mut coefficients = lift_values(t, lift);
    fwht_in_place(&mut coefficients);
    WalshSpectrum {
        n: t.arity(),
        coefficients,
    }
}

/// Applies the butterfly again; returns `2^n · g` for the lifted table `g`.
pub fn inverse_walsh(spectrum: &WalshSpectrum) -> Vec<i64> {
    let mut v = spectrum.coefficients.clone();
    fwht_in_place(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_function_concentrates_on_empty_character() {
        let w = walsh(&TruthTable::ones(4).unwrap(), Lift::ZeroOne);
        assert_eq!(w.coefficients[0], 16);
        assert!(w.coefficients[1..].iter().all(|&c| c == 0));
    }

    #[test]
    fn atom_spectrum_is_a_character() {
        // character sum over a single point p: (-1)^{<S,p>}
        for p in 0..8u64 {
            let w = walsh(&TruthTable::atom(3, p).unwrap(), Lift::ZeroOne);
            for s in 0..8u64 {
                let expected = if (s & p).count_ones() % 2 == 0 { 1 } else { -1 };
                assert_eq!(w.coefficients[s as usize], expected);
            }
        }
    }

    #[test]
    fn plus_minus_lift_of_zero_function() {
        let w = walsh(&TruthTable::zero(3).unwrap(), Lift::PlusMinus);
        assert_eq!(w.coefficients[0], 8);
        assert!(w.coefficients[1..].iter().all(|&c| c == 0));
    }
}
