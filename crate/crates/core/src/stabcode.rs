// SPDX-License-Identifier: Apache-2.0

//! The binary linear code spanned by the orbit of a predicate under `O_n`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::boolfun::TruthTable;
use crate::error::Result;
use crate::gf2::Gf2Matrix;
use crate::observer::Observer;

/// Largest code dimension whose codewords are enumerated in full.
pub const EXACT_DIMENSION_CAP: usize = 16;
/// Random codewords drawn when the dimension is above the cap.
pub const DISTANCE_SAMPLES: usize = 1 << 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum DistanceKind {
    Exact,
    /// Minimum weight over sampled codewords: an upper bound on the true distance.
    Estimate,
    /// The code is `{0}`.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CodeReport {
    pub n: u32,
    pub generator_count: usize,
    pub length: u64,
    pub dimension: usize,
    pub distance: Option<u64>,
    pub distance_kind: DistanceKind,
    pub claimed_length: u64,
    pub claimed_dimension: usize,
    /// `2^{n/2}`, not an integer for odd `n`.
    pub claimed_distance: f64,
    pub claimed_distance_is_integer: bool,
    pub matches_claim: bool,
    /// Reduced basis of the code, one hex truth table per row.
    pub generator_rows: Vec<String>,
    pub sample_seed: Option<u64>,
}

pub fn orbit_code(o: &Observer, seed: &TruthTable, orbit_cap: usize) -> Result<CodeReport> {
    orbit_code_seeded(o, seed, orbit_cap, 0)
}

pub fn orbit_code_seeded(
    o: &Observer,
    seed: &TruthTable,
    orbit_cap: usize,
    sample_seed: u64,
) -> Result<CodeReport> {
    let n = o.arity();
    let generators = o.orbit_elements(seed, orbit_cap)?;
    let length = seed.size() as u64;
    let ech = Gf2Matrix::from_rows(
        generators.iter().map(|g| g.bits().clone()).collect(),
        seed.size(),
    )?
    .echelon();
    let basis: Vec<BitVector> = (0..ech.pivots.len())
        .map(|r| ech.reduced.row(r).clone())
        .collect();
    let k = basis.len();
    let (distance, kind, used_seed) = if k == 0 {
        (None, DistanceKind::Degenerate, None)
    } else if k <= EXACT_DIMENSION_CAP {
        (Some(exact_distance(&basis)), DistanceKind::Exact, None)
    } else {
        (
            Some(sampled_distance(&basis, sample_seed)),
            DistanceKind::Estimate,
            Some(sample_seed),
        )
    };
    let claimed_distance = 2f64.powf(n as f64 / 2.0);
    let claimed_distance_is_integer = n.is_multiple_of(2);
    let matches_claim = kind == DistanceKind::Exact
        && k == 1
        && claimed_distance_is_integer
        && distance == Some(1u64 << (n / 2));
    Ok(CodeReport {
        n,
        generator_count: generators.len(),
        length,
        dimension: k,
        distance,
        distance_kind: kind,
        claimed_length: length,
        claimed_dimension: 1,
        claimed_distance,
        claimed_distance_is_integer,
        matches_claim,
        generator_rows: basis.iter().map(BitVector::to_hex).collect(),
        sample_seed: used_seed,
    })
}

/// Minimum nonzero weight over all `2^k` combinations, by Gray code within prefix blocks.
pub fn exact_distance(basis: &[BitVector]) -> u64 {
    let k = basis.len();
    let top = k.min(4);
    let low = k - top;
    (0u64..1 << top)
        .into_par_iter()
        .map(|prefix| {
            let mut cur = BitVector::zeros(basis[0].len());
            for (j, b) in basis[low..].iter().enumerate() {
                if prefix >> j & 1 == 1 {
                    cur.xor_assign(b);
                }
            }
            let mut best = if prefix == 0 {
                u64::MAX
            } else {
                cur.count_ones()
            };
            for i in 1u64..1 << low {
                cur.xor_assign(&basis[i.trailing_zeros() as usize]);
                best = best.min(cur.count_ones());
            }
            best
        })
        .min()
        .unwrap_or(u64::MAX)
}

fn sampled_distance(basis: &[BitVector], seed: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best = basis
        .iter()
        .map(BitVector::count_ones)
        .min()
        .unwrap_or(u64::MAX);
    for _ in 0..DISTANCE_SAMPLES {
        let mut cur = BitVector::zeros(basis[0].len());
        for b in basis {
            if rng.gen::<bool>() {
                cur.xor_assign(b);
            }
        }
        if !cur.is_zero() {
            best = best.min(cur.count_ones());
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::{atom, even_parity};

    #[test]
    fn even_parity_n3() {
        let o = Observer::new(3).unwrap();
        let r = orbit_code(&o, &even_parity(3).unwrap(), 64).unwrap();
        assert_eq!(r.generator_count, 2);
        assert_eq!((r.length, r.dimension, r.distance), (8, 2, Some(4)));
        assert_eq!(r.distance_kind, DistanceKind::Exact);
        assert!(!r.matches_claim);
        assert!(!r.claimed_distance_is_integer);
    }

    #[test]
    fn degenerate_and_atom() {
        let o = Observer::new(3).unwrap();
        let r = orbit_code(&o, &TruthTable::zero(3).unwrap(), 64).unwrap();
        assert_eq!(
            (r.dimension, r.distance_kind),
            (0, DistanceKind::Degenerate)
        );
        let r = orbit_code(&o, &atom(3, 7).unwrap(), 64).unwrap();
        assert_eq!((r.dimension, r.distance), (2, Some(1)));
    }

    #[test]
    fn even_level_matches_at_n2() {
        let o = Observer::new(2).unwrap();
        let r = orbit_code(&o, &even_parity(2).unwrap(), 64).unwrap();
        assert_eq!((r.length, r.dimension, r.distance), (4, 1, Some(2)));
        assert!(r.matches_claim);
    }

    #[test]
    fn gray_code_matches_brute_force() {
        let basis: Vec<BitVector> = [
            0b1011_0001u64,
            0b0110_1100,
            0b1111_0000,
            0b0000_0111,
            0b1000_0001,
        ]
        .iter()
        .map(|&w| BitVector::from_words(8, vec![w]))
        .collect();
        let mut brute = u64::MAX;
        for c in 1u32..32 {
            let mut v = BitVector::zeros(8);
            for (j, b) in basis.iter().enumerate() {
                if c >> j & 1 == 1 {
                    v.xor_assign(b);
                }
            }
            if !v.is_zero() {
                brute = brute.min(v.count_ones());
            }
        }
        assert_eq!(exact_distance(&basis), brute);
    }
}
