// SPDX-License-Identifier: Apache-2.0

#![allow(dead_code)]

use boolobs::bits::BitVector;
use boolobs::boolfun::TruthTable;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn random_table(n: u32, seed: u64) -> TruthTable {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let size = 1usize << n;
    let words = (0..size.div_ceil(64)).map(|_| rng.gen()).collect();
    TruthTable::from_bits(n, BitVector::from_words(size, words)).unwrap()
}

pub fn table(lo: u32, hi: u32) -> impl Strategy<Value = TruthTable> {
    (lo..=hi, any::<u64>()).prop_map(|(n, s)| random_table(n, s))
}

pub fn table_pair(lo: u32, hi: u32) -> impl Strategy<Value = (TruthTable, TruthTable)> {
    (lo..=hi, any::<u64>(), any::<u64>())
        .prop_map(|(n, a, b)| (random_table(n, a), random_table(n, b)))
}
