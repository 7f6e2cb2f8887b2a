// SPDX-License-Identifier: Apache-2.0

mod common;

use boolobs::boolfun::{anf_of, atom, table_of, walsh, Lift, TruthTable};
use common::table;
use proptest::prelude::*;

fn walsh_quadratic(t: &TruthTable, lift: Lift) -> Vec<i64> {
    let g = boolobs::boolfun::lift_values(t, lift);
    (0..t.size() as u64)
        .map(|s| {
            (0..t.size() as u64)
                .map(|x| {
                    if (s & x).count_ones() % 2 == 0 {
                        g[x as usize]
                    } else {
                        -g[x as usize]
                    }
                })
                .sum()
        })
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn anf_round_trip(t in table(1, 12)) {
        prop_assert_eq!(table_of(&anf_of(&t)), t);
    }

    #[test]
    fn atoms_sum_to_table(t in table(1, 8)) {
        let mut acc = TruthTable::zero(t.arity()).unwrap();
        for x in t.support() {
            acc ^= &atom(t.arity(), x).unwrap();
        }
        prop_assert_eq!(acc, t);
    }

    #[test]
    fn fast_walsh_matches_definition(t in table(1, 8)) {
        for lift in [Lift::ZeroOne, Lift::PlusMinus] {
            prop_assert_eq!(walsh(&t, lift).coefficients, walsh_quadratic(&t, lift));
        }
    }

    #[test]
    fn inverse_walsh_scales_by_size(t in table(1, 10)) {
        let back = boolobs::boolfun::inverse_walsh(&walsh(&t, Lift::PlusMinus));
        let g = boolobs::boolfun::lift_values(&t, Lift::PlusMinus);
        let size = t.size() as i64;
        prop_assert!(back.iter().zip(&g).all(|(b, v)| *b == size * v));
    }

    #[test]
    fn parseval(t in table(1, 10)) {
        let w = walsh(&t, Lift::PlusMinus);
        let energy: i64 = w.coefficients.iter().map(|c| c * c).sum();
        prop_assert_eq!(energy, (t.size() * t.size()) as i64);
    }

    #[test]
    fn hex_round_trip(t in table(1, 12)) {
        prop_assert_eq!(TruthTable::from_hex(t.arity(), &t.to_hex()).unwrap(), t);
    }
}

#[test]
fn anf_of_known_functions() {
    // x1 ∧ x2 has the single monomial {1, 2}
    let and = TruthTable::from_fn(2, |x| x == 3).unwrap();
    assert_eq!(anf_of(&and).monomials(), &[0b11]);
    // x1 ∨ x2 = x1 + x2 + x1 x2
    let or = TruthTable::from_fn(2, |x| x != 0).unwrap();
    assert_eq!(anf_of(&or).monomials(), &[0b01, 0b10, 0b11]);
    assert_eq!(anf_of(&TruthTable::ones(4).unwrap()).monomials(), &[0]);
}

#[test]
fn arity_limits() {
    assert!(TruthTable::zero(0).is_err());
    assert!(TruthTable::zero(boolobs::boolfun::ARITY_LIMIT + 1).is_err());
    assert!(atom(3, 8).is_err());
}
