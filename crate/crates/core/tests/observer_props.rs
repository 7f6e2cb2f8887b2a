// SPDX-License-Identifier: Apache-2.0

mod common;

use boolobs::boolfun::{atom, TruthTable};
use boolobs::observer::{translate, AtomOrder, Observer};
use common::{random_table, table, table_pair};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn linear((f, g) in table_pair(1, 14)) {
        let o = Observer::new(f.arity()).unwrap();
        let lhs = o.apply(&(&f ^ &g)).unwrap();
        let rhs = &o.apply(&f).unwrap() ^ &o.apply(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn square_is_n_times_identity(f in table(1, 16)) {
        let n = f.arity();
        let o = Observer::new(n).unwrap();
        let twice = o.apply(&o.apply(&f).unwrap()).unwrap();
        if n % 2 == 1 {
            prop_assert_eq!(twice, f);
        } else {
            prop_assert!(twice.is_zero());
        }
    }

    #[test]
    fn commutes_with_translation(f in table(1, 12), v in any::<u64>()) {
        let n = f.arity();
        let v = v & ((1u64 << n) - 1);
        let o = Observer::new(n).unwrap();
        let lhs = o.apply(&translate(&f, v).unwrap()).unwrap();
        let rhs = translate(&o.apply(&f).unwrap(), v).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn word_level_matches_pointwise(f in table(1, 16)) {
        let o = Observer::new(f.arity()).unwrap();
        prop_assert_eq!(o.apply(&f).unwrap(), o.apply_pointwise(&f).unwrap());
    }

    #[test]
    fn matrix_matches_implicit(f in table(1, 10)) {
        let n = f.arity();
        let o = Observer::new(n).unwrap();
        for order in [AtomOrder::Ascending, AtomOrder::Descending] {
            let m = o.matrix_in(order, 10).unwrap();
            let image = m.mul_vec(&order.to_vector(&f)).unwrap();
            prop_assert_eq!(order.from_vector(n, &image).unwrap(), o.apply(&f).unwrap());
        }
    }

    #[test]
    fn power_agrees_with_iteration(f in table(1, 10), k in 0u64..7) {
        let o = Observer::new(f.arity()).unwrap();
        let mut cur = f.clone();
        for _ in 0..k {
            cur = o.apply(&cur).unwrap();
        }
        prop_assert_eq!(o.power(&f, k).unwrap(), cur);
    }
}

#[test]
fn involution_exhaustive_small() {
    for n in 1..=3u32 {
        let o = Observer::new(n).unwrap();
        for w in 0u64..1 << (1u64 << n) {
            let f = TruthTable::from_fn(n, |x| w >> x & 1 == 1).unwrap();
            let twice = o.apply(&o.apply(&f).unwrap()).unwrap();
            assert_eq!(
                twice,
                if n % 2 == 1 {
                    f
                } else {
                    TruthTable::zero(n).unwrap()
                }
            );
        }
    }
}

#[test]
fn atom_image_is_neighbourhood() {
    let o = Observer::new(5).unwrap();
    for p in 0..32 {
        let img = o.apply(&atom(5, p).unwrap()).unwrap();
        let expected: Vec<u64> = {
            let mut v: Vec<u64> = (0..5).map(|i| p ^ (1 << i)).collect();
            v.sort();
            v
        };
        assert_eq!(img.support().collect::<Vec<_>>(), expected);
    }
}

#[test]
fn orbit_period_two_for_odd_levels() {
    let o = Observer::new(5).unwrap();
    let f = random_table(5, 7);
    let r = o.orbit(&f, 16).unwrap();
    assert_eq!((r.preperiod, r.period), (0, Some(2)));
}

#[test]
fn orbit_collapses_for_even_levels() {
    let o = Observer::new(4).unwrap();
    let f = random_table(4, 11);
    let r = o.orbit(&f, 16).unwrap();
    // f, O f, then zero forever
    assert_eq!(r.period, Some(1));
    assert!(r.preperiod <= 2);
}

#[test]
fn rejects_wrong_arity() {
    let o = Observer::new(3).unwrap();
    assert!(o.apply(&TruthTable::zero(4).unwrap()).is_err());
}
