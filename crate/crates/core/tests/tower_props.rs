// SPDX-License-Identifier: Apache-2.0

mod common;

use boolobs::observer::Observer;
use boolobs::tower::{compatibility_audit, compatible_sequence_audit, LiftKind, LiftMap};
use common::random_table;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn parity_corrected_identity(n in 1u32..8, gap in 1u32..8, s in any::<u64>(), prefix in any::<bool>()) {
        let m = (n + gap).min(8);
        prop_assume!(m > n);
        let kind = if prefix { LiftKind::PrefixIgnore } else { LiftKind::SuffixEmbed };
        let l = LiftMap::new(kind, n, m).unwrap();
        let f = random_table(n, s);
        let lifted = l.lift(&f).unwrap();
        let lhs = Observer::new(m).unwrap().apply(&lifted).unwrap();
        let mut rhs = l.lift(&Observer::new(n).unwrap().apply(&f).unwrap()).unwrap();
        if (m - n) % 2 == 1 {
            rhs ^= &lifted;
        }
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn exhaustive_basis_audit() {
    for kind in LiftKind::ALL {
        for n in 1..8 {
            for m in n + 1..=8 {
                let r = compatibility_audit(&LiftMap::new(kind, n, m).unwrap()).unwrap();
                assert!(r.corrected_identity_holds, "{kind} {n}->{m}");
                assert_eq!(r.commutes, (m - n) % 2 == 0, "{kind} {n}->{m}");
                assert_eq!(r.witness.is_some(), !r.commutes);
            }
        }
    }
}

#[test]
fn first_witness() {
    let r = compatibility_audit(&LiftMap::new(LiftKind::PrefixIgnore, 3, 4).unwrap()).unwrap();
    let w = r.witness.unwrap();
    assert_eq!((w.label.as_str(), w.point), ("p1", 7));
}

#[test]
fn sequence() {
    let rep = compatible_sequence_audit(6).unwrap();
    assert!(!rep.consecutive_levels_compatible());
    for row in &rep.rows {
        if row.m == row.n + 2 {
            assert_eq!(row.lifting_dim, row.fixed_dim_n, "{row:?}");
        }
        if row.m == row.n + 1 {
            assert_eq!(row.lifting_dim, 0, "{row:?}");
        }
    }
}

#[test]
fn lift_rejects_descending_levels() {
    assert!(LiftMap::new(LiftKind::SuffixEmbed, 4, 3).is_err());
}
