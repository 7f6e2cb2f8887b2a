// SPDX-License-Identifier: Apache-2.0

use boolobs::boolfun::TruthTable;
use boolobs::cech::{coboundary_solve, cocycle3, cocycle_audit, reproduces, CoboundaryResult};

fn all_tables(n: u32) -> impl Iterator<Item = TruthTable> {
    (0u64..1 << (1u64 << n)).map(move |w| TruthTable::from_fn(n, |x| w >> x & 1 == 1).unwrap())
}

#[test]
fn solver_sound_exhaustive() {
    for n in 1..=4 {
        for a in all_tables(n) {
            match coboundary_solve(&a).unwrap() {
                CoboundaryResult::Solvable { b } => {
                    assert!(reproduces(&a, &b), "{}", a.to_hex());
                    assert!(a.is_constant(), "{}", a.to_hex());
                }
                CoboundaryResult::Unsolvable { certificate } => {
                    assert!(certificate.verify(&a), "{}", a.to_hex());
                    assert!(!a.is_constant());
                }
            }
        }
    }
}

#[test]
fn identity_predicate_unsolvable() {
    let a = TruthTable::variable(1, 1).unwrap();
    match coboundary_solve(&a).unwrap() {
        CoboundaryResult::Unsolvable { certificate } => {
            let eqs: Vec<(u64, u64)> = certificate.equations.iter().map(|e| (e.x, e.y)).collect();
            assert_eq!(eqs, vec![(0, 0), (0, 1)]);
        }
        other => panic!("expected a certificate, got {other:?}"),
    }
}

#[test]
fn cocycle_symmetric_exhaustive() {
    for n in 1..=3 {
        for a in all_tables(n).take(64) {
            let c = cocycle3(&a);
            let size = 1u64 << n;
            for x in 0..size {
                for y in 0..size {
                    for z in 0..size {
                        let v = c.eval(x, y, z);
                        for (p, q, r) in [(x, z, y), (y, x, z), (y, z, x), (z, x, y), (z, y, x)] {
                            assert_eq!(c.eval(p, q, r), v);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn cocycle_examples() {
    let a = TruthTable::variable(1, 1).unwrap();
    let c = cocycle3(&a);
    assert!(c.eval(1, 0, 0));
    assert!(!c.eval(1, 1, 1));
    let r = cocycle_audit(&a).unwrap();
    assert_eq!(r.quadruples_checked, 16);
    for n in 1..=3 {
        for a in [TruthTable::zero(n).unwrap(), TruthTable::ones(n).unwrap()] {
            let r = cocycle_audit(&a).unwrap();
            assert!(r.cocycle_vanishes_identically && r.is_cocycle());
            assert!(r.pair_system.is_solvable());
        }
    }
}

#[test]
fn caps() {
    assert!(cocycle_audit(&TruthTable::zero(6).unwrap()).is_err());
    assert!(coboundary_solve(&TruthTable::zero(11).unwrap()).is_err());
}

#[test]
fn coboundary_violation_counts() {
    // independent enumeration of δc over all quadruples
    let cases = [
        (TruthTable::variable(1, 1).unwrap(), 4),
        (TruthTable::from_fn(2, |x| x == 3).unwrap(), 92),
        (boolobs::boolfun::even_parity(3).unwrap(), 1792),
    ];
    for (a, want) in cases {
        let r = cocycle_audit(&a).unwrap();
        assert_eq!(r.coboundary_violations, want, "{}", a.to_hex());
        assert!(!r.is_cocycle());
    }
}
