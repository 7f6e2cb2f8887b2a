// SPDX-License-Identifier: Apache-2.0

use boolobs::boolfun::atom;
use boolobs::gf2::IntPoly;
use boolobs::lfunction::{
    compare_series, dirichlet_series, euler_product, irreducibles, irreducibles_up_to,
    local_factor, necklace_count, MonicPoly2, PredicateCharacter,
};
use boolobs::observer::Observer;
use num::complex::Complex64;
use proptest::prelude::*;

const IRREDUCIBLE_COUNTS: [u64; 12] = [2, 1, 2, 3, 6, 9, 18, 30, 56, 99, 186, 335];

#[test]
fn irreducible_counts() {
    let all = irreducibles_up_to(12).unwrap();
    for d in 1..=12u32 {
        let count = all[d as usize - 1].len() as u64;
        assert_eq!(count, IRREDUCIBLE_COUNTS[d as usize - 1], "d = {d}");
        assert_eq!(count, necklace_count(d), "d = {d}");
        let total: u64 = (1..=d)
            .filter(|e| d % e == 0)
            .map(|e| e as u64 * all[e as usize - 1].len() as u64)
            .sum();
        assert_eq!(total, 1 << d);
    }
}

#[test]
fn irreducibles_have_no_proper_factor() {
    for p in irreducibles(6).unwrap() {
        for d in 1..6 {
            for q in MonicPoly2::all_of_degree(d) {
                assert!(!q.divides(p), "{q} | {p}");
            }
        }
    }
}

#[test]
fn constant_character_agrees() {
    let c = compare_series(&PredicateCharacter::constant(1), 12).unwrap();
    assert!(c.all_equal());
    // zeta of F_2[t]: 2^d monic polynomials of degree d
    let expected: Vec<i64> = (0..=12).map(|d| 1i64 << d).collect();
    assert_eq!(c.dirichlet.integer_coeffs().unwrap(), expected);
}

#[test]
fn delta_series() {
    let chi = PredicateCharacter::delta();
    assert_eq!(
        euler_product(&chi, 12).unwrap().integer_coeffs().unwrap(),
        vec![1, 2, 3, 4, 5, 6, 7, 8, 9, 66, 123, 180, 237]
    );
    assert_eq!(
        dirichlet_series(&chi, 12)
            .unwrap()
            .integer_coeffs()
            .unwrap(),
        vec![1, 2, 0, 0, 0, 0, 0, 0, 0, 512, 0, 0, 0]
    );
    assert_eq!(
        compare_series(&chi, 12).unwrap().first_divergence(),
        Some(2)
    );
    assert_eq!(
        dirichlet_series(&chi, 1).unwrap().integer_coeffs().unwrap(),
        vec![1, 2]
    );
}

#[test]
fn local_factor_first_atom() {
    let o = Observer::new(3).unwrap();
    let lf = local_factor(&o, &atom(3, 7).unwrap()).unwrap();
    assert_eq!(lf.krylov_dimension, 2);
    assert_eq!(lf.denominator, IntPoly::new(vec![1, 0, -1]));
    let z = lf.evaluate(2.0, Complex64::new(1.0, 0.0));
    assert!((z - Complex64::new(4.0 / 3.0, 0.0)).norm() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn multiplicative_character_agrees(a in -2i64..3, b in -2i64..3) {
        // completely multiplicative: χ(f) = a^{#factors of degree 1} b^{#other factors}
        let linear = [MonicPoly2::new(0b10).unwrap(), MonicPoly2::new(0b11).unwrap()];
        let chi = PredicateCharacter::new("mult", move |f: MonicPoly2| {
            let mut rest = f.bits();
            let mut value = 1i64;
            for l in linear {
                while rest > 1 && MonicPoly2::new(l.bits()).unwrap().divides(MonicPoly2::new(rest).unwrap()) {
                    rest = div_exact(rest, l.bits());
                    value *= a;
                }
            }
            let others = factor_count(rest);
            value * b.pow(others)
        });
        let c = compare_series(&chi, 8).unwrap();
        prop_assert!(c.all_equal());
    }
}

fn div_exact(num: u64, den: u64) -> u64 {
    let (mut r, mut q) = (num, 0u64);
    let dd = 63 - den.leading_zeros();
    while r != 0 && 63 - r.leading_zeros() >= dd {
        let s = 63 - r.leading_zeros() - dd;
        q |= 1 << s;
        r ^= den << s;
    }
    assert_eq!(r, 0);
    q
}

fn factor_count(mut f: u64) -> u32 {
    let mut count = 0;
    let mut d = 2u64;
    while f > 1 {
        let m = MonicPoly2::new(d).unwrap();
        if m.degree() > 0 && m.divides(MonicPoly2::new(f).unwrap()) {
            f = div_exact(f, d);
            count += 1;
        } else {
            d += 1;
        }
    }
    count
}
