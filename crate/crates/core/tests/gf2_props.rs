// SPDX-License-Identifier: Apache-2.0

mod common;

use boolobs::bits::BitVector;
use boolobs::boolfun::atom;
use boolobs::gf2::{
    basis_tables, char_poly_lift, eval_at_operator, fixed_space, krylov_space, minimal_polynomial,
    Gf2Matrix, Gf2Poly,
};
use boolobs::observer::Observer;
use common::{random_table, table};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(rows: usize, cols: usize, seed: u64) -> Gf2Matrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..rows)
        .map(|_| BitVector::from_fn(cols, |_| rng.gen()))
        .collect();
    Gf2Matrix::from_rows(rows, cols).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn rank_nullity(r in 1usize..80, c in 1usize..80, s in any::<u64>()) {
        let m = random_matrix(r, c, s);
        let k = m.kernel();
        prop_assert_eq!(k.rank + k.dimension, c);
        for v in &k.vectors {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn minpoly_annihilates_seed(f in table(1, 12)) {
        let o = Observer::new(f.arity()).unwrap();
        let mp = minimal_polynomial(&o, &f).unwrap();
        prop_assert!(eval_at_operator(&o, &mp.poly, &f).unwrap().is_zero());
    }

    #[test]
    fn minpoly_degree_is_krylov_dimension(f in table(1, 10)) {
        prop_assume!(!f.is_zero());
        let o = Observer::new(f.arity()).unwrap();
        let mp = minimal_polynomial(&o, &f).unwrap();
        let k = krylov_space(&o, &f, 4096).unwrap();
        prop_assert_eq!(mp.poly.degree().unwrap_or(0), k.dimension());
    }

    #[test]
    fn lifted_char_poly_reduces_mod_two(s in any::<u64>(), d in 1usize..9) {
        let m = random_matrix(d, d, s);
        let lifted = char_poly_lift(&m).unwrap();
        prop_assert_eq!(lifted.mod2(), m.char_poly().unwrap());
        prop_assert_eq!(lifted.coeff(d), 1);
    }

    #[test]
    fn poly_division(a in proptest::collection::vec(0u8..2, 1..40), b in proptest::collection::vec(0u8..2, 1..20)) {
        let a = Gf2Poly::from_coeffs(&a);
        let b = Gf2Poly::from_coeffs(&b);
        prop_assume!(!b.is_zero());
        let (q, r) = a.div_rem(&b);
        prop_assert_eq!(q.mul(&b).add(&r), a);
        prop_assert!(r.degree().is_none_or(|dr| dr < b.degree().unwrap()));
    }
}

#[test]
fn fixed_space_dimensions() {
    // 2^(n-1) for odd n, 0 for even n
    let expected = [1usize, 0, 4, 0, 16, 0, 64, 0, 256, 0];
    for (i, &d) in expected.iter().enumerate() {
        let n = i as u32 + 1;
        let k = fixed_space(n).unwrap();
        assert_eq!(k.dimension, d, "n = {n}");
        let o = Observer::new(n).unwrap();
        for t in basis_tables(n, &k).unwrap() {
            assert!(o.is_invariant(&t).unwrap());
        }
    }
}

#[test]
fn minpoly_of_first_atom() {
    let o = Observer::new(3).unwrap();
    let mp = minimal_polynomial(&o, &atom(3, 7).unwrap()).unwrap();
    assert_eq!(mp.poly, Gf2Poly::from_coeffs(&[1, 0, 1]));
}

#[test]
fn minpoly_on_random_seeds() {
    for s in 0..500u64 {
        let n = (s % 12) as u32 + 1;
        let f = random_table(n, 1000 + s);
        let o = Observer::new(n).unwrap();
        let mp = minimal_polynomial(&o, &f).unwrap();
        assert!(
            eval_at_operator(&o, &mp.poly, &f).unwrap().is_zero(),
            "seed {s}"
        );
    }
}
