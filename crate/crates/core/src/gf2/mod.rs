// SPDX-License-Identifier: Apache-2.0

//! Exact linear algebra over GF(2).

mod charpoly;
mod krylov;
mod matrix;
mod poly;

pub use charpoly::char_poly_lift;
pub use krylov::{
    berlekamp_massey, eval_at_operator, krylov_space, minimal_polynomial, minimal_polynomial_with,
    KrylovSpace, MinPolyOptions, MinimalPolynomial,
};
pub use matrix::{Echelon, Gf2Matrix, KernelBasis};
pub use poly::{Gf2Poly, IntPoly};

use crate::boolfun::TruthTable;
use crate::error::Result;
use crate::observer::{AtomOrder, Observer};

/// Largest arity whose operator matrix is materialized (2^14 columns).
pub const DEFAULT_DENSE_CAP: u32 = 14;

/// Kernel of `O_n + I`, in ascending point order.
pub fn fixed_space(n: u32) -> Result<KernelBasis> {
    fixed_space_capped(n, DEFAULT_DENSE_CAP)
}

pub fn fixed_space_capped(n: u32, dense_cap: u32) -> Result<KernelBasis> {
    let o = Observer::new(n)?;
    Ok(o.matrix_in(AtomOrder::Ascending, dense_cap)?
        .plus_identity()?
        .kernel())
}

/// Basis vectors of a kernel in ascending point order, as truth tables.
pub fn basis_tables(n: u32, kernel: &KernelBasis) -> Result<Vec<TruthTable>> {
    kernel
        .vectors
        .iter()
        .map(|v| TruthTable::from_bits(n, v.clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_fixed_spaces() {
        assert_eq!(fixed_space(1).unwrap().dimension, 1);
        assert_eq!(fixed_space(2).unwrap().dimension, 0);
        assert_eq!(fixed_space(3).unwrap().dimension, 4);
        let basis = basis_tables(1, &fixed_space(1).unwrap()).unwrap();
        assert_eq!(basis, vec![TruthTable::ones(1).unwrap()]);
    }

    #[test]
    fn fixed_space_contains_all_ones() {
        let k = fixed_space(3).unwrap();
        let o = Observer::new(3).unwrap();
        for t in basis_tables(3, &k).unwrap() {
            assert!(o.is_invariant(&t).unwrap());
        }
        let m = o
            .matrix_in(AtomOrder::Ascending, 14)
            .unwrap()
            .plus_identity()
            .unwrap();
        let ones = TruthTable::ones(3).unwrap();
        assert!(m.mul_vec(ones.bits()).unwrap().is_zero());
    }

    #[test]
    fn cap_is_enforced() {
        assert!(fixed_space_capped(5, 4).unwrap_err().is_cap_exceeded());
    }
}
