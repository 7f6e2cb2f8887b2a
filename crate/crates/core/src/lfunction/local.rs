// SPDX-License-Identifier: Apache-2.0

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::boolfun::TruthTable;
use crate::error::{Error, Result};
use crate::gf2::{char_poly_lift, krylov_space, Gf2Matrix, IntPoly};
use crate::observer::Observer;

/// Attached to every local factor.
pub const LOCAL_FACTOR_CAVEAT: &str =
    "the Krylov span of the predicate under O (independent of the place) \
stands in for the local invariant subspace; GF(2) entries are lifted to the integers 0 and 1";

/// Default bound on the Krylov dimension.
pub const DEFAULT_KRYLOV_CAP: usize = 4096;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalFactor {
    pub n: u32,
    pub seed: TruthTable,
    pub krylov_dimension: usize,
    pub restriction: Gf2Matrix,
    /// `det(xI - R)` for the lifted restriction `R`.
    pub char_poly: IntPoly,
    /// `det(I - uR)`, a polynomial in `u`.
    pub denominator: IntPoly,
    pub caveat: String,
}

impl LocalFactor {
    /// `1 / det(I - q^{-s} R)`.
    pub fn evaluate(&self, q: f64, s: Complex64) -> Complex64 {
        let u = Complex64::new(q, 0.0).powc(-s);
        self.denominator.eval_complex(u).inv()
    }
}

pub fn local_factor(o: &Observer, p: &TruthTable) -> Result<LocalFactor> {
    local_factor_capped(o, p, DEFAULT_KRYLOV_CAP)
}

pub fn local_factor_capped(o: &Observer, p: &TruthTable, cap: usize) -> Result<LocalFactor> {
    let k = krylov_space(o, p, cap)?;
    let char_poly = char_poly_lift(&k.restriction)?;
    if char_poly.mod2() != k.restriction.char_poly()? {
        return Err(Error::Consistency(
            "lifted characteristic polynomial does not reduce to the GF(2) one".into(),
        ));
    }
    let denominator = char_poly.reversed();
    Ok(LocalFactor {
        n: o.arity(),
        seed: p.clone(),
        krylov_dimension: k.dimension(),
        restriction: k.restriction,
        char_poly,
        denominator,
        caveat: LOCAL_FACTOR_CAVEAT.to_string(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::atom;

    #[test]
    fn examples() {
        let o3 = Observer::new(3).unwrap();
        let lf = local_factor(&o3, &atom(3, 7).unwrap()).unwrap();
        assert_eq!(lf.denominator.format_in("u"), "1 - u^2");
        let lf = local_factor(&o3, &TruthTable::ones(3).unwrap()).unwrap();
        assert_eq!(lf.denominator.coeffs(), &[1, -1]);
        let o2 = Observer::new(2).unwrap();
        let lf = local_factor(&o2, &atom(2, 3).unwrap()).unwrap();
        assert_eq!(lf.denominator, IntPoly::one());
        assert_eq!(lf.krylov_dimension, 2);
    }

    #[test]
    fn evaluation() {
        let o3 = Observer::new(3).unwrap();
        let lf = local_factor(&o3, &TruthTable::ones(3).unwrap()).unwrap();
        // 1 / (1 - 2^{-1})
        let v = lf.evaluate(2.0, Complex64::new(1.0, 0.0));
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn zero_seed_rejected() {
        let o3 = Observer::new(3).unwrap();
        assert!(local_factor(&o3, &TruthTable::zero(3).unwrap()).is_err());
    }
}
