// SPDX-License-Identifier: Apache-2.0

//! Boolean functions on `{0,1}^n`: truth tables, atoms, algebraic normal form
//! and the Walsh transform.

mod anf;
mod family;
mod table;
mod walsh;

pub use anf::{anf_of, table_of, AnfPoly};
pub use family::{predicate_family, predicate_family_by_name, Family};
pub(crate) use table::check_arity;
pub use table::{TruthTable, ARITY_LIMIT};
pub use walsh::{fwht_in_place, inverse_walsh, lift_values, walsh, Lift, WalshSpectrum};

use crate::error::Result;

pub fn atom(n: u32, point: u64) -> Result<TruthTable> {
    TruthTable::atom(n, point)
}

/// The indicator of even-weight points, `1 ⊕ x_1 ⊕ … ⊕ x_n`.
pub fn even_parity(n: u32) -> Result<TruthTable> {
    TruthTable::from_fn(n, |x| x.count_ones() % 2 == 0)
}
