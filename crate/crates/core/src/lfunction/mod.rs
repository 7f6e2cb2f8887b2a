// SPDX-License-Identifier: Apache-2.0

//! Arithmetic in `F_2[t]` and truncated L-series of predicate characters.
//!
//! Series are in `u = 2^{-s}`, so a prime `p` contributes `u^{deg p}`.

mod local;
mod poly2;
mod series;

pub use local::{
    local_factor, local_factor_capped, LocalFactor, DEFAULT_KRYLOV_CAP, LOCAL_FACTOR_CAVEAT,
};
pub use poly2::{
    irreducibles, irreducibles_up_to, necklace_count, MonicPoly2, IRREDUCIBLE_DEGREE_CAP,
};
pub use series::{
    compare_series, dirichlet_series, euler_product, ComparisonRow, PredicateCharacter,
    SeriesComparison, TruncatedSeries, SERIES_DEGREE_CAP,
};
