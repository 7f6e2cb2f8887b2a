// SPDX-License-Identifier: Apache-2.0

//! Finite-level toolkit for the Boolean observation operator
//! `O_n(f)(x) = f(x ⊕ e_1) ⊕ … ⊕ f(x ⊕ e_n)` on functions `{0,1}^n → {0,1}`.
//!
//! Points are `n`-bit integers with `x_1` as the least significant bit.

pub mod audit;
pub mod bits;
pub mod boolfun;
pub mod cech;
pub mod cftsim;
pub mod error;
pub mod gf2;
pub mod lfunction;
pub mod observer;
pub mod spectral;
pub mod stabcode;
pub mod tower;

pub use error::{Error, Result};
