// SPDX-License-Identifier: Apache-2.0

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity {n} outside supported range 1..={cap}")]
    ArityOutOfRange { n: u32, cap: u32 },

    #[error("arity mismatch: expected {expected}, got {found}")]
    ArityMismatch { expected: u32, found: u32 },

    #[error("point {point:#b} does not fit in {n} variables")]
    PointOutOfRange { n: u32, point: u64 },

    #[error("{what}: {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("unknown predicate family `{0}` (expected pi1, pi2 or delta)")]
    UnknownFamily(String),

    #[error("invalid hex string: {0}")]
    InvalidHex(String),

    #[error("minimal polynomial probe failed after {attempts} attempts")]
    ProbeFailure { attempts: u32 },

    #[error("Krylov space did not close within {cap} vectors")]
    KrylovClosure { cap: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(
            self,
            Error::CapExceeded { .. } | Error::ArityOutOfRange { .. } | Error::KrylovClosure { .. }
        )
    }
}
