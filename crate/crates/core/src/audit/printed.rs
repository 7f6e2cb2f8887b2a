// SPDX-License-Identifier: Apache-2.0

//! Values as printed for the `n = 3` example. Atoms are numbered `p_1 … p_8`,
//! with `p_k` the indicator of the point `8 - k`.

/// `O_3(p_k)` as the three atom numbers of its image, for `k = 1..8`.
pub const ATOM_IMAGES: [[u8; 3]; 8] = [
    [2, 3, 5],
    [1, 4, 6],
    [1, 4, 7],
    [2, 3, 8],
    [1, 6, 7],
    [2, 5, 8],
    [3, 5, 8],
    [4, 6, 7],
];

pub const MATRIX_M: [&str; 8] = [
    "01101000", "10010100", "10010010", "01100001", "10000110", "01001001", "00101001", "00010110",
];

/// The matrix printed as `M - I`.
pub const MATRIX_M_MINUS_I: [&str; 8] = [
    "11101000", "11010100", "10110010", "01110001", "10001110", "01001101", "00101011", "00010111",
];

pub const CLAIMED_RANK: usize = 6;
pub const CLAIMED_NULLITY: usize = 2;

/// Claimed nullspace basis, coordinates in `p_1 … p_8` order.
pub const NULLSPACE_V1: [u8; 8] = [1, 1, 1, 1, 1, 1, 1, 1];
pub const NULLSPACE_V2: [u8; 8] = [0, 1, 1, 0, 1, 0, 0, 1];

/// Atoms of the claimed fixed point `p_2 ⊕ p_3 ⊕ p_5 ⊕ p_8`.
pub const CLAIMED_FIXED_ATOMS: [u8; 4] = [2, 3, 5, 8];

/// Dimension of the fixed space claimed at every level.
pub const CLAIMED_FIXED_DIM: usize = 2;

/// Claimed count of invariant predicates at `n = 4`.
pub const CLAIMED_INVARIANT_COUNT_N4: u64 = 14;
