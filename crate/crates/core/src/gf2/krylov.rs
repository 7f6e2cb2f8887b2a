// SPDX-License-Identifier: Apache-2.0

//! Krylov spaces of the observation operator and minimal polynomials from
//! scalar sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::matrix::Gf2Matrix;
use super::poly::Gf2Poly;
use crate::bits::BitVector;
use crate::boolfun::TruthTable;
use crate::error::{Error, Result};
use crate::observer::Observer;

/// `span{seed, O seed, …, O^{d-1} seed}` with `O` written in that basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KrylovSpace {
    pub basis: Vec<TruthTable>,
    /// Column `j` holds the coordinates of `O` applied to `basis[j]`.
    pub restriction: Gf2Matrix,
}

impl KrylovSpace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

struct Reducer {
    dim_cap: usize,
    rows: Vec<(BitVector, BitVector, usize)>,
}

impl Reducer {
    /// Reduces `v` against the stored vectors. Returns `None` after storing an
    /// independent vector, otherwise the combination of stored inputs equal to it.
    fn insert(&mut self, v: BitVector, index: usize) -> Option<BitVector> {
        let mut r = v;
        let mut combo = BitVector::unit(self.dim_cap + 1, index);
        for (rv, rc, pivot) in &self.rows {
            if r.get(*pivot) {
                r.xor_assign(rv);
                combo.xor_assign(rc);
            }
        }
        match r.first_one() {
            Some(p) => {
                self.rows.push((r, combo, p));
                None
            }
            None => Some(combo),
        }
    }
}

pub fn krylov_space(o: &Observer, seed: &TruthTable, cap: usize) -> Result<KrylovSpace> {
    seed.ensure_arity(o.arity())?;
    if seed.is_zero() {
        return Err(Error::InvalidArgument("Krylov seed must be nonzero".into()));
    }
    let mut reducer = Reducer {
        dim_cap: cap,
        rows: Vec::new(),
    };
    let mut basis: Vec<TruthTable> = Vec::new();
    let mut cur = seed.clone();
    let combo = loop {
        let next = o.apply_unchecked(&cur);
        if let Some(combo) = reducer.insert(cur.bits().clone(), basis.len()) {
            break combo;
        }
        basis.push(cur);
        if basis.len() > cap {
            return Err(Error::KrylovClosure { cap });
        }
        cur = next;
    };
    // combo has bit d set (the dependent vector O^d seed) plus the basis terms equal to it
    let d = basis.len();
    let mut restriction = Gf2Matrix::zeros(d, d);
    for j in 0..d - 1 {
        restriction.set(j + 1, j, true);
    }
    for i in combo.iter_ones().filter(|&i| i < d) {
        restriction.set(i, d - 1, true);
    }
    Ok(KrylovSpace { basis, restriction })
}

/// Shortest linear recurrence of a GF(2) sequence.
///
/// Returns the connection polynomial `C` (with `C_0 = 1`) and the recurrence
/// length `L`: `Σ_{j=0..L} C_j s_{i-j} = 0` for all `i ≥ L`.
pub fn berlekamp_massey(seq: &[bool]) -> (Gf2Poly, usize) {
    let mut c = Gf2Poly::one();
    let mut b = Gf2Poly::one();
    let mut l = 0usize;
    let mut m = 1usize;
    for i in 0..seq.len() {
        let mut d = seq[i];
        for j in 1..=l {
            d ^= c.coeff(j) & seq[i - j];
        }
        if !d {
            m += 1;
        } else if 2 * l <= i {
            let t = c.clone();
            c = c.add(&b.mul(&Gf2Poly::x_pow(m)));
            l = i + 1 - l;
            b = t;
            m = 1;
        } else {
            c = c.add(&b.mul(&Gf2Poly::x_pow(m)));
            m += 1;
        }
    }
    (c, l)
}

/// `x^L C(1/x)`: the annihilating polynomial of degree exactly `L`.
fn recurrence_polynomial(connection: &Gf2Poly, len: usize) -> Gf2Poly {
    let coeffs: Vec<u8> = (0..=len).map(|i| connection.coeff(len - i) as u8).collect();
    Gf2Poly::from_coeffs(&coeffs)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinimalPolynomial {
    pub poly: Gf2Poly,
    pub probe_seed: u64,
    pub probes_used: u32,
}

#[derive(Clone, Copy, Debug)]
pub struct MinPolyOptions {
    /// Largest degree the recurrence search looks for.
    pub degree_bound: usize,
    pub retries: u32,
    pub probe_seed: u64,
}

impl Default for MinPolyOptions {
    fn default() -> Self {
        MinPolyOptions {
            degree_bound: 64,
            retries: 16,
            probe_seed: 0x5eed,
        }
    }
}

pub fn minimal_polynomial(o: &Observer, seed: &TruthTable) -> Result<MinimalPolynomial> {
    minimal_polynomial_with(o, seed, MinPolyOptions::default())
}

/// Minimal polynomial of `O` on the Krylov space of `seed`, from the scalar
/// sequences `<u, O^k seed>` for random probes `u`. The least common multiple
/// of the recurrences found so far is returned as soon as it annihilates `seed`.
pub fn minimal_polynomial_with(
    o: &Observer,
    seed: &TruthTable,
    opts: MinPolyOptions,
) -> Result<MinimalPolynomial> {
    seed.ensure_arity(o.arity())?;
    if seed.is_zero() {
        return Ok(MinimalPolynomial {
            poly: Gf2Poly::one(),
            probe_seed: opts.probe_seed,
            probes_used: 0,
        });
    }
    let bound = opts.degree_bound.min(seed.size()).max(1);
    let mut powers = Vec::with_capacity(2 * bound);
    powers.push(seed.clone());
    for k in 1..2 * bound {
        let next = o.apply_unchecked(&powers[k - 1]);
        powers.push(next);
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.probe_seed);
    let mut acc = Gf2Poly::one();
    for attempt in 1..=opts.retries {
        let words: Vec<u64> = (0..seed.bits().words().len()).map(|_| rng.gen()).collect();
        let probe = BitVector::from_words(seed.size(), words);
        let seq: Vec<bool> = powers.iter().map(|p| p.bits().dot(&probe)).collect();
        let (conn, len) = berlekamp_massey(&seq);
        acc = acc.lcm(&recurrence_polynomial(&conn, len));
        if acc.degree().unwrap_or(0) > bound {
            // 2·bound terms cannot certify a longer recurrence
            break;
        }
        if annihilates(o, &acc, &powers) {
            return Ok(MinimalPolynomial {
                poly: acc,
                probe_seed: opts.probe_seed,
                probes_used: attempt,
            });
        }
    }
    Err(Error::ProbeFailure {
        attempts: opts.retries,
    })
}

fn annihilates(o: &Observer, p: &Gf2Poly, powers: &[TruthTable]) -> bool {
    let Some(deg) = p.degree() else {
        return false;
    };
    let mut acc = TruthTable::zero(o.arity()).expect("arity validated");
    let mut cur = powers[0].clone();
    for k in 0..=deg {
        if k > 0 {
            cur = match powers.get(k) {
                Some(t) => t.clone(),
                None => o.apply_unchecked(&cur),
            };
        }
        if p.coeff(k) {
            acc ^= &cur;
        }
    }
    acc.is_zero()
}

/// `p(O) f`, computed directly.
pub fn eval_at_operator(o: &Observer, p: &Gf2Poly, f: &TruthTable) -> Result<TruthTable> {
    f.ensure_arity(o.arity())?;
    let mut acc = TruthTable::zero(o.arity())?;
    let mut cur = f.clone();
    if let Some(deg) = p.degree() {
        for k in 0..=deg {
            if p.coeff(k) {
                acc ^= &cur;
            }
            cur = o.apply_unchecked(&cur);
        }
    }
    Ok(acc)
}
