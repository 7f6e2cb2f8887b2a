// SPDX-License-Identifier: Apache-2.0

//! Metropolis sampling of the action
//! `S[φ] = Σ_x Σ_{y∼x} J(x,y) φ(x) φ(y) + Σ_x λ (φ(x) - A(x))²`
//! on `{0,1}^n`, with `J(x,y) = 2^{-d(x,y)}` and `y ∼ x` meaning `d(x,y) = 1`.
//!
//! The default distance is `d(x,y) = n - (shared high bits of x and y)`, which is
//! the bit length of `x ⊕ y`; each site then has the single neighbor `x ⊕ 1`.
//! The pair sum runs over ordered pairs.

use num::rational::Rational64;
use num::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::boolfun::TruthTable;
use crate::error::{Error, Result};

/// Largest arity for exhaustive ground-state search.
pub const GROUND_STATE_CAP: u32 = 4;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Metric {
    #[default]
    Ultrametric,
    Hamming,
}

impl std::str::FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ultrametric" => Ok(Metric::Ultrametric),
            "hamming" => Ok(Metric::Hamming),
            other => Err(Error::InvalidArgument(format!("unknown metric {other:?}"))),
        }
    }
}

impl Metric {
    pub fn distance(self, x: u64, y: u64) -> u32 {
        match self {
            Metric::Ultrametric => 64 - (x ^ y).leading_zeros(),
            Metric::Hamming => (x ^ y).count_ones(),
        }
    }

    pub fn neighbors(self, n: u32, x: u64) -> impl Iterator<Item = u64> {
        let axes = match self {
            Metric::Ultrametric => 0..1.min(n),
            Metric::Hamming => 0..n,
        };
        axes.map(move |i| x ^ (1 << i))
    }
}

/// `J(x, y) = 2^{-d}`.
pub fn coupling(d: u32) -> Rational64 {
    Rational64::new(1, 1i64 << d)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CftParams {
    pub n: u32,
    pub lambda: Rational64,
    pub beta: f64,
    pub reference: TruthTable,
    pub seed: u64,
    pub metric: Metric,
}

impl CftParams {
    pub fn new(reference: TruthTable, lambda: Rational64, beta: f64, seed: u64) -> Result<Self> {
        let p = CftParams {
            n: reference.arity(),
            lambda,
            beta,
            reference,
            seed,
            metric: Metric::Ultrametric,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_metric(mut self, metric: Metric) -> Self {
        self.metric = metric;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.lambda < Rational64::zero() {
            return Err(Error::InvalidArgument("lambda must be non-negative".into()));
        }
        if !self.beta.is_finite() || self.beta < 0.0 {
            return Err(Error::InvalidArgument(
                "beta must be finite and non-negative".into(),
            ));
        }
        self.reference.ensure_arity(self.n)
    }
}

pub fn energy(phi: &TruthTable, p: &CftParams) -> Result<Rational64> {
    phi.ensure_arity(p.n)?;
    let j1 = coupling(1);
    let mut pairs = 0i64;
    let mut mismatches = 0i64;
    for x in 0..phi.size() as u64 {
        let fx = phi.get(x);
        if fx {
            pairs += p.metric.neighbors(p.n, x).filter(|&y| phi.get(y)).count() as i64;
        }
        mismatches += (fx != p.reference.get(x)) as i64;
    }
    Ok(j1 * pairs + p.lambda * mismatches)
}

/// `S[φ with site x flipped] - S[φ]`.
pub fn flip_delta(phi: &TruthTable, p: &CftParams, x: u64) -> Rational64 {
    let old = phi.get(x);
    let sign: i64 = if old { -1 } else { 1 };
    let occupied = p.metric.neighbors(p.n, x).filter(|&y| phi.get(y)).count() as i64;
    // both orientations of each pair through x
    let pair = coupling(1) * (2 * occupied * sign);
    let a = p.reference.get(x);
    let potential = p.lambda * ((old == a) as i64 - (old != a) as i64);
    pair + potential
}

/// Exponent of the rejection factor: the move is accepted with probability `exp(-β · e)`.
pub fn acceptance_exponent(delta: Rational64) -> Rational64 {
    if delta > Rational64::zero() {
        delta
    } else {
        Rational64::zero()
    }
}

#[derive(Clone, Debug)]
pub struct Chain {
    params: CftParams,
    state: TruthTable,
    energy: Rational64,
    rng: ChaCha8Rng,
    steps: u64,
    accepted: u64,
}

impl Chain {
    pub fn new(params: CftParams, initial: TruthTable) -> Result<Self> {
        params.validate()?;
        let energy = energy(&initial, &params)?;
        let rng = ChaCha8Rng::seed_from_u64(params.seed);
        Ok(Chain {
            params,
            state: initial,
            energy,
            rng,
            steps: 0,
            accepted: 0,
        })
    }

    pub fn state(&self) -> &TruthTable {
        &self.state
    }

    pub fn energy(&self) -> Rational64 {
        self.energy
    }

    pub fn acceptance_rate(&self) -> f64 {
        if self.steps == 0 {
            0.0
        } else {
            self.accepted as f64 / self.steps as f64
        }
    }

    /// One single-site Metropolis update; returns whether the flip was accepted.
    pub fn step(&mut self) -> bool {
        let x = self.rng.gen_range(0..self.state.size() as u64);
        let delta = flip_delta(&self.state, &self.params, x);
        let e = acceptance_exponent(delta);
        let accept = e.is_zero() || {
            let prob = (-self.params.beta * e.to_f64().unwrap_or(f64::INFINITY)).exp();
            prob >= 1.0 || self.rng.gen::<f64>() < prob
        };
        self.steps += 1;
        if accept {
            self.state.flip(x);
            self.energy += delta;
            self.accepted += 1;
        }
        accept
    }

    /// Fraction of sites where the state agrees with the reference.
    pub fn overlap(&self) -> f64 {
        let agree = (&self.state ^ &self.params.reference).weight();
        1.0 - agree as f64 / self.state.size() as f64
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TraceRow {
    pub step: u64,
    pub energy: f64,
    pub overlap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Trace {
    pub rows: Vec<TraceRow>,
    pub acceptance_rate: f64,
    pub final_state: TruthTable,
    pub final_energy: String,
}

/// Runs from the all-zero configuration, recording every `record_every` steps and the last one.
pub fn metropolis(p: &CftParams, steps: u64, record_every: u64) -> Result<Trace> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be at least 1".into()));
    }
    let every = record_every.max(1);
    let mut chain = Chain::new(p.clone(), TruthTable::zero(p.n)?)?;
    let mut rows = Vec::new();
    for s in 1..=steps {
        chain.step();
        if s % every == 0 || s == steps {
            rows.push(TraceRow {
                step: s,
                energy: chain.energy.to_f64().unwrap_or(f64::NAN),
                overlap: chain.overlap(),
            });
        }
    }
    Ok(Trace {
        rows,
        acceptance_rate: chain.acceptance_rate(),
        final_state: chain.state.clone(),
        final_energy: chain.energy.to_string(),
    })
}

fn all_states(n: u32) -> Result<impl Iterator<Item = TruthTable>> {
    if n > GROUND_STATE_CAP {
        return Err(Error::CapExceeded {
            what: "exhaustive state arity",
            value: n as u64,
            cap: GROUND_STATE_CAP as u64,
        });
    }
    let size = 1usize << n;
    Ok((0u64..1 << size)
        .map(move |mask| TruthTable::from_fn(n, |x| mask >> x & 1 == 1).expect("arity within cap")))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DetailedBalance {
    pub pairs_checked: u64,
    pub violations: u64,
    /// `S[b] - S[a]` disagreed with the incremental delta.
    pub delta_mismatches: u64,
}

impl DetailedBalance {
    pub fn holds(&self) -> bool {
        self.violations == 0 && self.delta_mismatches == 0
    }
}

/// Checks `S_a + e(S_b - S_a) = S_b + e(S_a - S_b)` for every single-flip pair,
/// where `e` is the sampler's acceptance exponent. This is `π(a)P(a→b) = π(b)P(b→a)`
/// in log form, with the uniform site choice cancelling.
pub fn detailed_balance(p: &CftParams) -> Result<DetailedBalance> {
    let mut out = DetailedBalance {
        pairs_checked: 0,
        violations: 0,
        delta_mismatches: 0,
    };
    for a in all_states(p.n)? {
        let sa = energy(&a, p)?;
        for x in 0..a.size() as u64 {
            let mut b = a.clone();
            b.flip(x);
            let sb = energy(&b, p)?;
            out.pairs_checked += 1;
            out.delta_mismatches += (flip_delta(&a, p, x) != sb - sa) as u64;
            let lhs = sa + acceptance_exponent(sb - sa);
            let rhs = sb + acceptance_exponent(sa - sb);
            out.violations += (lhs != rhs) as u64;
        }
    }
    Ok(out)
}

/// All minimizers of `S` by enumeration, with the minimum value.
pub fn ground_states(p: &CftParams) -> Result<(Rational64, Vec<TruthTable>)> {
    let mut best: Option<Rational64> = None;
    let mut states = Vec::new();
    for s in all_states(p.n)? {
        let e = energy(&s, p)?;
        match best {
            Some(b) if e > b => {}
            Some(b) if e == b => states.push(s),
            _ => {
                best = Some(e);
                states = vec![s];
            }
        }
    }
    Ok((best.unwrap_or_default(), states))
}

/// `exp(-β S) / Z` over all states, indexed by the state's table as an integer.
pub fn boltzmann(p: &CftParams) -> Result<Vec<f64>> {
    let energies: Vec<f64> = all_states(p.n)?
        .map(|s| energy(&s, p).map(|e| e.to_f64().unwrap_or(f64::NAN)))
        .collect::<Result<_>>()?;
    let min = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let weights: Vec<f64> = energies
        .iter()
        .map(|e| (-p.beta * (e - min)).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    Ok(weights.into_iter().map(|w| w / z).collect())
}

/// Integer index of a state with at most 64 sites.
pub fn state_index(t: &TruthTable) -> u64 {
    t.bits().words().first().copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolfun::even_parity;

    fn params(n: u32, lambda: i64, beta: f64) -> CftParams {
        CftParams::new(
            even_parity(n).unwrap(),
            Rational64::from_integer(lambda),
            beta,
            11,
        )
        .unwrap()
    }

    #[test]
    fn ultrametric_neighbors() {
        assert_eq!(Metric::Ultrametric.distance(0b101, 0b100), 1);
        assert_eq!(Metric::Ultrametric.distance(0b101, 0b001), 3);
        let ns: Vec<u64> = Metric::Ultrametric.neighbors(3, 0b110).collect();
        assert_eq!(ns, vec![0b111]);
        assert_eq!(Metric::Hamming.neighbors(3, 0).count(), 3);
    }

    #[test]
    fn energy_examples() {
        let p = params(3, 5, 1.0);
        // φ = A: pairs (0,1) and (1,0) never both 1 for even parity and x ⊕ 1
        assert_eq!(energy(&p.reference, &p).unwrap(), Rational64::zero());
        let zero_ref =
            CftParams::new(TruthTable::zero(3).unwrap(), Rational64::new(7, 3), 1.0, 0).unwrap();
        assert_eq!(
            energy(&TruthTable::zero(3).unwrap(), &zero_ref).unwrap(),
            Rational64::zero()
        );
        // all ones against zero reference: 8 ordered pairs at 1/2, 8 mismatches at 7/3
        let ones = TruthTable::ones(3).unwrap();
        assert_eq!(
            energy(&ones, &zero_ref).unwrap(),
            Rational64::new(4 * 3 + 56, 3)
        );
    }

    #[test]
    fn delta_matches_recomputation() {
        for metric in [Metric::Ultrametric, Metric::Hamming] {
            let p = params(3, 2, 1.0).with_metric(metric);
            let db = detailed_balance(&p).unwrap();
            assert!(db.holds(), "{metric:?}: {db:?}");
            assert_eq!(db.pairs_checked, 256 * 8);
        }
    }

    #[test]
    fn infinite_temperature_accepts_all() {
        let p = params(3, 4, 0.0);
        let t = metropolis(&p, 1000, 100).unwrap();
        assert_eq!(t.acceptance_rate, 1.0);
        assert_eq!(t.rows.len(), 10);
    }

    #[test]
    fn deterministic_under_seed() {
        let p = params(4, 3, 0.7);
        assert_eq!(
            metropolis(&p, 500, 50).unwrap(),
            metropolis(&p, 500, 50).unwrap()
        );
    }

    #[test]
    fn ground_state_is_reference_for_large_lambda() {
        for n in 1..=3 {
            let p = params(n, 1000, 1.0);
            let (e, states) = ground_states(&p).unwrap();
            assert_eq!(states, vec![p.reference.clone()]);
            assert_eq!(e, energy(&p.reference, &p).unwrap());
        }
    }

    #[test]
    fn validation() {
        let r = TruthTable::zero(2).unwrap();
        assert!(CftParams::new(r.clone(), Rational64::from_integer(-1), 1.0, 0).is_err());
        assert!(CftParams::new(r, Rational64::from_integer(1), f64::NAN, 0).is_err());
    }
}
