// SPDX-License-Identifier: Apache-2.0

mod common;

use boolobs::boolfun::{even_parity, TruthTable};
use boolobs::cftsim::{
    boltzmann, detailed_balance, energy, flip_delta, ground_states, metropolis, state_index,
    CftParams, Chain, Metric,
};
use common::random_table;
use num::rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

fn params(reference: TruthTable, lambda: i64, beta: f64, seed: u64) -> CftParams {
    CftParams::new(reference, Rational64::from_integer(lambda), beta, seed).unwrap()
}

#[test]
fn flip_delta_matches_recompute() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for metric in [Metric::Ultrametric, Metric::Hamming] {
        for i in 0..1000u64 {
            let n = rng.gen_range(1..=8);
            let p = params(random_table(n, i), rng.gen_range(0..50), 1.0, 0).with_metric(metric);
            let phi = random_table(n, i + 50_000);
            let x = rng.gen_range(0..1u64 << n);
            let mut flipped = phi.clone();
            flipped.flip(x);
            let diff = energy(&flipped, &p).unwrap() - energy(&phi, &p).unwrap();
            assert_eq!(flip_delta(&phi, &p, x), diff, "{metric:?} case {i}");
        }
    }
}

#[test]
fn detailed_balance_small() {
    for n in 1..=3 {
        for (lambda, beta) in [(0, 1.0), (1, 0.5), (1000, 10.0)] {
            for metric in [Metric::Ultrametric, Metric::Hamming] {
                let p = params(even_parity(n).unwrap(), lambda, beta, 0).with_metric(metric);
                let db = detailed_balance(&p).unwrap();
                assert!(db.holds(), "n = {n} λ = {lambda} {metric:?}: {db:?}");
                assert_eq!(db.pairs_checked, (1u64 << (1 << n)) * (1 << n));
            }
        }
    }
}

#[test]
fn energy_examples() {
    let a = even_parity(3).unwrap();
    let p = params(a.clone(), 7, 1.0, 0);
    // on A only the pair term remains: occupied ordered neighbour pairs times 1/2
    let pairs = (0..8u64).filter(|&x| a.get(x) && a.get(x ^ 1)).count() as i64;
    assert_eq!(energy(&a, &p).unwrap(), Rational64::new(pairs, 2));
    let zero = TruthTable::zero(3).unwrap();
    assert_eq!(
        energy(&zero, &params(zero.clone(), 5, 1.0, 0)).unwrap(),
        Rational64::from_integer(0)
    );
}

#[test]
fn infinite_temperature_accepts_everything() {
    let t = metropolis(&params(even_parity(4).unwrap(), 3, 0.0, 9), 5000, 1000).unwrap();
    assert_eq!(t.acceptance_rate, 1.0);
}

#[test]
fn ground_state_is_reference() {
    for n in 1..=3 {
        for s in 0..8 {
            let a = random_table(n, s);
            let (_, states) = ground_states(&params(a.clone(), 1000, 1.0, 0)).unwrap();
            assert_eq!(states, vec![a]);
        }
    }
}

#[test]
fn strong_potential_reaches_reference() {
    for n in 1..=6 {
        let a = even_parity(n).unwrap();
        let hits = (0..100u64)
            .into_par_iter()
            .filter(|&seed| {
                metropolis(&params(a.clone(), 1000, 10.0, seed), 100_000, 100_000)
                    .unwrap()
                    .final_state
                    == a
            })
            .count();
        assert!(hits >= 95, "n = {n}: {hits}/100");
    }
}

#[test]
fn deterministic_given_seed() {
    let p = params(random_table(4, 1), 2, 0.7, 42);
    assert_eq!(
        metropolis(&p, 20_000, 100).unwrap(),
        metropolis(&p, 20_000, 100).unwrap()
    );
}

#[test]
fn stationary_distribution_short_run() {
    // the acceptance target runs 10^7 steps; this is a looser smoke check
    let p = params(even_parity(2).unwrap(), 1, 0.8, 5);
    let exact = boltzmann(&p).unwrap();
    let mut chain = Chain::new(p, TruthTable::zero(2).unwrap()).unwrap();
    let mut counts = [0u64; 16];
    let steps = 1_000_000u64;
    for _ in 0..steps {
        chain.step();
        counts[state_index(chain.state()) as usize] += 1;
    }
    let tv: f64 = counts
        .iter()
        .zip(&exact)
        .map(|(&c, &q)| (c as f64 / steps as f64 - q).abs())
        .sum::<f64>()
        / 2.0;
    assert!(tv < 0.05, "tv = {tv}");
}
