#![allow(dead_code)]

use graceful_core::{eval_series, ComplexScalar, MonicPolynomial, RootSet, ToleranceConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn c(re: f64) -> ComplexScalar {
    ComplexScalar::new(re, 0.0)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform point in the closed disc of the given radius.
pub fn in_disc(rng: &mut ChaCha8Rng, radius: f64) -> ComplexScalar {
    let r = radius * rng.random::<f64>().sqrt();
    let theta = rng.random_range(0.0..std::f64::consts::TAU);
    ComplexScalar::from_polar(r, theta)
}

/// Rejection-samples `m` roots in the disc with pairwise distance >= `min_sep`.
pub fn separated_roots(rng: &mut ChaCha8Rng, m: usize, radius: f64, min_sep: f64) -> RootSet {
    loop {
        let roots: Vec<_> = (0..m).map(|_| in_disc(rng, radius)).collect();
        let set = RootSet::new(roots).unwrap();
        if set.min_separation() >= min_sep {
            return set;
        }
    }
}

/// Roots in the disc where, with probability 1/2, some of them are forced to coincide.
pub fn maybe_confluent_roots(rng: &mut ChaCha8Rng, m: usize, radius: f64) -> RootSet {
    let mut roots: Vec<_> = (0..m).map(|_| in_disc(rng, radius)).collect();
    match rng.random_range(0..4) {
        0 => {
            let a = roots[0];
            roots.iter_mut().for_each(|r| *r = a);
        }
        1 if m >= 2 => roots[1] = roots[0],
        2 if m >= 3 => {
            roots[1] = roots[0];
            roots[2] = roots[0];
        }
        _ => {}
    }
    RootSet::new(roots).unwrap()
}

pub fn mixed_err(a: ComplexScalar, b: ComplexScalar) -> f64 {
    (a - b).norm() / 1f64.max(a.norm()).max(b.norm())
}

/// Derivatives `0..=order` of all basis functions at `x` by Cauchy's integral
/// formula over a unit circle, sampling the series backend.
pub fn cauchy_derivatives(
    p: &MonicPolynomial,
    x: ComplexScalar,
    order: usize,
) -> Vec<Vec<ComplexScalar>> {
    const NODES: usize = 64;
    let cfg = ToleranceConfig::default();
    let mut d = vec![vec![c(0.0); p.degree()]; order + 1];
    for n in 0..NODES {
        let w = ComplexScalar::from_polar(1.0, std::f64::consts::TAU * n as f64 / NODES as f64);
        let g = eval_series(p, x + w, &cfg).unwrap().values;
        let mut factor = c(1.0);
        for row in d.iter_mut() {
            for (acc, gi) in row.iter_mut().zip(&g) {
                *acc += gi * factor;
            }
            factor /= w;
        }
    }
    let mut fact = 1.0;
    for (k, row) in d.iter_mut().enumerate() {
        fact *= k.max(1) as f64;
        row.iter_mut().for_each(|v| *v *= fact / NODES as f64);
    }
    d
}
