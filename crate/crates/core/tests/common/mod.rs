//! Seeded random corpora shared by the integration suites.

#![allow(dead_code)]

use ck_core::{BigRational, Blade, CliffordPolynomial, Dim, Monomial, Multivector, Variable};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn dim(m: usize) -> Dim {
    Dim::new(m).unwrap()
}

pub fn rational(rng: &mut StdRng) -> BigRational {
    let mut n: i64 = rng.gen_range(-9..=9);
    if n == 0 {
        n = 1;
    }
    BigRational::new(BigInt::from(n), BigInt::from(rng.gen_range(1..=5i64)))
}

pub fn multivector(rng: &mut StdRng, d: Dim) -> Multivector {
    let count = rng.gen_range(1..=3);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            (
                Blade::from_bits(rng.gen_range(0..d.blade_count() as u32)),
                rational(rng),
            )
        })
        .collect();
    Multivector::from_terms(d, terms).unwrap()
}

/// A random monomial of degree exactly `k` in the given variables.
pub fn monomial_of_degree(rng: &mut StdRng, vars: &[Variable], k: u32) -> Monomial {
    Monomial::from_exponents((0..k).map(|_| (vars[rng.gen_range(0..vars.len())], 1)))
}

fn random_poly(rng: &mut StdRng, d: Dim, max_degree: u32, vars: &[Variable]) -> CliffordPolynomial {
    let count = rng.gen_range(1..=4);
    let terms: Vec<_> = (0..count)
        .map(|_| {
            let k = rng.gen_range(0..=max_degree);
            (monomial_of_degree(rng, vars, k), multivector(rng, d))
        })
        .collect();
    CliffordPolynomial::from_terms(d, terms).unwrap()
}

/// Random polynomial in `x1..xm`.
pub fn spatial(rng: &mut StdRng, d: Dim, max_degree: u32) -> CliffordPolynomial {
    let vars: Vec<_> = Variable::spatial(d).collect();
    random_poly(rng, d, max_degree, &vars)
}

/// Random polynomial in `x0..xm`.
pub fn spacetime(rng: &mut StdRng, d: Dim, max_degree: u32) -> CliffordPolynomial {
    let vars: Vec<_> = Variable::coordinates(d).collect();
    random_poly(rng, d, max_degree, &vars)
}

/// Random polynomial in all variables including `u1..um`.
pub fn any(rng: &mut StdRng, d: Dim, max_degree: u32) -> CliffordPolynomial {
    let vars: Vec<_> = Variable::coordinates(d)
        .chain((1..=d.get()).map(Variable::u))
        .collect();
    random_poly(rng, d, max_degree, &vars)
}

/// Random spatial polynomial, homogeneous of degree `k`.
pub fn homogeneous(rng: &mut StdRng, d: Dim, k: u32) -> CliffordPolynomial {
    let vars: Vec<_> = Variable::spatial(d).collect();
    let count = rng.gen_range(1..=4);
    let terms: Vec<_> = (0..count)
        .map(|_| (monomial_of_degree(rng, &vars, k), multivector(rng, d)))
        .collect();
    CliffordPolynomial::from_terms(d, terms).unwrap()
}

/// The Cauchy-data corpus: `count` pairs cycling through m = 1, 2, 3 with
/// degrees up to 5.
pub fn cauchy_corpus(seed: u64, count: usize) -> Vec<(CliffordPolynomial, CliffordPolynomial)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let d = dim(1 + i % 3);
            let a0 = spatial(&mut rng, d, 5);
            let a1 = if rng.gen_bool(0.15) {
                CliffordPolynomial::zero(d)
            } else {
                spatial(&mut rng, d, 5)
            };
            (a0, a1)
        })
        .collect()
}
