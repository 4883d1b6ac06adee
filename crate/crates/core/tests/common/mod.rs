//! Independent oracles and random generators shared by the integration tests.
#![allow(dead_code)]

use std::cmp::Ordering;

use rand::Rng;
use revlex_core::poly::Term;
use revlex_core::{Domain, Ideal, Monomial, MonomialIdeal, Polynomial};

/// Grevlex via reversed exponent vectors: on equal degree, `a > b` exactly
/// when `rev(a) < rev(b)` lexicographically.
pub fn grevlex_oracle(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    if da != db {
        return da.cmp(&db);
    }
    let ra: Vec<u32> = a.iter().rev().copied().collect();
    let rb: Vec<u32> = b.iter().rev().copied().collect();
    rb.cmp(&ra)
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn member(gens: &[Vec<u32>], m: &[u32]) -> bool {
    gens.iter().any(|g| divides(g, m))
}

/// Every exponent vector of total degree `d` in `nvars` variables, unordered.
pub fn all_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    if nvars == 1 {
        return vec![vec![d]];
    }
    let mut out = Vec::new();
    for first in 0..=d {
        for mut rest in all_of_degree(nvars - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Revlex by brute force: in each degree up to `bound`, sorting with the
/// oracle order must put every member ahead of every non-member.
pub fn revlex_brute(gens: &[Vec<u32>], nvars: usize, bound: u32) -> bool {
    (0..=bound).all(|d| {
        let mut slice = all_of_degree(nvars, d);
        slice.sort_by(|a, b| grevlex_oracle(b, a));
        let flags: Vec<bool> = slice.iter().map(|m| member(gens, m)).collect();
        flags.windows(2).all(|w| w[0] || !w[1])
    })
}

/// Standard monomials of a two-variable ideal counted cell by cell.
pub fn count_standard_2d(gens: &[Vec<u32>]) -> u64 {
    let max_a = gens.iter().map(|g| g[0]).max().unwrap_or(0);
    let max_b = gens.iter().map(|g| g[1]).max().unwrap_or(0);
    let mut n = 0;
    for a in 0..=max_a {
        for b in 0..=max_b {
            if !member(gens, &[a, b]) {
                n += 1;
            }
        }
    }
    n
}

/// `<x^n, x^(n-1) y^(mu+1), .., y^(mu+2n-1)>` built directly from exponents.
pub fn expected_initial_exponents(n: u32, m: u32) -> Vec<Vec<u32>> {
    let mu = m - n;
    let mut gens = vec![vec![n, 0]];
    for i in 1..=n {
        gens.push(vec![n - i, mu + 2 * i - 1]);
    }
    gens
}

pub fn exponents_of(j: &MonomialIdeal) -> Vec<Vec<u32>> {
    let mut v: Vec<Vec<u32>> = j
        .generators()
        .iter()
        .map(|g| g.exponents().to_vec())
        .collect();
    v.sort();
    v
}

pub fn sorted(mut v: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    v.sort();
    v
}

pub fn random_exponents<R: Rng>(rng: &mut R, nvars: usize, max_exp: u32) -> Vec<u32> {
    (0..nvars).map(|_| rng.random_range(0..=max_exp)).collect()
}

pub fn random_polynomial<R: Rng>(
    rng: &mut R,
    domain: Domain,
    nvars: usize,
    max_terms: usize,
    max_exp: u32,
    coeff_bound: i64,
) -> Polynomial {
    let nterms = rng.random_range(1..=max_terms);
    let terms = (0..nterms)
        .map(|_| {
            let c = rng.random_range(-coeff_bound..=coeff_bound);
            Term::new(
                domain.from_i64(c),
                Monomial::new(random_exponents(rng, nvars, max_exp)),
            )
        })
        .collect();
    Polynomial::from_terms(domain, nvars, terms).unwrap()
}

/// Nonzero polynomial in `nvars` variables with every term of degree <= `max_deg`.
pub fn random_nonzero_polynomial<R: Rng>(
    rng: &mut R,
    domain: Domain,
    nvars: usize,
    max_terms: usize,
    max_deg: u32,
) -> Polynomial {
    loop {
        let nterms = rng.random_range(1..=max_terms);
        let terms = (0..nterms)
            .map(|_| {
                let d = rng.random_range(0..=max_deg);
                let all = all_of_degree(nvars, d);
                let e = all[rng.random_range(0..all.len())].clone();
                let c = rng.random_range(-9i64..=9);
                Term::new(domain.from_i64(c), Monomial::new(e))
            })
            .collect();
        let p = Polynomial::from_terms(domain, nvars, terms).unwrap();
        if !p.is_zero() {
            return p;
        }
    }
}

pub fn random_small_ideal<R: Rng>(rng: &mut R, domain: Domain) -> Ideal {
    let nvars = rng.random_range(1..=3);
    let ngens = rng.random_range(1..=3);
    let gens = (0..ngens)
        .map(|_| random_nonzero_polynomial(rng, domain, nvars, 3, 3))
        .collect();
    Ideal::new(domain, nvars, gens).unwrap()
}

/// `sum q_i g_i + r`.
pub fn reconstruct(
    quotients: &[Polynomial],
    divisors: &[Polynomial],
    remainder: &Polynomial,
) -> Polynomial {
    quotients
        .iter()
        .zip(divisors)
        .fold(remainder.clone(), |acc, (q, g)| {
            acc.add(&q.mul(g).unwrap()).unwrap()
        })
}
