//! Random inputs shared by the integration suites.
#![allow(dead_code)]

use ftau_core::{Ideal, Monomial, MonomialOrder, Polynomial, Ring, RingRef};
use rand::seq::SliceRandom;
use rand::Rng;

pub const VARS: [&str; 3] = ["x", "y", "z"];

pub fn ring(p: u64, n: usize) -> RingRef {
    Ring::new(p, &VARS[..n], MonomialOrder::GrevLex).unwrap()
}

pub fn random_monomial<R: Rng>(n: usize, max_deg: u32, rng: &mut R) -> Monomial {
    let d = rng.gen_range(0..=max_deg);
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(&e)
}

pub fn random_poly<R: Rng>(r: &RingRef, max_terms: usize, max_deg: u32, rng: &mut R) -> Polynomial {
    let p = r.characteristic();
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms = (0..k).map(|_| {
            (
                random_monomial(r.nvars(), max_deg, rng),
                rng.gen_range(1..p),
            )
        });
        let f = Polynomial::from_terms(r, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Nonzero proper-or-not ideal with up to `max_gens` generators.
pub fn random_ideal<R: Rng>(r: &RingRef, max_gens: usize, max_deg: u32, rng: &mut R) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| random_poly(r, 3, max_deg, rng))
        .collect::<Vec<_>>();
    Ideal::new(r, gens).unwrap()
}

pub fn random_monomial_ideal<R: Rng>(
    r: &RingRef,
    max_gens: usize,
    max_deg: u32,
    rng: &mut R,
) -> Ideal {
    let k = rng.gen_range(1..=max_gens);
    let gens = (0..k)
        .map(|_| {
            let mut m = random_monomial(r.nvars(), max_deg, rng);
            if m.is_one() {
                m = Monomial::variable(r.nvars(), rng.gen_range(0..r.nvars()));
            }
            Polynomial::monomial(r, m, 1)
        })
        .collect::<Vec<_>>();
    Ideal::new(r, gens).unwrap()
}

/// Regular sequence of length `c` through the origin, by rejection on height.
pub fn random_regular_sequence<R: Rng>(
    r: &RingRef,
    c: usize,
    max_deg: u32,
    rng: &mut R,
) -> Vec<Polynomial> {
    loop {
        let fs: Vec<Polynomial> = (0..c)
            .map(|_| loop {
                let f = random_poly(r, 3, max_deg, rng);
                if f.constant_coefficient() == 0 {
                    break f;
                }
            })
            .collect();
        let i = Ideal::new(r, fs.clone()).unwrap();
        if !i.is_unit().unwrap() && i.height().unwrap() == c {
            return fs;
        }
    }
}

pub fn shuffled<R: Rng>(i: &Ideal, rng: &mut R) -> Ideal {
    let mut g = i.generators().to_vec();
    g.shuffle(rng);
    Ideal::new(i.ring(), g).unwrap()
}

/// Homogeneous polynomial of degree `d` with up to `max_terms` terms.
pub fn random_form<R: Rng>(r: &RingRef, d: u32, max_terms: usize, rng: &mut R) -> Polynomial {
    let p = r.characteristic();
    let n = r.nvars();
    loop {
        let k = rng.gen_range(1..=max_terms);
        let terms = (0..k).map(|_| {
            let mut e = vec![0u32; n];
            for _ in 0..d {
                e[rng.gen_range(0..n)] += 1;
            }
            (Monomial::from_exponents(&e), rng.gen_range(1..p))
        });
        let f = Polynomial::from_terms(r, terms);
        if !f.is_zero() {
            return f;
        }
    }
}

/// Homogeneous regular sequence of length `c` with degrees in `1..=max_deg`.
pub fn random_graded_ci<R: Rng>(
    r: &RingRef,
    c: usize,
    max_deg: u32,
    rng: &mut R,
) -> Vec<Polynomial> {
    loop {
        let fs: Vec<Polynomial> = (0..c)
            .map(|_| {
                let d = rng.gen_range(1..=max_deg);
                random_form(r, d, 3, rng)
            })
            .collect();
        let i = Ideal::new(r, fs.clone()).unwrap();
        if i.height().unwrap() == c {
            return fs;
        }
    }
}
