//! Bracket powers `J^[q]` and Frobenius roots `J^[1/q]`.
//!
//! Over `F_p` every coefficient is its own `p`-th root, so the root of a
//! polynomial is pure exponent bookkeeping: write `f = sum g_a^q x^a` with
//! `0 <= a < q` componentwise and collect the `g_a`.

use std::collections::{BTreeMap, HashMap, HashSet};

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;

/// `q = p^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FrobeniusLevel {
    pub e: u32,
    pub q: u64,
}

impl FrobeniusLevel {
    pub fn new(ring: &Ring, e: u32) -> Result<Self> {
        let p = ring.characteristic() as u64;
        let q = p
            .checked_pow(e)
            .filter(|&q| q <= ring.limits().degree_limit as u64)
            .ok_or_else(|| Error::DegreeExplosion(format!("q = {p}^{e} exceeds degree limit")))?;
        Ok(FrobeniusLevel { e, q })
    }

    /// Checks that `q` is a power of the characteristic.
    pub fn from_q(ring: &Ring, q: u64) -> Result<Self> {
        let p = ring.characteristic() as u64;
        let (mut e, mut r) = (0u32, 1u64);
        while r < q {
            r = r.saturating_mul(p);
            e += 1;
        }
        if r != q {
            return Err(Error::InvalidInput(format!("{q} is not a power of {p}")));
        }
        Self::new(ring, e)
    }
}

pub fn bracket_power(j: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    let q = u32::try_from(level.q).map_err(|_| Error::DegreeExplosion("q too large".into()))?;
    let gens = j
        .generators()
        .iter()
        .map(|g| g.frobenius(q))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(j.ring(), gens)
}

/// The components `g_a` of one polynomial, in a deterministic order.
pub fn polynomial_root_components(f: &Polynomial, q: u64) -> Vec<Polynomial> {
    let ring = f.ring();
    let mut parts: BTreeMap<Vec<u32>, Vec<(Monomial, u32)>> = BTreeMap::new();
    for (m, c) in f.terms() {
        let (rem, quo): (Vec<u32>, Vec<u32>) = m
            .exponents()
            .iter()
            .map(|&a| ((a as u64 % q) as u32, (a as u64 / q) as u32))
            .unzip();
        parts
            .entry(rem)
            .or_default()
            .push((Monomial::from_exponents(&quo), *c));
    }
    parts
        .into_values()
        .map(|terms| Polynomial::from_terms(ring, terms))
        .collect()
}

/// Generators of the root, deduplicated but not Gröbner-reduced.
fn root_generators(gens: &[Polynomial], q: u64) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in gens {
        for c in polynomial_root_components(g, q) {
            if c.is_unit() {
                return vec![c.monic()];
            }
            let c = c.monic();
            if seen.insert(c.terms().to_vec()) {
                out.push(c);
            }
        }
    }
    out
}

/// Smallest `K` with `J ⊆ K^[q]`, computed generator by generator.
pub fn frobenius_root(j: &Ideal, level: FrobeniusLevel) -> Result<Ideal> {
    if level.q == 1 {
        return j.minimalized();
    }
    Ideal::new(j.ring(), root_generators(j.generators(), level.q))?.minimalized()
}

/// Products `g^b` of generators with `b` in `[0, p)^r`, bucketed by `|b|`.
struct DigitProducts {
    by_degree: HashMap<u64, Ideal>,
    gens: Vec<Polynomial>,
    p: u32,
}

impl DigitProducts {
    fn new(f: &Ideal) -> Result<Self> {
        Ok(DigitProducts {
            by_degree: HashMap::new(),
            gens: f.minimalized()?.generators().to_vec(),
            p: f.ring().characteristic(),
        })
    }

    fn max_digit_sum(&self) -> u64 {
        self.gens.len() as u64 * (self.p as u64 - 1)
    }

    fn get(&mut self, ring: &crate::ring::RingRef, n: u64) -> Result<Ideal> {
        if let Some(i) = self.by_degree.get(&n) {
            return Ok(i.clone());
        }
        let mut powers: Vec<Vec<Polynomial>> = Vec::new();
        for g in &self.gens {
            let mut row = vec![Polynomial::one(ring)];
            for k in 1..self.p.min(n as u32 + 1) {
                let next = row[k as usize - 1].mul(g)?;
                row.push(next);
            }
            powers.push(row);
        }
        let mut out = Vec::new();
        let limit = ring.limits().generator_limit;
        fn rec(
            i: usize,
            left: u64,
            acc: Polynomial,
            powers: &[Vec<Polynomial>],
            out: &mut Vec<Polynomial>,
            limit: usize,
        ) -> Result<()> {
            if i == powers.len() {
                if left == 0 {
                    if out.len() >= limit {
                        return Err(Error::DegreeExplosion(format!(
                            "digit product set exceeds {limit} generators"
                        )));
                    }
                    out.push(acc);
                }
                return Ok(());
            }
            let cap_rest: u64 = powers[i + 1..].iter().map(|r| r.len() as u64 - 1).sum();
            for (k, pk) in powers[i].iter().enumerate() {
                let k = k as u64;
                if k > left {
                    break;
                }
                if left - k > cap_rest {
                    continue;
                }
                rec(i + 1, left - k, acc.mul(pk)?, powers, out, limit)?;
            }
            Ok(())
        }
        rec(0, n, Polynomial::one(ring), &powers, &mut out, limit)?;
        let ideal = Ideal::new(ring, out)?.minimalized()?;
        self.by_degree.insert(n, ideal.clone());
        Ok(ideal)
    }
}

/// `root_q(X * F_1^{m_1} ... F_k^{m_k})` without expanding the powers.
///
/// One base-`p` digit at a time: with `F` generated by `g_1..g_r`,
/// `F^m = sum_{n} P_n * (F^{(m-n)/p})^[p]`-type decompositions hold where
/// `P_n` is spanned by `g^b`, `b in [0,p)^r`, `|b| = n ≡ m (mod p)`, and
/// `root_p(A * B^[p]) = root_p(A) * B`. States with equal remaining
/// exponents are merged by summing their ideals.
pub fn root_of_product(
    x: &Ideal,
    factors: &[(Ideal, u64)],
    level: FrobeniusLevel,
) -> Result<Ideal> {
    let ring = x.ring().clone();
    let p = ring.characteristic() as u64;
    let mut digits: Vec<DigitProducts> = factors
        .iter()
        .map(|(f, _)| DigitProducts::new(f))
        .collect::<Result<_>>()?;
    let start: Vec<u64> = factors.iter().map(|(_, m)| *m).collect();
    let mut states: BTreeMap<Vec<u64>, Ideal> = BTreeMap::new();
    states.insert(start, x.minimalized()?);

    for _ in 0..level.e {
        let mut next: BTreeMap<Vec<u64>, Vec<Polynomial>> = BTreeMap::new();
        for (ms, y) in &states {
            if y.is_zero() {
                continue;
            }
            // every admissible choice of low digit sums per factor
            let mut choices: Vec<(Vec<u64>, Ideal)> = vec![(Vec::new(), y.clone())];
            for (k, &m) in ms.iter().enumerate() {
                let cap = digits[k].max_digit_sum().min(m);
                let mut grown = Vec::new();
                for (rest, acc) in &choices {
                    let mut n = m % p;
                    while n <= cap {
                        let pn = digits[k].get(&ring, n)?;
                        let mut r = rest.clone();
                        r.push((m - n) / p);
                        grown.push((r, acc.product(&pn)?));
                        n += p;
                    }
                }
                choices = grown;
            }
            for (rest, prod) in choices {
                let gens = root_generators(prod.generators(), p);
                next.entry(rest).or_default().extend(gens);
            }
        }
        states = BTreeMap::new();
        for (ms, gens) in next {
            states.insert(ms, Ideal::new(&ring, gens)?.minimalized()?);
        }
        // a unit state with zero exponents absorbs everything else
        let zero: Vec<u64> = vec![0; factors.len()];
        if let Some(z) = states.get(&zero) {
            if z.is_unit()? {
                return Ok(Ideal::unit(&ring));
            }
        }
    }

    let mut total: Vec<Polynomial> = Vec::new();
    for (ms, y) in states {
        let mut acc = y;
        for ((f, _), &m) in factors.iter().zip(&ms) {
            if m > 0 {
                acc = acc.product(&f.power(m)?)?;
            }
        }
        total.extend(acc.generators().iter().cloned());
    }
    Ideal::new(&ring, total)?.minimalized()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;
    use crate::ring::RingRef;

    fn ring(p: u64) -> RingRef {
        Ring::new(p, &["x", "y"], MonomialOrder::GrevLex).unwrap()
    }

    fn lvl(r: &RingRef, e: u32) -> FrobeniusLevel {
        FrobeniusLevel::new(r, e).unwrap()
    }

    #[test]
    fn bracket_examples() {
        let r = ring(2);
        let j = Ideal::parse(&r, &["x", "y"]).unwrap();
        let b = bracket_power(&j, lvl(&r, 1)).unwrap();
        assert!(b
            .equals(&Ideal::parse(&r, &["x^2", "y^2"]).unwrap())
            .unwrap());
        let r3 = ring(3);
        let j = Ideal::parse(&r3, &["x + y"]).unwrap();
        let b = bracket_power(&j, lvl(&r3, 1)).unwrap();
        assert_eq!(b.to_string(), "(x^3 + y^3)");
        assert!(bracket_power(&Ideal::zero(&r), lvl(&r, 2))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn root_examples() {
        let r3 = ring(3);
        let j = Ideal::parse(&r3, &["x^3*y^5"]).unwrap();
        assert_eq!(
            frobenius_root(&j, lvl(&r3, 1)).unwrap().to_string(),
            "(x*y)"
        );
        let r2 = ring(2);
        let j = Ideal::parse(&r2, &["x^2", "x*y", "y^2"]).unwrap();
        assert!(frobenius_root(&j, lvl(&r2, 1)).unwrap().is_unit().unwrap());
    }

    #[test]
    fn level_rejects_non_powers() {
        let r = ring(3);
        assert!(FrobeniusLevel::from_q(&r, 6).is_err());
        assert_eq!(FrobeniusLevel::from_q(&r, 9).unwrap().e, 2);
    }

    #[test]
    fn digit_root_matches_expanded_power() {
        let r = ring(3);
        let x = Ideal::parse(&r, &["x + y^2"]).unwrap();
        let f = Ideal::parse(&r, &["x^2 - y", "x*y"]).unwrap();
        for e in 1..=2 {
            let l = lvl(&r, e);
            for m in [1u64, 4, 7, 11] {
                let direct = frobenius_root(&x.product(&f.power(m).unwrap()).unwrap(), l).unwrap();
                let dp = root_of_product(&x, &[(f.clone(), m)], l).unwrap();
                assert!(direct.equals(&dp).unwrap(), "e={e} m={m}: {direct} vs {dp}");
            }
        }
    }

    #[test]
    fn cusp_root_by_hand() {
        // root_7(y * f^6) for f = x^3 + y^5
        let r = ring(7);
        let y = Ideal::parse(&r, &["y"]).unwrap();
        let f = Ideal::parse(&r, &["x^3 + y^5"]).unwrap();
        let got = root_of_product(&y, &[(f, 6)], lvl(&r, 1)).unwrap();
        assert!(got
            .equals(&Ideal::parse(&r, &["x^2", "x*y", "y^3"]).unwrap())
            .unwrap());
    }
}
