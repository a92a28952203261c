//! Ideals with a cached reduced Gröbner basis, and the derived operations:
//! membership, containment, sums, products, powers, intersection, colon and
//! Krull dimension.

use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::groebner::{reduce, reduced_groebner_basis, sort_basis};
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{check_same, Polynomial};
use crate::ring::RingRef;

#[derive(Clone)]
pub struct Ideal {
    ring: RingRef,
    gens: Vec<Polynomial>,
    gb: OnceLock<Vec<Polynomial>>,
}

impl Ideal {
    /// Zero generators are dropped; the zero ideal has no generators.
    pub fn new(ring: &RingRef, gens: impl IntoIterator<Item = Polynomial>) -> Result<Ideal> {
        let mut out = Vec::new();
        for g in gens {
            check_same(ring, g.ring())?;
            if !g.is_zero() {
                out.push(g.to_ring(ring)?);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: out,
            gb: OnceLock::new(),
        })
    }

    pub fn principal(f: Polynomial) -> Ideal {
        let ring = f.ring().clone();
        Ideal::new(&ring, [f]).expect("same ring")
    }

    pub fn parse(ring: &RingRef, gens: &[&str]) -> Result<Ideal> {
        let polys = gens
            .iter()
            .map(|s| Polynomial::parse(ring, s))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, polys)
    }

    pub fn zero(ring: &RingRef) -> Ideal {
        Ideal::new(ring, []).unwrap()
    }

    pub fn unit(ring: &RingRef) -> Ideal {
        Ideal::principal(Polynomial::one(ring))
    }

    /// The ideal of all variables, i.e. the maximal ideal at the origin.
    pub fn maximal(ring: &RingRef) -> Ideal {
        Ideal::new(
            ring,
            (0..ring.nvars()).map(|i| Polynomial::variable(ring, i)),
        )
        .unwrap()
    }

    pub(crate) fn from_basis(ring: &RingRef, basis: Vec<Polynomial>) -> Ideal {
        let cell = OnceLock::new();
        let _ = cell.set(basis.clone());
        Ideal {
            ring: ring.clone(),
            gens: basis,
            gb: cell,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    /// Reduced Gröbner basis under the ring order, computed once.
    pub fn groebner_basis(&self) -> Result<&[Polynomial]> {
        if let Some(gb) = self.gb.get() {
            return Ok(gb);
        }
        let gb = reduced_groebner_basis(&self.ring, &self.gens)?;
        // a concurrent fill computes the same basis, either value is fine
        let _ = self.gb.set(gb);
        Ok(self.gb.get().unwrap())
    }

    /// The reduced basis under another order (not cached).
    pub fn groebner_basis_in(&self, order: MonomialOrder) -> Result<Vec<Polynomial>> {
        if order == self.ring.order() {
            return Ok(self.groebner_basis()?.to_vec());
        }
        let r = self.ring.with_order(order);
        reduced_groebner_basis(&r, &self.gens)
    }

    /// Replaces the generators by the reduced basis.
    pub fn minimalized(&self) -> Result<Ideal> {
        Ok(Ideal::from_basis(
            &self.ring,
            self.groebner_basis()?.to_vec(),
        ))
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_unit()) {
            return Ok(true);
        }
        Ok(self.groebner_basis()?.iter().any(|g| g.is_unit()))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, f.ring())?;
        let f = f.to_ring(&self.ring)?;
        reduce(&f, self.groebner_basis()?)
    }

    pub fn contains_poly(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// `self ⊇ other`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        for g in &other.gens {
            if !self.contains_poly(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality as ideals, via reduced bases.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        check_same(&self.ring, &other.ring)?;
        let a = self.groebner_basis()?;
        let other = if other.ring.order() == self.ring.order() {
            other.clone()
        } else {
            Ideal::new(&self.ring, other.gens.clone())?
        };
        Ok(a == other.groebner_basis()?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn add_poly(&self, f: &Polynomial) -> Result<Ideal> {
        self.sum(&Ideal::principal(f.clone()))
    }

    pub fn mul_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, f.ring())?;
        let gens = self
            .gens
            .iter()
            .map(|g| g.mul(f))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.ring, gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        let limit = self.ring.limits().generator_limit;
        if self.gens.len().saturating_mul(other.gens.len()) > limit {
            return Err(Error::DegreeExplosion(format!(
                "product generating set exceeds {limit} generators"
            )));
        }
        let mut seen = HashSet::new();
        let mut gens = Vec::new();
        for a in &self.gens {
            for b in &other.gens {
                let g = a.mul(b)?.monic();
                if seen.insert(g.to_string()) {
                    gens.push(g);
                }
            }
        }
        Ideal::new(&self.ring, drop_monomial_multiples(gens))
    }

    /// `I^n` from the n-fold products of generators, deduplicated.
    pub fn power(&self, n: u64) -> Result<Ideal> {
        if n == 0 {
            return Ok(Ideal::unit(&self.ring));
        }
        if self.gens.len() == 1 {
            return Ok(Ideal::principal(self.gens[0].pow(n)?));
        }
        let mut acc = self.clone();
        for _ in 1..n {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1 - t)*J`.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Ideal::zero(&self.ring));
        }
        if self.is_unit()? {
            return Ok(other.clone());
        }
        if other.is_unit()? {
            return Ok(self.clone());
        }
        let ext = self
            .ring
            .extended_front(&["_t"], MonomialOrder::BlockElimination(1));
        let t = Polynomial::variable(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for g in &self.gens {
            gens.push(g.embed_front(&ext, 1).mul(&t)?);
        }
        for g in &other.gens {
            gens.push(g.embed_front(&ext, 1).mul(&one_minus_t)?);
        }
        let gb = reduced_groebner_basis(&ext, &gens)?;
        let kept: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.terms().iter().all(|(m, _)| m.exponents()[0] == 0))
            .map(|g| g.restrict_front(&self.ring, 1))
            .collect();
        Ideal::new(&self.ring, kept)?.minimalized()
    }

    /// `(I : f)`.
    pub fn colon_poly(&self, f: &Polynomial) -> Result<Ideal> {
        check_same(&self.ring, f.ring())?;
        if f.is_zero() {
            return Err(Error::InvalidInput("colon by the zero polynomial".into()));
        }
        let f = f.to_ring(&self.ring)?;
        if f.is_unit() {
            return self.minimalized();
        }
        let inter = self.intersection(&Ideal::principal(f.clone()))?;
        let mut quot = Vec::new();
        for g in inter.generators() {
            match g.exact_div(&f)? {
                Some(q) => quot.push(q),
                None => unreachable!("elements of (f) are divisible by f"),
            }
        }
        Ideal::new(&self.ring, quot)?.minimalized()
    }

    /// `(I : J)`, the intersection over generators `j` of `(I : j)`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        check_same(&self.ring, &other.ring)?;
        if other.is_zero() {
            return Err(Error::InvalidInput("colon by the zero ideal".into()));
        }
        let mut acc: Option<Ideal> = None;
        for j in other.groebner_basis()?.to_vec() {
            let c = self.colon_poly(&j)?;
            acc = Some(match acc {
                None => c,
                Some(a) => a.intersection(&c)?,
            });
        }
        Ok(acc.unwrap())
    }

    /// Dimension of the quotient ring, from the largest set of variables
    /// independent modulo the leading-term ideal.
    pub fn krull_dimension(&self) -> Result<usize> {
        if self.is_unit()? {
            return Err(Error::UnitIdeal);
        }
        let n = self.ring.nvars();
        let leads: Vec<Vec<usize>> = self
            .groebner_basis()?
            .iter()
            .map(|g| {
                g.leading_monomial()
                    .unwrap()
                    .exponents()
                    .iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        // a set S is independent iff no leading monomial uses only variables of S
        let mut best = 0;
        for mask in 0u64..(1u64 << n) {
            let size = mask.count_ones() as usize;
            if size <= best {
                continue;
            }
            let independent = leads
                .iter()
                .all(|support| !support.iter().all(|&i| mask & (1 << i) != 0));
            if independent {
                best = size;
            }
        }
        Ok(best)
    }

    pub fn height(&self) -> Result<usize> {
        Ok(self.ring.nvars() - self.krull_dimension()?)
    }

    pub fn is_monomial(&self) -> bool {
        self.gens.iter().all(|g| g.is_monomial())
    }

    /// Reduced basis as strings, in canonical order.
    pub fn canonical_lines(&self) -> Result<Vec<String>> {
        let mut gb = self.groebner_basis()?.to_vec();
        sort_basis(&mut gb);
        Ok(gb.iter().map(|g| g.to_string()).collect())
    }
}

/// For monomial generators, drops those divisible by another one.
fn drop_monomial_multiples(gens: Vec<Polynomial>) -> Vec<Polynomial> {
    if !gens.iter().all(|g| g.is_monomial()) {
        return gens;
    }
    let monos: Vec<Monomial> = gens
        .iter()
        .map(|g| g.leading_monomial().unwrap().clone())
        .collect();
    gens.into_iter()
        .enumerate()
        .filter(|(i, _)| {
            !monos
                .iter()
                .enumerate()
                .any(|(j, m)| j != *i && m.divides(&monos[*i]) && (m != &monos[*i] || j < *i))
        })
        .map(|(_, g)| g)
        .collect()
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.canonical_lines() {
            Ok(lines) if lines.is_empty() => write!(f, "(0)"),
            Ok(lines) => write!(f, "({})", lines.join(", ")),
            Err(_) => {
                let g: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
                write!(f, "<{}>", g.join(", "))
            }
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.gens.iter().map(|g| g.to_string()).collect();
        write!(f, "Ideal[{}]", g.join(", "))
    }
}
