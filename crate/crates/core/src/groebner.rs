//! Buchberger's algorithm with the Gebauer–Möller criteria, normal forms and
//! reduced bases.

use std::cmp::Ordering;

use crate::error::Result;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::{axpy, Polynomial};
use crate::ring::RingRef;

/// Full reduction of `f` modulo `basis` (all elements monic, in `f`'s ring).
pub(crate) fn reduce(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let mut work: Vec<(Monomial, u32)> = f.terms().to_vec();
    let mut rem: Vec<(Monomial, u32)> = Vec::new();
    let mut start = 0;
    while start < work.len() {
        let (lm, lc) = work[start].clone();
        match basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gl| gl.divides(&lm)))
        {
            Some(g) => {
                let gl = g.leading_monomial().unwrap();
                let shift = gl.quotient_of(&lm);
                let c = ring.neg(ring.mul(lc, ring.inv(g.leading_coefficient().unwrap())));
                // the leading terms cancel; merge the tails only
                work = axpy(&ring, &work[start + 1..], &g.terms()[1..], &shift, c)?;
                start = 0;
            }
            None => {
                rem.push((lm, lc));
                start += 1;
            }
        }
    }
    Ok(Polynomial::from_sorted(&ring, rem))
}

/// Top-reduction only: stops at the first irreducible leading term.
fn reduce_top(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let mut work: Vec<(Monomial, u32)> = f.terms().to_vec();
    while let Some((lm, lc)) = work.first().cloned() {
        let Some(g) = basis
            .iter()
            .find(|g| g.leading_monomial().is_some_and(|gl| gl.divides(&lm)))
        else {
            break;
        };
        let shift = g.leading_monomial().unwrap().quotient_of(&lm);
        let c = ring.neg(ring.mul(lc, ring.inv(g.leading_coefficient().unwrap())));
        work = axpy(&ring, &work[1..], &g.terms()[1..], &shift, c)?;
    }
    Ok(Polynomial::from_sorted(&ring, work))
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Result<Polynomial> {
    let ring = f.ring();
    let fl = f.leading_monomial().unwrap();
    let gl = g.leading_monomial().unwrap();
    // both monic
    let a = fl.quotient_of(lcm);
    let b = gl.quotient_of(lcm);
    let fa = f.mul_term(&a, 1)?;
    let out = axpy(ring, &fa.terms()[1..], &g.terms()[1..], &b, ring.neg(1))?;
    Ok(Polynomial::from_sorted(ring, out))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Reduced Gröbner basis of `gens` under the order of `ring`, sorted by
/// leading monomial descending. The zero ideal gives an empty basis.
pub fn reduced_groebner_basis(ring: &RingRef, gens: &[Polynomial]) -> Result<Vec<Polynomial>> {
    let ord = ring.order();
    let mut input: Vec<Polynomial> = Vec::new();
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let g = g.to_ring(ring)?.monic();
        if g.is_unit() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        input.push(g);
    }
    // deterministic processing: ascending leading monomial, then text
    input.sort_by(|a, b| {
        ord.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.terms().len().cmp(&b.terms().len()))
    });
    input.dedup();

    let mut basis: Vec<Polynomial> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();
    let limit = ring.limits().generator_limit;

    for g in input {
        let h = reduce(&g, &active_elems(&basis, &active))?;
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if h.is_unit() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        update(&mut basis, &mut active, &mut pairs, h);
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm first
        let mut best = 0;
        for k in 1..pairs.len() {
            let c = ord.compare(&pairs[k].lcm, &pairs[best].lcm);
            if c == Ordering::Less
                || (c == Ordering::Equal
                    && (pairs[k].j, pairs[k].i) < (pairs[best].j, pairs[best].i))
            {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], &pair.lcm)?;
        let act = active_elems(&basis, &active);
        let h = reduce_top(&s, &act)?;
        if h.is_zero() {
            continue;
        }
        let h = reduce(&h, &act)?.monic();
        if h.is_unit() {
            return Ok(vec![Polynomial::one(ring)]);
        }
        if basis.len() >= limit {
            return Err(crate::error::Error::DegreeExplosion(format!(
                "Gröbner basis exceeded {limit} elements"
            )));
        }
        update(&mut basis, &mut active, &mut pairs, h);
    }

    let minimal = active_elems(&basis, &active);
    interreduce(ring, minimal)
}

fn active_elems(basis: &[Polynomial], active: &[bool]) -> Vec<Polynomial> {
    basis
        .iter()
        .zip(active)
        .filter(|(_, &a)| a)
        .map(|(g, _)| g.clone())
        .collect()
}

/// Gebauer–Möller installation of a new basis element.
fn update(
    basis: &mut Vec<Polynomial>,
    active: &mut Vec<bool>,
    pairs: &mut Vec<Pair>,
    h: Polynomial,
) {
    let hl = h.leading_monomial().unwrap().clone();
    let t = basis.len();

    // candidate pairs (g, h)
    let cands: Vec<(usize, Monomial, bool)> = (0..basis.len())
        .filter(|&i| active[i])
        .map(|i| {
            let gl = basis[i].leading_monomial().unwrap();
            (i, gl.lcm(&hl), gl.gcd_is_one(&hl))
        })
        .collect();

    // chain criterion among the new pairs: an lcm strictly divisible by
    // another new lcm is redundant; among equal lcms keep one, and none if
    // any of them is coprime (it would fall to the product criterion)
    let mut new_pairs: Vec<Pair> = Vec::new();
    for (a, (i, la, coprime)) in cands.iter().enumerate() {
        if *coprime {
            continue;
        }
        let dominated = cands
            .iter()
            .enumerate()
            .any(|(b, (_, lb, cb))| b != a && lb.divides(la) && (lb != la || *cb || b < a));
        if !dominated {
            new_pairs.push(Pair {
                i: *i,
                j: t,
                lcm: la.clone(),
            });
        }
    }

    // old pairs made redundant by h
    pairs.retain(|pr| {
        if !hl.divides(&pr.lcm) {
            return true;
        }
        let li = basis[pr.i].leading_monomial().unwrap().lcm(&hl);
        let lj = basis[pr.j].leading_monomial().unwrap().lcm(&hl);
        li == pr.lcm || lj == pr.lcm
    });
    pairs.extend(new_pairs);

    // elements whose leading monomial h divides are no longer needed in
    // the final basis; pairs involving them stay valid
    for i in 0..basis.len() {
        if active[i] && hl.divides(basis[i].leading_monomial().unwrap()) {
            active[i] = false;
        }
    }
    basis.push(h);
    active.push(true);
}

/// Turns a Gröbner basis into the reduced one and sorts it.
fn interreduce(ring: &RingRef, mut g: Vec<Polynomial>) -> Result<Vec<Polynomial>> {
    let ord = ring.order();
    // minimal basis: remove elements whose lm is divisible by another's
    g.sort_by(|a, b| ord.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    let mut minimal: Vec<Polynomial> = Vec::new();
    for f in g {
        let fl = f.leading_monomial().unwrap();
        if minimal
            .iter()
            .any(|m| m.leading_monomial().unwrap().divides(fl))
        {
            continue;
        }
        minimal.push(f);
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != k)
            .map(|(_, p)| p.clone())
            .collect();
        let f = &minimal[k];
        let lead = Polynomial::from_sorted(ring, vec![f.terms()[0].clone()]);
        let tail = Polynomial::from_sorted(ring, f.terms()[1..].to_vec());
        let tail = reduce(&tail, &others)?;
        out.push(lead.add(&tail)?.monic());
    }
    sort_basis(&mut out);
    Ok(out)
}

/// Output order for bases: leading monomials descending, compared
/// lexicographically so that the listing does not depend on the ring order.
pub fn sort_basis(basis: &mut [Polynomial]) {
    basis.sort_by(|a, b| {
        MonomialOrder::Lex.compare(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
}

/// Checks the Buchberger criterion directly; used by tests.
pub fn is_groebner_basis(basis: &[Polynomial]) -> Result<bool> {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            let (a, b) = (&basis[i].monic(), &basis[j].monic());
            let lcm = a
                .leading_monomial()
                .unwrap()
                .lcm(b.leading_monomial().unwrap());
            let s = s_polynomial(a, b, &lcm)?;
            let monic: Vec<Polynomial> = basis.iter().map(|g| g.monic()).collect();
            if !reduce(&s, &monic)?.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;
    use crate::ring::Ring;

    fn ring(p: u64) -> RingRef {
        Ring::new(p, &["x", "y"], MonomialOrder::GrevLex).unwrap()
    }

    fn gb(r: &RingRef, gens: &[&str]) -> Vec<String> {
        let g: Vec<Polynomial> = gens.iter().map(|s| poly(r, s)).collect();
        reduced_groebner_basis(r, &g)
            .unwrap()
            .iter()
            .map(|p| p.to_string())
            .collect()
    }

    #[test]
    fn already_reduced() {
        let r = ring(5);
        assert_eq!(gb(&r, &["x", "y"]), vec!["x", "y"]);
        assert_eq!(gb(&r, &["x^2"]), vec!["x^2"]);
    }

    #[test]
    fn hand_buchberger_run() {
        // (x^2 - y, x^3) over F_5: x*(x^2-y) - x^3 = -xy, then y*(x^2-y) - x*(xy) = -y^2
        let r = ring(5);
        assert_eq!(gb(&r, &["x^2 - y", "x^3"]), vec!["x^2 - y", "x*y", "y^2"]);
    }

    #[test]
    fn unit_and_zero() {
        let r = ring(5);
        assert_eq!(gb(&r, &["x", "x + 1"]), vec!["1"]);
        assert!(gb(&r, &["0"]).is_empty());
    }

    #[test]
    fn normal_form_single_step() {
        // x^2 + y = (x^2 - y) + 2y over F_5
        let r = ring(5);
        let b = reduced_groebner_basis(&r, &[poly(&r, "x^2 - y")]).unwrap();
        assert_eq!(reduce(&poly(&r, "x^2 + y"), &b).unwrap(), poly(&r, "2*y"));
    }

    #[test]
    fn result_is_groebner() {
        let r = Ring::new(7, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap();
        let gens = vec![
            poly(&r, "x^2*y - z^3 + 1"),
            poly(&r, "x*y*z - 2*y^2"),
            poly(&r, "x^3 - y*z + x"),
        ];
        let b = reduced_groebner_basis(&r, &gens).unwrap();
        assert!(is_groebner_basis(&b).unwrap());
        for g in &gens {
            assert!(reduce(g, &b).unwrap().is_zero());
        }
    }
}
