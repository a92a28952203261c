//! Test ideals `tau(a^t)` and `tau_I(S, a^t)` as stabilized Frobenius-root
//! chains, test-element search, the F-regularity predicates and an
//! independent Newton-polyhedron oracle for monomial input.

use std::collections::HashSet;

use num_integer::Integer;
use serde::Serialize;

use crate::combination::FormalCombination;
use crate::error::{Error, Result};
use crate::frobenius::{root_of_product, FrobeniusLevel};
use crate::ideal::Ideal;
use crate::monomial::{Monomial, MonomialOrder};
use crate::poly::Polynomial;
use crate::ring::RingRef;

/// `gamma^n`, certified against an ideal by `(I : gamma) = I`.
#[derive(Clone, Debug, PartialEq)]
pub struct TestElement {
    pub gamma: Polynomial,
    pub n: u32,
}

impl TestElement {
    pub fn new(gamma: Polynomial, n: u32) -> Self {
        TestElement { gamma, n: n.max(1) }
    }

    pub fn trivial(ring: &RingRef) -> Self {
        TestElement::new(Polynomial::one(ring), 1)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct TauOptions {
    pub e_max: u32,
    /// Double `N` until two consecutive values agree.
    pub certify: bool,
    pub max_n: u32,
}

impl Default for TauOptions {
    fn default() -> Self {
        TauOptions {
            e_max: 4,
            certify: true,
            max_n: 16,
        }
    }
}

impl TauOptions {
    pub fn with_e_max(e_max: u32) -> Self {
        TauOptions {
            e_max,
            ..Default::default()
        }
    }
}

/// The recorded chain `J_1 ⊆ J_2 ⊆ ...` and its fixed point.
#[derive(Clone, Debug)]
pub struct TauComputation {
    pub chain: Vec<Ideal>,
    pub stabilized_at: Option<u32>,
    pub result: Option<Ideal>,
    pub n_used: u32,
    pub certified: bool,
}

impl TauComputation {
    pub fn into_result(self, e_max: u32) -> Result<Ideal> {
        self.result.ok_or(Error::NotStabilized { e_max })
    }
}

/// Factor list `(F, m)` standing for `F^m` at a given level.
pub(crate) type FactorsAt<'a> = dyn Fn(FrobeniusLevel) -> Result<Vec<(Ideal, u64)>> + 'a;

/// Level a plateau should reach before it is trusted, budget permitting.
pub const CONFIRM_Q: u64 = 64;

/// Runs `J_e = base + sum_{e' <= e} root_{p^e'}(prod F^m)` for `e = 1..e_max`
/// and stops at the first `e` with `J_e = J_{e+1} = J_{e+2}` once `q` has
/// reached [`CONFIRM_Q`] or `e_max` is exhausted. A unit `J_e` is final at once
/// since the chain ascends.
pub(crate) fn frobenius_chain(
    ring: &RingRef,
    base: Option<&Ideal>,
    e_max: u32,
    factors: &FactorsAt<'_>,
) -> Result<TauComputation> {
    let mut chain: Vec<Ideal> = Vec::new();
    let unit_x = Ideal::unit(ring);
    for e in 1..=e_max {
        let level = FrobeniusLevel::new(ring, e)?;
        let term = root_of_product(&unit_x, &factors(level)?, level)?;
        let mut j = term;
        if let Some(prev) = chain.last() {
            j = j.sum(prev)?;
        } else if let Some(b) = base {
            j = j.sum(b)?;
        }
        let j = j.minimalized()?;
        if let Some(prev) = chain.last() {
            if !j.contains(prev)? {
                return Err(Error::ChainNotAscending { e });
            }
        }
        let unit = j.is_unit()?;
        chain.push(j);
        if unit {
            return Ok(done(chain, e));
        }
        let k = chain.len();
        if k >= 3 && chain[k - 1].equals(&chain[k - 2])? && chain[k - 2].equals(&chain[k - 3])? {
            // a short plateau at small q can still jump; confirm at larger q
            // while the budget allows
            if level.q >= CONFIRM_Q || e == e_max {
                let mut start = k - 3;
                while start > 0 && chain[start - 1].equals(&chain[k - 1])? {
                    start -= 1;
                }
                return Ok(done(chain, start as u32 + 1));
            }
        }
    }
    Ok(TauComputation {
        chain,
        stabilized_at: None,
        result: None,
        n_used: 1,
        certified: false,
    })
}

fn done(chain: Vec<Ideal>, e: u32) -> TauComputation {
    let result = chain.last().cloned();
    TauComputation {
        chain,
        stabilized_at: Some(e),
        result,
        n_used: 1,
        certified: true,
    }
}

/// Adaptive `N`: doubles until two consecutive values give the same ideal.
pub(crate) fn certified_chain(
    te: &TestElement,
    opts: TauOptions,
    run: &dyn Fn(u32) -> Result<TauComputation>,
) -> Result<TauComputation> {
    let mut n = te.n;
    let mut cur = run(n)?;
    cur.n_used = n;
    if te.gamma.is_unit() || !opts.certify {
        cur.certified = te.gamma.is_unit();
        return Ok(cur);
    }
    loop {
        let Some(a) = cur.result.clone() else {
            return Ok(cur);
        };
        if n.saturating_mul(2) > opts.max_n {
            cur.certified = false;
            return Ok(cur);
        }
        let mut next = run(n * 2)?;
        next.n_used = n * 2;
        match &next.result {
            None => return Ok(next),
            Some(b) if b.equals(&a)? => {
                cur.certified = true;
                return Ok(cur);
            }
            Some(_) => {
                n *= 2;
                cur = next;
            }
        }
    }
}

/// `tau(a^t)` in the ambient polynomial ring.
pub fn test_ideal(at: &FormalCombination, e_max: u32) -> Result<Ideal> {
    test_ideal_trace(at, e_max)?.into_result(e_max)
}

pub fn test_ideal_trace(at: &FormalCombination, e_max: u32) -> Result<TauComputation> {
    let ring = at.ring().clone();
    let run = |level: FrobeniusLevel| -> Result<Vec<(Ideal, u64)>> {
        let ms = at.ceil_exponents(level.q)?;
        Ok(at
            .factors()
            .iter()
            .zip(ms)
            .map(|((a, _), m)| (a.clone(), m))
            .collect())
    };
    frobenius_chain(&ring, None, e_max, &run)
}

/// `(I : g) = I`.
pub fn is_nonzerodivisor(i: &Ideal, g: &Polynomial) -> Result<bool> {
    if g.is_unit() {
        return Ok(true);
    }
    if i.contains_poly(g)? {
        return Ok(false);
    }
    i.contains(&i.colon_poly(g)?)
}

/// Validates the along-`I` preconditions and returns the height `c`.
pub(crate) fn check_along(
    i: &Ideal,
    at: &FormalCombination,
    te: &TestElement,
    expected_height: Option<usize>,
) -> Result<usize> {
    if !at.ring().same_space(i.ring()) || !te.gamma.ring().same_space(i.ring()) {
        return Err(Error::RingMismatch);
    }
    let c = i.height()?;
    if let Some(exp) = expected_height {
        if exp != c {
            return Err(Error::HeightMismatch {
                expected: exp,
                found: c,
            });
        }
    }
    if !is_nonzerodivisor(i, &te.gamma)? {
        return Err(Error::ZeroDivisorGamma {
            what: format!("gamma = {}", te.gamma),
        });
    }
    for (k, (a, _)) in at.factors().iter().enumerate() {
        let mut ok = false;
        for g in a.generators() {
            if is_nonzerodivisor(i, g)? {
                ok = true;
                break;
            }
        }
        if !ok {
            return Err(Error::ZeroDivisorGamma {
                what: format!("every generator of factor {}", k + 1),
            });
        }
    }
    Ok(c)
}

/// `tau_I(S, a^t)`.
pub fn test_ideal_along(
    i: &Ideal,
    at: &FormalCombination,
    te: &TestElement,
    e_max: u32,
) -> Result<Ideal> {
    test_ideal_along_trace(i, at, te, TauOptions::with_e_max(e_max), None)?.into_result(e_max)
}

pub fn test_ideal_along_trace(
    i: &Ideal,
    at: &FormalCombination,
    te: &TestElement,
    opts: TauOptions,
    expected_height: Option<usize>,
) -> Result<TauComputation> {
    let c = check_along(i, at, te, expected_height)? as u64;
    let ring = i.ring().clone();
    let gamma = Ideal::principal(te.gamma.clone());
    let run = |n: u32| -> Result<TauComputation> {
        let factors = |level: FrobeniusLevel| -> Result<Vec<(Ideal, u64)>> {
            let mut out = vec![(i.clone(), c * (level.q - 1))];
            let ms = at.ceil_exponents(level.q)?;
            out.extend(
                at.factors()
                    .iter()
                    .zip(ms)
                    .map(|((a, _), m)| (a.clone(), m)),
            );
            if !te.gamma.is_unit() {
                out.push((gamma.clone(), n as u64));
            }
            Ok(out)
        };
        frobenius_chain(&ring, None, opts.e_max, &factors)
    };
    certified_chain(te, opts, &run)
}

pub fn is_purely_f_regular(
    i: &Ideal,
    at: &FormalCombination,
    te: &TestElement,
    e_max: u32,
) -> Result<bool> {
    test_ideal_along(i, at, te, e_max)?.is_unit()
}

/// Determinant by cofactor expansion along the first row.
fn determinant(m: &[Vec<Polynomial>]) -> Result<Polynomial> {
    let n = m.len();
    if n == 1 {
        return Ok(m[0][0].clone());
    }
    let ring = m[0][0].ring().clone();
    let mut acc = Polynomial::zero(&ring);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(k, _)| *k != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = m[0][j].mul(&determinant(&minor)?)?;
        acc = if j % 2 == 0 {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    Ok(acc)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

const MAX_MINORS: usize = 400;

/// Candidate test elements from `c x c` Jacobian minors, reduced modulo `I`;
/// a monomial minor is replaced by the product of its variables. Two fixed
/// linear combinations of the minors are appended last.
pub fn jacobian_candidates(i: &Ideal) -> Result<Vec<Polynomial>> {
    let ring = i.ring().clone();
    let c = i.height()?;
    if c == 0 {
        return Ok(vec![Polynomial::one(&ring)]);
    }
    let gens = i.generators();
    let n = ring.nvars();
    let jac: Vec<Vec<Polynomial>> = gens
        .iter()
        .map(|g| (0..n).map(|v| g.derivative(v)).collect())
        .collect();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let mut count = 0;
    'outer: for rows in combinations(gens.len(), c) {
        for cols in combinations(n, c) {
            count += 1;
            if count > MAX_MINORS {
                break 'outer;
            }
            let sub: Vec<Vec<Polynomial>> = rows
                .iter()
                .map(|&r| cols.iter().map(|&k| jac[r][k].clone()).collect())
                .collect();
            let d = i.normal_form(&determinant(&sub)?)?;
            if d.is_zero() {
                continue;
            }
            let d = if d.is_monomial() {
                let exps: Vec<u32> = d
                    .leading_monomial()
                    .unwrap()
                    .exponents()
                    .iter()
                    .map(|&e| e.min(1))
                    .collect();
                Polynomial::monomial(&ring, Monomial::from_exponents(&exps), 1)
            } else {
                d.monic()
            };
            if seen.insert(d.terms().to_vec()) {
                out.push(d);
            }
        }
    }
    let ord = MonomialOrder::GrevLex;
    out.sort_by(|a, b| {
        ord.compare(a.leading_monomial().unwrap(), b.leading_monomial().unwrap())
            .then_with(|| a.len().cmp(&b.len()))
    });
    // for a reducible quotient each minor may vanish on some component
    // while a combination avoids all of them
    if out.len() >= 2 {
        let p = ring.characteristic();
        let weights: [&dyn Fn(usize) -> u32; 2] = [&|_| 1, &|j| (j as u32 % (p - 1).max(1)) + 1];
        let mut extra = Vec::new();
        for w in weights {
            let mut acc = Polynomial::zero(&ring);
            for (j, d) in out.iter().enumerate() {
                acc = acc.add(&d.scale(w(j)))?;
            }
            let acc = i.normal_form(&acc)?;
            if !acc.is_zero() && seen.insert(acc.monic().terms().to_vec()) {
                extra.push(acc.monic());
            }
        }
        out.extend(extra);
    }
    Ok(out)
}

/// First Jacobian candidate with `(I : gamma) = I`; `gamma = 1` for a
/// zero-dimensional quotient when nothing else passes.
pub fn find_test_element(i: &Ideal) -> Result<TestElement> {
    find_test_element_from(i, &jacobian_candidates(i)?)
}

pub fn find_test_element_from(i: &Ideal, candidates: &[Polynomial]) -> Result<TestElement> {
    for g in candidates {
        if !g.is_zero() && is_nonzerodivisor(i, g)? {
            return Ok(TestElement::new(g.monic(), 1));
        }
    }
    if i.krull_dimension()? == 0 {
        return Ok(TestElement::trivial(i.ring()));
    }
    Err(Error::NoTestElementFound)
}

/// Outcome of the bounded strong F-regularity search.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SfrOutcome {
    pub holds: bool,
    pub witness_e: Option<u32>,
    pub searched_up_to: u32,
}

/// Searches `e <= e_max` for `gamma^N (I^[q] : I) ⊄ m^[q]`, using
/// `(I^[q] : I) = (f_1 ... f_c)^{q-1} + I^[q]` for the complete intersection.
pub fn is_strongly_f_regular_quotient(
    i: &Ideal,
    fs: &[Polynomial],
    te: &TestElement,
    e_max: u32,
) -> Result<SfrOutcome> {
    let ring = i.ring().clone();
    let ci = Ideal::new(&ring, fs.iter().cloned())?;
    let h = ci.height()?;
    if h != fs.len() {
        return Err(Error::HeightMismatch {
            expected: fs.len(),
            found: h,
        });
    }
    if !ci.equals(i)? {
        return Err(Error::InvalidInput(
            "the ideal is not generated by the given sequence".into(),
        ));
    }
    let mut u = Polynomial::one(&ring);
    for f in fs {
        u = u.mul(f)?;
    }
    let u = Ideal::principal(u);
    let gamma = Ideal::principal(te.gamma.clone());
    let m = Ideal::maximal(&ring);
    for e in 1..=e_max {
        let level = FrobeniusLevel::new(&ring, e)?;
        let mut factors = vec![(u.clone(), level.q - 1)];
        if !te.gamma.is_unit() {
            factors.push((gamma.clone(), te.n as u64));
        }
        let root = root_of_product(&Ideal::unit(&ring), &factors, level)?;
        if !m.contains(&root)? {
            return Ok(SfrOutcome {
                holds: true,
                witness_e: Some(e),
                searched_up_to: e,
            });
        }
    }
    Ok(SfrOutcome {
        holds: false,
        witness_e: None,
        searched_up_to: e_max,
    })
}

/// Monomial test ideal from the Newton polyhedron: `x^u` belongs iff
/// `u + 1` lies in the interior of `sum t_i Newt(a_i)`.
pub fn monomial_test_ideal_oracle(at: &FormalCombination, degree_bound: u32) -> Result<Ideal> {
    let ring = at.ring().clone();
    let n = ring.nvars();
    if !at.factors().iter().all(|(a, _)| a.is_monomial()) {
        return Err(Error::InvalidInput("oracle needs monomial ideals".into()));
    }
    // common denominator
    let l: u64 = at
        .factors()
        .iter()
        .fold(1u64, |acc, (_, t)| acc.lcm(t.denom()));
    // Minkowski sum of scaled generator exponents, times l
    let mut pts: Vec<Vec<i128>> = vec![vec![0; n]];
    for (a, t) in at.factors() {
        let s = (*t.numer() * (l / *t.denom())) as i128;
        let mut next = Vec::new();
        for p in &pts {
            for g in a.generators() {
                let e = g.leading_monomial().unwrap().exponents();
                next.push(p.iter().zip(e).map(|(x, &y)| x + s * y as i128).collect());
            }
        }
        pts = prune_dominated(next);
    }
    let normals = facet_normal_candidates(&pts, n);
    let mins: Vec<i128> = normals
        .iter()
        .map(|lam| pts.iter().map(|v| dot(lam, v)).min().unwrap())
        .collect();
    let interior = |w: &[i128]| normals.iter().zip(&mins).all(|(lam, &mn)| dot(lam, w) > mn);

    // exponents of minimal generators never exceed floor(max_v v_j / l)
    let complete_bound: u64 = (0..n)
        .map(|j| pts.iter().map(|v| v[j]).max().unwrap() as u64 / l)
        .sum();

    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut stack = vec![vec![0u32; n]];
    let mut seen = HashSet::new();
    while let Some(u) = stack.pop() {
        if !seen.insert(u.clone()) {
            continue;
        }
        let w: Vec<i128> = u.iter().map(|&x| (x as i128 + 1) * l as i128).collect();
        if interior(&w) {
            members.push(u);
            continue;
        }
        let deg: u32 = u.iter().sum();
        if deg < degree_bound {
            for j in 0..n {
                let mut v = u.clone();
                v[j] += 1;
                stack.push(v);
            }
        }
    }
    let minimal: Vec<&Vec<u32>> = members
        .iter()
        .filter(|u| {
            !members
                .iter()
                .any(|v| v != *u && v.iter().zip(u.iter()).all(|(a, b)| a <= b))
        })
        .collect();
    if (degree_bound as u64) < complete_bound
        && (minimal.is_empty()
            || minimal
                .iter()
                .any(|u| u.iter().sum::<u32>() == degree_bound))
    {
        return Err(Error::DegreeBoundTooSmall(degree_bound));
    }
    let gens = minimal
        .into_iter()
        .map(|u| Polynomial::monomial(&ring, Monomial::from_exponents(u), 1));
    Ideal::new(&ring, gens)?.minimalized()
}

fn dot(a: &[i128], b: &[i128]) -> i128 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn prune_dominated(pts: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let mut uniq: Vec<Vec<i128>> = Vec::new();
    for p in pts {
        if !uniq.contains(&p) {
            uniq.push(p);
        }
    }
    uniq.iter()
        .filter(|p| {
            !uniq
                .iter()
                .any(|q| q != *p && q.iter().zip(p.iter()).all(|(a, b)| a <= b))
        })
        .cloned()
        .collect()
}

/// Nonnegative normals orthogonal to `n - 1` of: point differences and
/// coordinate directions. Every facet normal is among them; extra
/// candidates are still valid supporting inequalities.
fn facet_normal_candidates(pts: &[Vec<i128>], n: usize) -> Vec<Vec<i128>> {
    let mut out: Vec<Vec<i128>> = (0..n)
        .map(|j| (0..n).map(|k| (k == j) as i128).collect())
        .collect();
    if n == 1 {
        return out;
    }
    let mut rows: Vec<Vec<i128>> = out.clone();
    for a in 0..pts.len() {
        for b in a + 1..pts.len() {
            rows.push(pts[a].iter().zip(&pts[b]).map(|(x, y)| x - y).collect());
        }
    }
    let mut seen: HashSet<Vec<i128>> = out.iter().cloned().collect();
    for pick in combinations(rows.len(), n - 1) {
        let m: Vec<&Vec<i128>> = pick.iter().map(|&i| &rows[i]).collect();
        let mut lam: Vec<i128> = (0..n)
            .map(|j| {
                let sub: Vec<Vec<i128>> = m
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                let d = int_det(&sub);
                if j % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .collect();
        if lam.iter().all(|&x| x == 0) {
            continue;
        }
        if lam.iter().all(|&x| x <= 0) {
            lam.iter_mut().for_each(|x| *x = -*x);
        }
        if lam.iter().any(|&x| x < 0) {
            continue;
        }
        let g = lam.iter().fold(0i128, |acc, &x| acc.gcd(&x));
        lam.iter_mut().for_each(|x| *x /= g);
        if seen.insert(lam.clone()) {
            out.push(lam);
        }
    }
    out
}

fn int_det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    match n {
        0 => 1,
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => (0..n)
            .map(|j| {
                let sub: Vec<Vec<i128>> = m[1..]
                    .iter()
                    .map(|r| {
                        r.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| *x)
                            .collect()
                    })
                    .collect();
                let s = if j % 2 == 0 { 1 } else { -1 };
                s * m[0][j] * int_det(&sub)
            })
            .sum(),
    }
}
