//! Sparse polynomials over `F_p` in canonical form.
//!
//! Terms are kept sorted descending under the ring's monomial order with no
//! zero coefficients, so structural equality is polynomial equality.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ring::{Ring, RingRef};

#[derive(Clone)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_space(&other.ring)
            && self.ring.order() == other.ring.order()
            && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn check_same(a: &Ring, b: &Ring) -> Result<()> {
    if a.same_space(b) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, 1)
    }

    pub fn constant(ring: &RingRef, c: i64) -> Self {
        let c = ring.reduce_int(c);
        let terms = if c == 0 {
            Vec::new()
        } else {
            vec![(Monomial::one(ring.nvars()), c)]
        };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn variable(ring: &RingRef, i: usize) -> Self {
        Self::monomial(ring, Monomial::variable(ring.nvars(), i), 1)
    }

    pub fn monomial(ring: &RingRef, m: Monomial, c: u32) -> Self {
        assert_eq!(m.len(), ring.nvars());
        let c = c % ring.characteristic();
        let terms = if c == 0 { Vec::new() } else { vec![(m, c)] };
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ring: &RingRef, terms: impl IntoIterator<Item = (Monomial, u32)>) -> Self {
        let mut acc: HashMap<Monomial, u64> = HashMap::new();
        let p = ring.characteristic() as u64;
        for (m, c) in terms {
            assert_eq!(m.len(), ring.nvars());
            let e = acc.entry(m).or_insert(0);
            *e = (*e + c as u64) % p;
        }
        Self::from_accumulator(ring, acc)
    }

    fn from_accumulator(ring: &RingRef, acc: HashMap<Monomial, u64>) -> Self {
        let p = ring.characteristic() as u64;
        let mut terms: Vec<(Monomial, u32)> = acc
            .into_iter()
            .filter_map(|(m, c)| {
                let c = (c % p) as u32;
                (c != 0).then_some((m, c))
            })
            .collect();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Trusts that `terms` are already canonical for `ring`.
    pub(crate) fn from_sorted(ring: &RingRef, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms.iter().all(|t| t.1 != 0));
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.order().compare(&w[0].0, &w[1].0) == Ordering::Greater));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.0)
    }

    pub fn leading_coefficient(&self) -> Option<u32> {
        self.terms.first().map(|t| t.1)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn constant_coefficient(&self) -> u32 {
        self.terms
            .last()
            .filter(|(m, _)| m.is_one())
            .map(|t| t.1)
            .unwrap_or(0)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// Re-sorts the terms for another order on the same space.
    pub fn to_ring(&self, ring: &RingRef) -> Result<Polynomial> {
        check_same(&self.ring, ring)?;
        let mut terms = self.terms.clone();
        let ord = ring.order();
        terms.sort_by(|a, b| ord.compare(&b.0, &a.0));
        Ok(Polynomial {
            ring: ring.clone(),
            terms,
        })
    }

    /// Embeds into a ring with `k` extra variables prepended.
    pub fn embed_front(&self, ring: &RingRef, k: usize) -> Polynomial {
        assert_eq!(ring.nvars(), self.ring.nvars() + k);
        let terms = self.terms.iter().map(|(m, c)| {
            let mut e = vec![0u32; k];
            e.extend_from_slice(m.exponents());
            (Monomial::from_exponents(&e), *c)
        });
        Polynomial::from_terms(ring, terms)
    }

    /// Drops the first `k` variables; caller guarantees they do not occur.
    pub fn restrict_front(&self, ring: &RingRef, k: usize) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            debug_assert!(m.exponents()[..k].iter().all(|&e| e == 0));
            (Monomial::from_exponents(&m.exponents()[k..]), *c)
        });
        Polynomial::from_terms(ring, terms)
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading_coefficient() {
            None | Some(1) => self.clone(),
            Some(c) => self.scale(self.ring.inv(c)),
        }
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let c = c % self.ring.characteristic();
        if c == 0 {
            return Polynomial::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), self.ring.mul(*a, c)))
            .collect();
        Polynomial::from_sorted(&self.ring, terms)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(self.ring.characteristic() - 1)
    }

    /// `c * m * self`; multiplication by a monomial preserves term order.
    pub fn mul_term(&self, m: &Monomial, c: u32) -> Result<Polynomial> {
        let c = c % self.ring.characteristic();
        if c == 0 {
            return Ok(Polynomial::zero(&self.ring));
        }
        let limit = self.ring.limits().degree_limit;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (t, a) in &self.terms {
            terms.push((t.checked_mul(m, limit)?, self.ring.mul(*a, c)));
        }
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// `self + c * m * other`, merged in one pass.
    pub(crate) fn add_scaled_shifted(
        &self,
        other: &Polynomial,
        m: &Monomial,
        c: u32,
    ) -> Result<Polynomial> {
        let out = axpy(&self.ring, &self.terms, &other.terms, m, c)?;
        Ok(Polynomial::from_sorted(&self.ring, out))
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let other = self.align(other);
        self.add_scaled_shifted(&other, &Monomial::one(self.ring.nvars()), 1)
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let other = self.align(other);
        let minus_one = self.ring.characteristic() - 1;
        self.add_scaled_shifted(&other, &Monomial::one(self.ring.nvars()), minus_one)
    }

    fn align(&self, other: &Polynomial) -> Polynomial {
        if self.ring.order() == other.ring.order() {
            other.clone()
        } else {
            other.to_ring(&self.ring).expect("checked")
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        check_same(&self.ring, &other.ring)?;
        let other = self.align(other);
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.ring));
        }
        let (small, large) = if self.len() <= other.len() {
            (self, &other)
        } else {
            (&other, self)
        };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return large.mul_term(m, *c);
        }
        let limit = self.ring.limits().degree_limit;
        let p = self.ring.characteristic() as u64;
        let mut acc: HashMap<Monomial, u64> =
            HashMap::with_capacity(small.len() * large.len() / 2 + 1);
        for (ma, ca) in &small.terms {
            for (mb, cb) in &large.terms {
                let m = ma.checked_mul(mb, limit)?;
                let e = acc.entry(m).or_insert(0);
                *e = (*e + (*ca as u64) * (*cb as u64)) % p;
            }
        }
        Ok(Polynomial::from_accumulator(&self.ring, acc))
    }

    /// Frobenius twist: `self^q` for `q` a power of `p`. Coefficients are
    /// fixed because `c^p = c` on the prime field.
    pub fn frobenius(&self, q: u32) -> Result<Polynomial> {
        let limit = self.ring.limits().degree_limit;
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            terms.push((m.pow(q, limit)?, *c));
        }
        // scaling every exponent by q preserves any monomial order
        Ok(Polynomial::from_sorted(&self.ring, terms))
    }

    /// `self^k`, splitting `k` into base-`p` digits so that only powers
    /// below `p` are expanded by multiplication.
    pub fn pow(&self, mut k: u64) -> Result<Polynomial> {
        let p = self.ring.characteristic() as u64;
        let mut result = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut first = true;
        while k > 0 {
            if !first {
                base = base.frobenius(p as u32)?;
            }
            first = false;
            let d = k % p;
            k /= p;
            if d > 0 {
                let mut piece = Polynomial::one(&self.ring);
                for _ in 0..d {
                    piece = piece.mul(&base)?;
                }
                result = result.mul(&piece)?;
            }
        }
        Ok(result)
    }

    /// Evaluates at a point of `F_p^n`.
    pub fn evaluate(&self, point: &[u32]) -> u32 {
        let ring = &self.ring;
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut v = *c;
            for (e, x) in m.exponents().iter().zip(point) {
                v = ring.mul(v, ring.pow(*x, *e as u64));
            }
            acc = ring.add(acc, v);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponents()[var];
            if e == 0 {
                return None;
            }
            let mut exps = m.exponents().to_vec();
            exps[var] -= 1;
            let coeff = self.ring.mul(*c, e % self.ring.characteristic());
            Some((Monomial::from_exponents(&exps), coeff))
        });
        Polynomial::from_terms(&self.ring, terms)
    }

    /// `self / d` when the division is exact, else `None`.
    pub fn exact_div(&self, d: &Polynomial) -> Result<Option<Polynomial>> {
        check_same(&self.ring, &d.ring)?;
        let d = self.align(d);
        let Some(dl) = d.leading_monomial().cloned() else {
            return Err(Error::InvalidInput("division by zero polynomial".into()));
        };
        let dinv = self.ring.inv(d.leading_coefficient().unwrap());
        let mut rem = self.clone();
        let mut quot: Vec<(Monomial, u32)> = Vec::new();
        while let Some((lm, lc)) = rem.terms.first().cloned() {
            if !dl.divides(&lm) {
                return Ok(None);
            }
            let qm = dl.quotient_of(&lm);
            let qc = self.ring.mul(lc, dinv);
            rem = rem.add_scaled_shifted(&d, &qm, self.ring.neg(qc))?;
            quot.push((qm, qc));
        }
        Ok(Some(Polynomial::from_sorted(&self.ring, quot)))
    }
}

/// Merges `a + c * m * b` for term lists sorted descending under the ring order.
pub(crate) fn axpy(
    ring: &Ring,
    a: &[(Monomial, u32)],
    b: &[(Monomial, u32)],
    m: &Monomial,
    c: u32,
) -> Result<Vec<(Monomial, u32)>> {
    let ord = ring.order();
    let limit = ring.limits().degree_limit;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    let mut bm: Option<Monomial> = None;
    while j < b.len() || i < a.len() {
        if j < b.len() && bm.is_none() {
            bm = Some(b[j].0.checked_mul(m, limit)?);
        }
        match (a.get(i), bm.as_ref()) {
            (Some(t), None) => {
                out.push(t.clone());
                i += 1;
            }
            (None, Some(sm)) => {
                out.push((sm.clone(), ring.mul(b[j].1, c)));
                j += 1;
                bm = None;
            }
            (Some(t), Some(sm)) => match ord.compare(&t.0, sm) {
                Ordering::Greater => {
                    out.push(t.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm.take().unwrap(), ring.mul(b[j].1, c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = ring.add(t.1, ring.mul(b[j].1, c));
                    if s != 0 {
                        out.push((t.0.clone(), s));
                    }
                    i += 1;
                    j += 1;
                    bm = None;
                }
            },
            (None, None) => unreachable!(),
        }
    }
    Ok(out)
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let p = self.ring.characteristic();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            // symmetric representative: 1..=p/2 positive, the rest negative
            let (neg, mag) = if p > 2 && *c > p / 2 {
                (true, p - c)
            } else {
                (false, *c)
            };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = format_monomial(&self.ring, m);
            match (mono.is_empty(), mag) {
                (true, _) => write!(f, "{mag}")?,
                (false, 1) => write!(f, "{mono}")?,
                (false, _) => write!(f, "{mag}*{mono}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

pub fn format_monomial(ring: &Ring, m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (v, &e) in ring.variables().iter().zip(m.exponents()) {
        match e {
            0 => {}
            1 => parts.push(v.clone()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

// ---- text syntax ----------------------------------------------------------

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(u64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn parse_err(token: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        line: 0,
        token: token.into(),
        message: message.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Tok>> {
    let mut toks = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                toks.push(Tok::Plus);
                i += 1
            }
            '-' => {
                toks.push(Tok::Minus);
                i += 1
            }
            '*' => {
                toks.push(Tok::Star);
                i += 1
            }
            '^' => {
                toks.push(Tok::Caret);
                i += 1
            }
            '(' => {
                toks.push(Tok::LParen);
                i += 1
            }
            ')' => {
                toks.push(Tok::RParen);
                i += 1
            }
            d if d.is_ascii_digit() => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let s: String = chars[start..i].iter().collect();
                if i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_') {
                    return Err(parse_err(s, "missing `*` between coefficient and variable"));
                }
                let n = s
                    .parse::<u64>()
                    .map_err(|_| parse_err(s.clone(), "integer too large"))?;
                toks.push(Tok::Num(n));
            }
            a if a.is_ascii_alphabetic() || a == '_' => {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push(Tok::Ident(chars[start..i].iter().collect()));
            }
            other => return Err(parse_err(other.to_string(), "unexpected character")),
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    ring: &'a RingRef,
    toks: Vec<Tok>,
    pos: usize,
}

fn tok_text(t: Option<&Tok>) -> String {
    match t {
        None => "<end>".into(),
        Some(Tok::Num(n)) => n.to_string(),
        Some(Tok::Ident(s)) => s.clone(),
        Some(Tok::Plus) => "+".into(),
        Some(Tok::Minus) => "-".into(),
        Some(Tok::Star) => "*".into(),
        Some(Tok::Caret) => "^".into(),
        Some(Tok::LParen) => "(".into(),
        Some(Tok::RParen) => ")".into(),
    }
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<Polynomial> {
        let mut acc = Polynomial::zero(self.ring);
        let mut sign_neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                sign_neg = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc = if sign_neg { acc.sub(&t)? } else { acc.add(&t)? };
            match self.peek() {
                Some(Tok::Plus) => {
                    sign_neg = false;
                    self.pos += 1
                }
                Some(Tok::Minus) => {
                    sign_neg = true;
                    self.pos += 1
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<Polynomial> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            let f = self.factor()?;
            acc = acc.mul(&f)?;
        }
        Ok(acc)
    }

    fn exponent(&mut self) -> Result<Option<u64>> {
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.toks.get(self.pos).cloned() {
                Some(Tok::Num(n)) => {
                    self.pos += 1;
                    Ok(Some(n))
                }
                t => Err(parse_err(tok_text(t.as_ref()), "expected exponent")),
            }
        } else {
            Ok(None)
        }
    }

    fn factor(&mut self) -> Result<Polynomial> {
        let tok = self.toks.get(self.pos).cloned();
        let base = match tok {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                let p = self.ring.characteristic() as u64;
                Polynomial::constant(self.ring, (n % p) as i64)
            }
            Some(Tok::Ident(ref name)) => {
                self.pos += 1;
                let i = self
                    .ring
                    .var_index(name)
                    .ok_or_else(|| parse_err(name.clone(), "unknown variable"))?;
                Polynomial::variable(self.ring, i)
            }
            Some(Tok::LParen) => {
                self.pos += 1;
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => self.pos += 1,
                    t => return Err(parse_err(tok_text(t), "expected `)`")),
                }
                e
            }
            t => return Err(parse_err(tok_text(t.as_ref()), "expected a factor")),
        };
        match self.exponent()? {
            None => Ok(base),
            Some(k) => {
                if k > self.ring.limits().degree_limit as u64 {
                    return Err(Error::DegreeExplosion(format!("exponent {k} too large")));
                }
                base.pow(k)
            }
        }
    }
}

impl Polynomial {
    /// Parses `x^3 + y^5`, `2*x*y - z^2` and parenthesised forms.
    pub fn parse(ring: &RingRef, text: &str) -> Result<Polynomial> {
        let toks = tokenize(text)?;
        if toks.is_empty() {
            return Err(parse_err("<end>", "empty polynomial"));
        }
        let mut parser = Parser { ring, toks, pos: 0 };
        let p = parser.expr()?;
        if parser.pos != parser.toks.len() {
            return Err(parse_err(tok_text(parser.peek()), "unexpected token"));
        }
        Ok(p)
    }
}

/// Convenience for tests and examples: panics on malformed input.
pub fn poly(ring: &RingRef, text: &str) -> Polynomial {
    Polynomial::parse(ring, text).unwrap_or_else(|e| panic!("bad polynomial `{text}`: {e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::MonomialOrder;

    fn ring(p: u64) -> RingRef {
        Ring::new(p, &["x", "y", "z"], MonomialOrder::GrevLex).unwrap()
    }

    #[test]
    fn characteristic_two_cancellation() {
        let r = ring(2);
        assert!(poly(&r, "x").add(&poly(&r, "x")).unwrap().is_zero());
    }

    #[test]
    fn additive_identity() {
        let r = ring(5);
        let f = poly(&r, "x^2 + 3*y*z - 1");
        assert_eq!(f.add(&Polynomial::zero(&r)).unwrap(), f);
    }

    #[test]
    fn reduction_mod_three() {
        let r = ring(3);
        let s = poly(&r, "x^2 + y").add(&poly(&r, "x^2 + 2*y")).unwrap();
        assert_eq!(s, poly(&r, "2*x^2"));
    }

    #[test]
    fn freshmans_dream() {
        let r = ring(2);
        let s = poly(&r, "x + y");
        assert_eq!(s.mul(&s).unwrap(), poly(&r, "x^2 + y^2"));
        let r3 = ring(3);
        assert_eq!(poly(&r3, "(x + y)^3"), poly(&r3, "x^3 + y^3"));
    }

    #[test]
    fn multiplicative_identity() {
        let r = ring(7);
        let f = poly(&r, "x*y - 2*z^3 + 4");
        assert_eq!(f.mul(&Polynomial::one(&r)).unwrap(), f);
    }

    #[test]
    fn ring_mismatch() {
        let a = ring(5);
        let b = ring(7);
        assert_eq!(
            poly(&a, "x").add(&poly(&b, "x")).unwrap_err(),
            Error::RingMismatch
        );
        assert_eq!(
            poly(&a, "x").mul(&poly(&b, "x")).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn display_is_canonical() {
        let r = ring(7);
        assert_eq!(poly(&r, "y^3 + x*y + x^2").to_string(), "y^3 + x^2 + x*y");
        assert_eq!(poly(&r, "2*x*y - z^2").to_string(), "2*x*y - z^2");
        assert_eq!(poly(&r, "-1").to_string(), "-1");
        assert_eq!(poly(&r, "0").to_string(), "0");
    }

    #[test]
    fn parse_errors_name_token() {
        let r = ring(7);
        match Polynomial::parse(&r, "x^3 + w").unwrap_err() {
            Error::Parse { token, .. } => assert_eq!(token, "w"),
            e => panic!("{e:?}"),
        }
        assert!(Polynomial::parse(&r, "x3").is_err());
        assert!(matches!(
            Polynomial::parse(&r, "3x").unwrap_err(),
            Error::Parse { .. }
        ));
        assert!(Polynomial::parse(&r, "x^").is_err());
        assert!(Polynomial::parse(&r, "").is_err());
    }

    #[test]
    fn exact_division() {
        let r = ring(5);
        let f = poly(&r, "(x + y)*(x^2 - z)");
        let q = f.exact_div(&poly(&r, "x + y")).unwrap().unwrap();
        assert_eq!(q, poly(&r, "x^2 - z"));
        assert!(f.exact_div(&poly(&r, "x + 2")).unwrap().is_none());
    }

    #[test]
    fn pow_matches_repeated_product() {
        let r = ring(3);
        let f = poly(&r, "x + 2*y + z^2 + 1");
        let mut acc = Polynomial::one(&r);
        for k in 0..11u64 {
            assert_eq!(f.pow(k).unwrap(), acc);
            acc = acc.mul(&f).unwrap();
        }
    }
}
