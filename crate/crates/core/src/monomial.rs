//! Exponent vectors and monomial orders.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Exponent vector, one entry per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub(crate) SmallVec<[u32; 6]>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(SmallVec::from_slice(exps))
    }

    pub fn variable(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = 1;
        m
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    /// Product, failing when an exponent passes `limit`.
    pub fn checked_mul(&self, other: &Monomial, limit: u32) -> Result<Monomial> {
        let mut out = self.0.clone();
        for (a, &b) in out.iter_mut().zip(other.0.iter()) {
            match a.checked_add(b) {
                Some(s) if s <= limit => *a = s,
                _ => {
                    return Err(Error::DegreeExplosion(format!(
                        "exponent exceeds degree limit {limit}"
                    )))
                }
            }
        }
        Ok(Monomial(out))
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(
            other
                .0
                .iter()
                .zip(self.0.iter())
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(other.0.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd_is_one(&self, other: &Monomial) -> bool {
        self.0
            .iter()
            .zip(other.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    pub fn pow(&self, k: u32, limit: u32) -> Result<Monomial> {
        let mut out = self.0.clone();
        for a in out.iter_mut() {
            match a.checked_mul(k) {
                Some(s) if s <= limit => *a = s,
                _ => {
                    return Err(Error::DegreeExplosion(format!(
                        "exponent exceeds degree limit {limit}"
                    )))
                }
            }
        }
        Ok(Monomial(out))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0.as_slice())
    }
}

/// Supported monomial orders.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
pub enum MonomialOrder {
    Lex,
    #[default]
    GrevLex,
    /// Eliminates the first `k` variables: grevlex on the first block,
    /// ties broken by grevlex on the rest.
    BlockElimination(usize),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&e| e as u64).sum();
    let db: u64 = b.iter().map(|&e| e as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().rev().zip(b.iter().rev()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            // a smaller exponent in the last differing variable is bigger
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::GrevLex => grevlex(a, b),
            MonomialOrder::BlockElimination(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }

    /// Checked comparison used at API boundaries.
    pub fn try_compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::LengthMismatch(a.len(), b.len()));
        }
        Ok(self.compare(a, b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn grevlex_degree_tie() {
        let ord = MonomialOrder::GrevLex;
        assert_eq!(ord.compare(&m(&[2, 1]), &m(&[1, 2])), Ordering::Greater);
        // x*z < y^2 in grevlex on three variables
        assert_eq!(ord.compare(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn lex_first_variable_wins() {
        let ord = MonomialOrder::Lex;
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
        assert_eq!(ord.compare(&m(&[1, 0]), &m(&[0, 5])), Ordering::Greater);
    }

    #[test]
    fn reflexive() {
        for ord in [
            MonomialOrder::Lex,
            MonomialOrder::GrevLex,
            MonomialOrder::BlockElimination(1),
        ] {
            assert_eq!(ord.compare(&m(&[3, 1, 4]), &m(&[3, 1, 4])), Ordering::Equal);
        }
    }

    #[test]
    fn elimination_prefers_first_block() {
        let ord = MonomialOrder::BlockElimination(1);
        assert_eq!(
            ord.compare(&m(&[1, 0, 0]), &m(&[0, 9, 9])),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch() {
        let err = MonomialOrder::Lex
            .try_compare(&m(&[1]), &m(&[1, 0]))
            .unwrap_err();
        assert_eq!(err, Error::LengthMismatch(1, 2));
    }

    #[test]
    fn checked_mul_respects_limit() {
        assert!(m(&[3]).checked_mul(&m(&[4]), 6).is_err());
        assert_eq!(m(&[3]).checked_mul(&m(&[3]), 6).unwrap(), m(&[6]));
    }
}
