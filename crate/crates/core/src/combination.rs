//! Formal products `a_1^{t_1} ... a_m^{t_m}` with exact rational exponents.

use num_rational::Ratio;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::ring::RingRef;

pub type Exponent = Ratio<u64>;

#[derive(Clone, Debug)]
pub struct FormalCombination {
    ring: RingRef,
    factors: Vec<(Ideal, Exponent)>,
}

impl FormalCombination {
    /// The empty product, i.e. the unit ideal to any power.
    pub fn trivial(ring: &RingRef) -> Self {
        FormalCombination {
            ring: ring.clone(),
            factors: Vec::new(),
        }
    }

    pub fn new(ring: &RingRef, factors: Vec<(Ideal, Exponent)>) -> Result<Self> {
        for (a, t) in &factors {
            if !a.ring().same_space(ring) {
                return Err(Error::RingMismatch);
            }
            if *t.numer() == 0 {
                return Err(Error::InvalidInput("exponents must be positive".into()));
            }
            if a.is_zero() {
                return Err(Error::InvalidInput("factor ideals must be nonzero".into()));
            }
        }
        Ok(FormalCombination {
            ring: ring.clone(),
            factors,
        })
    }

    pub fn single(a: Ideal, t: Exponent) -> Result<Self> {
        let ring = a.ring().clone();
        Self::new(&ring, vec![(a, t)])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn factors(&self) -> &[(Ideal, Exponent)] {
        &self.factors
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty()
    }

    /// `ceil(t_i * q)` for every factor, exactly.
    pub fn ceil_exponents(&self, q: u64) -> Result<Vec<u64>> {
        self.factors.iter().map(|(_, t)| ceil_times(t, q)).collect()
    }

    /// Multiplies every exponent by `s`.
    pub fn scaled(&self, s: Exponent) -> Self {
        FormalCombination {
            ring: self.ring.clone(),
            factors: self
                .factors
                .iter()
                .map(|(a, t)| (a.clone(), t * s))
                .collect(),
        }
    }
}

pub fn ceil_times(t: &Exponent, q: u64) -> Result<u64> {
    let num = (*t.numer() as u128) * q as u128;
    let den = *t.denom() as u128;
    let c = num.div_ceil(den);
    u64::try_from(c).map_err(|_| Error::DegreeExplosion("exponent overflow".into()))
}

/// Parses `n` or `n/d`.
pub fn parse_exponent(s: &str) -> Result<Exponent> {
    let bad = || Error::InvalidInput(format!("bad rational `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: u64 = n.parse().map_err(|_| bad())?;
    let d: u64 = d.parse().map_err(|_| bad())?;
    if d == 0 {
        return Err(bad());
    }
    Ok(Ratio::new(n, d))
}
