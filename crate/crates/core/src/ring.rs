//! The ambient polynomial ring `F_p[x_1, ..., x_n]`.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::MonomialOrder;

/// Resource ceilings. Exceeding one raises [`Error::DegreeExplosion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Limits {
    /// Largest exponent allowed on any single variable.
    pub degree_limit: u32,
    /// Largest generator set any intermediate ideal may carry.
    pub generator_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            degree_limit: 1 << 22,
            generator_limit: 200_000,
        }
    }
}

/// Characteristic, variable names and the monomial order.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ring {
    p: u32,
    vars: Vec<String>,
    order: MonomialOrder,
    limits: Limits,
}

pub type RingRef = Arc<Ring>;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    pub fn new<S: AsRef<str>>(p: u64, vars: &[S], order: MonomialOrder) -> Result<RingRef> {
        Self::with_limits(p, vars, order, Limits::default())
    }

    pub fn with_limits<S: AsRef<str>>(
        p: u64,
        vars: &[S],
        order: MonomialOrder,
        limits: Limits,
    ) -> Result<RingRef> {
        if !is_prime(p) {
            return Err(Error::NonPrimeChar(p));
        }
        if p >= 1 << 31 {
            return Err(Error::InvalidInput(format!(
                "characteristic {p} exceeds 31 bits"
            )));
        }
        let vars: Vec<String> = vars.iter().map(|v| v.as_ref().to_string()).collect();
        for (i, v) in vars.iter().enumerate() {
            let valid = !v.is_empty()
                && v.chars()
                    .next()
                    .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
            if !valid {
                return Err(Error::InvalidInput(format!("bad variable name `{v}`")));
            }
            if vars[..i].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable `{v}`")));
            }
        }
        if let MonomialOrder::BlockElimination(k) = order {
            if k > vars.len() {
                return Err(Error::InvalidInput(format!(
                    "elimination block {k} larger than variable count"
                )));
            }
        }
        Ok(Arc::new(Ring {
            p: p as u32,
            vars,
            order,
            limits,
        }))
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    /// Same ring with a different order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring {
            order,
            ..self.clone()
        })
    }

    /// Prepends fresh variables (used for elimination).
    pub fn extended_front(&self, names: &[&str], order: MonomialOrder) -> RingRef {
        let mut vars: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        vars.extend(self.vars.iter().cloned());
        Arc::new(Ring {
            p: self.p,
            vars,
            order,
            limits: self.limits,
        })
    }

    /// Structural compatibility: same characteristic and variables.
    pub fn same_space(&self, other: &Ring) -> bool {
        self.p == other.p && self.vars == other.vars
    }

    // field arithmetic

    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + b as u64;
        (s % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        let s = a as u64 + self.p as u64 - b as u64;
        (s % self.p as u64) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "inverse of zero");
        self.pow(a, self.p as u64 - 2)
    }

    pub fn pow(&self, a: u32, mut k: u64) -> u32 {
        let p = self.p as u64;
        let mut base = a as u64 % p;
        let mut acc = 1u64;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            k >>= 1;
        }
        acc as u32
    }

    pub fn reduce_int(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }
}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "F_{}[{}] ({:?})",
            self.p,
            self.vars.join(","),
            self.order
        )
    }
}
