//! Divisorial test ideal of the quotient via the lifted Frobenius iteration,
//! and the containment report comparing it with `tau_I(S, a^t) + I`.
//!
//! The colon `(I^[q] : I)` is replaced by `(u^{(q-1)/(p-1)}) + I^[q]` where
//! `u` is the certified Fedder generator at level `p`; the `I^[q]` part only
//! contributes `I` after taking roots. Likewise `(a_i + I)` may be replaced
//! by `a_i` since the `I`-multiples land in `I^[q]` once multiplied by `u`.

use serde::Serialize;

use crate::combination::FormalCombination;
use crate::error::{Error, Result};
use crate::frobenius::FrobeniusLevel;
use crate::ideal::Ideal;
use crate::linkage::{fedder_generator, LinkageProblem};
use crate::poly::Polynomial;
use crate::test_ideal::{
    certified_chain, check_along, find_test_element, frobenius_chain, is_nonzerodivisor,
    test_ideal_along_trace, TauComputation, TauOptions, TestElement,
};

fn lifted_chain(
    i: &Ideal,
    f: &Polynomial,
    at: &FormalCombination,
    te: &TestElement,
    opts: TauOptions,
) -> Result<TauComputation> {
    let ring = i.ring().clone();
    let p = ring.characteristic() as u64;
    let u = Ideal::principal(fedder_generator(i)?);
    let fi = Ideal::principal(f.clone());
    let gamma = Ideal::principal(te.gamma.clone());
    let run = |n: u32| -> Result<TauComputation> {
        let factors = |level: FrobeniusLevel| -> Result<Vec<(Ideal, u64)>> {
            let mut out = vec![(u.clone(), (level.q - 1) / (p - 1))];
            if !f.is_unit() {
                out.push((fi.clone(), level.q - 1));
            }
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
        frobenius_chain(&ring, Some(i), opts.e_max, &factors)
    };
    certified_chain(te, opts, &run)
}

/// Lift of `tau_{fR}(R, (aR)^t)` for `R = S/I`; contains `I`.
pub fn quotient_divisorial_test_ideal(
    i: &Ideal,
    f: &Polynomial,
    at: &FormalCombination,
    te: &TestElement,
    e_max: u32,
) -> Result<Ideal> {
    quotient_divisorial_trace(i, f, at, te, TauOptions::with_e_max(e_max))?.into_result(e_max)
}

pub fn quotient_divisorial_trace(
    i: &Ideal,
    f: &Polynomial,
    at: &FormalCombination,
    te: &TestElement,
    opts: TauOptions,
) -> Result<TauComputation> {
    if !is_nonzerodivisor(i, f)? {
        return Err(Error::ZeroDivisorGamma {
            what: format!("f = {f}"),
        });
    }
    if !is_nonzerodivisor(i, &te.gamma)? {
        return Err(Error::ZeroDivisorGamma {
            what: format!("gamma = {}", te.gamma),
        });
    }
    lifted_chain(i, f, at, te, opts)
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportInputs {
    pub ideal: Vec<String>,
    pub combination: Vec<(Vec<String>, String)>,
    pub characteristic: u32,
    pub seed: u64,
    pub e_max: u32,
    pub regular_sequence: Vec<String>,
    pub link_generator: String,
    pub gamma_lhs: String,
    pub gamma_rhs: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SideDiagnostics {
    pub stabilized_at: Option<u32>,
    pub n_used: u32,
    pub certified: bool,
    pub chain: Vec<Vec<String>>,
}

impl SideDiagnostics {
    fn from(t: &TauComputation) -> Result<Self> {
        Ok(SideDiagnostics {
            stabilized_at: t.stabilized_at,
            n_used: t.n_used,
            certified: t.certified,
            chain: t
                .chain
                .iter()
                .map(|j| j.canonical_lines())
                .collect::<Result<_>>()?,
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Diagnostics {
    /// `false` when `f` is a zero divisor modulo `I`; `lhs` is then the
    /// ambient expression rather than a divisorial test ideal.
    pub link_is_nonzerodivisor: bool,
    pub lhs: SideDiagnostics,
    pub rhs: SideDiagnostics,
}

#[derive(Clone, Debug, Serialize)]
pub struct RestrictionReport {
    pub inputs: ReportInputs,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    pub containment_holds: bool,
    pub equality_holds: bool,
    pub diagnostics: Diagnostics,
}

/// Builds the report without failing on a violated containment.
pub fn build_report(
    i: &Ideal,
    at: &FormalCombination,
    seed: u64,
    opts: TauOptions,
) -> Result<RestrictionReport> {
    let ring = i.ring().clone();
    let c = i.height()?;
    let lp = LinkageProblem::generic(i, c, seed)?;
    let f = lp.link.clone();

    let te_rhs = find_test_element(i)?;
    check_along(i, at, &te_rhs, Some(c))?;
    let f_nzd = is_nonzerodivisor(i, &f)?;
    // the lhs needs a test element of the quotient pair as well; a multiple
    // of the rhs one keeps the two iterations comparable
    let mut gamma_lhs = te_rhs.gamma.clone();
    if f_nzd && !f.is_unit() {
        let extra = find_test_element(&i.add_poly(&f)?)
            .map(|t| t.gamma)
            .unwrap_or_else(|_| Polynomial::one(&ring));
        let cand = gamma_lhs.mul(&extra)?;
        if is_nonzerodivisor(i, &cand)? {
            gamma_lhs = cand;
        }
    }
    let te_lhs = TestElement::new(gamma_lhs, te_rhs.n);

    let lhs_t = lifted_chain(i, &f, at, &te_lhs, opts)?;
    let rhs_t = test_ideal_along_trace(i, at, &te_rhs, opts, Some(c))?;
    let lhs = lhs_t
        .result
        .clone()
        .ok_or(Error::NotStabilized { e_max: opts.e_max })?;
    let rhs = rhs_t
        .result
        .clone()
        .ok_or(Error::NotStabilized { e_max: opts.e_max })?
        .sum(i)?
        .minimalized()?;
    let containment_holds = rhs.contains(&lhs)?;
    let equality_holds = containment_holds && lhs.contains(&rhs)?;

    let combination = at
        .factors()
        .iter()
        .map(|(a, t)| Ok((a.canonical_lines()?, t.to_string())))
        .collect::<Result<_>>()?;
    Ok(RestrictionReport {
        inputs: ReportInputs {
            ideal: i.canonical_lines()?,
            combination,
            characteristic: ring.characteristic(),
            seed,
            e_max: opts.e_max,
            regular_sequence: lp.fs.iter().map(|g| g.to_string()).collect(),
            link_generator: f.to_string(),
            gamma_lhs: te_lhs.gamma.to_string(),
            gamma_rhs: te_rhs.gamma.to_string(),
        },
        lhs: lhs.canonical_lines()?,
        rhs: rhs.canonical_lines()?,
        containment_holds,
        equality_holds,
        diagnostics: Diagnostics {
            link_is_nonzerodivisor: f_nzd,
            lhs: SideDiagnostics::from(&lhs_t)?,
            rhs: SideDiagnostics::from(&rhs_t)?,
        },
    })
}

/// Generic link, both sides, and the containment `lhs ⊆ rhs`; a violation
/// is an error.
pub fn restriction_report(
    i: &Ideal,
    at: &FormalCombination,
    seed: u64,
    e_max: u32,
) -> Result<RestrictionReport> {
    let rep = build_report(i, at, seed, TauOptions::with_e_max(e_max))?;
    if !rep.containment_holds {
        return Err(Error::ContainmentViolation);
    }
    Ok(rep)
}
