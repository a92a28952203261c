use std::time::Instant;

use ftau_core::restriction::build_report;
use ftau_core::test_ideal::{
    find_test_element, is_strongly_f_regular_quotient, test_ideal_along_trace, test_ideal_trace,
    SfrOutcome,
};
use ftau_core::{
    bracket_power, fedder_ci_check, frobenius_root, verify_claim2, Claim2Report, Error,
    FormalCombination, FrobeniusLevel, Ideal, LinkageProblem, Polynomial, RestrictionReport,
    Result, TauComputation, TauOptions, TestElement,
};

use crate::job::{CommandKind, JobSpec};

/// What a command produced.
#[derive(Debug)]
pub enum Outcome {
    Ideal(Ideal),
    Dim {
        dimension: usize,
        height: usize,
    },
    Tau {
        comp: TauComputation,
        gamma: Polynomial,
    },
    Fedder {
        e: u32,
        holds: bool,
    },
    Sfr(SfrOutcome),
    Link {
        fs: Vec<Polynomial>,
        link: Polynomial,
        height: usize,
    },
    Claim2 {
        link: Polynomial,
        report: Claim2Report,
    },
    Restrict(Box<RestrictionReport>),
}

#[derive(Debug)]
pub struct Execution {
    pub outcome: Outcome,
    pub elapsed_ms: u128,
}

fn test_element(job: &JobSpec, i: &Ideal) -> Result<TestElement> {
    let n = job.params.n.unwrap_or(1);
    match &job.params.gamma {
        Some(g) => Ok(TestElement::new(g.clone(), n)),
        None => Ok(TestElement::new(find_test_element(i)?.gamma, n)),
    }
}

fn options(job: &JobSpec) -> TauOptions {
    TauOptions {
        e_max: job.params.e_max,
        // an explicit N is taken as given
        certify: job.params.n.is_none(),
        ..Default::default()
    }
}

/// Runs a parsed job. `ContainmentViolation` and `NotStabilized` surface as errors.
pub fn execute(job: &JobSpec) -> Result<Execution> {
    let start = Instant::now();
    let outcome = run(job)?;
    Ok(Execution {
        outcome,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

fn run(job: &JobSpec) -> Result<Outcome> {
    let ring = &job.ring;
    let p = &job.params;
    let at = FormalCombination::new(ring, p.factors.clone())?;
    let level = || FrobeniusLevel::new(ring, p.e);
    let arg = |k: usize| -> &Ideal { &job.args[k] };
    let seed = || {
        p.seed
            .ok_or_else(|| Error::InvalidInput("missing seed".into()))
    };
    Ok(match job.command {
        CommandKind::Gb => Outcome::Ideal(arg(0).minimalized()?),
        CommandKind::Colon => Outcome::Ideal(arg(0).colon(arg(1))?),
        CommandKind::Intersect => Outcome::Ideal(arg(0).intersection(arg(1))?),
        CommandKind::Dim => Outcome::Dim {
            dimension: arg(0).krull_dimension()?,
            height: arg(0).height()?,
        },
        CommandKind::Bracket => Outcome::Ideal(bracket_power(arg(0), level()?)?.minimalized()?),
        CommandKind::Root => Outcome::Ideal(frobenius_root(arg(0), level()?)?),
        CommandKind::Tau => {
            let comp = test_ideal_trace(&at, p.e_max)?;
            if comp.result.is_none() {
                return Err(Error::NotStabilized { e_max: p.e_max });
            }
            Outcome::Tau {
                comp,
                gamma: Polynomial::one(ring),
            }
        }
        CommandKind::TauAlong => {
            let te = test_element(job, arg(0))?;
            let comp = test_ideal_along_trace(arg(0), &at, &te, options(job), None)?;
            if comp.result.is_none() {
                return Err(Error::NotStabilized { e_max: p.e_max });
            }
            Outcome::Tau {
                comp,
                gamma: te.gamma,
            }
        }
        CommandKind::Fedder => Outcome::Fedder {
            e: p.e,
            holds: fedder_ci_check(arg(0).generators(), p.e)?,
        },
        CommandKind::Sfr => {
            let te = test_element(job, arg(0))?;
            Outcome::Sfr(is_strongly_f_regular_quotient(
                arg(0),
                arg(0).generators(),
                &te,
                p.e_max,
            )?)
        }
        CommandKind::Link => {
            let c = arg(0).height()?;
            let lp = LinkageProblem::generic(arg(0), c, seed()?)?;
            Outcome::Link {
                fs: lp.fs,
                link: lp.link,
                height: c,
            }
        }
        CommandKind::Claim2 => {
            let c = arg(0).height()?;
            let lp = LinkageProblem::generic(arg(0), c, seed()?)?;
            let report = verify_claim2(&lp, p.e)?;
            Outcome::Claim2 {
                link: lp.link,
                report,
            }
        }
        CommandKind::Restrict => {
            let rep = build_report(arg(0), &at, seed()?, options(job))?;
            if !rep.containment_holds {
                return Err(Error::ContainmentViolation);
            }
            Outcome::Restrict(Box::new(rep))
        }
    })
}
