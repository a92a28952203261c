//! Exact computations with test ideals over `F_p[x_1, ..., x_n]`: Gröbner
//! bases, Frobenius powers and roots, `tau(a^t)` and `tau_I(S, a^t)`,
//! F-regularity predicates, linkage data and the restriction containment.

pub mod combination;
pub mod error;
pub mod frobenius;
pub mod groebner;
pub mod ideal;
pub mod linkage;
pub mod monomial;
pub mod poly;
pub mod restriction;
pub mod ring;
pub mod test_ideal;

pub use combination::{parse_exponent, Exponent, FormalCombination};
pub use error::{Error, Result};
pub use frobenius::{bracket_power, frobenius_root, FrobeniusLevel};
pub use groebner::reduced_groebner_basis;
pub use ideal::Ideal;
pub use linkage::{
    fedder_ci_check, generic_regular_sequence, link_generator, verify_claim2, Claim2Report,
    LinkageProblem,
};
pub use monomial::{Monomial, MonomialOrder};
pub use poly::Polynomial;
pub use restriction::{quotient_divisorial_test_ideal, restriction_report, RestrictionReport};
pub use ring::{Limits, Ring, RingRef};
pub use test_ideal::{
    find_test_element, is_purely_f_regular, is_strongly_f_regular_quotient,
    monomial_test_ideal_oracle, test_ideal, test_ideal_along, TauComputation, TauOptions,
    TestElement,
};
