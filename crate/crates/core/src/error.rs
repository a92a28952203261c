use thiserror::Error;

/// Every failure the library can report.
///
/// The CLI maps these onto exit codes, see [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials or ideals live in different rings")]
    RingMismatch,
    #[error("monomial lengths differ ({0} vs {1})")]
    LengthMismatch(usize, usize),
    #[error("resource limit exceeded: {0}")]
    DegreeExplosion(String),
    #[error("the ideal is the unit ideal")]
    UnitIdeal,
    #[error("Frobenius chain did not stabilize by e_max = {e_max}")]
    NotStabilized { e_max: u32 },
    #[error("chain is not ascending at e = {e}")]
    ChainNotAscending { e: u32 },
    #[error("{what} is a zero divisor modulo the ideal")]
    ZeroDivisorGamma { what: String },
    #[error("height mismatch: expected {expected}, found {found}")]
    HeightMismatch { expected: usize, found: usize },
    #[error("no test element candidate passed the colon test")]
    NoTestElementFound,
    #[error("could not find a generic regular sequence after {attempts} attempts")]
    GenericityFailure { attempts: usize },
    #[error("the link ideal is not principal modulo the ideal")]
    NonPrincipalLink,
    #[error("degree bound {0} is too small for the monomial oracle")]
    DegreeBoundTooSmall(u32),
    #[error("restriction containment violated")]
    ContainmentViolation,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("parse error at line {line}, token `{token}`: {message}")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },
    #[error("characteristic {0} is not prime")]
    NonPrimeChar(u64),
}

impl Error {
    /// Short machine-readable name used in JSON output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::RingMismatch => "RingMismatch",
            Error::LengthMismatch(..) => "LengthMismatch",
            Error::DegreeExplosion(_) => "DegreeExplosion",
            Error::UnitIdeal => "UnitIdeal",
            Error::NotStabilized { .. } => "NotStabilized",
            Error::ChainNotAscending { .. } => "ChainNotAscending",
            Error::ZeroDivisorGamma { .. } => "ZeroDivisorGamma",
            Error::HeightMismatch { .. } => "HeightMismatch",
            Error::NoTestElementFound => "NoTestElementFound",
            Error::GenericityFailure { .. } => "GenericityFailure",
            Error::NonPrincipalLink => "NonPrincipalLink",
            Error::DegreeBoundTooSmall(_) => "DegreeBoundTooSmall",
            Error::ContainmentViolation => "ContainmentViolation",
            Error::InvalidInput(_) => "InvalidInput",
            Error::Parse { .. } => "ParseError",
            Error::NonPrimeChar(_) => "NonPrimeChar",
        }
    }

    /// 0 success, 2 parse/validation, 3 not stabilized, 4 containment violation, 5 resource limits.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotStabilized { .. } => 3,
            Error::ContainmentViolation | Error::ChainNotAscending { .. } => 4,
            Error::DegreeExplosion(_) | Error::DegreeBoundTooSmall(_) => 5,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
