use thiserror::Error;

/// Every failure the library can report.
///
/// Variant names double as the stable error names printed by the CLI, see
/// [`Error::name`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("rejected modulus: {0}")]
    RejectedModulus(String),
    #[error("not a Frobenius lift: {0}")]
    BadFrobeniusLift(String),
    #[error("invalid ring configuration: {0}")]
    InvalidConfig(String),
    #[error("element is not divisible by the uniformizer")]
    NonDivisible,
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("ghost vector is not integral: division fails at entry {index}")]
    NonIntegral { index: usize },
    #[error("operation needs an exact pi-torsion-free base ring")]
    TorsionBase,
    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("operands live over different rings")]
    BaseMismatch,
    #[error("operation needs a vector with at least two components")]
    ZeroLength,
    #[error("operation needs a non-empty tail")]
    ZeroTail,
    #[error("operation needs shift m >= 1")]
    ZeroShift,
    #[error("term budget exceeded: estimated {estimated} terms, budget {budget}")]
    BudgetExceeded { estimated: u128, budget: u128 },
    #[error("formal group law is not unital: {0}")]
    NotUnital(String),
    #[error("formal group law is not commutative: {0}")]
    NotCommutative(String),
    #[error("formal group law is not associative below degree {degree}")]
    NotAssociative { degree: u32 },
    #[error("logarithm coefficients are not integral: {0}")]
    NonIntegralPsi(String),
    #[error("precision required: {0}")]
    PrecisionRequired(String),
    #[error("bad length: {0}")]
    BadLength(String),
    #[error("unknown law `{0}`")]
    UnknownLaw(String),
    #[error("configuration unsupported: {0}")]
    ConfigUnsupported(String),
    #[error("malformed input: {0}")]
    Parse(String),
    #[error("i/o: {0}")]
    Io(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Stable identifier of the variant.
    pub fn name(&self) -> &'static str {
        match self {
            Error::RejectedModulus(_) => "RejectedModulus",
            Error::BadFrobeniusLift(_) => "BadFrobeniusLift",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::NonDivisible => "NonDivisible",
            Error::DuplicateName(_) => "DuplicateName",
            Error::NonIntegral { .. } => "NonIntegral",
            Error::TorsionBase => "TorsionBase",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::BaseMismatch => "BaseMismatch",
            Error::ZeroLength => "ZeroLength",
            Error::ZeroTail => "ZeroTail",
            Error::ZeroShift => "ZeroShift",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::NotUnital(_) => "NotUnital",
            Error::NotCommutative(_) => "NotCommutative",
            Error::NotAssociative { .. } => "NotAssociative",
            Error::NonIntegralPsi(_) => "NonIntegralPsi",
            Error::PrecisionRequired(_) => "PrecisionRequired",
            Error::BadLength(_) => "BadLength",
            Error::UnknownLaw(_) => "UnknownLaw",
            Error::ConfigUnsupported(_) => "ConfigUnsupported",
            Error::Parse(_) => "Parse",
            Error::Io(_) => "Io",
            Error::Internal(_) => "InternalError",
        }
    }

    /// Maps a division failure that cannot happen for valid inputs to an
    /// internal error.
    pub(crate) fn guard(self, what: &str) -> Error {
        match self {
            Error::NonIntegral { index } => {
                Error::Internal(format!("{what}: non-integral ghost solve at entry {index}"))
            }
            Error::NonDivisible => Error::Internal(format!("{what}: unexpected non-divisibility")),
            other => other,
        }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
