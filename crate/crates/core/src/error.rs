use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Verdicts such as "inconclusive" or a refused division are values, not
/// errors; this type is reserved for precondition violations and malformed
/// input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("negative exponent on `{0}` outside a Laurent context")]
    NegativeExponent(String),

    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),

    #[error("variable mismatch: [{0}] vs [{1}]")]
    VariableMismatch(String, String),

    #[error("missing binding for variable `{0}`")]
    MissingBinding(String),

    #[error("zero polynomial")]
    ZeroPolynomial,

    #[error("element is not invertible")]
    NotInvertible,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("letter `{0}` is not a declared generator or inverse")]
    UndeclaredLetter(char),

    #[error("input is not symmetric under inversion of `{var}`: offending monomial {monomial}")]
    SymmetryViolation { var: String, monomial: String },

    #[error("word of length {len} exceeds the trace recursion budget {budget}")]
    LengthBudget { len: usize, budget: usize },

    #[error("both inputs have degree zero in `{0}`")]
    DegreeZero(String),

    #[error("fixture `{name}`: {msg}")]
    Fixture { name: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn fixture(name: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Fixture {
            name: name.into(),
            msg: msg.into(),
        }
    }
}
