use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// Variants that name an "implementation bug" can only surface if one of the
/// built-in tables is wrong; they are reported rather than panicking so that
/// the verification suite can show them as failed checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomials from different variable contexts ({0} vs {1})")]
    ContextMismatch(String, String),
    #[error("expected {expected} values, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("substitution produced a zero polynomial denominator")]
    DivisionByZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),

    #[error("cannot reflect in the zero vector")]
    ZeroVector,
    #[error("label construction failed: {0}")]
    ConstructionFailure(String),
    #[error("no catalog label matches the reflected triple of {0}")]
    NoMatch(String),
    #[error("group closure exceeded the budget of {0} elements")]
    BudgetExceeded(usize),

    #[error("point is degenerate (discriminant vanishes)")]
    DegeneratePoint,
    #[error("matrix is degenerate: {0}")]
    DegenerateMatrix(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("identity failure for {generator} at y{alpha}: {details}")]
    IdentityFailure {
        generator: String,
        alpha: usize,
        details: String,
    },
    #[error("projection undefined: all projected coordinates vanish")]
    Undefined,

    #[error("expected rank {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("expected {expected} independent relations, found {found}")]
    CountMismatch { expected: usize, found: usize },

    #[error("non-generic input: {0}")]
    NonGeneric(String),
    #[error("degenerate quadratic: {0}")]
    DegenerateQuadratic(String),
    #[error("divisibility failure: {0}")]
    DivisibilityFailure(String),

    #[error("degenerate z-point: {0}")]
    DegenerateZ(String),
    #[error("inadmissible limit direction")]
    InadmissibleDirection,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
