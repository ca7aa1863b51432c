use thiserror::Error;

/// Errors produced by the series engine, the recursion cache and the fitting pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by a series that is zero to its precision")]
    DivisionByZeroSeries,
    #[error("leading coefficient is not invertible in the coefficient domain")]
    NonInvertibleLeadingCoefficient,
    #[error("series must have valuation >= 1 (got {0})")]
    PositiveValuationRequired(i64),
    #[error("series must have valuation 0 and constant term one")]
    UnitConstantTermRequired,
    #[error("series with negative valuation {0} cannot be substituted into")]
    NegativeValuationUnsupported(i64),
    #[error("expansion base must have valuation exactly one (got {0})")]
    BaseValuationMustBeOne(i64),
    #[error("coefficient of q^{n} is outside the known range [{valuation}, {precision})")]
    OutOfPrecision { n: i64, valuation: i64, precision: i64 },
    #[error("Eisenstein series of weight {0} is not supported (weight must be even and >= 2)")]
    OddWeightUnsupported(i64),
    #[error("interpolation abscissa {0} appears twice")]
    DuplicateAbscissa(String),
    #[error("invalid tangency data: {0}")]
    InvalidProfile(String),
    #[error("cache format mismatch: {0}")]
    FormatVersionMismatch(String),
    #[error("not enough admissible degrees to determine the coefficient of x^{delta}")]
    InsufficientDegrees { delta: usize },
    #[error("degree pairs disagree at x^{delta}: {detail}")]
    InconsistentOverdetermination { delta: usize, detail: String },
    #[error("unknown surface kind `{0}`")]
    UnknownKind(String),
    #[error("Q_{mu} is not reproduced by its interpolating polynomial at delta = {delta}")]
    NonPolynomialResidual { mu: usize, delta: usize },
    #[error("{0}")]
    InvalidInput(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
