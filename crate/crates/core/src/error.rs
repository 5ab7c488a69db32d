use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("arc label {label} occurs {count} times (expected 2)")]
    ArcCount { label: u64, count: usize },
    #[error("generator s{index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("zero exponent on generator s{index}")]
    ZeroExponent { index: usize },
    #[error("missing strand count (expected `Bn:` prefix)")]
    MissingStrandCount,
    #[error("integer slope {0} gives a trivial summand")]
    IntegerSlope(String),
    #[error("need at least 3 slopes, got {0}")]
    LengthTooSmall(usize),
    #[error("malformed rational `{0}`")]
    MalformedRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("rotation data is not planar: {faces} faces for {crossings} crossings")]
    NonPlanar { crossings: usize, faces: usize },
    #[error("diagram is disconnected")]
    Disconnected,
    #[error("strand orientation is inconsistent at crossing {0}")]
    InconsistentOrientation(usize),
    #[error("cable count must be at least 1, got {0}")]
    InvalidCableCount(usize),
    #[error("state covers {got} crossings, diagram has {expected}")]
    StateSize { expected: usize, got: usize },
    #[error("state is not adequate and homogeneous")]
    NotAdequateOrHomogeneous,
    #[error("state is not homogeneous")]
    NotHomogeneous,
    #[error("diagram is not adequate on the requested side")]
    NotAdequate,
    #[error("diagram is not connected")]
    NotConnected,
    #[error("{crossings} crossings exceed the configured cap of {cap}")]
    CrossingCapExceeded { crossings: usize, cap: usize },
    #[error("braid word is not positive")]
    NotPositive,
    #[error("exponent {exponent} on s{index} is below 3")]
    ExponentTooSmall { index: usize, exponent: i64 },
    #[error("closure diagram is not prime")]
    NotPrimeDiagram,
    #[error("closure of a braid on {0} strands is a torus link")]
    TorusBraid(usize),
    #[error("diagram is not prime")]
    NotPrime,
    #[error("hypothesis not met: {positive} positive and {negative} negative tangles (need 3 of each)")]
    HypothesisNotMet { positive: usize, negative: usize },
    #[error("malformed polynomial: {0}")]
    MalformedPolynomial(String),
}

impl Error {
    /// Stable machine-readable name used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::EmptyInput => "EmptyInput",
            Error::Syntax { .. } => "Syntax",
            Error::ArcCount { .. } => "ArcCount",
            Error::IndexOutOfRange { .. } => "IndexOutOfRange",
            Error::ZeroExponent { .. } => "ZeroExponent",
            Error::MissingStrandCount => "MissingStrandCount",
            Error::IntegerSlope(_) => "IntegerSlope",
            Error::LengthTooSmall(_) => "LengthTooSmall",
            Error::MalformedRational(_) => "MalformedRational",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::NonPlanar { .. } => "NonPlanar",
            Error::Disconnected => "Disconnected",
            Error::InconsistentOrientation(_) => "InconsistentOrientation",
            Error::InvalidCableCount(_) => "InvalidCableCount",
            Error::StateSize { .. } => "StateSize",
            Error::NotAdequateOrHomogeneous => "NotAdequateOrHomogeneous",
            Error::NotHomogeneous => "NotHomogeneous",
            Error::NotAdequate => "NotAdequate",
            Error::NotConnected => "NotConnected",
            Error::CrossingCapExceeded { .. } => "CrossingCapExceeded",
            Error::NotPositive => "NotPositive",
            Error::ExponentTooSmall { .. } => "ExponentTooSmall",
            Error::NotPrimeDiagram => "NotPrimeDiagram",
            Error::TorusBraid(_) => "TorusBraid",
            Error::NotPrime => "NotPrime",
            Error::HypothesisNotMet { .. } => "HypothesisNotMet",
            Error::MalformedPolynomial(_) => "MalformedPolynomial",
        }
    }

    /// True for errors meaning "the input is fine but a theorem's hypothesis fails".
    pub fn is_hypothesis_failure(&self) -> bool {
        matches!(
            self,
            Error::NotAdequateOrHomogeneous
                | Error::NotHomogeneous
                | Error::NotAdequate
                | Error::NotConnected
                | Error::CrossingCapExceeded { .. }
                | Error::NotPositive
                | Error::ExponentTooSmall { .. }
                | Error::NotPrimeDiagram
                | Error::TorusBraid(_)
                | Error::NotPrime
                | Error::HypothesisNotMet { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
