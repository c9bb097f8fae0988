use thiserror::Error;

/// Errors raised by the library. Every fallible operation returns one of these.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported Artin type: {0}")]
    UnsupportedType(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("operands come from different groups")]
    MixedContext,
    #[error("element is not positive")]
    NotPositive,
    #[error("generator subset is empty")]
    EmptySubset,
    #[error("generator subset is disconnected")]
    Disconnected,
    #[error("search budget of {budget} exhausted")]
    SearchBudgetExceeded { budget: usize },
    #[error("parabolic subgroup is not irreducible")]
    NotIrreducible,
    #[error("parabolic subgroup is not proper")]
    NotProper,
    #[error("vertices do not span a simplex")]
    NotASimplex,
    #[error("parabolic subgroup is not standard")]
    NotStandard,
    #[error("simplex is not maximal")]
    NotMaximal,
    #[error("families are not conjugate")]
    NotConjugate,
    #[error("element does not standardize the simplex")]
    NotAStandardizer,
    #[error("exponent scan bound {bound} exceeded")]
    ExponentBoundExceeded { bound: i64 },
    #[error("element does not stabilize the simplex")]
    NotAStabilizer,
    #[error("subset is not of co-rank one")]
    NotCorankOne,
    #[error("ribbon does not return to its source subset")]
    NotAnXRibbonX,
    #[error("base does not span a maximal simplex")]
    BaseNotMaximal,
    #[error("transversality pattern broken at pair ({0}, {1})")]
    TransversalityPatternBroken(usize, usize),
    #[error("pair {0} is not simultaneously standardizable with the base")]
    NotSimultaneouslyStandardizable(usize),
    #[error("transversal scan exhausted at bound {bound}")]
    ScanExhausted { bound: i64 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("unknown format: {0}")]
    UnknownFormat(String),
}

impl Error {
    /// Short machine-readable tag, used by the CLI error JSON.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::UnsupportedType(_) => "UnsupportedType",
            Error::Parse { .. } => "ParseError",
            Error::MixedContext => "MixedContext",
            Error::NotPositive => "NotPositive",
            Error::EmptySubset => "EmptySubset",
            Error::Disconnected => "Disconnected",
            Error::SearchBudgetExceeded { .. } => "SearchBudgetExceeded",
            Error::NotIrreducible => "NotIrreducible",
            Error::NotProper => "NotProper",
            Error::NotASimplex => "NotASimplex",
            Error::NotStandard => "NotStandard",
            Error::NotMaximal => "NotMaximal",
            Error::NotConjugate => "NotConjugate",
            Error::NotAStandardizer => "NotAStandardizer",
            Error::ExponentBoundExceeded { .. } => "ExponentBoundExceeded",
            Error::NotAStabilizer => "NotAStabilizer",
            Error::NotCorankOne => "NotCorankOne",
            Error::NotAnXRibbonX => "NotAnXRibbonX",
            Error::BaseNotMaximal => "BaseNotMaximal",
            Error::TransversalityPatternBroken(..) => "TransversalityPatternBroken",
            Error::NotSimultaneouslyStandardizable(_) => "NotSimultaneouslyStandardizable",
            Error::ScanExhausted { .. } => "ScanExhausted",
            Error::PreconditionViolated(_) => "PreconditionViolated",
            Error::UnknownFormat(_) => "UnknownFormat",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
