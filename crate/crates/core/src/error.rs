use crate::rational::Rational;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{what} = {value} is outside [0,1]")]
    OutOfRange { what: &'static str, value: Rational },

    #[error("undefined: {0}")]
    Undefined(String),

    #[error("not applicable: {0}")]
    NotApplicable(String),

    #[error("invalid t-norm: {0}")]
    InvalidTNorm(String),

    #[error("shape error: {0}")]
    Shape(String),

    #[error("unknown element `{0}`")]
    UnknownElement(String),

    #[error("invalid quantale: {0}")]
    InvalidQuantale(String),

    #[error("invalid Q-category: {0}")]
    InvalidCategory(String),

    #[error("not a Q-functor: {0}")]
    InvalidFunctor(String),

    #[error("not a distributor: {0}")]
    InvalidDistributor(String),

    #[error("closure exceeded {cap} elements")]
    ClosureOverflow { cap: usize },

    #[error("enumeration of {what} needs {needed} candidates, cap is {cap}")]
    CapExceeded {
        what: String,
        needed: String,
        cap: usize,
    },

    #[error("mismatched categories: {0}")]
    Mismatch(String),

    #[error("no tensor {p} ⊗ {x}")]
    NotTensored { p: String, x: String },

    #[error("no cotensor {p} ⊸ {x}")]
    NotCotensored { p: String, x: String },

    #[error("weight {0} has no supremum")]
    NoSup(String),

    #[error("coweight {0} has no infimum")]
    NoInf(String),

    #[error("the Q-category is not separated")]
    NotSeparated,

    #[error("the quantale is not integral (unit is not the top element)")]
    NotIntegral,

    #[error("the Q-category is not complete")]
    NotComplete,

    #[error("not directed: {0}")]
    NotDirected(String),

    #[error("{check}: criteria arm says {criteria}, brute-force arm says {brute_force}")]
    Disagreement {
        check: String,
        criteria: bool,
        brute_force: bool,
    },
}

impl Error {
    /// A stable snake_case name for the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::OutOfRange { .. } => "out_of_range",
            Error::Undefined(_) => "undefined",
            Error::NotApplicable(_) => "not_applicable",
            Error::InvalidTNorm(_) => "invalid_tnorm",
            Error::Shape(_) => "shape",
            Error::UnknownElement(_) => "unknown_element",
            Error::InvalidQuantale(_) => "invalid_quantale",
            Error::InvalidCategory(_) => "invalid_category",
            Error::InvalidFunctor(_) => "invalid_functor",
            Error::InvalidDistributor(_) => "invalid_distributor",
            Error::ClosureOverflow { .. } => "closure_overflow",
            Error::CapExceeded { .. } => "cap_exceeded",
            Error::Mismatch(_) => "mismatch",
            Error::NotTensored { .. } => "not_tensored",
            Error::NotCotensored { .. } => "not_cotensored",
            Error::NoSup(_) => "no_sup",
            Error::NoInf(_) => "no_inf",
            Error::NotSeparated => "not_separated",
            Error::NotIntegral => "not_integral",
            Error::NotComplete => "not_complete",
            Error::NotDirected(_) => "not_directed",
            Error::Disagreement { .. } => "disagreement",
        }
    }
}
