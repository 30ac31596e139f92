use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("generator list is empty")]
    EmptyAlphabet,
    #[error("generator `{0}` declared twice")]
    DuplicateGenerator(String),
    #[error("invalid generator name `{0}`")]
    InvalidGenerator(String),
    #[error("central variable `{0}` collides with a generator; choose another name with `--central`")]
    CentralNameCollision(String),
    #[error("{0}: zero polynomial")]
    ZeroPolynomial(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large")]
    ModulusTooLarge(u64),

    #[error("degree {degree} exceeds the completion bound {complete_to}")]
    BeyondCompletion { degree: usize, complete_to: usize },
    #[error("cofactor traces were not recorded for this rewrite system")]
    TracesAbsent,

    #[error("ambient dimensions differ ({0} vs {1})")]
    AmbientMismatch(usize, usize),

    #[error("relation {index} is not homogeneous")]
    InhomogeneousRelation { index: usize },
    #[error("relation {index} has degree {degree}; relations must have degree at least 2 (linear relations are excluded)")]
    LinearRelation { index: usize, degree: usize },
    #[error("relation set is not minimal: relation {index} lies in the ideal of the others; a minimal subset is {suggestion:?}")]
    NonMinimalRelations { index: usize, suggestion: Vec<usize> },
    #[error("truncation degree {have} is insufficient; degree {need} is required")]
    WindowTooSmall { need: usize, have: usize },

    #[error("deformation relation {index} has top component not matching a base relation")]
    TopMismatch { index: usize },
    #[error("entry {row},{col} of M_nM_(n-1) is not divisible by z after lifting")]
    NotDivisibleByZ { row: usize, col: usize },
    #[error("entry {row},{col} of M_nM_(n-1) does not lie in the relation ideal")]
    NotInRelationIdeal { row: usize, col: usize },

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
