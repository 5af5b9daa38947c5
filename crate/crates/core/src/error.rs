use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors raised across the crate.
///
/// Each variant maps onto one of the CLI exit codes through
/// [`Error::exit_code`]: malformed input is `2`, an exceeded resource guard is
/// `3`.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    MalformedRational(String),
    #[error("malformed document: {0}")]
    MalformedDocument(String),
    #[error("arrangement has no hyperplanes")]
    EmptyArrangement,
    #[error("ambient dimension must be positive")]
    ZeroDimension,
    #[error("hyperplane {label:?} has a zero normal vector")]
    ZeroNormal { label: String },
    #[error("hyperplanes {first:?} and {second:?} have proportional normals")]
    ProportionalNormals { first: String, second: String },
    #[error("hyperplane {label:?} has a normal of length {found}, expected {expected}")]
    DimensionMismatch { label: String, expected: usize, found: usize },
    #[error("duplicate hyperplane label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown arrangement {0:?}")]
    UnknownArrangement(String),
    #[error("could not generate {spec:?} after {attempts} attempts")]
    GenerationFailed { spec: String, attempts: usize },
    #[error("unknown hyperplane label {0:?}")]
    UnknownLabel(String),
    #[error("index {index} out of range for ground set of size {len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("subset indices must be strictly increasing")]
    NotIncreasing,
    #[error("index {0} repeated")]
    RepeatedIndex(usize),
    #[error("ordered set is dependent")]
    Dependent,
    #[error("{what}: {found} exceeds the limit {limit}")]
    TooLarge { what: &'static str, limit: usize, found: usize },
    #[error("search budget of {0} evaluations exhausted")]
    BudgetExhausted(u64),
    #[error("operands belong to different algebras (parity or arrangement differ)")]
    AlgebraMismatch,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("points {first} and {second} coincide")]
    Collision { first: usize, second: usize },
    #[error("invalid configuration: {0}")]
    InvalidConfiguration(String),
    #[error("state lies on a puncture")]
    OnPuncture,
    #[error("no projection direction separates the configurations")]
    AngleSearchFailed,
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::TooLarge { .. } | Error::BudgetExhausted(_) => 3,
            _ => 2,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
