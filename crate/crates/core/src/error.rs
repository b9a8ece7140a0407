use thiserror::Error;

/// Errors raised across the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("malformed token `{0}`")]
    MalformedToken(String),
    #[error("invalid generator name `{0}`")]
    InvalidGeneratorName(String),
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("generator `{0}` already present")]
    NameClash(String),
    #[error("alphabet mismatch: {0} generators vs {1}")]
    AlphabetMismatch(usize, usize),
    #[error("generator {0} is not a partial injection of the given degree")]
    NotInjective(usize),
    #[error("element `{0}` is not idempotent")]
    NotIdempotent(String),
    #[error("invalid inverse monoid: {0}")]
    InvalidMonoid(String),
    #[error("word does not label a closed path at the base vertex")]
    NotAClosedPath,
    #[error("enumeration did not finish within the budget")]
    NotFinishedWithinBudget,
    #[error("inconsistent equality: word `{word}` equals elements {first} and {second}")]
    InconsistentEquality {
        word: String,
        first: usize,
        second: usize,
    },
    #[error("elements belong to different backends")]
    BackendMismatch,
    #[error("crossed-module anchors do not match: {0} vs {1}")]
    AnchorMismatch(usize, usize),
    #[error("paths are not composable")]
    NotComposable,
    #[error("path does not lie in the kernel component of the requested idempotent")]
    NotInKernelComponent,
    #[error("no word lifts element {0}")]
    LiftFailure(usize),
    #[error("crossed generator violates its side condition: {0}")]
    SideCondition(String),
    #[error("budget must be positive")]
    InvalidBudget,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
