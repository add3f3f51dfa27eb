use thiserror::Error;

/// Errors raised by clutter construction, the invariant formulas and the oracles.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count must be positive")]
    ZeroVertices,

    #[error("uniformity d must be positive")]
    ZeroUniformity,

    #[error("vertex count {n} exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("vertex {vertex} is outside 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("duplicate vertex {vertex} in a vertex set")]
    DuplicateVertex { vertex: usize },

    #[error("circuit {circuit} has {found} vertices, expected {expected}")]
    WrongCardinality {
        circuit: String,
        expected: usize,
        found: usize,
    },

    #[error("a clutter with n = {n} < d = {d} cannot have circuits")]
    CircuitsBelowUniformity { n: usize, d: usize },

    #[error("operation requires n >= d, got n = {n}, d = {d}")]
    VerticesBelowUniformity { n: usize, d: usize },

    #[error("operation requires n > d > 0, got n = {n}, d = {d}")]
    InvalidParameters { n: usize, d: usize },

    #[error("index {i} is outside 1..={max}")]
    IndexOutOfRange { i: usize, max: usize },

    #[error("{what}: input size {size} exceeds the configured bound {bound}")]
    BoundExceeded {
        what: &'static str,
        size: usize,
        bound: usize,
    },

    #[error("coefficient {coefficient} of t^{degree} breaks the linear-resolution sign pattern")]
    SignPattern { degree: usize, coefficient: String },

    #[error("multiset value {value} exceeds n - d + 1 = {max}")]
    MultisetOutOfRange { value: usize, max: usize },

    #[error("the circuit ideal is zero (the clutter is complete)")]
    ZeroIdeal,

    #[error("l-sequence must have length {expected}, got {found}")]
    LSequenceLength { expected: usize, found: usize },

    #[error("l-sequence must start with l_0 = 1")]
    LSequenceStart,

    #[error("lambda_{index} = {value} is negative")]
    NegativeLambda { index: usize, value: String },

    #[error("lambda_{index} must vanish for a non-complete clutter")]
    LambdaTooLong { index: usize },

    #[error("m_{index} = {value} is negative, the lambda-sequence is not realizable")]
    NegativeGeneratorCount { index: usize, value: String },

    #[error("ideal is not generated in a single degree")]
    NotEquigenerated,

    #[error("ideal is not squarefree strongly stable")]
    NotStronglyStable,

    #[error("step {step} of the simplicial order is invalid: {reason}")]
    InvalidOrder { step: usize, reason: String },

    #[error("no strongly stable witness found for l-sequence {0}")]
    WitnessFailed(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
