use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("edge ({u}, {v}) out of range for {n} vertices")]
    EdgeOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop ({v}, {v}) is not allowed")]
    SelfLoop { v: usize },
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph has no edges")]
    EdgelessGraph,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("invalid burning sequence: {0}")]
    InvalidSequence(String),
    #[error("graph is not {k}-path-free: found an induced path on {found} vertices")]
    NotPathFree { k: usize, found: usize },
    #[error("brute-force guard: n = {n} exceeds the limit {max}")]
    BruteForceGuard { n: usize, max: usize },
    #[error("interval model has {got} intervals for {want} vertices")]
    ModelSizeMismatch { got: usize, want: usize },
    #[error("malformed 3-partition instance: {0}")]
    MalformedInstance(#[from] InstanceViolation),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// The specific instance rule a malformed 3-partition input breaks.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceViolation {
    #[error("element count {0} is not a positive multiple of 3")]
    NotTripleSized(usize),
    #[error("element {0} is not positive")]
    NonPositive(u64),
    #[error("duplicate element {0}")]
    Duplicate(u64),
    #[error("total {total} is not divisible by the triple count {n}")]
    SumNotDivisible { total: u64, n: u64 },
    #[error("element {a} must be strictly greater than {b}/4")]
    TooSmall { a: u64, b: u64 },
    #[error("element {a} must be strictly less than {b}/2")]
    TooLarge { a: u64, b: u64 },
    #[error("largest element {m} is below 3n = {three_n}; the spine layout needs m >= 3n filler slots")]
    NotEnoughHeadroom { m: u64, three_n: u64 },
}
