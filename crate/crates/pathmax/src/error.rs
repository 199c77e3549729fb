use thiserror::Error;

/// Crate-wide error type. Input validation is strict: malformed or
/// out-of-contract data is rejected, never repaired.
#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("vertex {0} out of range 1..={1}")]
    VertexOutOfRange(usize, usize),

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("graph order {0} outside supported range 1..=62")]
    OrderOutOfRange(usize),

    #[error("graph is not connected")]
    Disconnected,

    #[error("matrix order {0} does not match graph order {1}")]
    OrderMismatch(usize, usize),

    #[error("matrix is not symmetric at ({0},{1})")]
    Asymmetric(usize, usize),

    #[error("negative weight at ({0},{1})")]
    NegativeWeight(usize, usize),

    #[error("weight magnitude at ({0},{1}) exceeds {max}", max = crate::MAX_WEIGHT)]
    WeightTooLarge(usize, usize),

    #[error("malformed graph6: {0}")]
    Graph6(String),

    #[error("malformed edge list: {0}")]
    EdgeList(String),

    #[error("malformed weight matrix: {0}")]
    WeightsFormat(String),

    #[error("{0} supports orders {1}..={2}, got {3}")]
    RangeUnsupported(&'static str, usize, usize, usize),

    #[error("eigensolver did not converge within the iteration cap")]
    NonConvergence,

    #[error("invalid certificate: {0}")]
    Certificate(String),

    #[error("invalid configuration: {0}")]
    Config(String),
}
