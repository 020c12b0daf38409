use thiserror::Error;

use crate::graph::MAX_VERTICES;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} is outside the supported range 1..={MAX_VERTICES}")]
    InvalidOrder(usize),

    #[error("combined vertex count {0} exceeds the supported width of {MAX_VERTICES}")]
    WidthOverflow(usize),

    #[error("vertex {vertex} is out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("invalid pattern (p={p}, q={q}, t={t}): need 2 <= p <= q and t >= 1")]
    InvalidPattern { p: usize, q: usize, t: usize },

    #[error("n={n} is below the pattern order {order}")]
    OrderBelowPattern { n: usize, order: usize },

    #[error("n={n} is too small for the extremal construction (need n >= {min})")]
    ConstructionTooSmall { n: usize, min: usize },

    #[error("malformed {format} input at line {line}: {message}")]
    Parse {
        format: &'static str,
        line: usize,
        message: String,
    },

    #[error("graph6 short form supports at most 62 vertices, got {0}")]
    Graph6TooLarge(usize),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("vertex subset must be nonempty")]
    EmptySubset,

    #[error("graph is not saturated for the pattern")]
    NotSaturated,

    #[error("no packing of {count} disjoint K_{size} exists outside the neighbourhood of the minimum-degree vertex")]
    NoPacking { count: usize, size: usize },

    #[error("invalid packing: {0}")]
    InvalidPacking(String),

    #[error("vertex {0} lies in the closed neighbourhood of the minimum-degree vertex")]
    VertexInClosedNeighbourhood(usize),

    #[error("n={n} is not above the theorem bound {bound}")]
    BelowTheoremBound { n: usize, bound: usize },

    #[error("worker pool: {0}")]
    Workers(String),
}
