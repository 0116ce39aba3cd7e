use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex pair {{{0}, {1}}} is connected more than once")]
    DuplicatePair(usize, usize),
    #[error("anti-parallel arcs {0} -> {1} and {1} -> {0}; declare a digon instead")]
    AntiParallelArcs(usize, usize),
    #[error("invalid edge probabilities p_digon = {p_digon}, p_arc = {p_arc}")]
    InvalidProbability { p_digon: f64, p_arc: f64 },
    #[error("walk must contain at least one vertex")]
    EmptyWalk,
    #[error("vertices {0} and {1} are not adjacent, so the sequence is not a walk")]
    NotAWalk(usize, usize),
    #[error("gauge has {got} entries but the graph has {expected} vertices")]
    GaugeLength { expected: usize, got: usize },
    #[error("matrix is not Hermitian (largest deviation {0:e})")]
    NotHermitian(f64),
    #[error("expected {expected} entries, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("tolerance must be positive and finite, got {0}")]
    InvalidTolerance(f64),
    #[error("Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    NoConvergence { sweeps: usize, off_norm: f64 },
    #[error("vector norm is {0}, expected a unit vector")]
    NotUnitVector(f64),
}
