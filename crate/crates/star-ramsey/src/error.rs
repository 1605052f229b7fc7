use thiserror::Error;

use crate::graph::MAX_VERTICES;

/// Errors shared by every module of the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("star sizes must each be at least 2, got {0}")]
    StarSizeTooSmall(usize),

    #[error("need at least two star sizes, got {0}")]
    TooFewStars(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("graphs are limited to {MAX_VERTICES} vertices, requested {0}")]
    TooManyVertices(usize),

    #[error("loop edge ({0},{0}) is not allowed")]
    LoopEdge(usize),

    #[error("graphs have different vertex counts: {0} vs {1}")]
    OrderMismatch(usize, usize),

    #[error("color {color} out of range 1..={t}")]
    ColorOutOfRange { color: usize, t: usize },

    #[error("coloring has t={got} colors, parameters have t={want}")]
    ColorCountMismatch { got: usize, want: usize },

    #[error("assignment covers {got} edges, host has {want}")]
    AssignmentLength { got: usize, want: usize },

    #[error("parts are not edge-disjoint: edge ({0},{1}) appears twice")]
    OverlappingParts(usize, usize),

    #[error("part edge ({0},{1}) does not belong to the host")]
    PartOutsideHost(usize, usize),

    #[error("expected an even vertex count, got {0}")]
    OddOrder(usize),

    #[error("expected an odd vertex count, got {0}")]
    EvenOrder(usize),

    #[error("degree {r} out of range 0..={max} for {n} vertices")]
    DegreeOutOfRange { r: usize, max: usize, n: usize },

    #[error("no {r}-regular graph on {n} vertices exists: odd order forces even degrees")]
    ParityInfeasible { n: usize, r: usize },

    #[error("star size s={s} out of range 1..={max} for n={n}")]
    StarSizeOutOfRange { s: usize, max: usize, n: usize },

    #[error("input is not a spanning path: {0}")]
    NotAPath(String),

    #[error("vertex {0} is not an endpoint of the path")]
    NotAnEndpoint(usize),

    #[error("host order n={n} is below the Ramsey number {r} for these parameters")]
    BelowRamsey { n: usize, r: usize },

    #[error("even star count k={0} with k >= 2 is required for this construction")]
    EvenBranchRequired(usize),

    #[error("construction branch degenerates for these parameters: {0}")]
    DegenerateBranch(String),

    #[error("could not place the construction's special edges: {0}")]
    ConstructionInfeasible(String),

    #[error("internal audit rejected a freshly built witness: {0}")]
    AuditFailed(String),

    #[error("threshold chain violated: {0}")]
    ChainViolation(String),

    #[error("search budget exhausted after {nodes} nodes")]
    BudgetExhausted { nodes: u64 },

    #[error("no arrowing host found up to n_max={0}")]
    NotFound(usize),

    #[error("refusing exhaustive enumeration on {n} vertices (limit {limit})")]
    RefusedScale { n: usize, limit: usize },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("certificate is not valid JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
