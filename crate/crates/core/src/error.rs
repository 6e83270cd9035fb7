use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("zero vector has no primitivity")]
    ZeroVector,

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("kernel vectors do not extend to a lattice basis")]
    NotSaturated,

    #[error("not a full-dimensional polytope with the origin in its interior: {0}")]
    NotFanoShape(String),

    #[error("polytope `{name}` failed smooth Fano validation: {failures}")]
    InvalidPolytope { name: String, failures: String },

    #[error("index {index} out of range for {len} vertices")]
    BadIndex { index: usize, len: usize },

    #[error("fan has {0} rays; at most 64 are supported")]
    TooManyRays(usize),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("no maximal cone contains the point {0}")]
    FanNotComplete(String),

    #[error("index set {0:?} is not a cone of the fan")]
    NotACone(Vec<usize>),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),

    #[error("coefficient vector is not a relation among the ray generators")]
    NotACurveClass,

    #[error("relation of degree {0} is not certified extremal")]
    NotCertifiedExtremal(i64),

    #[error("lift of quotient collection {collection:?} does not form a cone with {center:?}")]
    LiftFailure {
        center: Vec<usize>,
        collection: Vec<usize>,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: expected {expected} coordinates, found {found}")]
    Shape {
        line: usize,
        expected: usize,
        found: usize,
    },

    #[error("bad family spec `{spec}`: {message}")]
    Spec { spec: String, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
