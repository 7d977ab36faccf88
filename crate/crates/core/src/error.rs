use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}")]
    InvalidType { family: char, rank: usize },

    #[error("parameter function: {0}")]
    Parameter(String),

    #[error("not a root of the datum: {0}")]
    NotARoot(String),

    #[error("group order {order} exceeds the enumeration cap {cap}")]
    CapExceeded { order: u128, cap: usize },

    #[error("objects live on different groups ({0} vs {1})")]
    GroupMismatch(String, String),

    #[error("subset {0:?} is not stable under the diagram involution")]
    NotThetaStable(Vec<usize>),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("module fails the algebra relations: {0}")]
    Relations(String),

    #[error("no one-dimensional module with these signs: {0}")]
    SignsNotOrbitConstant(String),

    #[error("weights are not rational: {0}")]
    IrrationalWeights(String),

    #[error("induction data: {0}")]
    Induction(String),

    #[error("no theta structure: {0}")]
    NoThetaStructure(String),

    #[error("theta structure is not unique (intertwiner space has dimension {0}); supply one explicitly")]
    AmbiguousThetaStructure(usize),

    #[error("solver cap exceeded: {0}")]
    SolverCap(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
