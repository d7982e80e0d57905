use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("subspace dimension {sub} exceeds ambient dimension {ambient}")]
    SubspaceTooLarge { sub: usize, ambient: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("representations live on different quivers or fields")]
    QuiverMismatch,

    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("not simply-laced Dynkin: {0}")]
    NotDynkin(String),

    #[error("unknown quiver name {0:?}")]
    UnknownQuiver(String),

    #[error("total dimension {total} exceeds the configured bound {bound}")]
    BoundExceeded { total: usize, bound: usize },

    #[error("brute-force enumeration infeasible: {0}")]
    Infeasible(String),

    #[error("unknown class id {0:?}")]
    UnknownClass(String),

    #[error("vectors belong to different Hall algebra instances")]
    InstanceMismatch,

    #[error("cache rejected: {0}")]
    CacheMismatch(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
