use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    NotAssociative(usize, usize, usize),
    #[error("table has no two-sided identity")]
    NoIdentity,
    #[error("declared identity {declared} is not an identity (detected: {detected:?})")]
    WrongIdentity {
        declared: usize,
        detected: Option<usize>,
    },
    #[error("malformed table: {0}")]
    MalformedTable(String),
    #[error("could not parse monoid document: {0}")]
    Parse(String),
    #[error("{what} exceeds the configured bound ({value} > {bound})")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("unknown monoid family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for `{family}`: {reason}")]
    BadParams { family: String, reason: String },
    #[error("generated submonoid has no closed form in the catalog")]
    NotInCatalog,
    #[error("subset is not closed under the product")]
    NotClosed,
    #[error("operation not supported for this backend: {0}")]
    BackendUnsupported(String),
    #[error("unknown functor `{0}`")]
    UnknownFunctor(String),
    #[error("unknown output format `{0}`")]
    UnknownFormat(String),
    #[error("lattice is not closed under join: {0} v {1} is not a node")]
    JoinClosureViolation(String, String),
    #[error("composition {0} o {1} matches several functors: {2}")]
    Ambiguous(String, String, String),
    #[error("composition {0} o {1} matches no functor")]
    NoMatch(String, String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
