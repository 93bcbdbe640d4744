use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("resource guard: {what} needs {requested} entries (cap {cap})")]
    ResourceGuard { what: String, requested: u128, cap: u128 },
    #[error("enumeration guard: {requested} candidates (cap {cap})")]
    EnumerationGuard { requested: u128, cap: u128 },
    #[error("composition is not zero")]
    CompositionNotZero,
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(String),
    #[error("not well defined: {0}")]
    NotWellDefined(String),
    #[error("not invertible: {0}")]
    NotInvertible(String),
    #[error("cochain is not a cocycle")]
    NotACocycle,
    #[error("coefficient group is infinite")]
    InfiniteBase,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for the two guard variants.
    pub fn is_guard(&self) -> bool {
        matches!(self, Error::ResourceGuard { .. } | Error::EnumerationGuard { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
