use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("argument {value} exceeds the supported bound 2^50")]
    OutOfRange { value: u64 },
    #[error("range of {cells} cells exceeds the sieve budget of {budget}")]
    ResourceLimit { cells: u64, budget: u64 },
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

pub(crate) fn check_bound(value: u64) -> Result<()> {
    if value > crate::MAX_ARG {
        Err(Error::OutOfRange { value })
    } else {
        Ok(())
    }
}
