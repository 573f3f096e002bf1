use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while computing {0}")]
    Overflow(&'static str),

    #[error("division by zero in k-arithmetic quotient")]
    ZeroDivisor,

    #[error("n = {n} exceeds the {what} bound of {bound}")]
    BoundExceeded {
        what: &'static str,
        n: u64,
        bound: u64,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn check_bound(what: &'static str, n: u64, bound: u64) -> Result<()> {
        if n > bound {
            Err(Error::BoundExceeded { what, n, bound })
        } else {
            Ok(())
        }
    }
}
