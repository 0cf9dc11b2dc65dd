use alloc::string::String;

/// Failure modes shared by every module of the crate.
///
/// Most variants signal a violated precondition. `NonIntegral`,
/// `Precision` and `Inconsistent` are runtime checks of identities that
/// must hold exactly; hitting one of them means a bug, not bad input.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("bound `{name}` exceeded: requested {requested}, limit {limit}")]
    BoundExceeded {
        name: &'static str,
        limit: usize,
        requested: usize,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("non-integral value {value} in {context}")]
    NonIntegral { context: String, value: String },
    #[error("floating evaluation of {context} is {deviation:e} away from an integer")]
    Precision { context: String, deviation: f64 },
    #[error(
        "class {class} splits in D_n (all cycles even and positive); psi_D is undefined there"
    )]
    SplitClass { class: String },
    #[error("consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = core::result::Result<T, Error>;
