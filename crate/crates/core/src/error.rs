use crate::scalar::ScalarError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("generator index {index} out of range for rank {rank}")]
    InvalidGenerator { index: usize, rank: usize },
    #[error("domain {0} does not belong to this family")]
    InvalidDomain(String),
    #[error("groupoid has more than {0} elements")]
    SizeCapExceeded(usize),
    #[error("word is not defined at its base domain: {0}")]
    InvalidWord(String),
    #[error("q = {0} is not a semisimple parameter")]
    NotSemisimple(String),
    #[error("irreducible decomposition did not finish within its attempt budget")]
    SplitBudgetExhausted,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}
