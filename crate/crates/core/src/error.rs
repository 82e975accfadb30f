use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not simple")]
    NotSimple,
    #[error("unbounded")]
    Unbounded,
    #[error("normal not primitive")]
    NormalNotPrimitive,
    #[error("empty or not full-dimensional")]
    Degenerate,
    #[error("facet {0} is redundant")]
    RedundantFacet(usize),
    #[error("infinite quotient")]
    InfiniteQuotient,
    #[error("weights must be positive")]
    NonPositiveWeight,
    #[error("subtorus K is disconnected")]
    DisconnectedK,
    #[error("integral computation supported only for circle quotients")]
    IntegralUnsupported,
    #[error("unsupported root system {0}")]
    UnsupportedRootSystem(String),
    #[error("{0} is not an element of the stabilizer group")]
    NotInGamma(String),
}

pub type Result<T> = std::result::Result<T, Error>;
