use thiserror::Error;

use crate::kernel::KernelError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("ring mismatch")]
    RingMismatch,
    #[error("ideal is not zero-dimensional")]
    NotZeroDimensional,
    #[error("not m-primary at origin")]
    NotOriginPrimary,
    #[error("not a parameter ideal: {0}")]
    NotParameterIdeal(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("Groebner computation exceeded the {0:?} watchdog")]
    Timeout(std::time::Duration),
    #[error("not certified as reduction up to bound {0}")]
    NotCertified(usize),
    #[error("polynomial regime not reached after {attempts} windows; last residuals {residuals:?}")]
    FitUnstable { attempts: usize, residuals: Vec<String> },
    #[error("fiber Hilbert sequence not stabilized at N = {0}; retry with a larger N")]
    FiberNotStabilized(usize),
    #[error("inconsistent depth facts: {0}")]
    InconsistentFacts(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

pub type Result<T> = std::result::Result<T, Error>;
