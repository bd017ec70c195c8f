//! Spec-file ingestion, analysis reports and the example-family harness
//! behind the `blowup` binary.

pub mod analyze;
pub mod examples;
pub mod report;
pub mod specfile;

pub use analyze::{analyze, cmd_analyze};
pub use examples::{cmd_paper_examples, Family, MemberResult};
pub use report::{from_json, render_text, to_json, AnalysisReport};
pub use specfile::{parse_spec, IdealSpecFile, Mode, Options, Overrides};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Core(#[from] blowup_core::Error),
    #[error("{0} member(s) disagree with the closed forms")]
    Mismatch(usize),
}

impl CliError {
    /// 1 input errors, 2 failed preconditions, 3 exhausted bounds,
    /// 4 closed-form mismatches in the example harness.
    pub fn exit_code(&self) -> i32 {
        use blowup_core::Error as E;
        match self {
            CliError::Io(_) | CliError::Parse { .. } | CliError::Usage(_) => 1,
            CliError::Mismatch(_) => 4,
            CliError::Core(e) => match e {
                E::Syntax { .. } | E::UnknownVariable { .. } | E::InvalidRing(_) | E::ExponentOverflow | E::Kernel(_) => 1,
                E::NotOriginPrimary | E::NotParameterIdeal(_) | E::Precondition(_) | E::NotZeroDimensional | E::RingMismatch => 2,
                E::Timeout(_) | E::NotCertified(_) | E::FitUnstable { .. } | E::FiberNotStabilized(_) | E::InconsistentFacts(_) => 3,
            },
        }
    }
}
