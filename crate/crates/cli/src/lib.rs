//! Command-line front end, Table 1 style reports and verification suites for
//! [`braidet_core`].
//!
//! Exit codes used by the `braidet` binary:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, all checks passed |
//! | 1 | a verification check failed |
//! | 2 | malformed input |
//! | 3 | two determinant routes disagreed (an implementation bug) |

pub mod pool;
pub mod record;
pub mod table;
pub mod verify;

use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("{0}")]
    Input(String),
    #[error("route disagreement for {input}: {detail}")]
    Disagreement { input: String, detail: String },
    #[error("{failed} verification check(s) failed")]
    Verification { failed: usize },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn exit_code(&self) -> u8 {
        match self {
            Error::Verification { .. } => 1,
            Error::Input(_) | Error::Io(_) => 2,
            Error::Disagreement { .. } => 3,
        }
    }
}

impl From<&Error> for ExitCode {
    fn from(e: &Error) -> Self {
        ExitCode::from(e.exit_code())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
