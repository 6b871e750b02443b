//! Error taxonomy mapped onto the stable exit-code contract:
//! 0 success, 1 input error, 2 unsupported construction, 3 verification
//! failure.

use std::fmt;
use std::path::PathBuf;

use recgf::algebra::ExpandError;
use recgf::genfun::GenfunError;
use recgf::problem::{DataIssue, EquationIssue};
use recgf::solver::SolveError;

#[derive(Debug)]
pub enum CliError {
    Io {
        path: PathBuf,
        message: String,
    },
    Json {
        path: PathBuf,
        line: usize,
        column: usize,
        message: String,
    },
    BadRational {
        location: String,
        message: String,
    },
    BadInput(String),
    Equation(Vec<EquationIssue>),
    Data(Vec<DataIssue>),
    Solve(SolveError),
    /// Constructions the engine cannot represent: exit code 2.
    Unsupported(String),
    /// One or more verification checks failed: exit code 3.
    VerificationFailed,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Unsupported(_) => 2,
            CliError::VerificationFailed => 3,
            _ => 1,
        }
    }

    pub fn from_genfun(e: GenfunError) -> Self {
        match e {
            GenfunError::UnsupportedFaceData { .. } => {
                CliError::Unsupported(format!("{}: {}", e.code(), e))
            }
            GenfunError::Tau0NotInX0 { .. } => {
                CliError::BadInput(format!("{}: {}", e.code(), e))
            }
        }
    }

    pub fn from_expand(e: ExpandError) -> Self {
        CliError::Unsupported(format!("{}: {}", e.code(), e))
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        CliError::Solve(e)
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io { path, message } => {
                write!(f, "{}: {message}", path.display())
            }
            CliError::Json {
                path,
                line,
                column,
                message,
            } => write!(f, "{}:{line}:{column}: {message}", path.display()),
            CliError::BadRational { location, message } => {
                write!(f, "{location}: {message}")
            }
            CliError::BadInput(msg) => write!(f, "{msg}"),
            CliError::Equation(issues) => {
                for (i, issue) in issues.iter().enumerate() {
                    if i > 0 {
                        writeln!(f)?;
                    }
                    write!(f, "{}: {}", issue.code(), issue)?;
                }
                Ok(())
            }
            CliError::Data(issues) => {
                for (i, issue) in issues.iter().enumerate() {
                    if i > 0 {
                        writeln!(f)?;
                    }
                    write!(f, "{}: {}", issue.code(), issue)?;
                }
                Ok(())
            }
            CliError::Solve(e) => write!(f, "{}: {}", e.code(), e),
            CliError::Unsupported(msg) => write!(f, "{msg}"),
            CliError::VerificationFailed => write!(f, "verification failed"),
        }
    }
}

impl std::error::Error for CliError {}
