use std::process::ExitCode;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("verification failed: {0}")]
    VerificationFailed(String),
    #[error("numeric method did not converge: {0}")]
    NonConvergence(String),
    #[error("{0}")]
    Computation(laplace_qho::Error),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl From<laplace_qho::Error> for CliError {
    fn from(e: laplace_qho::Error) -> Self {
        if e.is_non_convergence() {
            CliError::NonConvergence(e.to_string())
        } else {
            CliError::Computation(e)
        }
    }
}

impl CliError {
    /// 0 success, 1 verification failure, 2 usage error, 3 non-convergence.
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::VerificationFailed(_) | CliError::Computation(_) | CliError::Io(_) => 1,
            CliError::Usage(_) => 2,
            CliError::NonConvergence(_) => 3,
        })
    }
}
