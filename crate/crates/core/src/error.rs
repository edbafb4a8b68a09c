use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("gamma function argument {two_z}/2 is outside the supported domain")]
    GammaDomain { two_z: i64 },

    #[error("index {j} exceeds {n}")]
    IndexOutOfRange { n: u32, j: u32 },

    #[error("cannot combine scalars carrying pi^({left}/2) and pi^({right}/2)")]
    Incommensurable { left: i32, right: i32 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("recurrence and closed form disagree at coefficient {index}")]
    InternalConsistency { index: usize },

    #[error("invalid transform series: {0}")]
    InvalidSeries(String),

    #[error("transform must be evaluated at s > 0, got {0}")]
    NonPositiveArgument(f64),

    #[error("series term {index} has non-positive exponent and cannot be inverted")]
    NotInvertible { index: usize },

    #[error("parity mismatch between polynomial and quantum numbers")]
    ParityMismatch,

    #[error("polynomial is not proportional to H_{degree}: first mismatch at half-power {half_power}")]
    NoHermiteMatch { degree: u32, half_power: u32 },

    #[error("invalid units: {0}")]
    InvalidUnits(String),

    #[error("invalid grid: {0}")]
    InvalidGrid(String),

    #[error("invalid operator: {0}")]
    InvalidOperator(String),

    #[error("quadrature did not converge on [{a}, {b}]")]
    QuadratureNonConvergence { a: f64, b: f64 },

    #[error("bisection for eigenvalue {index} did not converge")]
    EigenNonConvergence { index: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures of an iterative numeric method, as opposed to bad input.
    pub fn is_non_convergence(&self) -> bool {
        matches!(self, Error::QuadratureNonConvergence { .. } | Error::EigenNonConvergence { .. })
    }
}
