use thiserror::Error;

/// Errors surfaced by fallible operations.
///
/// Exit-code mapping in the CLI: `Usage`/`Parse`/`Unsupported` are usage
/// errors (exit 2); violated invariants are reported through check reports,
/// not through this type.
#[derive(Debug, Error)]
pub enum Error {
    /// Operands disagree on dimension or index set.
    #[error("operand mismatch: {0}")]
    Mismatch(String),

    /// Malformed textual input.
    #[error("parse error at line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },

    /// Evaluation at a point where a denominator vanishes.
    #[error("evaluation at a singular point: {0}")]
    SingularPoint(String),

    /// A caller violated a stated precondition.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// The requested (D, n) class is outside the analytic engine's domain.
    #[error("unsupported domain: {0}")]
    Unsupported(String),

    /// The Euler operator is not invertible on the named component.
    #[error("resonance: homogeneity {homogeneity} in form degree {form_degree} has m + h = 0 ({detail})")]
    Resonance {
        form_degree: usize,
        homogeneity: i64,
        detail: String,
    },

    /// A slice dimension exceeded the configured resource cap.
    #[error("resource cap exceeded: slice dimension {dim} > cap {cap}")]
    ResourceCap { dim: usize, cap: usize },

    /// An internal consistency probe failed (e.g. an evaluator that does not
    /// vanish below its stated threshold).
    #[error("consistency check failed: {0}")]
    Consistency(String),
}

impl Error {
    pub fn mismatch(msg: impl Into<String>) -> Self {
        Error::Mismatch(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
