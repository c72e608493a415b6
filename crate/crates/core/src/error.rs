use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("space mismatch: expected `{expected}`, found `{found}`")]
    SpaceMismatch { expected: String, found: String },

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("degree mismatch: {0}")]
    Degree(String),

    #[error("unsupported degree {0}: composition is implemented for total degree at most 4")]
    UnsupportedDegree(usize),

    #[error("cochain is not in the restricted subcomplex: {0}")]
    NotRestricted(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },

    #[error("undeclared name `{0}`")]
    Undeclared(String),

    #[error("unbound parameter `{0}`")]
    UnboundParameter(String),

    #[error("constraint violated: guard `{guard}` is zero")]
    Constraint { guard: String },

    #[error("unknown task `{0}`")]
    UnknownTask(String),

    #[error("{0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
