use thiserror::Error;

/// Errors raised by space construction, group actions and the cover constructions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown point `{0}`")]
    UnknownPoint(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("instance too large: {0}")]
    TooLarge(String),

    #[error("space mismatch: sets live on {left} and {right} points")]
    SpaceMismatch { left: usize, right: usize },

    #[error("radius {radius} is below the resolution floor {rho}")]
    BelowResolution { radius: String, rho: String },

    #[error("resolution too coarse: {0}")]
    Resolution(String),

    #[error("group element {element} is not an isometry: d({x},{y}) changes")]
    NotIsometric {
        element: usize,
        x: String,
        y: String,
    },

    #[error("group element {element} is not an order automorphism at ({x},{y})")]
    NotAutomorphism {
        element: usize,
        x: String,
        y: String,
    },

    #[error("quotient not T0: orbits of `{a}` and `{b}` are mutually below each other")]
    NotT0 { a: String, b: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unachievable at this resolution: no refinement of dimension <= {target} (best found: {best})")]
    Unachievable { target: usize, best: String },

    #[error("stage `{stage}`: {source}")]
    Stage {
        stage: &'static str,
        source: Box<Error>,
    },

    #[error("io: {0}")]
    Io(String),
}

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Input,
    Cap,
    Precondition,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::UnknownPoint(_)
            | Error::Invalid(_)
            | Error::Parse(_)
            | Error::SpaceMismatch { .. }
            | Error::BelowResolution { .. }
            | Error::NotIsometric { .. }
            | Error::NotAutomorphism { .. }
            | Error::Io(_) => ErrorKind::Input,
            Error::TooLarge(_) => ErrorKind::Cap,
            Error::NotT0 { .. }
            | Error::Precondition(_)
            | Error::Resolution(_)
            | Error::Unachievable { .. } => ErrorKind::Precondition,
            Error::Stage { source, .. } => source.kind(),
        }
    }

    pub(crate) fn at(self, stage: &'static str) -> Error {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
