use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("arc angle {0} rad is outside the open interval (-2π, 2π)")]
    AngleOutOfRange(f64),

    #[error("a zero arc angle has no finite radius or center")]
    ZeroAngle,

    #[error("chord length must be positive, got {0}")]
    DegenerateChord(f64),

    #[error("no circle of radius {radius} spans a chord of length {chord}")]
    NoCircle { chord: f64, radius: f64 },

    #[error("curve parameter u = {0} is outside [0, 1]")]
    ParameterOutOfRange(f64),

    #[error("zero-length direction vector")]
    ZeroVector,

    #[error("bending rigidity must be positive, got {0}")]
    NonPositiveRigidity(f64),

    #[error("invalid polyarc: {0}")]
    InvalidPolyarc(String),

    #[error("segment {index}: {source}")]
    Segment {
        index: usize,
        #[source]
        source: Box<Error>,
    },

    #[error("propagated angle of segment {0} lands on a full circle (±2π)")]
    FullCircle(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid search configuration: {0}")]
    InvalidConfig(String),

    #[error("golden-section search did not converge within {0} interval reductions")]
    IterationLimit(usize),

    #[error("JSON syntax error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("document error: {0}")]
    Schema(String),

    #[error("point {index}: {rule}")]
    Validation { index: usize, rule: String },
}

impl Error {
    pub(crate) fn at_segment(self, index: usize) -> Error {
        Error::Segment {
            index,
            source: Box::new(self),
        }
    }
}
