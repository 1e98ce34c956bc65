use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("syntax error at offset {offset}: {msg}")]
pub struct FormParseError {
    pub offset: usize,
    pub msg: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("{what} {value} exceeds bound {bound}")]
pub struct BoundError {
    pub what: &'static str,
    pub value: usize,
    pub bound: usize,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DiagramError {
    #[error("arity mismatch: {0}")]
    Arity(String),
    #[error("point {0} is out of range")]
    PointRange(usize),
    #[error("point {0} is matched twice or not at all")]
    NotInvolution(usize),
    #[error("arcs ({0},{1}) and ({2},{3}) cross")]
    Crossing(usize, usize, usize, usize),
    #[error("split ({0},{1}) does not add up to {2} points")]
    Split(usize, usize, usize),
    #[error("{0} is not a region index")]
    Region(usize),
    #[error("{0}")]
    Label(String),
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum AlgebraError {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("content references basis element {0} but the algebra has dimension {1}")]
    BasisIndex(usize, usize),
    #[error("coordinate vector of length {0} for an algebra of dimension {1}")]
    CoordLength(usize, usize),
    #[error("quadruple is not spherical: {0}")]
    NotSpherical(String),
    #[error("basis is not flagged as idempotent")]
    NotIdempotent(),
    #[error("{0}")]
    Other(String),
}

/// Any failure raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Bound(#[from] BoundError),
    #[error(transparent)]
    Parse(#[from] FormParseError),
    #[error("invalid input: {0}")]
    Input(String),
}
