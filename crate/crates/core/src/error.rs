use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {order} exceeds the maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("vertex {0} listed more than once")]
    DuplicateVertex(usize),

    #[error("the two vertices of a closure must differ (got {0} twice)")]
    SameVertex(usize),

    #[error("graph6: {0}")]
    Graph6(String),

    #[error("line {line}: {source}")]
    AtLine { line: usize, source: Box<Error> },

    #[error("forbidden graph #{0} has no vertices")]
    EmptyPattern(usize),

    #[error("parameter n = {0} is below the minimum of 3")]
    ParameterTooSmall(usize),

    #[error("unknown family kind `{0}`")]
    UnknownFamily(String),

    #[error("unknown containment route `{0}`")]
    UnknownRoute(String),

    #[error("the vertex order is not a chain: condition fails at index {0}")]
    NotAChain(usize),

    #[error("the vertex order must list every vertex exactly once")]
    NotAnOrdering,

    #[error("invalid symbol {0:?} (expected '0' or '1')")]
    InvalidLetter(char),

    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal invariant broken: {0}")]
    Internal(String),

    #[error("period cap must be at least 1")]
    PeriodCapTooSmall,

    #[error("census budget of {budget} candidates exhausted while building order {order}")]
    CensusBudgetExceeded { order: usize, budget: u64 },

    #[error("order {order} is outside the supported range {min}..={max}")]
    OrderOutOfRange { order: usize, min: usize, max: usize },
}

impl Error {
    pub(crate) fn at_line(self, line: usize) -> Error {
        Error::AtLine {
            line,
            source: Box::new(self),
        }
    }
}
