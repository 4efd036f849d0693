use thiserror::Error;

/// Errors from building or editing graphs.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    LoopRejected(usize),
    #[error("{0}-{1} is not an edge")]
    NotAnEdge(usize, usize),
    #[error("adjacency is not symmetric at {0}-{1}")]
    Asymmetric(usize, usize),
    #[error("invalid vertex split: {0}")]
    BadSplit(String),
}

/// Errors from reading or writing graph text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("malformed edge list at line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from the minor search.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MinorError {
    #[error("search budget of {budget} nodes exceeded")]
    SearchBudgetExceeded { budget: u64 },
}

/// Errors from named constructions and the catalog.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("unknown graph name `{0}`")]
    UnknownName(String),
    #[error("parameter out of range: {0}")]
    BadParameter(String),
    #[error("vertex {0} is not cubic")]
    NotCubic(String),
    #[error("could not bind `{name}`: {reason}")]
    Binding { name: String, reason: String },
    #[error("catalog entry `{name}` failed its self-test: {reason}")]
    SelfTest { name: String, reason: String },
    #[error("derivation of `{name}` found {found} candidates, expected exactly one")]
    AmbiguousDerivation { name: String, found: usize },
    #[error("bad graph expression `{expr}`: {reason}")]
    BadExpression { expr: String, reason: String },
    #[error("catalog data: {0}")]
    Data(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Format(#[from] FormatError),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Generate(#[from] GenerateError),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
}

/// Errors from parsing predicate strings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PredicateError {
    #[error("unknown predicate term `{0}`")]
    Unknown(String),
}

/// Errors from closure generation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("bounds exceeded: {0}")]
    BoundsExceeded(String),
    #[error(transparent)]
    Minor(#[from] MinorError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Predicate(#[from] PredicateError),
}
