use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("not divisible in the Laurent ring")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecouplingError {
    #[error("inadmissible colors {0:?}")]
    Inadmissible(Vec<u32>),
    #[error("strand count {found} exceeds the bound {bound}")]
    BoundExceeded { found: usize, bound: usize },
    #[error("malformed network: {0}")]
    MalformedNetwork(String),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("{what} {found} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        found: usize,
        bound: usize,
    },
    #[error("malformed diagram: {0}")]
    MalformedDiagram(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PairingError {
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Recoupling(#[from] RecouplingError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("inconsistent linear system: {0}")]
    InconsistentSystem(String),
    #[error("under-determined linear system: {0}")]
    UnderDetermined(String),
    #[error("coefficient {0} has a denominator that is not a product of factors of A^k - 1")]
    NotInCoefficientRing(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error("value is not a unit multiple of an integer: {0}")]
    NotUnitMultipleOfInteger(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}
