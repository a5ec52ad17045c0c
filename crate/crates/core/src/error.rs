use crate::Weight;

/// Errors raised across the crate. Variants carry the offending weight
/// wherever one exists so diagnostics can name it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not a root")]
    NotARoot(Weight),
    #[error("{0} is not dominant")]
    NotDominant(Weight),
    #[error("{0} is not restricted for p^r = {1}")]
    NotRestricted(Weight, i64),
    #[error("weight {weight} lies on the wall of root {root} at level {level}")]
    OnWall { weight: Weight, root: Weight, level: i64 },
    #[error("weight {0} lies on a box wall")]
    OnBoxWall(Weight),
    #[error("alcove {0} has no label")]
    UnlabeledAlcove(String),
    #[error("operation requires {expected}, got {got}")]
    WrongSystem { expected: String, got: String },
    #[error("decomposition table has no row for {0}")]
    MissingKey(Weight),
    #[error("negative residue {coeff} at weight {weight}")]
    NegativeResidue { weight: Weight, coeff: String },
    #[error("exact division failed at weight {0}")]
    NotDivisible(Weight),
    #[error("layer {layer} has parity opposite to distance {distance} (factor {weight})")]
    ParityViolation { layer: u32, distance: i64, weight: Weight },
    #[error("{context}: mismatch at weight {weight}: expected {expected}, found {found}")]
    OracleMismatch { context: String, weight: Weight, expected: String, found: String },
    #[error("schema error in {file}: {msg}")]
    SchemaError { file: String, msg: String },
    #[error("data error: {0}")]
    Data(String),
    #[error("no linked weight within the search range")]
    SearchExhausted,
    #[error("counterexample found at {0}")]
    CounterexampleFound(Weight),
    #[error("character mismatch for {0}")]
    CharacterMismatch(Weight),
    #[error("cohomology fragment cannot decide {0}")]
    UnknownCohomology(Weight),
    #[error("unresolved case finding: {0}")]
    UnresolvedCase(String),
    #[error("negative coefficient at {0}")]
    NegativityDetected(Weight),
    #[error("unsupported case: {0}")]
    UnsupportedCase(String),
    #[error("missing data: {0}")]
    MissingData(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
