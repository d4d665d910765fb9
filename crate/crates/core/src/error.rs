use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {kind}{rank}: {reason}")]
    UnsupportedType {
        kind: String,
        rank: usize,
        reason: String,
    },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("Weyl group of order {order} exceeds the default limit of {limit}; enable large Weyl groups explicitly")]
    WeylGroupTooLarge { order: u64, limit: u64 },

    #[error("series bases are incompatible: {0}")]
    BaseMismatch(String),

    #[error("series has non-unit constant term {0}")]
    NonUnitConstant(String),

    #[error("shifted level k + h^vee = {0} is not positive; lattice sum does not converge")]
    NonPositiveShiftedLevel(String),

    #[error("weight is not in the root lattice: {0}")]
    NotInRootLattice(String),

    #[error("term outside the positive root cone survived summation: exponents {0:?}")]
    OutsideCone(Vec<i64>),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("condition ({condition}) required by the Deligne-series formula fails: {witness}")]
    ConditionViolation { condition: String, witness: String },

    #[error("coefficient {coeff} at exponents {exps:?} is not divisible by {divisor}")]
    NonIntegral {
        exps: Vec<u32>,
        coeff: String,
        divisor: i64,
    },

    #[error("enumeration budget of {0} states exceeded")]
    BudgetExceeded(u64),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
