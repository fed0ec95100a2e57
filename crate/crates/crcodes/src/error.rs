use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u16),
    #[error("{0} is not a prime power")]
    NotPrimePower(u16),
    #[error("field of order {0} exceeds the supported maximum of 256")]
    FieldTooLarge(u64),
    #[error("zero has no multiplicative inverse")]
    InvOfZero,
    #[error("column count mismatch: {0} vs {1}")]
    ColumnMismatch(usize, usize),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("parity check matrix has full column rank, so the code is empty")]
    EmptyCode,
    #[error("enumerating {required} items exceeds the budget of {budget}")]
    TooLarge { required: u128, budget: u64 },
    #[error("inverse weight transform produced a non-integer count at weight {0}")]
    NonIntegerOutput(usize),
    #[error("code is not quasi-perfect: covering radius {rho}, packing radius {e}")]
    NotQuasiPerfect { rho: usize, e: usize },
    #[error("no cyclic Hamming code of these parameters: gcd({n}, {q_minus_1}) != 1")]
    NotCyclic { n: usize, q_minus_1: u16 },
    #[error("copy count c = {c} outside the valid range {min}..={max}")]
    BadC { c: usize, min: usize, max: usize },
    #[error("unknown sporadic code id {0:?}")]
    UnknownId(String),
    #[error("matrix is not a qu x qu array over Z_q")]
    BadShape,
    #[error("entry {entry} is not an element of a field of order {q}")]
    EntryOutOfRange { entry: u8, q: u16 },
    #[error("parameters outside the range of the closed-form prediction")]
    OutOfRange,
    #[error("design parameter lambda_{0} is not an integer")]
    NotIntegral(usize),
    #[error("design words do not all have the same weight")]
    MixedWeights,
    #[error("codes do not form an extension pair")]
    NotExtensionPair,
    #[error("document field {field} is inconsistent: stated {stated}, computed {computed}")]
    DocumentMismatch {
        field: &'static str,
        stated: usize,
        computed: usize,
    },
}

impl Error {
    /// True for the errors that mean "raise the budget and retry", as
    /// opposed to a malformed input or a failed precondition.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::TooLarge { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
