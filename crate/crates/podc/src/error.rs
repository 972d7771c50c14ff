//! Crate-wide error type.

use num_bigint::BigInt;
use thiserror::Error;

use crate::bijection::MappingRecord;
use crate::partition::FamilyTag;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("partition parts must be positive, got {0}")]
    NonPositivePart(i64),

    #[error("cannot parse partition {input:?}: {reason}")]
    PartitionParse { input: String, reason: String },

    #[error("enumeration at n = {n} refused: exceeds the configured bound {bound}")]
    EnumerationBound { n: u64, bound: u64 },

    #[error("series has constant term {constant}, expected +1 or -1; cannot invert")]
    NonInvertible { constant: BigInt },

    #[error("coefficient index {index} is beyond the truncation order {order}")]
    CoefficientOutOfRange { index: usize, order: usize },

    #[error("Pochhammer step must be >= 1")]
    ZeroStep,

    #[error("Pochhammer length evaluates to {value} at summation index {index}")]
    NegativePochhammerLength { value: i64, index: u64 },

    #[error("an affine Pochhammer length needs a summation index")]
    MissingPochhammerIndex,

    #[error("invalid term specification: {0}")]
    InvalidTermSpec(String),

    #[error("monomial coefficient must be -1, 0 or +1, got {0}")]
    InvalidMonomialCoeff(i64),

    #[error("q-binomial argument z must have exponent >= 1")]
    QBinomialConstantZ,

    #[error("unknown series name {name:?}; valid names: {valid}")]
    UnknownSeriesName { name: String, valid: &'static str },

    #[error("part {part} appears {multiplicity} times; pairwise merging needs every odd part an even number of times")]
    OddMultiplicity { part: u32, multiplicity: usize },

    #[error("partition ({partition}) is not in {family}: {reason}")]
    NotInFamily {
        partition: String,
        family: FamilyTag,
        reason: String,
    },

    #[error("theorem {theorem} applies for n > {min}, got n = {n}")]
    OutOfTheoremRange { theorem: String, min: u64, n: u64 },

    #[error("no case applies to ({partition}); the case dispatch should be total")]
    NoApplicableCase { partition: String },

    #[error("cases {cases:?} all apply to ({partition}); the case dispatch should be exclusive")]
    DispatchConflict { partition: String, cases: Vec<u8> },

    #[error("forward map violated its contract ({reason}); record: {record}")]
    ForwardContract {
        reason: String,
        record: Box<MappingRecord>,
    },

    #[error("backward map violated its contract ({reason}): input ({input}), output ({output})")]
    BackwardContract {
        reason: String,
        input: String,
        output: String,
    },

    #[error("b-file line {line}: {reason}")]
    BFileParse { line: usize, reason: String },

    #[error("b-file and series share no index range to compare")]
    EmptyOverlap,

    #[error("order {got} too small; this check needs order >= {min}")]
    OrderTooSmall { min: usize, got: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
