use thiserror::Error;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet symbol {0:?} occurs more than once")]
    DuplicateSymbol(char),
    #[error("alphabet has {0} symbols, at most 256 are supported")]
    AlphabetTooLarge(usize),
    #[error("system must have at least one row")]
    NoRows,
    #[error("row {label} has length {len}, expected {expected}")]
    RaggedRow {
        label: usize,
        len: usize,
        expected: usize,
    },
    #[error("cell (row {row}, column {column}) holds code {code}, alphabet size is {size}")]
    CodeOutOfRange {
        row: usize,
        column: usize,
        code: u8,
        size: usize,
    },
    #[error("column index {index} out of range for {n} columns")]
    ColumnOutOfRange { index: usize, n: usize },
    #[error("a link needs two distinct columns, got ({0}, {0})")]
    SameColumn(usize),
    #[error("row position {index} out of range for {k} rows")]
    RowOutOfRange { index: usize, k: usize },
    #[error("removing {s} of {k} rows would leave an empty system")]
    RemovesAllRows { s: usize, k: usize },
    #[error("count table total must be positive")]
    ZeroTotal,
    #[error("operation needs at least {needed} rows, got {k}")]
    TooFewRows { needed: usize, k: usize },
    #[error("special function argument {z} is below 1")]
    ArgumentBelowOne { z: f64 },
    #[error("H_a(z) needs 2 <= a < z, got a = {a}, z = {z}")]
    InvalidConvexArgs { a: u32, z: f64 },
    #[error("row count {k} is not divisible by a^2 = {a_squared}")]
    NotDivisible { k: usize, a_squared: usize },
    #[error("alphabet size must be at least 2, got {0}")]
    AlphabetTooSmall(usize),
    #[error("fraction {0} is outside [0, 1]")]
    FractionOutOfRange(f64),
    #[error("removal size s = {s} outside [{min}, {max}]")]
    RemovalSizeOutOfRange { s: usize, min: usize, max: usize },
    #[error("monte carlo needs at least 2 samples, got {0}")]
    TooFewSamples(usize),
    #[error(
        "exact enumeration of C({k}, {s}) = {} subsets exceeds the budget of {budget}; use monte carlo",
        match .subsets { Some(c) => alloc::format!("{c}"), None => alloc::string::String::from("> 2^128") }
    )]
    BudgetExceeded {
        k: usize,
        s: usize,
        subsets: Option<u128>,
        budget: u128,
    },
    #[error("system has {0} columns, at least 2 are needed for a link")]
    TooFewColumns(usize),
    #[error("link set is empty")]
    EmptyLinkSet,
    #[error("link ({0}, {1}) is not ordered i < j")]
    UnorderedLink(usize, usize),
    #[error("link ({0}, {1}) appears more than once")]
    DuplicateLink(usize, usize),
    #[error("purge needs a threshold or a removal limit")]
    NoStopRule,
}
