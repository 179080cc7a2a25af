//! Crate-wide error type.
//!
//! Failed checks that are themselves results (axiom reports, conformance
//! witnesses) are not errors; they are returned as data. `Error` covers
//! malformed inputs and contract violations.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("chain parameter must be >= 1, got {0}")]
    InvalidChain(i64),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("numerator {value} out of range for chain of size {chain} at coordinate {index}")]
    NumeratorOutOfRange { index: usize, value: i64, chain: i64 },

    #[error("element {0:?} does not belong to the algebra")]
    NotAMember(Vec<i64>),

    #[error("element {0:?} is not an atom")]
    NotAnAtom(Vec<i64>),

    #[error("unbound variable `{0}` in term evaluation")]
    UnboundVariable(String),

    #[error("exhaustive check needs {needed} tuples, cap is {cap}")]
    CapExceeded { needed: u128, cap: u128 },

    #[error("carrier too large to materialize: {count} elements (cap {cap})")]
    CarrierTooLarge { count: u128, cap: u128 },

    #[error("table does not preserve {law}: witness {witness:?}")]
    NotAHomomorphism { law: &'static str, witness: Vec<Vec<i64>> },

    #[error("sequence entry {index} breaks the good-sequence condition")]
    NotGoodSequence { index: usize },

    #[error("negative coordinate at index {index}: {value}")]
    NegativeCoordinate { index: usize, value: i64 },

    #[error("operands belong to different algebras")]
    ParentMismatch,

    #[error("lattice operations are only defined on the canonical vector form")]
    GenericFormOrder,

    #[error("state table is partial: expected {expected} values, got {got}")]
    PartialTable { expected: usize, got: usize },

    #[error("atom values do not sum to the unit: got {sum:?}, unit is {unit:?}")]
    PartitionOfUnityViolation { sum: Vec<i64>, unit: Vec<i64> },

    #[error("table is not a state: axiom {axiom} fails at {witness:?}")]
    NotAState { axiom: &'static str, witness: Vec<Vec<i64>> },

    #[error("matrix entry at row {row}, column {col} is negative: {entry}")]
    PositivityViolation { row: usize, col: usize, entry: i64 },

    #[error("matrix does not carry the unit {unit:?} to {expected:?}, got {got:?}")]
    UnitViolation { unit: Vec<i64>, expected: Vec<i64>, got: Vec<i64> },

    #[error("function space of size {size} is infeasible without sampling")]
    InfeasibleSize { size: u128 },

    #[error("zero denominator in rational literal")]
    ZeroDenominator,

    #[error("a simplex needs at least one vertex")]
    EmptySimplex,

    #[error("vertices are affinely dependent")]
    AffinelyDependent,

    #[error("point {0:?} lies outside the domain simplex")]
    OutsideDomain(Vec<String>),

    #[error("no affine extension with integer coefficients; rational solution has matrix {matrix:?}, offset {offset:?}")]
    NonIntegerAffineExtension { matrix: Vec<Vec<String>>, offset: Vec<String> },

    #[error("image vertex {0:?} is not contained in the target simplex")]
    ImageNotContained(Vec<String>),

    #[error("the terminal algebra has no dual simplex")]
    TerminalAlgebra,

    #[error("projection to factor {factor} is nonzero on {nonzero} atoms; a homomorphism hits exactly one")]
    DualAtomRule { factor: usize, nonzero: usize },

    #[error("homomorphism is not injective: {a:?} and {b:?} have the same image")]
    NotInjective { a: Vec<i64>, b: Vec<i64> },

    #[error("chain is not composable at position {position}")]
    NotComposable { position: usize },

    #[error("parse error: {0}")]
    Parse(String),
}
