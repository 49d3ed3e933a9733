use thiserror::Error;

/// Errors produced by specification validation, the closed forms and the oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a gluing specification needs at least one clique")]
    EmptySpec,
    #[error("clique S{index} has order 0; clique orders must be positive")]
    ZeroClique { index: usize },
    #[error("expected {expected} {what} for {cliques} cliques, got {got}")]
    LengthMismatch {
        what: &'static str,
        cliques: usize,
        expected: usize,
        got: usize,
    },
    #[error("intersection r{index} = {r} is infeasible: {reason}")]
    InfeasibleIntersection {
        index: usize,
        r: usize,
        reason: String,
    },
    #[error("parent p({child}) = {parent} is out of range 1..={max}")]
    BadParentIndex {
        child: usize,
        parent: usize,
        max: usize,
    },
    #[error("complex has {n} vertices, above the oracle cap of {cap}")]
    OracleCapExceeded { n: usize, cap: usize },
    #[error("the Alexander dual is void (the complex is a full simplex)")]
    VoidDual,
    #[error("a facet complex needs at least one facet (use the empty facet for {{}})")]
    VoidComplex,
    #[error("vertex {vertex} is outside 1..={n}")]
    BadVertex { vertex: usize, n: usize },
    #[error("oracle cap {0} is outside 1..=24")]
    BadOracleCap(usize),
    #[error("bad Betti row request (i = {i}, j = {j}); both must be non-negative")]
    BadRowRequest { i: i64, j: i64 },
    #[error("closed form produced a negative Betti number {value} at (i, j) = ({i}, {j})")]
    NegativeBetti { i: usize, j: usize, value: String },
    #[error("internal mismatch: {0}")]
    InternalMismatch(String),
    #[error("skeleton parameter k = {k} outside the admissible range {lo}..{hi}")]
    RangeError { k: i64, lo: i64, hi: i64 },
    #[error("skeleton parameter k = {0} must be at least -1")]
    BadSkeleton(i64),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("parameters out of range for {identity}: {reason}")]
    ParamOutOfRange {
        identity: &'static str,
        reason: String,
    },
    #[error("field characteristic {0} is not a prime in 2..=257")]
    BadField(u32),
    #[error("integer overflow while evaluating {0}")]
    Overflow(&'static str),
    #[error("polynomial is not divisible by (1 - t)^{0}")]
    NotDivisible(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
