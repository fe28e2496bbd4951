//! One error type for the whole crate.
//!
//! Variants are named after the invariant they report, and messages carry
//! enough context to be actionable from the command line without a stack
//! trace. Validation failures (bad input) are distinct from internal
//! invariant failures so the CLI can map them to different exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse rational `{text}`: {reason}")]
    BadRational { text: String, reason: String },

    #[error("cannot parse genus polynomial `{text}` (expected forms like `9g-6`, `g`, `17`)")]
    BadGenusPoly { text: String },

    #[error("cannot parse numerical class `{text}`: {reason}")]
    BadClass { text: String, reason: String },

    #[error("invalid JSON input: {0}")]
    BadJson(String),

    #[error("unknown singularity kind `{kind}` (expected node, cusp, ordinary(n), or A(k))")]
    UnknownKind { kind: String },

    #[error("multiplicity tuple must be nonempty with every entry >= 1")]
    EmptyMultiplicities,

    #[error("invalid curve configuration: {invariant}: {detail}")]
    InvalidCurve { invariant: String, detail: String },

    #[error("shape mismatch: {what} expects {expected}, got {got}")]
    ShapeMismatch { what: String, expected: String, got: String },

    #[error("the zero class has no primitive decomposition")]
    ZeroVector,

    #[error("negative rank in component {component}: rk = {rank}")]
    NegativeRank { component: usize, rank: i64 },

    #[error("operation requires an irreducible curve (n = 1), but n = {n}")]
    ReducibleCurve { n: usize },

    #[error("{what} is not available for this curve kind ({kind})")]
    UnsupportedKind { kind: String, what: String },

    #[error("stability parameters violate the positivity region: {detail}")]
    RegionViolation { detail: String },

    #[error("central charge vanishes on a nonzero class; no slope is defined")]
    ZeroCharge,

    #[error("charge ({re}) + ({im})i lies outside the closed upper half-plane image of the heart")]
    ChargeOutsideHeart { re: String, im: String },

    #[error("wall computation requires rk(v) > rk(u) > 0, got rk(v) = {rank_v}, rk(u) = {rank_u}")]
    RankBound { rank_v: i64, rank_u: i64 },

    #[error("class is numerically proportional to v: the wall functional vanishes identically")]
    DegenerateWall,

    #[error("wall enumeration requires a primitive class, but gcd of coordinates is {gcd}")]
    NonPrimitive { gcd: u64 },

    #[error("parameters lie on the wall {wall}; slope comparison is not strict there")]
    OnWall { wall: String },

    #[error("parameter region is unbounded in coordinate delta[{i}][{j}]; no finite search window")]
    UnboundedRegion { i: usize, j: usize },

    #[error("flip data requires a simple wall decomposition: {detail}")]
    NotSimpleWall { detail: String },

    #[error("no submodule of P2^{{{n}}} has invariants (l1, l2) = ({l1}, {l2}): need 0 <= l1 <= {n} and 0 <= l2 - l1 <= {n}")]
    InfeasibleDims { n: i64, l1: i64, l2: i64 },

    #[error("invalid quiver module: {reason}")]
    InvalidModule { reason: String },

    #[error("internal invariant failure: {detail}")]
    Internal { detail: String },
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::BadJson(e.to_string())
    }
}

impl Error {
    /// True for failures that indicate a bug in this crate rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal { .. })
    }
}
