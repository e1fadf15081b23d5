use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("values live in distinct rings ({left} vs {right})")]
    DistinctRings { left: String, right: String },

    #[error("{j} is not a Galois element for order {k} (gcd(j, k) != 1)")]
    NotGaloisElement { j: i64, k: u32 },

    #[error("element is not Galois-invariant: first violating exponent j = {j}")]
    DescentFailure { j: u32 },

    #[error("element is not a unit: {0}")]
    NonUnit(String),

    #[error("arity mismatch: {left} vs {right} variables")]
    ArityMismatch { left: u32, right: u32 },

    #[error("degenerate quadratic form: {0}")]
    DegenerateForm(String),

    #[error("{0} is neither a prime nor the infinite place")]
    InvalidPlace(u64),

    #[error("prime bound {bound} does not cover prime {prime} dividing the form")]
    IncompleteScan { prime: String, bound: u64 },

    #[error("quadratic form {0} is not orientable")]
    NotOrientable(String),

    #[error("elements belong to different quadratic forms")]
    FormMismatch,

    #[error("{what} = {value} exceeds the configured cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: u64,
        cap: u64,
    },

    #[error("line expression is not effective (negative coefficient on {0})")]
    NotEffective(String),

    #[error("lambda vector is not self-dual: λ^{j} != λ^(n-{j})")]
    NotSelfDual { j: usize },

    #[error("element is not in the Clifford group: {0}")]
    NotInCliffordGroup(String),

    #[error(
        "sphere formula mismatch at r = {r}, k = {k}: ring computation gives {computed}, closed form gives {closed_form}"
    )]
    FormulaMismatch {
        r: u32,
        k: u32,
        computed: String,
        closed_form: String,
    },

    #[error("module of dimension {module_dim} is not a multiple of the standard module dimension {standard_dim}")]
    PresentationMismatch { module_dim: usize, standard_dim: usize },

    #[error("relation check failed: {0}")]
    RelationFailure(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}
