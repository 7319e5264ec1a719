use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("zero vector has no primitive direction")]
    ZeroVector,

    #[error("cone has lineality; sharpen first")]
    HasLineality,

    #[error("monoid is not saturated")]
    NotSaturated,

    #[error("monoid is not sharp")]
    NotSharp,

    #[error("monoid is not full-dimensional with group equal to its ambient lattice")]
    NotFullLattice,

    #[error("not a face of the monoid")]
    NotAFace,

    #[error("element lies outside the group of the monoid")]
    OutsideGroup,

    #[error("ideal generator lies outside its parent monoid")]
    OutsideParent,

    #[error("ideals have different parent monoids")]
    ParentMismatch,

    #[error("not a homomorphism into target: generator {index} maps outside")]
    NotAHomomorphism { index: usize },

    #[error("homomorphisms do not share a source")]
    SourceMismatch,

    #[error("homomorphism is not injective on the group of its source")]
    NotGpInjective,

    #[error("not a gp-isomorphism extension")]
    NotGpExtension,

    #[error("blow-up along empty ideal undefined")]
    EmptyIdeal,

    #[error("strategy inapplicable: {0}")]
    StrategyInapplicable(String),

    #[error("piecewise-linear function is not convex")]
    NonConvex,

    #[error("piecewise-linear function is not continuous across a shared face")]
    Discontinuous,

    #[error("piecewise-linear function is not defined on the whole support")]
    NotDefinedOnSupport,

    #[error("image escapes the support of the target fan")]
    ImageEscapesSupport,

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("certification failed: {0}")]
    CertificationFailed(String),

    #[error("value exceeds the machine range of bounded search")]
    SearchOverflow,

    #[error("internal assertion failed: {0}")]
    Internal(String),
}
