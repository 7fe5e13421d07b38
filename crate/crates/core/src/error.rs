use crate::hopf::AxiomReport;

/// Everything that can go wrong in the workbench.
///
/// Variants carry enough context to print an actionable message; none of
/// them are ever swallowed silently. Checks that *fail* (as opposed to
/// inputs that are malformed) are reported through report types, not
/// through this enum.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("characteristic {0} is too large (must be < 2^31, and < 2^16 for extension fields)")]
    CharacteristicTooLarge(u64),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("scalar has {got} coefficients but the field has degree {expected}")]
    ScalarLength { expected: usize, got: usize },

    #[error("operands belong to different fields: {0} vs {1}")]
    FieldMismatch(String, String),

    #[error("no primitive {p}-th root of unity in {field}: {p} does not divide {order} - 1")]
    NoRootOfUnity { p: u64, order: u64, field: String },

    #[error("the only {p}-th root of unity in characteristic {p} is 1")]
    RootInOwnCharacteristic { p: u64 },

    #[error("matrix shapes are incompatible: {0}")]
    ShapeMismatch(String),

    #[error("subspaces live in different ambient spaces: {0} vs {1}")]
    AmbientMismatch(usize, usize),

    #[error("vector has {got} coordinates, expected {expected}")]
    CoordinateLength { expected: usize, got: usize },

    #[error("matrix has no finite multiplicative order within cap {cap}")]
    OrderExceedsCap { cap: usize },

    #[error("invalid algebra data: {0}")]
    InvalidAlgebra(String),

    #[error("axiom verification failed: {0}")]
    AxiomsFailed(Box<AxiomReport>),

    #[error("convolution equation has no solution: the identity map is not convolution-invertible (not a Hopf algebra)")]
    NoAntipode,

    #[error("convolution equation has {0} solution parameters; the antipode is not unique (degenerate bialgebra data)")]
    AntipodeNotUnique(usize),

    #[error("invalid family parameters: {0}")]
    InvalidFamily(String),

    #[error("element is not grouplike: {0}")]
    NotGrouplike(String),

    #[error("brute-force enumeration needs {needed} vector evaluations, above the cap {cap}; use verify mode with a candidate list, or raise HOPF_BRUTEFORCE_CAP")]
    BruteForceCapExceeded { needed: u128, cap: u64 },

    #[error("grouplike candidates do not form a group: {0}")]
    NotAGroup(String),

    #[error("grouplike count {n_grouplikes} does not divide the dimension {dim}")]
    GrouplikeCountDoesNotDivideDim { n_grouplikes: usize, dim: usize },

    #[error("coradical filtration stalled at dimension {reached} < {dim}: the input is not generated by its coradical (non-pointed or corrupt data)")]
    FiltrationStalled { reached: usize, dim: usize },

    #[error("conjugation of the witness does not stay in the character pattern; offending defect: {defect}")]
    NotACharacterWitness { defect: String },

    #[error("no character witness exists in this skew-primitive space outside span(g - h)")]
    NoCharacterWitness,

    #[error("additive conjugation data is undefined for g = h; pick a pair of distinct grouplikes")]
    AdditiveCharacterNeedsDistinctPair,

    #[error("the p-power map does not preserve this primitive space")]
    PMapEscapes,

    #[error("Frobenius profile needs a commutative algebra over a degree-1 field of characteristic p; got: {0}")]
    FrobeniusNotApplicable(String),

    #[error("dimension {dim} is not p^2 for any prime p")]
    DimensionNotPSquared { dim: usize },

    #[error("classification requires the prime field F_p in characteristic p; got degree {degree}")]
    ClassifyNeedsPrimeField { degree: usize },

    #[error("calibration collision: families {0} and {1} produced identical fingerprints; the invariant set cannot separate them")]
    CalibrationCollision(String, String),

    #[error("JSON error: {0}")]
    Json(String),
}
