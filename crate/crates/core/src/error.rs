use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field order {p}^{m} exceeds the supported limit of 2^48")]
    FieldTooLarge { p: u64, m: u32 },
    #[error("modulus has degree {found}, expected {expected}")]
    ModulusDegree { expected: usize, found: usize },
    #[error("modulus must be monic")]
    ModulusNotMonic,
    #[error("modulus is reducible over GF({0})")]
    ReducibleModulus(u64),
    #[error("modulus is irreducible but x is not a primitive element")]
    NonPrimitiveModulus,
    #[error("no primitive polynomial of degree {m} over GF({p}) found")]
    NoPrimitivePolynomial { p: u64, m: u32 },
    #[error("coefficient {coeff} is not reduced modulo {p}")]
    CoefficientOutOfRange { coeff: u64, p: u64 },
    #[error("value {value} does not encode an element of GF({q})")]
    ElementOutOfRange { value: u64, q: u64 },
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("discrete logarithm of zero is undefined")]
    LogOfZero,
    #[error("discrete logarithms need log tables, which are only built for q <= 2^20 (q = {0})")]
    NoLogTables(u64),
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("modulus polynomial must have degree at least 1")]
    ConstantModulus,
    #[error("polynomials have different characteristics")]
    MixedCharacteristic,
    #[error("exponent list is empty")]
    EmptyExponents,
    #[error("exponents {first} and {second} lie in the same {p}-cyclotomic coset")]
    SameCoset { first: u64, second: u64, p: u64 },
    #[error("word has length {found}, code length is {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("enumeration needs {needed} steps, budget is {budget}")]
    BudgetExceeded { needed: String, budget: u64 },
    #[error("operation requires a binary field, got characteristic {0}")]
    NotBinary(u64),
    #[error("t = {t} lies in the cyclotomic coset of 1, so C_(1,t) is not well formed")]
    TInCosetOfOne { t: u64 },
    #[error("invalid weight-3 parameters: {0}")]
    Weight3Params(String),
    #[error("weight prefix has A_0..A_{have}, need up to A_{need}")]
    PrefixTooShort { have: usize, need: usize },
    #[error("weight prefix is empty")]
    EmptyPrefix,
    #[error("partition sums to {found}, expected {expected}")]
    PartitionSum { expected: u64, found: u64 },
    #[error("arity must be at least 1")]
    ZeroArity,
    #[error("{what} is not an integer: {numerator} / {denominator}")]
    NonIntegral { what: String, numerator: String, denominator: String },
    #[error("recovered A_{w} = {value} is negative; the N sequence is inconsistent")]
    NegativeWeight { w: usize, value: String },
    #[error("gcd(k, 2f + 1) = gcd({k}, {modulus}) must be 1")]
    FamilyGcd { k: u64, modulus: u64 },
    #[error("family parameters f and k must be positive")]
    FamilyParams,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// True for errors caused by running out of enumeration budget.
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
