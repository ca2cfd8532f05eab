//! Crate-wide error type.

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The Jacobi symbol `(a/n)` is defined only for odd positive `n`.
    #[error("Jacobi symbol modulus must be odd and positive, got {0}")]
    InvalidJacobiModulus(u64),

    /// The cochain on `Z/n` needs `n >= 2`.
    #[error("cochain modulus must be at least 2, got {0}")]
    InvalidCochainModulus(u64),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not congruent to 1 mod 4")]
    NotOneMod4(u64),

    #[error("primes must be strictly increasing, got {0} followed by {1}")]
    NotStrictlyIncreasing(u64, u64),

    #[error("a prime tuple must contain at least one prime")]
    EmptyTuple,

    #[error("product of the primes overflows 64 bits")]
    DiscriminantOverflow,

    /// `lk2(p, p)` is undefined; self-linking of a prime is never used.
    #[error("mod-2 linking number needs two distinct primes, got {0} twice")]
    EqualPrimes(u64),

    #[error("{0} is a perfect square")]
    PerfectSquare(u64),

    #[error("{d} is not squarefree (divisible by {factor}^2)")]
    NotSquarefree { d: u64, factor: u64 },

    /// The fundamental unit has norm `+1`, so the narrow and wide class
    /// groups differ and the genus-theoretic formulas are not valid.
    #[error(
        "fundamental unit of Q(sqrt({d})) has norm +1: narrow and wide class groups \
         differ and the invariant formulas do not apply (pass the override to compute anyway)"
    )]
    NormNotMinusOne { d: u64 },

    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },

    #[error("pair index ({i}, {j}) out of range for arity {arity}: need i < j < arity")]
    IndexOutOfRange { i: usize, j: usize, arity: usize },

    #[error("{m} is not coprime to the discriminant {d}")]
    NotCoprime { m: u64, d: u64 },

    #[error("matrix is not symmetric at ({i}, {j})")]
    NonSymmetric { i: usize, j: usize },

    /// A genus element must lie in the even-weight subgroup `T+`.
    #[error("genus element must have an even number of ones")]
    OddWeight,

    #[error("invalid lens space parameters (a, b) = ({a}, {b}): {reason}")]
    InvalidLensParams {
        a: u64,
        b: u64,
        reason: &'static str,
    },

    /// Violation of the linking-matrix file schema.
    #[error("invalid linking matrix: {0}")]
    MatrixFormat(String),
}

pub type Result<T> = std::result::Result<T, Error>;
