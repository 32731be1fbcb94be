use crate::completer::TripleViolation;
use crate::square::RowViolation;
use crate::trade::Admissibility;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong across the crate. Variants name the violated
/// condition rather than the operation that tripped over it.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("0 has no multiplicative inverse")]
    NonInvertible,
    #[error("m = {m} must be at least 2 and divide p - 1 = {pm1}")]
    BadPowerIndex { m: u64, pm1: u64 },
    #[error("invalid first row: {0}")]
    BadFirstRow(RowViolation),
    #[error("j = {j} is not invertible mod {n}")]
    MultiplierNotCoprime { j: u64, n: u64 },
    #[error("j = {j} mod {n}: gcd(j - 1, n) > 1, so the differences j*i - i cannot be a permutation")]
    MultiplierDegenerate { j: u64, n: u64 },
    #[error("square is not in standard order: first symbol is {0}, not 0")]
    NotStandardOrder(u64),
    #[error("not a transversal of the addition table: {0}")]
    BadBnTransversal(&'static str),
    #[error("cannot decode row string: {0}")]
    RowCodec(String),
    #[error("triple (j, c, e) rejected: {0}")]
    Inadmissible(Admissibility),
    #[error("x must lie in [2, p): 0 is never an m-th power and 1 gives the identity trade")]
    XExcluded,
    #[error("character-sum hypothesis violated: {0}")]
    CharSumHypothesis(&'static str),
    #[error("trade parameters invalid: {0}")]
    BadTradeParams(&'static str),
    #[error("fixed cells inconsistent: {0}")]
    BadFixedCells(&'static str),
    #[error("search policy invalid: {0}")]
    BadPolicy(&'static str),
    #[error("exhaustive enumeration is limited to p <= {limit}, got {p}")]
    ExhaustiveTooLarge { p: u64, limit: u64 },
    #[error("invalid transversal triple: {0}")]
    BadTriple(TripleViolation),
    #[error("order {0} is not supported for completion: some transversal triples of order <= 7 have no completion")]
    UnsupportedOrder(u64),
    #[error("no completion found for j={j}, c={c}, e={e}: search exhausted its restarts")]
    NoCompletion { j: u64, c: u64, e: u64 },
    #[error("certificate malformed: {0}")]
    BadCertificate(&'static str),
}
