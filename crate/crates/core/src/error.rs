use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported field order {0}; expected 2, 3 or 4")]
    UnsupportedField(u32),

    #[error("{value} is not an element of GF({q})")]
    InvalidElement { q: u8, value: u8 },

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("shape error: {0}")]
    Shape(String),

    #[error("the hermitian form needs GF(4); got GF({0})")]
    UnsupportedForm(u8),

    #[error("generator has rank {rank} but {rows} rows")]
    RankDeficient { rank: usize, rows: usize },

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("search needs {needed} candidates but the budget is {budget}")]
    Budget { needed: u128, budget: u64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error(
        "no binary [{n}, 2, {target}] LCD code exists (n mod 6 = {residue}); \
         the Griesmer-optimal distance is unattainable for LCD codes at this length"
    )]
    NoOptimalLcd { n: usize, target: usize, residue: usize },

    #[error(
        "GF({q}) has characteristic 2: a dual vector with nonzero self inner \
         product need not exist (e.g. the [3,1] repetition code, whose dual has \
         only even-weight words), so the extension step is only supported over GF(3)"
    )]
    UnsupportedCharacteristic { q: u8 },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("internal check failed: {0}")]
    Postcondition(String),
}
