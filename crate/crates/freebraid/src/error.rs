use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("generator index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: i64, rank: usize },

    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },

    #[error("rank must be at least {min}, got {got}")]
    RankTooSmall { min: usize, got: usize },

    #[error("expected {expected} images, got {got}")]
    WrongTupleLength { expected: usize, got: usize },

    #[error("image of generator {index} is not conjugate to a generator")]
    NotConjugateToGenerator { index: usize },

    #[error("images do not permute the generator conjugacy classes")]
    NotPermutation,

    #[error("product of the images is not the product of the generators")]
    ProductLawViolated,

    #[error("no reducing generator for a nonidentity tuple")]
    NoReducingGenerator,

    #[error("braid is sigma1-positive")]
    PositiveInput,

    #[error("identity has no main index")]
    IdentityInput,

    #[error("end period must be nonempty")]
    EmptyPeriod,

    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u32),

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u32, right: u32 },

    #[error("element has odd length and is not in the even subgroup")]
    OddElement,

    #[error("element is not in the subgroup generated by the basis")]
    NotInSubgroup,

    #[error("unknown basis variant {0}")]
    BadVariant(u32),

    #[error("word length {len} exceeds cap {cap}")]
    LengthCap { len: usize, cap: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
