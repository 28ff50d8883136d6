use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: i64, b: i64 },

    #[error("Laurent polynomial is not normalized (need Δ(1) = 1 and Δ(t) = Δ(t⁻¹)): {0}")]
    NotNormalized(String),

    #[error("signature {0} is odd")]
    OddSignature(i64),

    #[error("expected exactly 3 exceptional fibers, found {0}")]
    UnsupportedFiberCount(usize),

    #[error("first homology of the cover is infinite")]
    InfiniteH1,

    #[error("first homology of the cover has even order {0}")]
    EvenOrder(u64),

    #[error("cover is not a homology S¹×S² (|H₁| = {0})")]
    NotHomologyS1xS2(u64),

    #[error("bad twist mask: {0}")]
    BadTwistMask(String),

    #[error("no native signature routine for {0}; supply the signature explicitly")]
    NeedsExplicitSignature(String),

    #[error("flat cobordism condition fails: a₁⋯aₙ = {product} but lcm·|H₁| = {lcm}·{order}")]
    FlatCobordismFails { product: i64, lcm: i64, order: u64 },

    #[error("torus knot T({p},{q}): signature {signature} is not divisible by 4")]
    NonIntegralA { p: i64, q: i64, signature: i64 },

    #[error("linking number {lk} is inconsistent with {classes} projective classes")]
    InconsistentLk { lk: i64, classes: u64 },

    #[error("external grading pin rejected: {0}")]
    InvalidPin(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    /// Stable identifier used in machine-readable error records.
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotCoprime { .. } => "NotCoprime",
            Error::NotNormalized(_) => "NotNormalized",
            Error::OddSignature(_) => "OddSignature",
            Error::UnsupportedFiberCount(_) => "UnsupportedFiberCount",
            Error::InfiniteH1 => "InfiniteH1",
            Error::EvenOrder(_) => "EvenOrder",
            Error::NotHomologyS1xS2(_) => "NotHomologyS1xS2",
            Error::BadTwistMask(_) => "BadTwistMask",
            Error::NeedsExplicitSignature(_) => "NeedsExplicitSignature",
            Error::FlatCobordismFails { .. } => "FlatCobordismFails",
            Error::NonIntegralA { .. } => "NonIntegralA",
            Error::InconsistentLk { .. } => "InconsistentLk",
            Error::InvalidPin(_) => "InvalidPin",
            Error::InvalidInput(_) => "InvalidInput",
        }
    }
}
