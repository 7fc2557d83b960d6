use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. `name()` gives the stable identifier used in CLI output.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid field description: {0}")]
    BadField(String),
    #[error("no embedding of F_{{p^{src}}} into F_{{p^{dst}}}")]
    NoEmbedding { src: usize, dst: usize },
    #[error("fields have different characteristic ({0} vs {1})")]
    DifferentCharacteristic(u64, u64),
    #[error("polynomial is zero")]
    ZeroPolynomial,
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("incompatible fields: {0}")]
    IncompatibleFields(String),
    #[error("extension degree cap {cap} exceeded (needed {needed:?}, partial count {partial_count:?})")]
    DegreeCapExceeded {
        cap: usize,
        needed: Option<usize>,
        partial_count: Option<u128>,
    },
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("generators only reach {closure} of {order} elements")]
    NotGenerating { closure: usize, order: usize },
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("not a homomorphism: image({a}*{b}) != image({a})*image({b})")]
    NotHomomorphism { a: usize, b: usize },
    #[error("image of generator {0} is not invertible")]
    NotInvertible(usize),
    #[error("representations are over different groups")]
    GroupMismatch,
    #[error("representations are over different fields")]
    FieldMismatch,
    #[error("isomorphism search inconclusive (hom space dimension {hom_dim})")]
    Inconclusive { hom_dim: usize },
    #[error("representation is not isomorphic to its F^{0} twist")]
    NotPeriodic(usize),
    #[error("image of order {image_order} is not a {p}-group")]
    NotPGroupInCharP { image_order: usize, p: u64 },
    #[error("{a} is not coprime to {n}")]
    NotCoprime { a: i64, n: u64 },
    #[error("entry ({row},{col}) of generator {generator} is not {p}-integral")]
    NotPIntegral {
        generator: usize,
        row: usize,
        col: usize,
        p: u64,
    },
    #[error("{p} divides the conductor {n}")]
    DividesConductor { p: u64, n: u64 },
    #[error("{p} divides the group order {order}")]
    PDividesGroupOrder { p: u64, order: usize },
    #[error("{p} is not congruent to {a} mod {n}")]
    CongruenceViolated { p: u64, a: i64, n: u64 },
    #[error("h1 would be negative ({h1})")]
    NotRealizable { h1: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::NotPrime(_) => "NotPrime",
            Error::BadField(_) => "BadField",
            Error::NoEmbedding { .. } => "NoEmbedding",
            Error::DifferentCharacteristic(..) => "DifferentCharacteristic",
            Error::ZeroPolynomial => "ZeroPolynomial",
            Error::Singular => "Singular",
            Error::NotSquare { .. } => "NotSquare",
            Error::DimensionMismatch(_) => "DimensionMismatch",
            Error::IncompatibleFields(_) => "IncompatibleFields",
            Error::DegreeCapExceeded { .. } => "DegreeCapExceeded",
            Error::NotAGroup(_) => "NotAGroup",
            Error::NotGenerating { .. } => "NotGenerating",
            Error::BadParams(_) => "BadParams",
            Error::NotHomomorphism { .. } => "NotHomomorphism",
            Error::NotInvertible(_) => "NotInvertible",
            Error::GroupMismatch => "GroupMismatch",
            Error::FieldMismatch => "FieldMismatch",
            Error::Inconclusive { .. } => "Inconclusive",
            Error::NotPeriodic(_) => "NotPeriodic",
            Error::NotPGroupInCharP { .. } => "NotPGroupInCharP",
            Error::NotCoprime { .. } => "NotCoprime",
            Error::NotPIntegral { .. } => "NotPIntegral",
            Error::DividesConductor { .. } => "DividesConductor",
            Error::PDividesGroupOrder { .. } => "PDividesGroupOrder",
            Error::CongruenceViolated { .. } => "CongruenceViolated",
            Error::NotRealizable { .. } => "NotRealizable",
            Error::Parse(_) => "Parse",
        }
    }
}
