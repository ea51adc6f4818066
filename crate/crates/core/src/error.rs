use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the toolkit.
///
/// The variants fall into three families that the command-line front end maps
/// onto distinct exit codes: malformed input ([`Error::is_input`]), internal
/// consistency failures ([`Error::is_internal`]) and everything else, which is a
/// violated precondition of a mathematical operation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero in cyclotomic field")]
    ZeroDivision,
    #[error("automorphism exponent {k} is not coprime to order {order}")]
    InvalidAutomorphism { k: i64, order: u64 },
    #[error("element is not real: {0}")]
    NotReal(String),
    #[error("sign undecided after refining to {bits} bits")]
    PrecisionExhausted { bits: u32 },
    #[error("cannot parse cyclotomic element: {0}")]
    Parse(String),

    #[error("invalid group parameters: {0}")]
    InvalidParameters(String),
    #[error("multiplication table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),
    #[error("element index {index} out of range for group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("subset is not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal")]
    NotNormal,

    #[error("class functions live on different groups")]
    GroupMismatch,
    #[error("class function is not a virtual character: {0}")]
    NotVirtualCharacter(String),
    #[error("class function is not irreducible")]
    NotIrreducible,
    #[error("character is not linear")]
    NotLinear,

    #[error("central element is not a unit: {0}")]
    NotUnit(String),
    #[error("group-algebra element is not central: differs on class {0}")]
    NotCentral(usize),

    #[error("invalid local extension data: {0}")]
    InvalidFiltration(String),
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("invalid finite field: {0}")]
    InvalidField(String),
    #[error("character exponent {exp} out of range for field of size {q}")]
    CharacterOutOfRange { exp: u64, q: u64 },

    #[error("invalid global data: {0}")]
    InvalidGlobal(String),
    #[error("sign indeterminate at place {place}: {reason}")]
    IndeterminateSign { place: String, reason: String },

    #[error("invalid descriptor: {0}")]
    Descriptor(String),
    #[error("unknown suite '{name}'; available: {available}")]
    UnknownSuite { name: String, available: String },

    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }

    pub fn is_input(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::InvalidParameters(_)
                | Error::NotAssociative { .. }
                | Error::InvalidTable(_)
                | Error::IndexOutOfRange { .. }
                | Error::NotSubgroup(_)
                | Error::NotNormal
                | Error::InvalidFiltration(_)
                | Error::InvalidField(_)
                | Error::InvalidGlobal(_)
                | Error::Descriptor(_)
                | Error::UnknownSuite { .. }
        )
    }
}
