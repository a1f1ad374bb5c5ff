use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("algebra has no elements")]
    EmptyAlgebra,
    #[error("algebra has {count} elements, above the cap of {cap}")]
    TooManyElements { count: usize, cap: usize },
    #[error("duplicate name `{0}`")]
    DuplicateName(String),
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("order is not antisymmetric: `{0}` and `{1}` are distinct but mutually below each other")]
    NotAPartialOrder(String, String),
    #[error("not a lattice: `{0}` and `{1}` have no {2}")]
    NotALattice(String, String, &'static str),
    #[error("not a Heyting algebra: residuation fails at a=`{a}`, b=`{b}`, c=`{c}`")]
    NotHeyting { a: String, b: String, c: String },

    #[error("unknown point `{0}`")]
    UnknownPoint(String),
    #[error("subset enumeration needs {needed} subsets, above the cap of {cap}")]
    CapExceeded { needed: String, cap: usize },
    #[error("carrier or algebra mismatch: {0}")]
    Mismatch(String),

    #[error("operator `{name}` is not a {kind}: {reason}")]
    NotCertified {
        name: String,
        kind: &'static str,
        reason: String,
    },
    #[error("operators are not compatible (degree `{degree}`), witness U={u}, V={v}")]
    NotCompatible { degree: String, u: String, v: String },

    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error in `{name}`: {message}")]
    Validation { name: String, message: String },
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("unknown name `{0}`")]
    UnknownName(String),
    #[error("usage: {0}")]
    Usage(String),
}
