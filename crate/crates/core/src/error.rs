use thiserror::Error;

use crate::set::ElementSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("ground size {0} exceeds the supported maximum of 24")]
    GroundTooLarge(u32),

    #[error("element {element} lies outside the ground set [{n}]")]
    ElementOutOfRange { element: u32, n: u32 },

    #[error("set {set} does not fit in the ground set [{n}]")]
    SetOutOfRange { set: ElementSet, n: u32 },

    #[error("families live over different ground sets ({0} vs {1})")]
    GroundMismatch(u32, u32),

    #[error("{0} is not a subset of {1}")]
    NotSubset(ElementSet, ElementSet),

    #[error("{0} is not a member of the family")]
    NotMember(ElementSet),

    #[error("family is not simply rooted")]
    NotSimplyRooted,

    #[error("family is not union-closed")]
    NotUnionClosed,

    #[error("family is not a down-set")]
    NotDownSet,

    #[error("{0}")]
    Domain(String),

    #[error("capacity exceeded: {0}")]
    Capacity(String),

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(msg: impl Into<String>) -> Self {
        Error::Capacity(msg.into())
    }
}
