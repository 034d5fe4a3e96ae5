use core::fmt;

use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Ground sets hold at most [`crate::GroundSet::MAX_SIZE`] elements.
    GroundTooLarge {
        size: usize,
    },
    GroundMismatch {
        left: usize,
        right: usize,
    },
    /// A mask names elements outside the ground set.
    MaskOutOfRange {
        mask: u32,
        size: usize,
    },
    SequenceTooShort {
        needed: usize,
        len: usize,
    },
    CapExceeded {
        what: &'static str,
        limit: usize,
        got: usize,
    },
    /// `h_∅ ≠ 0` where composition needs it to vanish.
    NonzeroAtEmpty,
    /// `h_∅ ≠ 1` where a unit value is required (inverse, expansion).
    NotUnitAtEmpty,
    /// `a_1 = 0` in a decomposition.
    ZeroLinearTerm,
    /// `a_0 ≠ g_∅` in a decomposition.
    ConstantTermMismatch,
    ZeroOnSingleton {
        element: usize,
    },
    /// No sequence reproduces the given set map at this subset.
    Inconsistent {
        mask: u32,
    },
    DegreeOverflow {
        degree: usize,
        bound: usize,
    },
    LengthMismatch {
        left: usize,
        right: usize,
    },
    /// The falling-factorial family needs a nonzero scale.
    ZeroScale,
    ParseFamily(String),
    SelfLoop {
        vertex: usize,
    },
    VertexOutOfRange {
        vertex: usize,
        n: usize,
    },
    NotAdjacent {
        u: usize,
        v: usize,
    },
    IsolatedVertex {
        vertex: usize,
    },
    NoEdges,
    NotAdditive {
        mask: u32,
    },
    EmptyBlock {
        index: usize,
    },
    KOutOfRange {
        k: usize,
        n: usize,
    },
    /// Power identity exponents start at 1.
    ExponentTooSmall,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::GroundTooLarge { size } => {
                write!(f, "ground set of size {size} exceeds the limit of 20")
            }
            Error::GroundMismatch { left, right } => {
                write!(f, "ground set mismatch: {left} vs {right} elements")
            }
            Error::MaskOutOfRange { mask, size } => {
                write!(f, "subset mask {mask} is not inside a ground set of size {size}")
            }
            Error::SequenceTooShort { needed, len } => {
                write!(f, "sequence has {len} terms but {needed} are needed")
            }
            Error::CapExceeded { what, limit, got } => {
                write!(f, "{what} is {got}, above the cap of {limit}")
            }
            Error::NonzeroAtEmpty => f.write_str("set map must vanish on the empty set"),
            Error::NotUnitAtEmpty => f.write_str("set map must equal 1 on the empty set"),
            Error::ZeroLinearTerm => f.write_str("sequence term a_1 must be nonzero"),
            Error::ConstantTermMismatch => f.write_str("a_0 must equal g at the empty set"),
            Error::ZeroOnSingleton { element } => {
                write!(f, "set map vanishes on the singleton {{{element}}}")
            }
            Error::Inconsistent { mask } => {
                write!(f, "no sequence reproduces the set map at subset {mask}")
            }
            Error::DegreeOverflow { degree, bound } => {
                write!(f, "polynomial degree {degree} exceeds functional bound {bound}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::ZeroScale => f.write_str("falling factorial scale must be nonzero"),
            Error::ParseFamily(s) => write!(f, "cannot parse family spec {s:?}"),
            Error::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            Error::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for {n} vertices")
            }
            Error::NotAdjacent { u, v } => write!(f, "vertices {u} and {v} are not adjacent"),
            Error::IsolatedVertex { vertex } => write!(f, "vertex {vertex} is isolated"),
            Error::NoEdges => f.write_str("graph has no edges"),
            Error::NotAdditive { mask } => write!(f, "alpha is not additive at subset {mask}"),
            Error::EmptyBlock { index } => write!(f, "block {index} has size zero"),
            Error::KOutOfRange { k, n } => write!(f, "k = {k} outside 1..={n}"),
            Error::ExponentTooSmall => f.write_str("exponent must be at least 1"),
        }
    }
}

impl Error {
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::GroundTooLarge { .. })
    }
}

pub(crate) fn check_cap(what: &'static str, limit: usize, got: usize) -> Result<()> {
    if got > limit {
        Err(Error::CapExceeded { what, limit, got })
    } else {
        Ok(())
    }
}
