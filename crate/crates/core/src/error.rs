use thiserror::Error;

use crate::bruhat::OrderKind;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("universe size {0} is outside 1..=64")]
    UniverseSize(usize),

    #[error("vertex {vertex} is outside [1, {n}]")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("vertex {0} is repeated")]
    RepeatedVertex(usize),

    #[error("a subset or tuple needs at least one member")]
    EmptyMembers,

    #[error("{0} is not a member of {1}")]
    NotMember(usize, String),

    #[error("{0} is already a member of {1}")]
    AlreadyMember(usize, String),

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("index {index} is outside {lo}..={hi}")]
    IndexOutOfRange { index: usize, lo: usize, hi: usize },

    #[error("{0} is not a permutation")]
    NotPermutation(String),

    #[error("duplicate facet {0}")]
    DuplicateFacet(String),

    #[error("facet {facet} has {found} vertices, expected {expected}")]
    RaggedFacets {
        facet: String,
        expected: usize,
        found: usize,
    },

    #[error("empty complex")]
    EmptyComplex,

    #[error("sequence is not an arrangement of the complex's facets")]
    NotArrangement,

    #[error("n = {n} exceeds the limit {limit} for this sweep")]
    SweepTooLarge { n: usize, limit: usize },

    #[error("sweep over {count} {what} exceeds the limit {limit}")]
    TooManyInstances {
        count: usize,
        what: &'static str,
        limit: usize,
    },

    #[error("order kind {kind:?} does not apply to {what}")]
    OrderKindMismatch { kind: OrderKind, what: &'static str },

    #[error("facets of this kind carry no Bruhat order")]
    UnorderedAlphabet,

    #[error("invalid flag: {0}")]
    InvalidFlag(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),
}
