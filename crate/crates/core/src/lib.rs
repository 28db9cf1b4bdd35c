//! Exhaustive machinery for Bruhat orders on Grassmannian permutations and
//! configuration spaces, matroid and Coxeter-matroid axioms, shelling orders
//! of pure complexes, barycentric subdivisions as coset unions, and
//! promotion/evacuation of shelling orders.
//!
//! Everything works on small universes (`n ≤ 64`, and `n ≤ 8` wherever all
//! of `S_n` is swept) and every operation is a pure function of its inputs.

pub mod bruhat;
pub mod cli;
pub mod error;
pub mod matroid;
pub mod promotion;
pub mod shelling;
pub mod subdivision;
pub mod types;

pub use bruhat::{BruhatElement, OrderKind};
pub use error::{Error, Result};
pub use promotion::GraphKind;
pub use subdivision::FlagFacet;
pub use types::{Facet, FacetSequence, FlagTuple, KSubset, LabeledGraph, PureComplex};
