//! Certificates that `k ≤ 5` conjugates of a solvable `G ≤ S` meet trivially.
//!
//! Construction dispatches on the shape of `G`: primitive, imprimitive
//! (block size 2, 3, 4 or at least 5), or intransitive (smallest orbit of
//! size 2, 3, 4, or all orbits of size at least 5). Each path starts by
//! relabelling the domain (blocks and orbits become consecutive intervals),
//! often enlarges `G` to a canonical solvable overgroup `H`, and produces
//! conjugators valid for `H`, hence for `G`. Anything that cannot be
//! constructed explicitly is found by a seeded search. Every certificate
//! handed out has been re-checked by [`crate::oracle`].

mod adjust;
mod certificate;
mod intransitive;
mod padding;
mod primitive;
mod relabel;
mod semiregular;
mod solve;
mod transitive;

use thiserror::Error;

use crate::coset::CosetError;
use crate::group::{GroupError, PermGroup};
use crate::oracle::OracleError;
use crate::perm::{PermError, Permutation};

pub use adjust::alternating_adjust;
pub use certificate::WitnessCertificate;
pub use intransitive::intransitive_witness;
pub use padding::pad_base_to_regulars;
pub use primitive::primitive_witness;
pub use semiregular::semiregular_witness;
pub use solve::solve;
pub use transitive::transitive_witness;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("degree {0} is below 5")]
    DegreeTooSmall(usize),
    #[error("group is not solvable")]
    NotSolvable,
    #[error("group is not contained in the ambient group")]
    NotInAmbient,
    #[error("group is not transitive")]
    NotTransitive,
    #[error("group is not primitive")]
    NotPrimitive,
    #[error("group is transitive")]
    NotIntransitive,
    #[error("group is not semiregular")]
    NotSemiregular,
    #[error("tuple is not regular")]
    NotRegular,
    #[error("tuple repeats a coset")]
    RepeatedEntry,
    #[error("tuple length {0} is not 2, 3 or 4")]
    BadTupleLength(usize),
    #[error("sigma is not odd")]
    SigmaNotOdd,
    #[error("sigma does not normalize the group")]
    SigmaDoesNotNormalize,
    #[error("search exhausted: {0}")]
    SearchExhausted(String),
    #[error("oracle rejected the certificate: {0}")]
    Rejected(String),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Conjugators valid for an overgroup `H ≥ G`: `⋂ H^{x_i} = 1`.
#[derive(Debug, Clone)]
pub(crate) struct Construction {
    pub(crate) conjugators: Vec<Permutation>,
    /// Candidate regular 5-tuples; checked before use.
    pub(crate) tuples: Option<Vec<Vec<Permutation>>>,
    pub(crate) trace: Vec<String>,
    pub(crate) overgroup: PermGroup,
    /// An odd element normalizing `overgroup`, when one is known.
    pub(crate) sigma: Option<Permutation>,
}

impl Construction {
    fn plain(conjugators: Vec<Permutation>, group: &PermGroup, tag: &str) -> Construction {
        Construction {
            conjugators,
            tuples: None,
            trace: vec![tag.to_string()],
            overgroup: group.clone(),
            sigma: None,
        }
    }
}
