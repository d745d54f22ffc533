//! Permutation groups, stabilizer chains and certificates that a solvable
//! subgroup `G` of `S_n` or `A_n` (`n ≥ 5`) has at most five conjugates
//! intersecting trivially.
//!
//! The crate is layered bottom-up:
//!
//! - [`perm`]: permutations and cycle notation;
//! - [`group`]: generator-based groups, Schreier–Sims, blocks, solvability;
//! - [`coset`]: the action of the ambient group on right cosets;
//! - [`witness`]: certificate construction;
//! - [`oracle`]: brute-force verification independent of [`witness`];
//! - [`corpus`]: named families and the catalog of solvable subgroups.

pub mod ambient;
pub mod config;
pub mod coset;
pub mod corpus;
pub mod group;
pub mod oracle;
pub mod perm;
pub mod witness;

pub use ambient::Ambient;
pub use config::Config;
pub use coset::{Coset, CosetSpace, CosetTuple};
pub use group::{BlockSystem, PermGroup, StabilizerChain};
pub use perm::{Parity, Permutation};
pub use witness::{solve, WitnessCertificate, WitnessError};
