//! Minimal additive complements of eventually periodic subsets of `Z^d`.
//!
//! A set `W` is a complement of `W'` when `W + W' = Z^d`; it is a *minimal*
//! complement when no proper subset of `W'` still complements `W`. This crate
//! decides, for eventually periodic `W` (a finite sporadic part plus finitely
//! many translates of a full-rank lattice cone), whether a minimal complement
//! exists, and produces checkable certificates and explicit witness sets.
//!
//! Module layout:
//! * [`zlattice`]: full-rank period lattices, Smith normal form, quotients.
//! * [`finitegrp`]: minimal complements inside finite abelian groups.
//! * [`epsets`]: eventually periodic sets, canonical decomposition, parsing.
//! * [`decide`]: the three-valued existence decision over residue data.
//! * [`witness`]: explicit witness complements and window verification.
//! * [`oracle`]: naive reference implementations used for cross-checking.
//! * [`gallery`]: worked families of examples.
//!
//! The `parallel` feature (default) runs the subset searches and window
//! verification on a rayon pool; results are identical to the sequential
//! order in all cases.

pub mod decide;
pub mod epsets;
pub mod finitegrp;
pub mod gallery;
pub mod oracle;
pub mod search;
pub mod witness;
pub mod zlattice;
