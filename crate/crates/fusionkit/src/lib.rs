//! Exact, certificate-style computation with the small nonabelian objects that
//! show up in local group theory at the prime 2: finite 2-groups given by
//! power-commutator presentations, matrix groups over the field with two
//! elements, first cohomology and extensions with elementary abelian kernel,
//! and saturated fusion systems of finite groups at desk scale.
//!
//! Everything here favors exhaustive verification over cleverness: groups are
//! small enough to enumerate, so predicates are computed literally from their
//! definitions and cross-checked along independent routes wherever two routes
//! exist (stabilizer chain vs. brute-force order, transversal vs. exhaustive
//! conjugation, algebraic complement vs. subgroup search).
//!
//! The crate is organized around five areas:
//!
//! - [`pcgroup`] — 2-groups from power-commutator presentations, including the
//!   builtin Sylow 2-subgroups of `L3(4)` and its extensions by field, graph
//!   and graph-field automorphisms; centers, Thompson subgroups, maximal
//!   elementary abelians, local subgroups.
//! - [`modrep`] — subgroups of `GL4(2)` acting on `F2^4`, in particular the
//!   `A7` and `GL2(4)` subgroups; orbits, commutants, irreducibility.
//! - [`cohomology`] — first cohomology over F2, extension groups built from
//!   2-cocycles, complement search, and a mod-4 lift obstruction solver.
//! - [`fusion`] — permutation groups with stabilizer chains, Sylow
//!   2-subgroups by normalizer climbing, and the fusion system `F_S(G)` with
//!   its subgroup classification predicates and local subsystems.
//! - [`verify`] — named, reproducible checks binding the other modules
//!   together, with machine-readable JSON reports (also exposed through the
//!   `fusionkit` binary).
//!
//! See the `examples/` directory for one runnable program per capability.

pub mod cohomology;
pub mod elemab;
pub mod fusion;
pub mod gf2;
pub mod modrep;
pub mod pcgroup;
pub mod verify;

/// Errors shared across the crate.
///
/// Operations that exhaust an explicit search space carry size preconditions;
/// exceeding them is reported as [`Error::TooLarge`] rather than silently
/// truncating the search.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("inconsistent presentation: {0}")]
    InconsistentPresentation(String),
    #[error("invalid presentation: {0}")]
    InvalidPresentation(String),
    #[error("object too large for exhaustive computation: {0}")]
    TooLarge(String),
    #[error("supplied map is not an automorphism: {0}")]
    NotAutomorphism(String),
    #[error("matrix is singular")]
    Singular,
    #[error("search exhausted after {trials} trials")]
    SearchExhausted { trials: usize },
    #[error("map is not a 2-cocycle: identity fails at {0}")]
    NotACocycle(String),
    #[error("extension does not have the required shape: {0}")]
    ShapeMismatch(String),
    #[error("no fixed-point-free element of order 3 in the designated subgroup")]
    NoFpfElement,
    #[error("subgroup is not weakly closed")]
    NotWeaklyClosed,
    #[error("subgroup is not contained in the Sylow subgroup of the fusion system")]
    NotInSylow,
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
