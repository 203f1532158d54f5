//! Finite Coxeter groups, their biHecke monoids and Borel submonoids, the
//! blocks/cutting-poset combinatorics, and the associated exact representation
//! theory (translation modules, simple-module dimensions, Cartan and
//! decomposition matrices).
//!
//! The crate is organized around five subsystems:
//!
//! * [`coxeter`] — finite Coxeter groups realized by faithful integer
//!   permutation actions, with weak and Bruhat orders.
//! * [`posets`] — a generic finite-poset toolkit (Möbius function, lattice
//!   predicates, Birkhoff machinery, DOT export).
//! * [`blocks`] — blocks and cutting points of Coxeter group elements, and the
//!   cutting poset.
//! * [`fmonoid`] — a transformation-monoid engine (closure, Green's relations,
//!   idempotents) plus the biHecke specialization.
//! * [`reptheory`] — translation modules, simple-module dimensions, Cartan,
//!   q-Cartan and decomposition matrices over exact rationals.

pub mod bitset;
pub mod blocks;
pub mod coxeter;
pub mod fmonoid;
pub mod linalg;
pub mod posets;
pub mod reptheory;
pub mod verify;

use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid group descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("size cap exceeded: {what} has {size} elements, cap is {cap} (raise with --max-elements)")]
    SizeCap { what: String, size: u128, cap: u128 },
    #[error("elements are incomparable in {order} order")]
    Incomparable { order: char },
    #[error("element is not in the monoid")]
    NotInMonoid,
    #[error("partition does not arise from a monoid element")]
    InvalidPartition,
    #[error("ground set too large for lower-set enumeration: {0} > 25")]
    LowerSetsTooLarge(usize),
    #[error("linear-algebra cap exceeded: dimension {dim} > {cap} (use modular mode)")]
    LinearCap { dim: usize, cap: usize },
    #[error("singular character system: the supplied simple modules are not pairwise non-isomorphic")]
    SingularSystem,
    #[error("iteration guard tripped while computing f^omega")]
    OmegaGuard,
    #[error("cache error: {0}")]
    Cache(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
