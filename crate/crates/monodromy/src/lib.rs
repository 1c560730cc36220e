//! Exact computational toolkit for braid monodromy factorizations of
//! perturbed bidouble covers of the quadric.
//!
//! The crate provides:
//! - exact disk braid group arithmetic with equality via the Artin action
//!   ([`braid`], [`artin`]),
//! - the combinatorial reference fibre with its labeled punctures, arc
//!   catalog, covering monodromy and 2-cable subgroup ([`layout`], [`cable`]),
//! - construction of the global braid monodromy factorization and its
//!   numeric invariants ([`bmf`]),
//! - Hurwitz moves, stabilization, replayable proof scripts and bounded
//!   orbit search ([`hurwitz`]),
//! - the Z/2 homological invariants of the associated triple cover and the
//!   stable-equivalence comparator ([`homology`]),
//! - the bundled verification suite ([`verify`]).

pub mod artin;
pub mod bmf;
pub mod braid;
pub mod cable;
pub mod error;
pub mod homology;
pub mod hurwitz;
pub mod layout;
pub mod perm;
pub mod verify;

pub use braid::BraidWord;
pub use error::{BraidError, HomologyError, LayoutError, MoveError};
pub use layout::{ArcId, Layout, SurfaceParams};
pub use perm::Perm;
