//! Signed generalized Petersen graphs up to switching isomorphism.
//!
//! A signature is stored as the bitset of its negative edges. Switching
//! classes are named by [`ClassId`]s, the automorphism group of P(n,1) acts on
//! them, and the orbits of that action are the signed graphs counted up to
//! switching isomorphism.
//!
//! ```
//! use gpg_switch::classify::classify;
//!
//! let c = classify(5).unwrap();
//! assert_eq!(c.class_count(), 64);
//! assert_eq!(c.orbit_count(), 12);
//! ```

pub mod bitset;
pub mod classify;
pub mod commands;
pub mod cycles;
pub mod error;
pub mod graph;
pub mod io;
pub mod signed;
pub mod symmetry;

pub use bitset::{EdgeSet, VertexSet};
pub use error::{Error, Result};
pub use graph::{build_petersen, Graph};
pub use signed::{ClassId, Signature, SwitchSet};
