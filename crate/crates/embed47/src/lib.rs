//! Isotopy classification of smooth embeddings of closed simply-connected
//! 4-manifolds into 7-space, computed exactly over the integers.
//!
//! The crate enumerates the values of the Boechat-Haefliger invariant of a
//! manifold given by its intersection form, counts and lists the isotopy
//! classes over each value via the Kreck invariant, models the connected-sum
//! action of the group of knotted 4-spheres, and computes the underlying
//! surgery data: intersection forms of 8-manifolds spanned by framed links,
//! the Eells-Kuiper class of their boundary spheres, the Kreck obstruction
//! and the obstruction-block algebra.
//!
//! All arithmetic is arbitrary-precision integer or exact rational; there is
//! no floating point anywhere.

pub mod classify;
pub mod cli;
pub mod error;
pub mod exactlinalg;
pub mod lattice;
pub mod manifold4;
pub mod surgery;

pub use error::{Error, Result};
