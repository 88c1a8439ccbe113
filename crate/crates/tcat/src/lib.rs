//! Finite strict 2-categories, executable.
//!
//! This crate makes a body of 2-categorical homotopy machinery computable on
//! finite inputs: validated finite categories and strict 2-categories, lax
//! functors and their coherence, slice 2-categories in four dual flavors,
//! Grothendieck integrations, nerves, truncated simplicial homology via Smith
//! normal form, weak-saturation closures, a bounded Bénabou strictification,
//! and a text DSL with a thin command-line front end.
//!
//! Start with the runnable examples (`cargo run -p tcat --example laws`) or
//! the `tcat` binary (`cargo run -p tcat -- validate corpus/e.tcat`).

pub mod cat;
pub mod error;
pub mod functor;
pub mod groth;
pub mod name;
pub mod slice;
pub mod twocat;
pub mod validate;

pub use error::{Error, Result};
pub use name::Name;
