//! Exact computation with good semigroups `S ⊆ N^h` and their relative
//! ideals.
//!
//! Infinite sets are handled through [`TruncatedSet`]: a lower bound, a
//! conductor bound and the finitely many members in between. See the
//! `examples/` directory for one runnable program per capability.

pub mod algebra;
pub mod canonical;
pub mod commands;
pub mod error;
pub mod fixtures;
pub mod format;
pub mod generator;
pub mod lattice;
pub mod render;
pub mod report;
pub mod semigroup;
pub mod set;
pub mod structure;
pub mod validate;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Point, Window};
pub use report::{Check, Report, Status};
pub use semigroup::GoodSemigroup;
pub use set::TruncatedSet;
