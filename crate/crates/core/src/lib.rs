//! Core domain types for vertically constrained lattice paths.
//!
//! A vertically constrained path is a sequence of steps with `dx >= 0` in
//! which no two consecutive steps are vertical (`dx = 0`). Three step
//! families are supported (Motzkin-, Dyck-, and Schröder-like), each in a
//! half-plane or quarter-plane region, with or without a leading-step
//! restriction, giving twelve path classes. The plain (fully directed)
//! Motzkin and Schröder/Delannoy families are also defined here since the
//! bijections map between the two worlds.

mod class;
mod error;
mod family;
mod filter;
mod path;
mod step;

pub use class::{Leading, PathClass, Region};
pub use error::CoreError;
pub use family::{AnyFamily, Family, PlainFamily};
pub use filter::{check_filter, StepFilter};
pub use path::{format_path, parse_path, validate, LatticePath};
pub use step::StepVector;
