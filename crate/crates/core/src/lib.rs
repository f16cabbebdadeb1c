//! Euler characteristics, component-group multiplicities and graded Betti numbers
//! of Springer fibers for classical groups, computed exactly.

pub mod agroup;
pub mod betti;
pub mod cache;
pub mod cli;
pub mod error;
pub mod euler;
pub mod exctables;
mod json;
pub mod partition;
pub mod restrict;
pub mod symfunc;
pub mod tworow;
pub mod verify;

pub use error::{Error, Result};
