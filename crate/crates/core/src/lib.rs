#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod fixtures;
pub mod mirror;
pub mod pipeline;
pub mod report;
pub mod ring;
pub mod schubert;
pub mod toric;
pub mod transition;
pub mod verdict;

pub use error::{Error, Result};
pub use verdict::Verdict;
