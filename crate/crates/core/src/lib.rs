pub mod algebra;
pub mod approximation;
pub mod duality;
pub mod error;
pub mod gorenstein;
pub mod homological;
pub mod linear;
pub mod stable;
pub mod support;

pub use error::{Error, Result};
