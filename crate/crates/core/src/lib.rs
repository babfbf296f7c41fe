pub mod error;
pub mod qscalar;
pub mod weblambda;
pub mod xyring;
pub mod annulus11;
pub mod linalg;
pub mod verify;
mod text;

pub use error::{Error, ParseError, Result};
