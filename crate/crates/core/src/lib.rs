pub mod analysis;
pub mod builders;
pub mod cli;
pub mod domain;
pub mod error;
pub mod json;
pub mod linalg;
pub mod matrix;
pub mod pairs;
pub mod poly;
pub mod random;
pub mod scalar;
pub mod symbolic;
pub mod verify;

pub use error::{Error, Result};
