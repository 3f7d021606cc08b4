pub mod cli;
pub mod error;
pub mod euler;
pub mod kernel;
pub mod numerics;
pub mod spectral;
pub mod variational;

pub use error::{Error, Result};
