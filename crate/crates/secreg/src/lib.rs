pub mod catalog;
pub mod cli;
pub mod coeffs;
pub mod cohom;
pub mod error;
pub mod formulas;
pub mod gb;
pub mod geom;
pub mod linalg;
pub mod poly;
pub mod resolve;
pub mod verify;

pub use error::{Error, Result};
