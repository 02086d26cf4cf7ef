pub mod error;
pub mod linalg;
pub mod matroid;
pub mod os;
pub mod par;
pub mod positivity;
pub mod report;
pub mod resonance;
pub mod sample;

pub use error::{Error, Result};
