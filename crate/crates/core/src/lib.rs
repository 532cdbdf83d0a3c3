pub mod catalog;
pub mod coeff;
pub mod content;
pub mod error;
pub mod groebner;
pub mod parse;
pub mod poly;
pub mod report;
pub mod rings;
pub mod verify;

pub use error::{Error, Result};
