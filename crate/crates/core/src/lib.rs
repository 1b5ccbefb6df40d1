pub mod braid;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod moves;
pub mod seifert;
pub mod selftest;
pub mod torus;

pub use error::{Error, Result};
