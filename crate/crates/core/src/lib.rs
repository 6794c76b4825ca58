pub mod alexander;
pub mod arith;
pub mod certify;
pub mod cli;
pub mod cyclo;
pub mod elim;
pub mod error;
pub mod fixtures;
pub mod irred;
pub mod pipeline;
pub mod words;

pub use error::{Error, Result};
pub use fixtures::FixtureRegistry;
