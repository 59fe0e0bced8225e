pub mod analysis;
pub mod arith;
pub mod classify;
pub mod cli;
pub mod config;
pub mod corpus;
pub mod error;
pub mod hilbert;
pub mod instance;
pub mod module;
pub mod ring;
pub mod rr_depth;
pub mod superficial;

pub use error::{Error, Result};
