//! Skew stable Grothendieck polynomials and their duals over ℚ[β].

pub mod beta;
pub mod error;
pub mod grothendieck;
pub mod lr;
pub mod noncomm;
pub mod oracle;
pub mod partition;
pub mod ring;
pub mod serialize;
pub mod supersym;
pub mod symfunc;
pub mod tableau;
pub mod verify;

pub use beta::BetaPoly;
pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};
pub use symfunc::SymFunc;
