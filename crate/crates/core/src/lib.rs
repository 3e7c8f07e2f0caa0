//! Set families over ground sets `[n] = {1, ..., n}` with `n <= 24`.

pub mod colex;
pub mod compression;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod format;
pub mod predicates;
pub mod rational;
pub mod set;
pub mod stability;
pub mod verify;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use family::Family;
pub use rational::Frac;
pub use set::{ElementSet, GroundSize, MAX_GROUND};
