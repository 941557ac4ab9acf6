//! Cyclically presented groups defined by a positive length-four word: orbit
//! classification, decision procedures, coset enumeration, abelianization and
//! centralizer witnesses.

pub mod arith;
pub mod census;
pub mod centralizer;
pub mod classify;
pub mod conditions;
pub mod coset;
pub mod error;
pub mod fp;
pub mod parse;
pub mod resultant;
pub mod shiftext;
pub mod smallcanc;
pub mod snf;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
