//! Exact characters and states of the infinite hyperoctahedral group
//! `B = Z2 wr S_inf` and its finite subgroups `B_n`.

pub mod bn_irreps;
pub mod classification;
pub mod elements;
pub mod error;
pub mod induced_states;
pub mod linalg;
pub mod numeric_lab;
pub mod partitions;
pub mod random;
pub mod rational;
pub mod thoma;

pub use error::{Error, Result};
pub use rational::Rational;
