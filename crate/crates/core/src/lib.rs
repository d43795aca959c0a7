//! Contrastive MT challenge-set generation and metric meta-evaluation.

pub mod analysis;
pub mod corpus;
pub mod error;
pub mod evalharness;
pub mod genrules;
pub mod rng;
pub mod text;
pub mod textsim;

pub use error::{Error, Result};
