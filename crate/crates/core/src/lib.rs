//! Symmetric sequences, ring objects and symmetric spectra over finite pointed
//! sets, the correspondence categories built from them, and an exhaustive
//! checker for every diagram those constructions are required to satisfy.

pub mod corrcat;
pub mod error;
pub mod homology;
pub mod permgroup;
pub mod ptset;
pub mod ringmod;
pub mod spectral;
pub mod sset;
pub mod symseq;
pub mod verify;

pub use error::{Error, Result};
