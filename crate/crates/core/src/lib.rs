//! Exact deformation cohomology for Yetter-Drinfel'd modules, Hopf modules
//! and Hopf bimodules over finite-dimensional bialgebras.

pub mod bialgebra;
pub mod bicomplex;
pub mod conventions;
pub mod double;
pub mod error;
pub mod io;
pub mod linalg;
pub mod structures;

pub use error::{Error, Result};
