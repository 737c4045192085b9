pub mod cli;
pub mod coordalg;
pub mod corep;
pub mod fodc;
mod error;
pub mod haar;
pub mod podles;
pub mod qscalar;
pub mod report;
pub mod sample;
pub mod spectral;
pub mod uq;
pub mod verify;

pub use error::AlgebraError;
