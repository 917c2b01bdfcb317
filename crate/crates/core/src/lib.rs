//! Symbolic and numeric verification of compact quantum group computations.

pub mod freewords;
pub mod hopf;
pub mod ncalg;
pub mod qgroups;
pub mod repnum;
pub mod rieffel;
pub mod scalar;

pub use ncalg::{NCPoly, Presentation, Word};
pub use scalar::{Assignment, PhaseExp, Radical, Scalar, ScalarError};
