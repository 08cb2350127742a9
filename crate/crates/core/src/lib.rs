//! Exact symbolic algebra for the two-parameter quantized enveloping family,
//! its co-linking weak Hopf algebra, Casimir quotients, quantum homogeneous
//! spaces and their coactions.

pub mod error;
pub mod casimir;
pub mod coaction;
pub mod freealg;
pub mod homspace;
pub mod linalg;
pub mod pairing;
pub mod pol;
pub mod report;
pub mod scalar;
pub mod suite;
pub mod text;
pub mod uq;

pub use error::{QgalError, Result};
