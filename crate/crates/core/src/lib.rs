//! Exact computations for linear sections of the Grassmannian Gr(2,n) and
//! of the Pfaffian variety of degenerate skew forms.

pub mod algebra;
pub mod bwb;
pub mod cli;
pub mod error;
pub mod geometry;
pub(crate) mod json;
pub mod pfaffian;
pub mod schur;
pub mod sections;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
