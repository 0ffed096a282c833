//! Exact computations for the (g,K)-module structure of principal series
//! representations of Sp(3,R).

pub mod arith;
pub mod clebsch;
pub mod cli;
pub mod contiguous;
pub mod error;
pub mod glmodule;
pub mod gtpattern;
pub mod linalg;
pub mod sp6;
pub mod uea;
pub mod verify;
pub mod whittaker;

pub use error::{Error, Result};
