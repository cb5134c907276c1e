//! Exact orbit-method computations for classical nilpotent and nil-Dynkin
//! Lie algebras.

pub mod cascade;
pub mod centgen;
pub mod cli;
pub mod coadj;
pub mod criterion;
pub mod envalg;
pub mod error;
pub mod liealg;
pub mod linalg;
pub mod linform;
pub mod random;
pub mod rational;
pub mod rootsys;
pub mod symalg;

pub use error::{Error, Result};
pub use rational::Rational;
pub use rootsys::{OrderSpec, Root, SystemType, Window};
