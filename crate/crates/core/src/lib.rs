//! Dimensions of the first and second de Rham cohomology of nilpotent orbits
//! in the twelve non-compact, non-complex real exceptional Lie algebras.
//!
//! The crate is organized around an embedded orbit [`catalog`], the
//! [`cohomology`] decision rules applied to it, a [`rootsys`] engine for the
//! root-system facts behind the orbit labels, and a [`validate`] suite that
//! ties the three together.

pub mod catalog;
pub mod cli;
pub mod cohomology;
mod error;
pub mod rootsys;
pub mod validate;

pub use catalog::{Catalog, ComponentGroup, OrbitLabel, OrbitRecord, RealForm, RemainderClass};
pub use cohomology::{CohomologyValue, OrbitType};
pub use error::{Error, Result};
