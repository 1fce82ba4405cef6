//! Exact combinatorics of Kostant partitions for the cyclic quiver, the
//! lowest-weight `ĝl_n` module they span, and the geometry of the strata
//! behind it.

#![no_std]

extern crate alloc;

pub mod check;
pub mod dimvec;
pub mod error;
pub mod heis;
pub mod linalg;
pub mod module;
pub mod op;
pub mod partition;
pub mod poly;
pub mod raiz;
pub mod rational;
pub mod rep;
pub mod strata;

pub use dimvec::DimVec;
pub use error::{Error, Result};
pub use linalg::Matrix;
pub use partition::{enumerate_kostant, enumerate_multipartitions, KostantPartition, Multipartition};
pub use raiz::{Raiz, Residue};
pub use rational::Q;
pub use rep::{partition_from_rep, NilpotentRep};
