//! Exact linear algebra and representation theory for graded affine Hecke
//! algebras: root data, Weyl groups, class functions, modules and the Koszul
//! complex computing Ext-groups between finite-dimensional modules.

pub mod charpair;
pub mod error;
pub mod hecke;
pub mod homology;
pub mod linalg;
pub mod partitions;
pub mod rational;
pub mod rootsys;
pub mod sparse;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
pub use linalg::Matrix;
pub use rational::Q;
pub use rootsys::{Family, RootDatum};
pub use weyl::{ConjClassSet, ExtendedGroupTable, WeylGroupTable};
