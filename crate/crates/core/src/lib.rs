//! Two-parameter quantum groups of classical type: exact R-matrices by three
//! routes and mechanical certificates of their identities.

pub mod affine;
pub mod certify;
pub mod embed;
pub mod export;
pub mod lyndon;
pub mod matrix;
pub mod pairing;
pub mod rep;
pub mod report;
pub mod rmatrix;
pub mod rootdata;
pub mod rootvec;
pub mod scalar;

pub use matrix::{SparseMat, Witness};
pub use rootdata::{Family, Root, RootSystem, Weight};
pub use scalar::{Scalar, ScalarRing};
