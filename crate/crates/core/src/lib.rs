//! Exact combinatorics for the log-geometric model of the framed little
//! disks operad.
//!
//! * [`trees`]: stable trees, grafting, the symmetric group action and
//!   stratum enumeration for genus-zero moduli spaces.
//! * [`logspace`]: normal-crossings log descriptors and monomial maps
//!   between them.
//! * [`flc`]: the operad of decorated log descriptors, its composition maps,
//!   forgetful maps to the log point and the equivariant `Comm^G` operads.
//! * [`betti`]: finite-field point counts and Poincaré polynomials.
//! * [`weights`]: weight spectral sequence tables, purity identities and
//!   acyclicity certificates.
//! * [`bv`]: a rewriting engine for the BV and Gerstenhaber operads, the
//!   formal cooperad model and the little-disks fiber computation.
//! * [`verify`]: the aggregate acceptance checks used by `verify-all`.

pub mod betti;
pub mod bv;
pub mod error;
pub mod flc;
pub mod logspace;
pub mod poly;
pub mod trees;
pub mod verify;
pub mod weights;

pub use error::{Error, Result};
pub use poly::PoincarePolynomial;
pub use trees::{enumerate_all_trees, enumerate_trees, LeafSet, Permutation, StableTree};
