//! Koszul resolutions over representation rings of simply connected compact
//! semisimple Lie groups, and the K-theory computation they drive.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`]: root data, weights, Weyl groups and dimensions.
//! * [`repring`]: exact arithmetic in `R(K) = Z[w_1, ..., w_N]` and `R(T) = Z[P]`,
//!   characters, restriction and augmentation.
//! * [`homology`]: Smith normal form and homology of free `Z`-complexes.
//! * [`koszul`]: the augmented Koszul complex on `w_j - d_j`, its contracting
//!   homotopy and exactness certificates.
//! * [`ktheory`]: the resulting even/odd K-groups, the comparison map into
//!   differential forms on the torus, and the Weyl-invariance checks.
//! * [`verify`]: the full verification suite used by the command-line tool.

pub mod cartan;
mod error;
pub mod homology;
pub mod koszul;
pub mod ktheory;
mod limits;
pub mod repring;
pub mod verify;

pub use cartan::{build_cartan, parse_type, weyl_action, weyl_dimension, weyl_group, CartanDatum, Weight, WeylElement};
pub use error::{Error, Result};
pub use homology::{FgAbGroup, IntMatrix};
pub use koszul::{KoszulComplex, KoszulElement};
pub use ktheory::{KTheoryReport, TorusForm};
pub use limits::{Limits, CAP_CELLS_ENV};
pub use repring::{LaurentWeightPoly, RepRingPoly};

/// Version tag written into every JSON report.
pub const SCHEMA_VERSION: &str = "1";
