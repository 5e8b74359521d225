//! Exact enumeration and certification of maximal lattice-free
//! integral polytopes in dimension 3.
//!
//! All geometry is exact: the fast layer works on `i64` lattice points
//! with `i128` intermediates, the public layer on arbitrary-precision
//! rationals. No floating point anywhere in the computation path.

pub mod classify;
pub mod formats;
pub mod search;
pub mod hullcore;
pub mod lattice;
pub mod latpoly;
pub mod maximality;
pub mod oracle2d;
pub mod poly2;
pub mod poly3;
pub mod rat;
pub mod report;
pub mod unimod;

pub use lattice::{LatticeDiameterWitness, LatticeError, WidthCertificate};
pub use latpoly::{LatPoint, LatPolytope};
pub use maximality::MaximalityVerdict;
pub use poly2::{Point2, Polygon};
pub use poly3::{Point3, Polytope};
pub use rat::{Int, Rat};
pub use unimod::{UniMap2, UniMap3};
