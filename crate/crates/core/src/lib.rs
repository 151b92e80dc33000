//! Exact-arithmetic Dedekind and Hardy sums, lattice-point counts for
//! triangles and tetrahedra, generator-word decomposition in the theta
//! subgroup, and signed crossing numbers against an oriented geodesic net.
//! Every closed form has a brute-force oracle next to it and all kernels
//! compute over arbitrary-precision rationals.

pub mod dedekind;
pub mod error;
pub mod exact;
pub mod hardy;
pub mod lattice;
pub mod modgroup;
pub mod net;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{BoundaryPoint, Rational};
pub use modgroup::{GeneratorWord, UniModMatrix};
