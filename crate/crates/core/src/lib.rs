//! Homological invariants of incidence algebras of finite posets and lattices.
//!
//! The crate works with the incidence algebra `KP` of a finite poset `P` over
//! an exact field (arbitrary-precision rationals by default, or a prime
//! field). Modules over `KP` are stored as representations of the Hasse
//! quiver, and all homological quantities (minimal projective resolutions,
//! Ext groups, grade, projective dimension, injective coresolutions) are
//! computed by exact linear algebra. On top of that sit the order-theoretic
//! criteria (distributivity, strong/Boolean antichains, upward-linear
//! join-irreducibles, divisor lattices) and exhaustive catalog sweeps that
//! cross-verify the two sides against each other.

pub mod builtin;
pub mod classify;
pub mod enumerate;
pub mod homology;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod linalg;
pub mod poset;
pub mod repr;
pub mod sweep;

pub use classify::{Analysis, AlgebraReport};
pub use lattice::{Antichain, Lattice};
pub use linalg::{Field, Mat, Scalar};
pub use poset::{Poset, Subset};
pub use repr::{Algebra, PosetRep, RepMap};
