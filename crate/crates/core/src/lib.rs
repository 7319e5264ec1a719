//! Chart-level log geometry over fs monoids.
//!
//! Affine monoids live inside integer lattices. On top of exact integer
//! linear algebra and rational polyhedral cones this crate decides exactness
//! and integrality of monoid homomorphisms, computes fs push-outs and log
//! blow-up chart covers, and runs the two constructive pipelines: making a
//! chart exact by blowing up the base, and making it integral by a fan
//! subdivision with a smooth base.

pub mod blowup;
pub mod error;
pub mod fan;
pub mod lattice;
pub mod monoid;
pub mod morphism;
pub mod pipeline;

pub use error::{Error, Result};
pub use lattice::{Cone, Int, IntMatrix, IntVector};
pub use monoid::{AffineMonoid, Face, MonoidIdeal, Sharpening};
pub use morphism::MonoidHom;
