//! Finite order theory: posets as reachability bit-matrices, the
//! Dedekind-MacNeille and Bruns-Lakser completions, relative annihilators and
//! the proHeyting extension, the finitary Bruns-Lakser tower, Birkhoff duality
//! for finite distributive lattices, and an exhaustive verifier that checks
//! the completion theorems on every small lattice and poset.
//!
//! Module map:
//!
//! * [`subset`], [`poset`], [`lattice`], [`generate`], [`iso`], [`io`]: the
//!   order-theory substrate.
//! * [`completion`]: normal ideals, D-ideals and the two completions.
//! * [`tower`]: annihilators, generated sublattices, classification, towers.
//! * [`duality`]: dual spaces and the operator algebra on them.
//! * [`harness`]: instance enumeration, the theorem suite and reports.

pub mod completion;
pub mod duality;
pub mod error;
pub mod generate;
pub mod harness;
pub mod io;
pub mod iso;
pub mod lattice;
pub mod poset;
pub mod subset;
pub mod tower;

pub use completion::{CompletionKind, CompletionLattice};
pub use error::{Error, Result};
pub use lattice::Lattice;
pub use poset::Poset;
pub use subset::Subset;
