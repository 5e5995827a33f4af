//! Springer fibers of nilpotent operators with two Jordan blocks.
//!
//! * [`tableau`]: tableaux, ψ-words, ordered pairs and decompositions.
//! * [`strata`]: the affine paving of the fiber by choice words.
//! * [`tower`]: iterated-bundle structure and closed descriptions of components.
//! * [`grothendieck`]: polynomial classes in `L`.
//! * [`finfield`]: brute-force point counts over `F_t`.
//! * [`cli`]: the `springer` command line.

pub mod cli;
pub mod finfield;
pub mod grothendieck;
pub mod strata;
pub mod tableau;
pub mod tower;
pub mod verify;

pub use grothendieck::MotiveClass;
pub use strata::{enumerate_strata, fiber_class, StratumWord};
pub use tableau::{enumerate_standard, Tableau, TwoColumnTableau};
pub use tower::{closed_conditions, motive_of, normalize, tower_of};
