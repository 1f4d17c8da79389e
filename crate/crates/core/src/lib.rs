//! Combinatorics and exact algebra for type A nilpotent Springer varieties.
//!
//! Highest forms of nilpotent matrices, the bijection between circle-fixed points and
//! permissible fillings, dimension-pair rolldowns, Billey restrictions of equivariant Schubert
//! classes, and exact rank checks of the resulting restriction matrices.

pub mod basis;
pub mod billey;
pub mod cli;
pub mod error;
pub mod filling;
pub mod fixed_points;
pub mod matrix_forms;
pub mod partition;
pub mod perm;
pub mod pinball;
pub mod poly;
pub mod rank;

pub use error::{Error, Result};
pub use filling::Filling;
pub use fixed_points::HessenbergFunction;
pub use matrix_forms::{NilMatrix, WeightAssignment};
pub use partition::Partition;
pub use perm::Permutation;
pub use poly::{LinForm, MultiPoly, UniPoly};
