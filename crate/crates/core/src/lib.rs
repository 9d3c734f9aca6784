//! Restricted poset partitions, their generating polynomials, and expansions
//! in the slide and fundamental quasisymmetric bases.

pub mod descent;
pub mod error;
pub mod gen;
pub mod io;
pub mod partitions;
pub mod poly;
pub mod poset;
pub mod restrict;
pub mod schur;
pub mod slide;
pub mod verify;

pub use descent::{StrongComposition, WeakComposition};
pub use error::{Error, Result};
pub use partitions::PPartition;
pub use poly::IntPolynomial;
pub use poset::{LinearOrder, Poset, Relabeling};
pub use restrict::RestrictionMap;
pub use schur::{Flag, PartitionShape, Tableau};
pub use slide::SlideExpansion;
