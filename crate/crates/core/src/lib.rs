//! Exact counting of non-intersecting path families on upward planar drawings.

pub mod aztec;
pub mod drawing;
pub mod error;
pub mod format;
pub mod geom;
pub mod instances;
pub mod involution;
pub mod lattices;
pub mod pathcount;
pub mod poly;
pub mod selftest;

pub use drawing::{Drawing, LatticePath, MarkedConfig};
pub use error::{Error, Result};
pub use pathcount::{Limits, PathFamily, SignedMatrixResult};
pub use poly::{PolyMatrix, WeightPoly};
