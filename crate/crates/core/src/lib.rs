//! Sidon sets in `F_2^t`, their associated binary linear codes, exhaustive
//! enumeration of maximal Sidon sets and exact upper bounds on their size.

pub mod bounds;
pub mod catalog;
pub mod codes;
pub mod enumerate;
pub mod gf2core;
pub mod io;
pub mod sidon;

pub use gf2core::{AffineMap, GF2Vector, LinearMap, PointSet};
pub use sidon::{SidonReport, SumBitmap};
