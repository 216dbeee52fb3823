//! Vector-space bases of `k[x1..xn]/I(P)` for finite point sets `P` over a
//! prime field, normal forms with respect to those bases, and a pipeline that
//! reverse engineers polynomial dynamical systems from time series.

pub mod bases;
pub mod bm;
pub mod cli;
pub mod error;
pub mod field;
pub mod grn;
pub mod matrix;
pub mod normalform;
pub mod points;
pub mod poly;
pub mod preprocess;

pub use error::{Error, Result};
pub use field::{FieldElement, PrimeField};
pub use matrix::Matrix;
pub use points::PointSet;
pub use poly::{Monomial, MonomialOrder, Polynomial};
