//! Exact integer, rational, polynomial and polynomial-matrix arithmetic.

mod matrix;
mod poly;
mod ratpoly;

pub use matrix::{row_vec_mat, PolyMatrix};
pub use poly::IntPoly;
pub use ratpoly::RatPoly;
