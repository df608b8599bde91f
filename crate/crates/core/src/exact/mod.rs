//! Exact arithmetic substrate: Gaussian rationals, dense polynomials,
//! truncated jets, matrices, and the product-tree kernel.

pub mod gaussian;
pub mod jet;
pub mod matrix;
pub mod num;
pub mod poly;
pub mod product;
pub mod ring;

pub use gaussian::{abs_lower, abs_upper, GaussianInt, GaussianRational, Height};
pub use jet::Jet;
pub use matrix::Matrix;
pub use poly::Poly;
pub use product::{product_tree, product_tree_seq, FactoredProduct, PRODUCT_TREE_BASE};
pub use ring::Ring;
