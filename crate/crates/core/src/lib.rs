//! Weights of quasi-homogeneous isolated singularities, their monodromy
//! polynomials, Coxeter polynomials of finite posets, and the comparison
//! between the two.
//!
//! Everything is exact: polynomials have arbitrary-precision integer
//! coefficients and q-expressions are kept as products of cyclotomic
//! polynomials until they need to be expanded.

pub mod algebra;
pub mod weights;
pub mod posets;
pub mod criterion;
pub mod json;
