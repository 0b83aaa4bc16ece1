//! Exact integer polynomial arithmetic, cyclotomic polynomials, number-theoretic
//! helpers and exact characteristic polynomials of integer matrices.

mod cyclotomic;
mod matrix;
pub(crate) mod modular;
pub mod ntheory;
mod poly;

use num_bigint::BigInt;
use thiserror::Error;

pub use cyclotomic::{cyclotomic, factor_cyclotomic, q_integer, value_at_one, CyclotomicProduct};
pub use matrix::{charpoly, IntMatrix};
pub use ntheory::{divisors, gcd_all, lcm_all, mobius, totient};
pub use poly::IntPolynomial;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("cyclotomic factor Φ{index} has negative exponent {exponent}")]
    NegativeExponent { index: u64, exponent: i64 },
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
}

/// Representative of `p` modulo `t^modulus - 1` of degree below `modulus`,
/// obtained by folding the coefficient of `t^k` onto `t^{k mod modulus}`.
pub fn reduce_mod_cyclic(p: &IntPolynomial, modulus: u64) -> IntPolynomial {
    assert!(modulus >= 1, "reduce_mod_cyclic: modulus must be positive");
    let d = modulus as usize;
    let mut folded = vec![BigInt::default(); d.min(p.coeffs().len().max(1))];
    for (k, c) in p.coeffs().iter().enumerate() {
        folded[k % d] += c;
    }
    IntPolynomial::from_coeffs(folded)
}
