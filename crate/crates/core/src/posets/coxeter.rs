//! Coxeter matrix `C = -L·(L⁻¹)ᵀ` of a poset, `L` the zeta matrix.
//!
//! `L⁻¹` is the Möbius matrix, so `C[a][b] = -Σ_{k ≥ a} μ(b, k)`. The matrix
//! is returned in the poset's own element indexing; a linear extension is
//! only used to order the Möbius recursion. Conjugating by the permutation to
//! a linear extension gives the triangular form, so the characteristic
//! polynomial does not depend on this choice.

use num_bigint::BigInt;
use num_traits::{CheckedAdd, CheckedSub, One, Zero};

use super::Poset;
use crate::algebra::{charpoly, IntMatrix, IntPolynomial};

pub fn coxeter_matrix(p: &Poset) -> IntMatrix {
    let entries = match entries::<i64>(p) {
        Some(small) => small.into_iter().map(BigInt::from).collect(),
        None => entries::<BigInt>(p).expect("big integers do not overflow"),
    };
    IntMatrix::from_flat(p.len(), entries).expect("square by construction")
}

pub fn coxeter_polynomial(p: &Poset) -> IntPolynomial {
    charpoly(&coxeter_matrix(p))
}

impl Poset {
    pub fn coxeter_matrix(&self) -> IntMatrix {
        coxeter_matrix(self)
    }

    pub fn coxeter_polynomial(&self) -> IntPolynomial {
        coxeter_polynomial(self)
    }
}

trait Entry: Clone + Zero + One + CheckedAdd + CheckedSub {}

impl Entry for i64 {}

impl Entry for BigInt {}

/// Row-major entries of `C`, or `None` on overflow.
fn entries<T: Entry>(p: &Poset) -> Option<Vec<T>> {
    let n = p.len();
    let order = p.linear_extension();
    let mut position = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        position[v] = pos;
    }
    let mut c = vec![T::zero(); n * n];
    let mut mu = vec![T::zero(); n];
    for b in 0..n {
        // μ(b, ·) along the upset of b in linear-extension order
        let mut upset: Vec<usize> = p.upset(b).ones().collect();
        upset.sort_unstable_by_key(|&v| position[v]);
        mu[b] = T::one();
        for &y in &upset[1..] {
            let mut acc = T::zero();
            for z in p.upset(b).intersection(p.downset(y)) {
                if z != y {
                    acc = acc.checked_add(&mu[z])?;
                }
            }
            mu[y] = T::zero().checked_sub(&acc)?;
        }
        // C[a][b] = -Σ_{k ≥ b, k ≥ a} μ(b, k)
        for &k in &upset {
            if mu[k].is_zero() {
                continue;
            }
            for a in p.downset(k).ones() {
                let slot = &mut c[a * n + b];
                *slot = slot.checked_sub(&mu[k])?;
            }
        }
        for &k in &upset {
            mu[k] = T::zero();
        }
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::posets::{antichain, chain};

    #[test]
    fn small_matrices() {
        assert_eq!(coxeter_matrix(&chain(1)), IntMatrix::from_i64_rows(&[vec![-1]]).unwrap());
        assert_eq!(
            coxeter_matrix(&chain(2)),
            IntMatrix::from_i64_rows(&[vec![0, -1], vec![1, -1]]).unwrap()
        );
        assert_eq!(coxeter_matrix(&antichain(2)), IntMatrix::identity(2).neg());
    }

    #[test]
    fn chains_give_q_integers() {
        for k in 1..12 {
            let expected = IntPolynomial::from_coeffs(vec![BigInt::from(1); k + 1]);
            assert_eq!(coxeter_polynomial(&chain(k)), expected);
        }
    }

    #[test]
    fn big_integer_path_agrees() {
        let p = chain(3).product(&antichain(2)).product(&chain(2));
        let small: Vec<BigInt> = entries::<i64>(&p).unwrap().into_iter().map(BigInt::from).collect();
        assert_eq!(small, entries::<BigInt>(&p).unwrap());
    }
}
