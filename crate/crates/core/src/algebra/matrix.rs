//! Square integer matrices and their exact characteristic polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::modular::{large_primes, Modulus};
use super::poly::IntPolynomial;
use super::AlgebraError;

/// A dense `n × n` matrix over ℤ, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![BigInt::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self, AlgebraError> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(AlgebraError::NotSquare { rows: n, cols: bad.len() });
        }
        Ok(Self { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, AlgebraError> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    /// Build from a row-major entry vector of length `n²`.
    pub fn from_flat(n: usize, entries: Vec<BigInt>) -> Result<Self, AlgebraError> {
        if entries.len() != n * n {
            return Err(AlgebraError::NotSquare { rows: n, cols: entries.len() / n.max(1) });
        }
        Ok(Self { n, entries })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[j * n + i] = self.entries[i * n + j].clone();
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self { n: self.n, entries: self.entries.iter().map(|x| -x).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "dimension mismatch");
        let n = self.n;
        let mut out = Self::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Kronecker product; index `(i, j)` of the blocks maps to `i·m + j`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.n, other.n);
        let mut out = Self::zeros(n * m);
        for i1 in 0..n {
            for j1 in 0..n {
                let a = &self.entries[i1 * n + j1];
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..m {
                    for j2 in 0..m {
                        let row = i1 * m + i2;
                        let col = j1 * m + j2;
                        out.entries[row * n * m + col] = a * &other.entries[i2 * m + j2];
                    }
                }
            }
        }
        out
    }

    /// `Pᵀ M P` for the permutation matrix sending basis vector `j` to `perm[j]`,
    /// i.e. the entry at `(i, j)` of the result is `M[perm[i]][perm[j]]`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.n;
        assert_eq!(perm.len(), n);
        let mut out = Self::zeros(n);
        for i in 0..n {
            for j in 0..n {
                out.entries[i * n + j] = self.entries[perm[i] * n + perm[j]].clone();
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| &self.entries[i * self.n + i]).sum()
    }

    /// Monic characteristic polynomial `det(tI - M)`, computed exactly.
    ///
    /// The matrix is reduced to upper Hessenberg form modulo enough 62-bit
    /// primes to cover a Hadamard-type bound on the coefficients, and the
    /// coefficients are rebuilt by Chinese remaindering.
    pub fn charpoly(&self) -> IntPolynomial {
        let n = self.n;
        if n == 0 {
            return IntPolynomial::one();
        }
        let bits = self.coefficient_bound_bits();
        // each prime contributes at least 61 bits; one extra bit covers the sign
        let count = (bits + 1).div_ceil(61) + 1;
        let primes = large_primes(count);
        let residues: Vec<Vec<u64>> = primes
            .par_iter()
            .map(|&p| {
                let m = Modulus::new(p);
                let mut a: Vec<u64> = self.entries.iter().map(|x| m.reduce_bigint(x)).collect();
                charpoly_mod(&mut a, n, &m)
            })
            .collect();
        IntPolynomial::from_coeffs(crt_symmetric(&primes, &residues))
    }

    /// Upper bound, in bits, on the absolute value of every charpoly coefficient.
    ///
    /// The coefficient of `t^{n-k}` is a sum of `k × k` principal minors, each
    /// bounded by the product of its row norms, so it is at most
    /// `e_k(r_1, …, r_n) <= Π (1 + r_i)` with `r_i` the Euclidean row norms.
    /// The same holds for columns; the smaller total is used.
    fn coefficient_bound_bits(&self) -> usize {
        let n = self.n;
        let mut row_sq = vec![0f64; n];
        let mut col_sq = vec![0f64; n];
        for i in 0..n {
            for j in 0..n {
                let x = &self.entries[i * n + j];
                if x.is_zero() {
                    continue;
                }
                let v = x.abs().to_f64().unwrap_or(f64::MAX);
                row_sq[i] += v * v;
                col_sq[j] += v * v;
            }
        }
        let total = |sq: &[f64]| -> f64 { sq.iter().map(|s| (1.0 + s.sqrt()).log2()).sum() };
        let bits = total(&row_sq).min(total(&col_sq));
        // headroom for floating-point rounding in the estimate
        (bits * (1.0 + 1e-9)).ceil() as usize + 2
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries((0..self.n).map(|i| self.row(i).iter().map(|x| x.to_string()).collect::<Vec<_>>()))
            .finish()
    }
}

/// Charpoly coefficients (ascending) of an `n × n` matrix modulo a prime.
/// The input buffer is overwritten with its Hessenberg form.
fn charpoly_mod(a: &mut [u64], n: usize, m: &Modulus) -> Vec<u64> {
    hessenberg_in_place(a, n, m);
    hessenberg_charpoly(a, n, m)
}

fn hessenberg_in_place(a: &mut [u64], n: usize, m: &Modulus) {
    let mut mults: Vec<(usize, u64, u64)> = Vec::with_capacity(n);
    for col in 0..n.saturating_sub(2) {
        let pivot = col + 1;
        let Some(r) = (pivot..n).find(|&r| a[r * n + col] != 0) else {
            continue;
        };
        if r != pivot {
            for j in 0..n {
                a.swap(r * n + j, pivot * n + j);
            }
            for i in 0..n {
                a.swap(i * n + r, i * n + pivot);
            }
        }
        let inv = m.inv(a[pivot * n + col]);
        mults.clear();
        let (head, tail) = a.split_at_mut((pivot + 1) * n);
        let pivot_row = &head[pivot * n..];
        for (offset, row) in tail.chunks_exact_mut(n).enumerate() {
            let x = row[col];
            if x == 0 {
                continue;
            }
            let u = m.mul(x, inv);
            let u_sh = m.shoup(u);
            for j in col..n {
                row[j] = m.sub(row[j], m.mul_shoup(u, u_sh, pivot_row[j]));
            }
            mults.push((pivot + 1 + offset, u, u_sh));
        }
        if mults.is_empty() {
            continue;
        }
        // similarity: column `pivot` += Σ u_i · column i
        for row in a.chunks_exact_mut(n) {
            let mut acc = row[pivot];
            for &(i, u, u_sh) in &mults {
                let x = row[i];
                if x != 0 {
                    acc = m.add(acc, m.mul_shoup(u, u_sh, x));
                }
            }
            row[pivot] = acc;
        }
    }
}

/// Characteristic polynomial of an upper Hessenberg matrix by the standard
/// recurrence on leading principal submatrices.
fn hessenberg_charpoly(h: &[u64], n: usize, m: &Modulus) -> Vec<u64> {
    let mut polys: Vec<Vec<u64>> = Vec::with_capacity(n + 1);
    polys.push(vec![1]);
    for k in 1..=n {
        let prev = &polys[k - 1];
        let diag = h[(k - 1) * n + (k - 1)];
        let mut next = vec![0u64; k + 1];
        for (i, &c) in prev.iter().enumerate() {
            next[i + 1] = m.add(next[i + 1], c);
            next[i] = m.sub(next[i], m.mul(diag, c));
        }
        let mut beta = 1u64;
        for i in (1..k).rev() {
            beta = m.mul(beta, h[i * n + (i - 1)]);
            if beta == 0 {
                break;
            }
            let coef = m.mul(h[(i - 1) * n + (k - 1)], beta);
            if coef == 0 {
                continue;
            }
            let c_sh = m.shoup(coef);
            for (j, &c) in polys[i - 1].iter().enumerate() {
                next[j] = m.sub(next[j], m.mul_shoup(coef, c_sh, c));
            }
        }
        polys.push(next);
    }
    polys.pop().expect("n >= 1")
}

/// Chinese remaindering of coefficient vectors into the symmetric range.
fn crt_symmetric(primes: &[u64], residues: &[Vec<u64>]) -> Vec<BigInt> {
    let len = residues[0].len();
    let mut values = vec![BigInt::zero(); len];
    let mut modulus = BigInt::one();
    for (&p, res) in primes.iter().zip(residues) {
        let m = Modulus::new(p);
        let inv = m.inv(m.reduce_bigint(&modulus));
        for (v, &r) in values.iter_mut().zip(res) {
            let current = m.reduce_bigint(v);
            let t = m.mul(m.sub(r, current), inv);
            if t != 0 {
                *v += &modulus * t;
            }
        }
        modulus *= p;
    }
    let half = &modulus >> 1;
    for v in &mut values {
        if *v > half {
            *v -= &modulus;
        }
    }
    values
}

/// Characteristic polynomial of a square integer matrix.
pub fn charpoly(m: &IntMatrix) -> IntPolynomial {
    m.charpoly()
}
