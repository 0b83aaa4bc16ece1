//! Slow, independent reference computations used to cross-check the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Rows = Vec<Vec<BigInt>>;

pub fn big_rows(rows: &[Vec<i64>]) -> Rows {
    rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
}

/// Characteristic polynomial `det(tI - A)` by Faddeev–LeVerrier, ascending coefficients.
pub fn leverrier(a: &Rows) -> Vec<BigInt> {
    let n = a.len();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::one();
    let mut m = vec![vec![BigInt::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1}·I
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        let trace: BigInt = (0..n).map(|i| am[i][i].clone()).sum();
        let (q, r) = trace.div_rem(&BigInt::from(k));
        assert!(r.is_zero(), "Leverrier division is exact");
        coeffs[n - k] = -q;
    }
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

pub fn matmul(a: &Rows, b: &Rows) -> Rows {
    let n = a.len();
    let mut out = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][k] * &b[k][j];
            }
        }
    }
    out
}

/// Fraction-free determinant.
pub fn bareiss_det(a: &Rows) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coxeter matrix `-L·(L⁻¹)ᵀ` with the inverse taken by rational Gauss–Jordan.
pub fn coxeter_oracle(n: usize, leq: impl Fn(usize, usize) -> bool) -> Rows {
    let zeta: Vec<Vec<BigRational>> = (0..n)
        .map(|i| (0..n).map(|j| BigRational::from_integer(BigInt::from(leq(i, j) as i64))).collect())
        .collect();
    let inv = rational_inverse(&zeta);
    let mut c = vec![vec![BigInt::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut acc = BigRational::zero();
            for k in 0..n {
                acc += &zeta[i][k] * &inv[j][k];
            }
            assert!(acc.is_integer());
            c[i][j] = -acc.to_integer();
        }
    }
    c
}

fn rational_inverse(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !m[r][col].is_zero()).expect("invertible");
        m.swap(col, pivot);
        let p = m[col][col].clone();
        for v in m[col].iter_mut() {
            *v /= &p;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..2 * n {
                    let sub = &f * &m[col][j];
                    m[r][j] -= sub;
                }
            }
        }
    }
    m.into_iter().map(|row| row[n..].to_vec()).collect()
}

pub fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ones(k: u64) -> Vec<BigInt> {
    vec![BigInt::one(); k as usize]
}

/// `Π [D - d]_q / Π [d]_q` by schoolbook long division, or `None` if it leaves a remainder.
pub fn q_milnor_oracle(degrees: &[u64], total: u64) -> Option<Vec<BigInt>> {
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for &d in degrees {
        num = poly_mul(&num, &ones(total - d));
        den = poly_mul(&den, &ones(d));
    }
    if num.len() < den.len() {
        return None;
    }
    let mut rem = num;
    let dl = den.len();
    let mut quot = vec![BigInt::zero(); rem.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let q = rem[k + dl - 1].clone();
        for (j, c) in den.iter().enumerate() {
            rem[k + j] -= &q * c;
        }
        quot[k] = q;
    }
    rem.iter().all(Zero::is_zero).then_some(quot)
}

pub fn is_weight_oracle(degrees: &[u64], total: u64) -> bool {
    q_milnor_oracle(degrees, total).is_some_and(|q| q.iter().all(|c| !c.is_negative()))
}

/// Exact Milnor number from the integer formula.
pub fn milnor_oracle(degrees: &[u64], total: u64) -> BigRational {
    let num: BigInt = degrees.iter().map(|&d| BigInt::from(total - d)).product();
    let den: BigInt = degrees.iter().map(|&d| BigInt::from(d)).product();
    BigRational::new(num, den)
}

/// Eigenvalue multiplicities of a Brieskorn–Pham sum `Σ x_i^{a_i}` (all `d_i | D`):
/// the eigenvalues are `exp(2πi Σ k_i/a_i)` for `1 ≤ k_i < a_i`.
pub fn brieskorn_pham_eigen(degrees: &[u64], total: u64) -> Option<BTreeMap<u64, u64>> {
    if degrees.iter().any(|&d| total % d != 0) {
        return None;
    }
    let mut counts = vec![0u64; total as usize];
    counts[0] = 1;
    for &d in degrees {
        let a = total / d;
        let mut next = vec![0u64; total as usize];
        for (k, &c) in counts.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for ki in 1..a {
                next[((k as u64 + ki * d) % total) as usize] += c;
            }
        }
        counts = next;
    }
    Some(counts.into_iter().enumerate().map(|(k, c)| (k as u64, c)).collect())
}

/// `lcm`-based product of two degree lists, reduced and with `2d = D` degrees removed.
pub fn product_oracle(a: (&[u64], u64), b: (&[u64], u64)) -> (Vec<u64>, u64) {
    let total = a.1.lcm(&b.1);
    let mut degrees: Vec<u64> = a.0.iter().map(|d| d * (total / a.1)).collect();
    degrees.extend(b.0.iter().map(|d| d * (total / b.1)));
    degrees.retain(|&d| 2 * d != total);
    let g = degrees.iter().fold(total, |g, d| g.gcd(d));
    let mut degrees: Vec<u64> = degrees.iter().map(|d| d / g).collect();
    degrees.sort_unstable();
    (degrees, total / g)
}
