//! Characteristic polynomial of the monodromy from the degree data alone.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use super::{Weight, WeightError};
use crate::algebra::{divisors, mobius, CyclotomicProduct};

/// Intermediate quantities of the Milnor–Orlik computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MilnorOrlikTrace {
    /// `u_i = D / gcd(D, d_i)` for each degree.
    pub u: Vec<u64>,
    /// `χ_j = Π_{u_i | j} (d_i - D) / d_i` for each divisor `j` of `D`.
    pub chi: BTreeMap<u64, BigRational>,
    /// Möbius inversion of `χ`: `j · s_j = Σ_{e | j} μ(j/e) χ_e`.
    pub s: BTreeMap<u64, BigInt>,
    /// The characteristic polynomial as a product of cyclotomic factors.
    pub result: CyclotomicProduct,
}

/// Run the Milnor–Orlik formula on a representative.
pub fn milnor_orlik(w: &Weight) -> Result<MilnorOrlikTrace, WeightError> {
    let total = w.total();
    let u: Vec<u64> = w.degrees().iter().map(|&d| total / total.gcd(&d)).collect();
    let divs = divisors(total);

    let mut chi = BTreeMap::new();
    for &j in &divs {
        let value = w
            .degrees()
            .iter()
            .zip(&u)
            .filter(|&(_, &ui)| j % ui == 0)
            .fold(BigRational::from_integer(1.into()), |acc, (&d, _)| {
                let num = BigInt::from(d) - BigInt::from(total);
                acc * BigRational::new(num, BigInt::from(d))
            });
        chi.insert(j, value);
    }

    let mut s = BTreeMap::new();
    for &j in &divs {
        let mut acc = BigRational::zero();
        for e in divisors(j) {
            let m = mobius(j / e);
            if m != 0 {
                acc += &chi[&e] * BigInt::from(m);
            }
        }
        let sj = acc / BigInt::from(j);
        if !sj.is_integer() {
            return Err(WeightError::NonIntegralInversion { index: j });
        }
        s.insert(j, sj.to_integer());
    }

    let sign: i64 = if w.len() % 2 == 0 { 1 } else { -1 };
    let mut result = CyclotomicProduct::one();
    for &d in &divs {
        let sum: BigInt = divs
            .iter()
            .filter(|&&j| j % d == 0)
            .map(|j| &s[j])
            .sum();
        let exponent = sum
            .to_i64()
            .ok_or(WeightError::ExponentOverflow)?
            .checked_mul(sign)
            .ok_or(WeightError::ExponentOverflow)?;
        result.add_exponent(d, exponent);
    }
    Ok(MilnorOrlikTrace { u, chi, s, result })
}
