use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Ratio};

use super::milnor_orlik::milnor_orlik;
use super::WeightError;
use crate::algebra::{gcd_all, q_integer, reduce_mod_cyclic, CyclotomicProduct};

/// Degree data `(d_1, …, d_m ; D)` of a quasi-homogeneous singularity.
///
/// A value of this type is any representative: degrees are kept sorted, every
/// degree satisfies `2·d ≤ D`, but common factors and degrees with `2·d = D`
/// are only removed by [`Weight::canonicalize`]. Whether the q-Milnor quotient
/// really is a polynomial with nonnegative coefficients is a separate check,
/// [`Weight::is_weight`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    degrees: Vec<u64>,
    total: u64,
}

/// How [`Weight::eigen_multiplicities`] reads off the monodromy eigenvalues.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EigenMethod {
    /// Exponents of the Milnor–Orlik characteristic polynomial.
    MilnorOrlik,
    /// Coefficients of the q-Milnor number folded modulo `q^D - 1`.
    QMilnor,
}

impl Weight {
    pub fn new(mut degrees: Vec<u64>, total: u64) -> Result<Self, WeightError> {
        if total == 0 || degrees.contains(&0) {
            return Err(WeightError::NonPositive);
        }
        if let Some(&d) = degrees.iter().find(|&&d| 2 * d > total) {
            return Err(WeightError::DegreeTooLarge { degree: d, total });
        }
        degrees.sort_unstable();
        Ok(Self { degrees, total })
    }

    /// The monoid unit `(;1)`.
    pub fn unit() -> Self {
        Self { degrees: Vec::new(), total: 1 }
    }

    pub fn degrees(&self) -> &[u64] {
        &self.degrees
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    /// Number of degrees `m`.
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Drop degrees with `2·d = D`, divide by the common gcd and sort.
    pub fn canonicalize(&self) -> Self {
        let degrees: Vec<u64> = self
            .degrees
            .iter()
            .copied()
            .filter(|&d| 2 * d != self.total)
            .collect();
        Self::divided_by_gcd(degrees, self.total)
    }

    /// Divide by the common gcd without dropping any degree.
    pub fn lowest_terms(&self) -> Self {
        Self::divided_by_gcd(self.degrees.clone(), self.total)
    }

    fn divided_by_gcd(mut degrees: Vec<u64>, total: u64) -> Self {
        let g = gcd_all(&degrees).gcd(&total);
        for d in &mut degrees {
            *d /= g;
        }
        degrees.sort_unstable();
        Self { degrees, total: total / g }
    }

    pub fn is_canonical(&self) -> bool {
        *self == self.canonicalize()
    }

    /// Same Weight up to representative.
    pub fn equivalent(&self, other: &Self) -> bool {
        self.canonicalize() == other.canonicalize()
    }

    /// `Π [D - d_i]_q / Π [d_i]_q` as a cyclotomic product (exponents may be negative).
    pub fn q_milnor(&self) -> CyclotomicProduct {
        self.degrees.iter().fold(CyclotomicProduct::one(), |acc, &d| {
            acc.mul(&q_integer(self.total - d)).div(&q_integer(d))
        })
    }

    /// The q-Milnor number is a polynomial with nonnegative coefficients.
    pub fn is_weight(&self) -> bool {
        let q = self.q_milnor();
        q.is_nonnegative() && q.expand().is_ok_and(|p| p.has_nonnegative_coeffs())
    }

    /// `Π (D - d_i) / Π d_i` is an integer.
    pub fn is_weak_weight(&self) -> bool {
        let (num, den) = self.milnor_fraction();
        num.is_multiple_of(&den)
    }

    fn milnor_fraction(&self) -> (BigInt, BigInt) {
        let num = self.degrees.iter().map(|&d| BigInt::from(self.total - d)).product();
        let den = self.degrees.iter().map(|&d| BigInt::from(d)).product();
        (num, den)
    }

    /// Exact Milnor number `Π (D - d_i) / Π d_i`.
    pub fn milnor_number(&self) -> BigRational {
        let (num, den) = self.milnor_fraction();
        BigRational::new(num, den)
    }

    /// Milnor number when it is an integer.
    pub fn milnor_integer(&self) -> Option<BigInt> {
        let mu = self.milnor_number();
        mu.is_integer().then(|| mu.to_integer())
    }

    /// Monoid product (Thom–Sebastiani sum), returned canonicalized.
    pub fn product(&self, other: &Self) -> Self {
        let total = self.total.lcm(&other.total);
        let (fa, fb) = (total / self.total, total / other.total);
        let degrees = self
            .degrees
            .iter()
            .map(|&a| a * fa)
            .chain(other.degrees.iter().map(|&b| b * fb))
            .collect();
        Self { degrees, total }.canonicalize()
    }

    /// Product of a list of Weights; the empty list gives the unit.
    pub fn product_all<'a, I: IntoIterator<Item = &'a Weight>>(items: I) -> Self {
        items.into_iter().fold(Self::unit(), |acc, w| acc.product(w))
    }

    /// Central charge `Σ (D - 2 d_i) / D`, reduced.
    pub fn central_charge(&self) -> Ratio<u64> {
        let (num, den) = self.cy_dimension();
        Ratio::new(num, den)
    }

    /// Fractional Calabi–Yau dimension `(Σ (D - 2 d_i), D)` of this representative.
    pub fn cy_dimension(&self) -> (u64, u64) {
        let num = self.degrees.iter().map(|&d| self.total - 2 * d).sum();
        (num, self.total)
    }

    /// Multiplicity of each `e^{2πik/D}` (keyed by `k` in `0..D`) as an
    /// eigenvalue of the monodromy.
    ///
    /// With [`EigenMethod::QMilnor`] the multiplicity of `k` is the coefficient
    /// of `q^{(k - Σ d_i) mod D}` in the q-Milnor number folded modulo `q^D - 1`.
    pub fn eigen_multiplicities(
        &self,
        method: EigenMethod,
    ) -> Result<BTreeMap<u64, u64>, WeightError> {
        if !self.is_weight() {
            return Err(WeightError::NotAWeight(self.to_string()));
        }
        let d = self.total;
        let mut out = BTreeMap::new();
        match method {
            EigenMethod::MilnorOrlik => {
                let result = milnor_orlik(self)?.result;
                for k in 0..d {
                    let order = d / k.gcd(&d);
                    out.insert(k, result.exponent(order).max(0) as u64);
                }
            }
            EigenMethod::QMilnor => {
                let expanded = self.q_milnor().expand()?;
                let folded = reduce_mod_cyclic(&expanded, d);
                let shift = self.degrees.iter().sum::<u64>() % d;
                for k in 0..d {
                    let idx = ((k + d - shift) % d) as usize;
                    let c = folded.coeff(idx);
                    let c: u64 = c.try_into().expect("nonnegative multiplicity fits u64");
                    out.insert(k, c);
                }
            }
        }
        Ok(out)
    }

    /// Parenthesised form `(d1,…,dm;D)`.
    pub fn paren(&self) -> String {
        format!("({self})")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees: Vec<String> = self.degrees.iter().map(u64::to_string).collect();
        write!(f, "{};{}", degrees.join(","), self.total)
    }
}

impl FromStr for Weight {
    type Err = WeightError;

    /// Parse `d1,d2,…,dm;D` (or `;D`); surrounding parentheses and spaces are allowed.
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let malformed = || WeightError::Malformed(text.to_string());
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner.trim();
        }
        let (degrees_part, total_part) = body.split_once(';').ok_or_else(malformed)?;
        let parse_int = |s: &str| -> Result<i128, WeightError> {
            s.trim().parse::<i128>().map_err(|_| malformed())
        };
        let to_positive = |v: i128| -> Result<u64, WeightError> {
            if v <= 0 {
                Err(WeightError::NonPositive)
            } else {
                u64::try_from(v).map_err(|_| malformed())
            }
        };
        let total = to_positive(parse_int(total_part)?)?;
        let degrees = if degrees_part.trim().is_empty() {
            Vec::new()
        } else {
            degrees_part
                .split(',')
                .map(|s| parse_int(s).and_then(to_positive))
                .collect::<Result<Vec<_>, _>>()?
        };
        Weight::new(degrees, total)
    }
}

/// Parse a Weight from its text form.
pub fn parse(text: &str) -> Result<Weight, WeightError> {
    text.parse()
}

/// Text form `d1,…,dm;D`.
pub fn format(w: &Weight) -> String {
    w.to_string()
}

impl Default for Weight {
    fn default() -> Self {
        Self::unit()
    }
}

/// Helper for tests and tables: `w(&[2, 3, 4], 10)`.
#[doc(hidden)]
pub fn w(degrees: &[u64], total: u64) -> Weight {
    Weight::new(degrees.to_vec(), total).expect("valid weight fields")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::IntPolynomial;

    #[test]
    fn parse_examples() {
        assert_eq!(parse("2,3,4;10").unwrap(), w(&[2, 3, 4], 10));
        assert_eq!(parse(";1").unwrap(), Weight::unit());
        assert_eq!(parse(" (4, 3 ; 12) ").unwrap(), w(&[3, 4], 12));
        assert_eq!(parse("7;10"), Err(WeightError::DegreeTooLarge { degree: 7, total: 10 }));
        assert_eq!(parse("0,1;4"), Err(WeightError::NonPositive));
        assert_eq!(parse("-1;4"), Err(WeightError::NonPositive));
        assert_eq!(parse("2;0"), Err(WeightError::NonPositive));
        assert!(matches!(parse("x"), Err(WeightError::Malformed(_))));
        assert!(matches!(parse("1,,2;5"), Err(WeightError::Malformed(_))));
        assert!(matches!(parse("1;2;3"), Err(WeightError::Malformed(_))));
    }

    #[test]
    fn format_round_trips_canonical_weights() {
        for text in ["2,3,4;10", ";1", "1,1;3", "3,4,5,6;15"] {
            assert_eq!(format(&parse(text).unwrap()), text);
        }
    }

    #[test]
    fn canonical_forms() {
        assert_eq!(w(&[2, 2], 6).canonicalize(), w(&[1, 1], 3));
        assert_eq!(w(&[4, 8], 16).canonicalize(), w(&[1], 4));
        assert_eq!(w(&[3, 4, 5], 13).canonicalize(), w(&[3, 4, 5], 13));
        assert_eq!(w(&[1], 2).canonicalize(), Weight::unit());
        assert_eq!(w(&[], 7).canonicalize(), Weight::unit());
        let c = w(&[6, 4, 10], 20).canonicalize();
        assert_eq!(c.canonicalize(), c);
    }

    #[test]
    fn q_milnor_examples() {
        assert_eq!(
            w(&[2, 3], 8).q_milnor(),
            CyclotomicProduct::from_exponents([(6, 1), (5, 1)])
        );
        assert_eq!(
            w(&[2, 3], 8).q_milnor().expand().unwrap(),
            IntPolynomial::from_i64s(&[1, 0, 1, 1, 1, 0, 1])
        );
        assert_eq!(
            w(&[2, 3, 4], 10).q_milnor().expand().unwrap(),
            IntPolynomial::from_i64s(&[1, 0, 1, 1, 2, 1, 2, 1, 2, 1, 1, 0, 1])
        );
        assert!(Weight::unit().q_milnor().is_one());
    }

    #[test]
    fn validity() {
        assert!(w(&[2, 3, 4], 10).is_weight());
        assert!(w(&[16, 18, 21, 55], 165).is_weight());
        assert!(!w(&[2], 5).is_weight());
        assert!(!w(&[2], 5).is_weak_weight());
        let weak = w(&[1, 2, 2], 5);
        assert!(weak.is_weak_weight());
        assert!(!weak.is_weight());
    }

    #[test]
    fn milnor_numbers() {
        assert_eq!(w(&[2, 3], 8).milnor_integer(), Some(BigInt::from(5)));
        assert_eq!(w(&[2, 4, 6, 7], 18).milnor_integer(), Some(BigInt::from(88)));
        assert_eq!(Weight::unit().milnor_integer(), Some(BigInt::from(1)));
        assert_eq!(w(&[2], 5).milnor_number(), BigRational::new(3.into(), 2.into()));
    }

    #[test]
    fn products() {
        assert_eq!(w(&[3, 5], 20).product(&w(&[1], 5)), w(&[3, 4, 5], 20));
        let x = w(&[2, 3, 4], 10);
        assert_eq!(x.product(&Weight::unit()), x);
        assert_eq!(w(&[2, 5], 12).product(&w(&[3, 4], 12)), w(&[2, 3, 4, 5], 12));
    }

    #[test]
    fn central_charges() {
        assert_eq!(w(&[2, 3, 5, 5], 15).central_charge(), Ratio::from_integer(2));
        assert_eq!(Weight::unit().central_charge(), Ratio::from_integer(0));
        assert_eq!(w(&[2, 3, 4], 10).cy_dimension(), (12, 10));
    }

    #[test]
    fn eigen_multiplicities_both_methods() {
        let x = w(&[2, 3, 4], 10);
        let expected: BTreeMap<u64, u64> =
            (0..10).zip([0, 2, 1, 2, 1, 2, 1, 2, 1, 2]).collect();
        assert_eq!(x.eigen_multiplicities(EigenMethod::MilnorOrlik).unwrap(), expected);
        assert_eq!(x.eigen_multiplicities(EigenMethod::QMilnor).unwrap(), expected);

        let a1 = w(&[1], 2);
        let expected: BTreeMap<u64, u64> = [(0, 0), (1, 1)].into();
        assert_eq!(a1.eigen_multiplicities(EigenMethod::MilnorOrlik).unwrap(), expected);
        assert_eq!(a1.eigen_multiplicities(EigenMethod::QMilnor).unwrap(), expected);

        // the empty Weight: μ = 1 and the Milnor–Orlik polynomial is t - 1
        let unit = Weight::unit();
        let expected: BTreeMap<u64, u64> = [(0, 1)].into();
        assert_eq!(unit.eigen_multiplicities(EigenMethod::MilnorOrlik).unwrap(), expected);
        assert_eq!(unit.eigen_multiplicities(EigenMethod::QMilnor).unwrap(), expected);

        assert!(matches!(
            w(&[2], 5).eigen_multiplicities(EigenMethod::QMilnor),
            Err(WeightError::NotAWeight(_))
        ));
    }
}
