//! Cyclotomic polynomials and exact products of them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use super::modular::{is_prime_u64, Modulus};
use super::ntheory::{divisors, factorize, totient};
use super::poly::IntPolynomial;
use super::AlgebraError;

fn cache() -> &'static Mutex<HashMap<u64, Arc<IntPolynomial>>> {
    static CACHE: OnceLock<Mutex<HashMap<u64, Arc<IntPolynomial>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn cyclotomic_shared(d: u64) -> Arc<IntPolynomial> {
    assert!(d >= 1, "cyclotomic: d must be positive");
    if let Some(p) = cache().lock().unwrap().get(&d) {
        return Arc::clone(p);
    }
    let mut p = IntPolynomial::t_pow_minus_one(d as usize);
    for e in divisors(d) {
        if e < d {
            p = p
                .div_exact(&cyclotomic_shared(e))
                .expect("Φ_e divides t^d - 1 for e | d");
        }
    }
    let p = Arc::new(p);
    cache().lock().unwrap().insert(d, Arc::clone(&p));
    p
}

/// The `d`-th cyclotomic polynomial Φ_d. Results are cached process-wide.
pub fn cyclotomic(d: u64) -> IntPolynomial {
    (*cyclotomic_shared(d)).clone()
}

/// A finite product `Π_d Φ_d^{e_d}` with integer (possibly negative) exponents.
///
/// This is the working representation of q-integers, q-Milnor numbers and
/// monodromy polynomials: multiplication and division are exponent-wise.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct CyclotomicProduct {
    exponents: BTreeMap<u64, i64>,
}

impl CyclotomicProduct {
    /// The empty product, i.e. the constant 1.
    pub fn one() -> Self {
        Self::default()
    }

    pub fn from_exponents<I: IntoIterator<Item = (u64, i64)>>(pairs: I) -> Self {
        let mut p = Self::one();
        for (d, e) in pairs {
            p.add_exponent(d, e);
        }
        p
    }

    /// Multiply in `Φ_d^e`.
    pub fn add_exponent(&mut self, d: u64, e: i64) {
        assert!(d >= 1, "cyclotomic index must be positive");
        if e == 0 {
            return;
        }
        let entry = self.exponents.entry(d).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.exponents.remove(&d);
        }
    }

    pub fn exponents(&self) -> &BTreeMap<u64, i64> {
        &self.exponents
    }

    pub fn exponent(&self, d: u64) -> i64 {
        self.exponents.get(&d).copied().unwrap_or(0)
    }

    pub fn is_one(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.exponents.values().all(|&e| e > 0)
    }

    /// `Σ_d e_d·φ(d)`, the degree of the (rational) function.
    pub fn degree(&self) -> i64 {
        self.exponents
            .iter()
            .map(|(&d, &e)| e * totient(d) as i64)
            .sum()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &e) in &other.exponents {
            out.add_exponent(d, e);
        }
        out
    }

    pub fn div(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&d, &e) in &other.exponents {
            out.add_exponent(d, -e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Self {
        Self::from_exponents(self.exponents.iter().map(|(&d, &e)| (d, e * k)))
    }

    /// Expand to a polynomial. Fails if any exponent is negative.
    pub fn expand(&self) -> Result<IntPolynomial, AlgebraError> {
        if let Some((&d, &e)) = self.exponents.iter().find(|(_, &e)| e < 0) {
            return Err(AlgebraError::NegativeExponent { index: d, exponent: e });
        }
        let mut acc = IntPolynomial::one();
        for (&d, &e) in &self.exponents {
            let phi = cyclotomic_shared(d);
            for _ in 0..e {
                acc = &acc * &phi;
            }
        }
        Ok(acc)
    }

    /// The product describing the monic normalisation of `p(-t)`.
    ///
    /// Uses `Φ_d(-t) = ±Φ_{2d}(t)` for odd `d`, `±Φ_{d/2}(t)` for `d ≡ 2 mod 4`
    /// and `Φ_d(t)` when `4 | d`.
    pub fn substitute_neg(&self) -> Self {
        Self::from_exponents(self.exponents.iter().map(|(&d, &e)| {
            let image = match d % 4 {
                0 => d,
                2 => d / 2,
                _ => 2 * d,
            };
            (image, e)
        }))
    }

    /// Factored notation such as `Φ2^2·Φ5·Φ10^2`, or `1` for the empty product.
    pub fn to_factored_string(&self, ascii: bool) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let (sym, sep) = if ascii { ("F", "*") } else { ("Φ", "·") };
        self.exponents
            .iter()
            .map(|(&d, &e)| {
                if e == 1 {
                    format!("{sym}{d}")
                } else {
                    format!("{sym}{d}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(sep)
    }
}

impl fmt::Display for CyclotomicProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_factored_string(false))
    }
}

/// The q-integer `[d]_q = (q^d - 1)/(q - 1) = Π_{e | d, e > 1} Φ_e`.
pub fn q_integer(d: u64) -> CyclotomicProduct {
    assert!(d >= 1, "q_integer: d must be positive");
    CyclotomicProduct::from_exponents(divisors(d).into_iter().filter(|&e| e > 1).map(|e| (e, 1)))
}

/// All `d` with `φ(d) <= bound`, ascending.
fn indices_with_totient_at_most(bound: u64) -> Vec<u64> {
    if bound == 0 {
        return Vec::new();
    }
    // Past `limit` every totient exceeds `bound`: for small bounds use
    // φ(d) >= sqrt(d/2), otherwise φ(d) > d / (e^γ ln ln d + 3 / ln ln d).
    let limit = if bound <= 64 {
        2 * bound * bound + 2
    } else {
        let b = bound as f64;
        let mut d = 6.0 * b;
        loop {
            let ll = d.ln().ln();
            if d / (1.7811 * ll + 3.0 / ll) > b {
                break;
            }
            d *= 1.25;
        }
        d.ceil() as u64
    };
    let mut phi: Vec<u64> = (0..=limit).collect();
    for i in 2..=limit as usize {
        if phi[i] == i as u64 {
            for j in (i..=limit as usize).step_by(i) {
                phi[j] -= phi[j] / i as u64;
            }
        }
    }
    (1..=limit).filter(|&d| phi[d as usize] <= bound).collect()
}

/// Primitive `d`-th root of unity modulo a prime `p ≡ 1 (mod d)`.
fn primitive_root_of_unity(m: &Modulus, d: u64) -> u64 {
    let p = m.modulus();
    let cofactor = (p - 1) / d;
    let prime_divisors: Vec<u64> = factorize(d).into_iter().map(|(q, _)| q).collect();
    (2..p)
        .map(|g| m.pow(g, cofactor))
        .find(|&h| prime_divisors.iter().all(|&q| m.pow(h, d / q) != 1))
        .expect("a primitive root of unity exists modulo a prime ≡ 1 mod d")
}

/// Cheap screening test: can Φ_d divide `p`? Evaluates `p` at a primitive `d`-th
/// root of unity modulo a prime `≡ 1 (mod d)`; a nonzero value rules Φ_d out.
struct RootScreen {
    modulus: Modulus,
    root: u64,
}

impl RootScreen {
    fn shared(d: u64) -> Arc<Self> {
        static SCREENS: OnceLock<Mutex<HashMap<u64, Arc<RootScreen>>>> = OnceLock::new();
        let screens = SCREENS.get_or_init(Default::default);
        if let Some(s) = screens.lock().unwrap().get(&d) {
            return Arc::clone(s);
        }
        let s = Arc::new(Self::new(d));
        screens.lock().unwrap().insert(d, Arc::clone(&s));
        s
    }

    fn new(d: u64) -> Self {
        let mut k = (1u64 << 61) / d;
        loop {
            let candidate = k * d + 1;
            if is_prime_u64(candidate) {
                let modulus = Modulus::new(candidate);
                let root = primitive_root_of_unity(&modulus, d);
                return Self { modulus, root };
            }
            k -= 1;
        }
    }

    fn may_vanish(&self, residues: &[u64]) -> bool {
        let m = &self.modulus;
        let value = residues
            .iter()
            .rev()
            .fold(0, |acc, &c| m.add(m.mul(acc, self.root), c));
        value == 0
    }
}

fn residues_mod(p: &IntPolynomial, m: &Modulus) -> Vec<u64> {
    p.coeffs().iter().map(|c| m.reduce_bigint(c)).collect()
}

/// Split off every cyclotomic factor of a nonzero polynomial.
///
/// Returns the exponent map and the cyclotomic-free remainder, so that
/// `expand(map) · remainder = p`.
pub fn factor_cyclotomic(p: &IntPolynomial) -> (CyclotomicProduct, IntPolynomial) {
    assert!(!p.is_zero(), "factor_cyclotomic: zero polynomial");
    let mut rest = p.clone();
    let mut found = CyclotomicProduct::one();
    let deg = rest.degree().unwrap_or(0) as u64;
    for d in indices_with_totient_at_most(deg) {
        let remaining = rest.degree().unwrap_or(0) as u64;
        if totient(d) > remaining {
            continue;
        }
        // Φ_1 and Φ_2 are cheap enough to test directly.
        if d > 2 {
            let screen = RootScreen::shared(d);
            if !screen.may_vanish(&residues_mod(&rest, &screen.modulus)) {
                continue;
            }
        }
        let phi = cyclotomic_shared(d);
        while rest.degree().unwrap_or(0) >= phi.degree().unwrap_or(0) {
            match rest.div_exact(&phi) {
                Some(q) => {
                    rest = q;
                    found.add_exponent(d, 1);
                }
                None => break,
            }
        }
    }
    (found, rest)
}

/// Value of the product at `t = 1`, when it is finite and nonzero (no Φ_1 exponent).
pub fn value_at_one(p: &CyclotomicProduct) -> Option<num_rational::BigRational> {
    use num_rational::BigRational;
    if p.exponent(1) != 0 {
        return None;
    }
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for (&d, &e) in p.exponents() {
        // Φ_d(1) is q when d = q^k is a prime power, 1 otherwise.
        let f = factorize(d);
        let v = if f.len() == 1 { f[0].0 } else { 1 };
        let pow = BigInt::from(v).pow(e.unsigned_abs() as u32);
        if e > 0 {
            num *= pow;
        } else {
            den *= pow;
        }
    }
    Some(BigRational::new(num, den))
}
