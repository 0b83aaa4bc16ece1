//! Comparing Coxeter polynomials of posets with monodromy polynomials of Weights.
//!
//! The monodromy polynomial of a Weight with `m` degrees (canonical
//! representative) is put in Coxeter convention by `t ↦ (-1)^{m-1} t`.
//! Adding a degree with `2d = D` flips the parity of `m` and negates every
//! eigenvalue, so the result does not depend on the representative.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};
use thiserror::Error;

use crate::algebra::{factor_cyclotomic, CyclotomicProduct, IntPolynomial};
use crate::json;
use crate::posets::{coxeter_polynomial, Poset, PosetError, PosetFamily};
use crate::weights::{milnor_orlik, Weight, WeightError, WeightFamily};

#[derive(Debug, Error)]
pub enum CriterionError {
    #[error("no comparison is defined between {posets} posets and {weights} weights")]
    IncompatibleFamilies { posets: PosetFamily, weights: WeightFamily },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Weight(#[from] WeightError),
}

/// The Coxeter-normalized monodromy polynomial as a cyclotomic product.
pub fn weight_coxeter_product(w: &Weight) -> Result<CyclotomicProduct, WeightError> {
    let c = w.canonicalize();
    if !c.is_weight() {
        return Err(WeightError::NotAWeight(w.to_string()));
    }
    let delta = milnor_orlik(&c)?.result;
    // (-1)^{m-1} = -1 exactly when m is even
    Ok(if c.len() % 2 == 0 { delta.substitute_neg() } else { delta })
}

/// The Coxeter-normalized monodromy polynomial: monic of degree μ.
pub fn weight_coxeter_polynomial(w: &Weight) -> Result<IntPolynomial, WeightError> {
    Ok(weight_coxeter_product(w)?.expand()?)
}

/// A polynomial together with its cyclotomic factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredPolynomial {
    pub polynomial: IntPolynomial,
    pub factored: CyclotomicProduct,
    /// What is left after removing every cyclotomic factor; `1` when nothing is.
    pub remainder: IntPolynomial,
}

impl FactoredPolynomial {
    pub fn new(polynomial: IntPolynomial) -> Self {
        let (factored, remainder) = factor_cyclotomic(&polynomial);
        Self { polynomial, factored, remainder }
    }

    pub fn is_cyclotomic(&self) -> bool {
        self.remainder.is_one()
    }

    pub fn to_json(&self, ascii: bool) -> Value {
        json!({
            "coeffs": json::coeffs(&self.polynomial),
            "factored": self.factored.to_factored_string(ascii),
            "remainder": json::coeffs(&self.remainder),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport {
    pub poset_size: usize,
    pub milnor_number: BigInt,
    pub size_match: bool,
    pub poset_polynomial: FactoredPolynomial,
    pub weight_polynomial: FactoredPolynomial,
    /// Sizes agree and the polynomials are equal coefficient by coefficient.
    pub matches: bool,
    /// Near misses and anomalies; these never affect `matches`.
    pub diagnostics: Vec<String>,
}

impl CriterionReport {
    pub fn to_json(&self, ascii: bool) -> Value {
        json!({
            "poset_size": self.poset_size,
            "milnor_number": json::bigint(&self.milnor_number),
            "size_match": self.size_match,
            "poset_polynomial": self.poset_polynomial.to_json(ascii),
            "weight_polynomial": self.weight_polynomial.to_json(ascii),
            "match": self.matches,
            "diagnostics": self.diagnostics,
        })
    }
}

/// Compare the Coxeter polynomial of `p` with that of the Weight `w`.
pub fn check(p: &Poset, w: &Weight) -> Result<CriterionReport, WeightError> {
    let weight_polynomial = FactoredPolynomial::new(weight_coxeter_polynomial(w)?);
    let milnor_number = w.canonicalize().milnor_integer().expect("a Weight has integral μ");
    Ok(compare(p, coxeter_polynomial(p), weight_polynomial, milnor_number))
}

fn compare(
    p: &Poset,
    poset_poly: IntPolynomial,
    weight_polynomial: FactoredPolynomial,
    milnor_number: BigInt,
) -> CriterionReport {
    let poset_polynomial = FactoredPolynomial::new(poset_poly);
    let size_match = BigInt::from(p.len()) == milnor_number;
    let matches = size_match && poset_polynomial.polynomial == weight_polynomial.polynomial;
    let mut diagnostics = Vec::new();
    if !size_match {
        diagnostics.push(format!("poset has {} elements but μ = {milnor_number}", p.len()));
    }
    if !matches {
        let (pp, wp) = (&poset_polynomial.polynomial, &weight_polynomial.polynomial);
        if *pp == wp.substitute_neg().normalize_sign() {
            diagnostics.push("matches only under t ↦ −t".to_string());
        }
        if *pp != *wp && *pp == wp.reciprocal() {
            diagnostics.push("matches only after reversing coefficients".to_string());
        }
    }
    if !poset_polynomial.is_cyclotomic() {
        diagnostics.push("non-cyclotomic remainder in poset polynomial".to_string());
    }
    CriterionReport {
        poset_size: p.len(),
        milnor_number,
        size_match,
        poset_polynomial,
        weight_polynomial,
        matches,
        diagnostics,
    }
}

/// Pairs of families for which the comparison is meaningful.
pub fn compatible(posets: PosetFamily, weights: WeightFamily) -> bool {
    matches!(
        (posets, weights),
        (PosetFamily::Tamari, WeightFamily::Catalan)
            | (PosetFamily::Dyck, WeightFamily::Catalan)
            | (PosetFamily::GreenCyclic, WeightFamily::CyclicQuiver)
    )
}

/// One report per `n`, in order of `n`.
pub fn check_family(
    posets: PosetFamily,
    weights: WeightFamily,
    range: RangeInclusive<usize>,
    seed_cap: usize,
) -> Result<Vec<(usize, CriterionReport)>, CriterionError> {
    if !compatible(posets, weights) {
        return Err(CriterionError::IncompatibleFamilies { posets, weights });
    }
    let ns: Vec<usize> = range.collect();
    ns.par_iter()
        .map(|&n| {
            let p = posets.generate(n, seed_cap)?;
            let w = weights.weight(n as u64)?;
            Ok((n, check(&p, &w)?))
        })
        .collect()
}
