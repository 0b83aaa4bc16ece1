//! JSON encodings shared by the reports and the command line.
//!
//! Integers are written as exact JSON numbers however large they are.

use num_bigint::BigInt;
use serde_json::{json, Number, Value};

use crate::algebra::{factor_cyclotomic, IntPolynomial};

pub fn bigint(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("integer literal is a JSON number"))
}

/// `{"coeffs": [...ascending...], "factored": "Φ…", "remainder": [...]}`.
///
/// With `ascii` the factored string uses `F2^2*F5` instead of `Φ2^2·Φ5`.
pub fn polynomial(p: &IntPolynomial, ascii: bool) -> Value {
    let (factored, remainder) = factor_cyclotomic(p);
    json!({
        "coeffs": coeffs(p),
        "factored": factored.to_factored_string(ascii),
        "remainder": coeffs(&remainder),
    })
}

pub fn coeffs(p: &IntPolynomial) -> Value {
    Value::Array(p.coeffs().iter().map(bigint).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_numbers_stay_exact() {
        let big = BigInt::from(10).pow(30) + 7;
        assert_eq!(bigint(&big).to_string(), "1000000000000000000000000000007");
        assert_eq!(bigint(&BigInt::from(-3)).to_string(), "-3");
    }

    #[test]
    fn polynomial_layout() {
        let p = IntPolynomial::from_i64s(&[1, 2, 2, 1]);
        assert_eq!(
            polynomial(&p, false).to_string(),
            r#"{"coeffs":[1,2,2,1],"factored":"Φ2·Φ3","remainder":[1]}"#
        );
        assert_eq!(polynomial(&p, true)["factored"], "F2*F3");
    }
}
