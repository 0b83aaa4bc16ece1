//! Weights `(d_1, …, d_m ; D)` and everything computed from their degrees.

mod factor;
mod families;
mod milnor_orlik;
mod names;
mod weight;

use thiserror::Error;

use crate::algebra::AlgebraError;

pub use factor::{factorizations, is_prime, Factorization, MAX_FACTOR_DEGREES};
pub use families::{
    asm_weight, catalan_weight, cyclic_quiver_weight, tamari_interval_weight, west_weight,
    WeightFamily,
};
pub use milnor_orlik::{milnor_orlik, MilnorOrlikTrace};
pub use names::{
    lookup_name, named_weight, natural_cmp, normalize_name, NamedWeight, RowCheck, TableError,
    TableReport, WeightTable, DESCRIBE_FACTOR_LIMIT, TABLE_PATH_ENV,
};
pub use weight::{format, parse, w, EigenMethod, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("malformed weight {0:?}: expected \"d1,...,dm;D\"")]
    Malformed(String),
    #[error("degrees and D must be positive integers")]
    NonPositive,
    #[error("degree exceeds D/2: {degree} > {total}/2")]
    DegreeTooLarge { degree: u64, total: u64 },
    #[error("({0}) is not a Weight")]
    NotAWeight(String),
    #[error("Möbius inversion is not integral at j = {index}")]
    NonIntegralInversion { index: u64 },
    #[error("cyclotomic exponent does not fit in 64 bits")]
    ExponentOverflow,
    #[error("{degrees} degrees is more than the factorization limit of {limit}")]
    TooManyDegrees { degrees: usize, limit: usize },
    #[error("{family} is defined for n ≥ {min}, got {n}")]
    IndexOutOfRange { family: &'static str, n: u64, min: u64 },
    #[error("unknown weight family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
