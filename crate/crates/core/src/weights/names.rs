//! Named Weights: Dynkin, elliptic, unimodal, bimodal and quadrilateral.
//!
//! The fixed rows live in a JSON data file bundled with the crate; the
//! infinite families `A_n = (1 ; n+1)` and `D_n = (2, n-2 ; 2n-2)` are
//! generated on demand.

use std::cmp::Ordering;
use std::path::Path;
use std::sync::OnceLock;

use num_traits::ToPrimitive;
use serde::Deserialize;
use thiserror::Error;

use super::factor::factorizations;
use super::Weight;

const BUNDLED: &str = include_str!("../../data/named_weights.json");

/// Environment variable pointing at a replacement table file.
pub const TABLE_PATH_ENV: &str = "COXWEIGHT_TABLE_PATH";

/// Prime factorizations are only searched for Weights with at most this many
/// degrees when naming; larger ones are named only if they appear verbatim.
pub const DESCRIBE_FACTOR_LIMIT: usize = 16;

/// Largest index checked for the parametric families by [`WeightTable::verify`].
const PARAMETRIC_CHECK_MAX: u64 = 40;

#[derive(Debug, Error)]
pub enum TableError {
    #[error("cannot read table file {path}: {source}")]
    Missing {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed table data: {0}")]
    Malformed(String),
}

#[derive(Deserialize)]
struct RawTable {
    rows: Vec<RawRow>,
}

#[derive(Deserialize)]
struct RawRow {
    name: String,
    table: String,
    weight: String,
    #[serde(default)]
    decomposition: Vec<String>,
}

/// One row of the table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedWeight {
    pub name: String,
    /// Which table the row belongs to (`dynkin`, `elliptic`, …).
    pub table: String,
    /// The Weight as printed.
    pub weight: Weight,
    /// Names of the factors when the table lists a product decomposition.
    pub decomposition: Vec<String>,
}

/// Outcome of checking one table row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub name: String,
    pub failures: Vec<String>,
}

impl RowCheck {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Outcome of [`WeightTable::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableReport {
    pub rows: Vec<RowCheck>,
}

impl TableReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(RowCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RowCheck> {
        self.rows.iter().filter(|r| !r.passed())
    }
}

#[derive(Clone, Debug)]
pub struct WeightTable {
    rows: Vec<NamedWeight>,
}

impl WeightTable {
    pub fn from_json_str(text: &str) -> Result<Self, TableError> {
        let raw: RawTable =
            serde_json::from_str(text).map_err(|e| TableError::Malformed(e.to_string()))?;
        let rows = raw
            .rows
            .into_iter()
            .map(|r| {
                let weight = r
                    .weight
                    .parse()
                    .map_err(|e| TableError::Malformed(format!("row {}: {e}", r.name)))?;
                Ok(NamedWeight {
                    name: r.name,
                    table: r.table,
                    weight,
                    decomposition: r.decomposition,
                })
            })
            .collect::<Result<_, TableError>>()?;
        Ok(Self { rows })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self, TableError> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| TableError::Missing {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_json_str(&text)
    }

    /// The table shipped with the crate.
    pub fn bundled() -> &'static WeightTable {
        static TABLE: OnceLock<WeightTable> = OnceLock::new();
        TABLE.get_or_init(|| Self::from_json_str(BUNDLED).expect("bundled table parses"))
    }

    /// The file named by `COXWEIGHT_TABLE_PATH` if set, the bundled table otherwise.
    pub fn from_env() -> Result<Self, TableError> {
        match std::env::var_os(TABLE_PATH_ENV) {
            Some(path) => Self::from_path(path),
            None => Ok(Self::bundled().clone()),
        }
    }

    pub fn rows(&self) -> &[NamedWeight] {
        &self.rows
    }

    /// Canonical Weight for a table name or `A_n` / `D_n`.
    pub fn get(&self, name: &str) -> Option<Weight> {
        let key = normalize_name(name);
        if let Some(row) = self.rows.iter().find(|r| normalize_name(&r.name) == key) {
            return Some(row.weight.canonicalize());
        }
        parametric(&key).map(|w| w.canonicalize())
    }

    /// Name of a Weight (up to representative), if it has one.
    pub fn name_of(&self, w: &Weight) -> Option<String> {
        let c = w.canonicalize();
        if let Some(row) = self.rows.iter().find(|r| r.weight.canonicalize() == c) {
            return Some(row.name.clone());
        }
        // A_n and D_n both have Milnor number n
        let n = c.milnor_integer()?.to_u64()?;
        for letter in ['A', 'D'] {
            let name = format!("{letter}{n}");
            if parametric(&name).is_some_and(|p| p.canonicalize() == c) {
                return Some(name);
            }
        }
        None
    }

    /// Human-readable name: either a single table name or a product of
    /// named prime factors such as `D7×E6`.
    ///
    /// Among the prime factorizations the one with the most named factors
    /// wins, then the one with fewer factors. Pairs of factors whose product
    /// is a Dynkin row with a printed decomposition (`A2×A3 = E6`) are merged.
    pub fn describe(&self, w: &Weight) -> Option<String> {
        let c = w.canonicalize();
        if c.is_empty() {
            return self.name_of(&c);
        }
        if c.len() > DESCRIBE_FACTOR_LIMIT {
            return self.name_of(&c);
        }
        let candidates = factorizations(&c).ok()?;
        let best = candidates.into_iter().min_by_key(|f| {
            let named = f.factors().iter().filter(|p| self.name_of(p).is_some()).count();
            (std::cmp::Reverse(named), f.len(), f.clone())
        })?;
        let mut factors: Vec<Weight> = best.factors().iter().map(Weight::canonicalize).collect();
        'merge: loop {
            for i in 0..factors.len() {
                for j in i + 1..factors.len() {
                    let merged = factors[i].product(&factors[j]);
                    if self.is_merge_target(&merged) {
                        factors.remove(j);
                        factors[i] = merged;
                        continue 'merge;
                    }
                }
            }
            break;
        }
        let mut names: Vec<String> = factors
            .iter()
            .map(|p| self.name_of(p).unwrap_or_else(|| p.paren()))
            .collect();
        names.sort_by(|a, b| natural_cmp(a, b));
        Some(names.join("×"))
    }

    fn is_merge_target(&self, w: &Weight) -> bool {
        self.rows.iter().any(|r| {
            r.table == "dynkin" && !r.decomposition.is_empty() && r.weight.canonicalize() == *w
        })
    }

    /// Check every row: it is a Weight, its Milnor number matches a plain
    /// integer subscript, and its printed decomposition multiplies back.
    /// The parametric families are checked for small indices as well.
    pub fn verify(&self) -> TableReport {
        let mut rows = Vec::new();
        for row in &self.rows {
            let mut failures = Vec::new();
            let w = &row.weight;
            if !w.is_weight() {
                failures.push(format!("({w}) is not a Weight"));
            }
            if let Some(k) = subscript(&row.name) {
                let mu = w.milnor_number();
                if mu != num_rational::BigRational::from_integer(k.into()) {
                    failures.push(format!("μ = {mu} ≠ {k}"));
                }
            }
            if !row.decomposition.is_empty() {
                let mut parts = Vec::new();
                for part in &row.decomposition {
                    match self.get(part) {
                        Some(p) => parts.push(p),
                        None => failures.push(format!("unknown factor {part}")),
                    }
                }
                if parts.len() == row.decomposition.len() {
                    let product = Weight::product_all(&parts);
                    if product != w.canonicalize() {
                        failures.push(format!(
                            "{} = ({product}) but the table has ({})",
                            row.decomposition.join("×"),
                            w.canonicalize()
                        ));
                    }
                }
            }
            rows.push(RowCheck { name: row.name.clone(), failures });
        }
        for letter in ['A', 'D'] {
            let start = if letter == 'A' { 1 } else { 4 };
            for n in start..=PARAMETRIC_CHECK_MAX {
                let name = format!("{letter}{n}");
                let w = parametric(&name).expect("parametric name in range");
                let mut failures = Vec::new();
                if !w.is_weight() {
                    failures.push(format!("({w}) is not a Weight"));
                }
                let mu = w.milnor_number();
                if mu != num_rational::BigRational::from_integer(n.into()) {
                    failures.push(format!("μ = {mu} ≠ {n}"));
                }
                rows.push(RowCheck { name, failures });
            }
        }
        TableReport { rows }
    }
}

/// Canonical Weight of a named Weight from the bundled table.
pub fn named_weight(name: &str) -> Option<Weight> {
    WeightTable::bundled().get(name)
}

/// Name of a Weight from the bundled table.
pub fn lookup_name(w: &Weight) -> Option<String> {
    WeightTable::bundled().name_of(w)
}

/// Drop underscores, braces and spaces so `A_3`, `A3` and `S_{1,0}` / `S1,0` compare equal.
pub fn normalize_name(name: &str) -> String {
    name.chars().filter(|c| !matches!(c, '_' | '{' | '}' | ' ')).collect()
}

/// `A_n` for `n ≥ 1` and `D_n` for `n ≥ 4`, as printed (not canonicalized).
fn parametric(normalized: &str) -> Option<Weight> {
    let mut chars = normalized.chars();
    let letter = chars.next()?;
    let digits = chars.as_str();
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
        return None;
    }
    let n: u64 = digits.parse().ok()?;
    match letter {
        'A' if n >= 1 => Weight::new(vec![1], n + 1).ok(),
        'D' if n >= 4 => Weight::new(vec![2, n - 2], 2 * n - 2).ok(),
        _ => None,
    }
}

/// A single integer subscript with nothing after it, as in `Z11` or `E_7`.
fn subscript(name: &str) -> Option<u64> {
    let key = normalize_name(name);
    let digits_at = key.find(|c: char| c.is_ascii_digit())?;
    let (letters, digits) = key.split_at(digits_at);
    if letters.is_empty() || !letters.chars().all(|c| c.is_ascii_alphabetic()) {
        return None;
    }
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    digits.parse().ok()
}

/// Compare strings with embedded numbers by value: `A2 < A10 < D5`.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for i in 1..=bytes.len() {
            if i == bytes.len() || bytes[i].is_ascii_digit() != bytes[start].is_ascii_digit() {
                out.push((bytes[start].is_ascii_digit(), &s[start..i]));
                start = i;
            }
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then_with(|| p.cmp(q))
            }
            ((_, p), (_, q)) => p.cmp(q),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}
