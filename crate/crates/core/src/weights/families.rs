//! Weight families indexed by `n`.

use std::fmt;
use std::str::FromStr;

use super::{Weight, WeightError};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeightFamily {
    /// `(2, 3, …, n ; 2n + 2)`
    Catalan,
    /// Alternating sign matrices: `⋃_{0 ≤ k ≤ n-k-2} {3k+2, …, n+k}` at `D = 3n`.
    Asm,
    /// `(3, 4, …, n + 1 ; 3n + 3)`
    West,
    /// `(3, 4, …, n + 1 ; 4n + 4)`
    TamariInterval,
    /// `(4, 2n, 6, 9, …, 3n - 3 ; 6n)`
    CyclicQuiver,
}

impl WeightFamily {
    pub const ALL: [WeightFamily; 5] = [
        WeightFamily::Catalan,
        WeightFamily::Asm,
        WeightFamily::West,
        WeightFamily::TamariInterval,
        WeightFamily::CyclicQuiver,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WeightFamily::Catalan => "catalan",
            WeightFamily::Asm => "asm",
            WeightFamily::West => "west",
            WeightFamily::TamariInterval => "tamari-interval",
            WeightFamily::CyclicQuiver => "cyclic-quiver",
        }
    }

    /// Smallest index for which the formula is defined.
    pub fn min_n(self) -> u64 {
        match self {
            WeightFamily::CyclicQuiver => 2,
            _ => 1,
        }
    }

    /// The degree multiset exactly as given by the formula.
    pub fn raw(self, n: u64) -> Result<Weight, WeightError> {
        if n < self.min_n() {
            return Err(WeightError::IndexOutOfRange { family: self.name(), n, min: self.min_n() });
        }
        let (degrees, total): (Vec<u64>, u64) = match self {
            WeightFamily::Catalan => ((2..=n).collect(), 2 * n + 2),
            WeightFamily::Asm => {
                let degrees = (0..n)
                    .take_while(|&k| k + k + 2 <= n)
                    .flat_map(|k| 3 * k + 2..=n + k)
                    .collect();
                (degrees, 3 * n)
            }
            WeightFamily::West => ((3..=n + 1).collect(), 3 * n + 3),
            WeightFamily::TamariInterval => ((3..=n + 1).collect(), 4 * n + 4),
            WeightFamily::CyclicQuiver => {
                let mut degrees = vec![4, 2 * n];
                degrees.extend((2..n).map(|k| 3 * k));
                (degrees, 6 * n)
            }
        };
        Weight::new(degrees, total)
    }

    /// The canonical Weight of index `n`.
    pub fn weight(self, n: u64) -> Result<Weight, WeightError> {
        Ok(self.raw(n)?.canonicalize())
    }
}

impl fmt::Display for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for WeightFamily {
    type Err = WeightError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| WeightError::UnknownFamily(s.to_string()))
    }
}

pub fn catalan_weight(n: u64) -> Result<Weight, WeightError> {
    WeightFamily::Catalan.weight(n)
}

pub fn asm_weight(n: u64) -> Result<Weight, WeightError> {
    WeightFamily::Asm.weight(n)
}

pub fn west_weight(n: u64) -> Result<Weight, WeightError> {
    WeightFamily::West.weight(n)
}

pub fn tamari_interval_weight(n: u64) -> Result<Weight, WeightError> {
    WeightFamily::TamariInterval.weight(n)
}

pub fn cyclic_quiver_weight(n: u64) -> Result<Weight, WeightError> {
    WeightFamily::CyclicQuiver.weight(n)
}
