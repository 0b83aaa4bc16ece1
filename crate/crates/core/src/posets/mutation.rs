//! Seeds, matrix mutation and the poset of green mutations.

use std::collections::{HashMap, VecDeque};

use super::{Poset, PosetError};

/// Square integer matrix, row-major.
pub type ExchangeMatrix = Vec<Vec<i64>>;

/// Default bound on the number of seeds explored by [`green_mutation_poset`].
pub const DEFAULT_SEED_CAP: usize = 1_000_000;

/// An exchange matrix `b` together with the matrix `c` whose columns are the c-vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Seed {
    pub b: ExchangeMatrix,
    pub c: ExchangeMatrix,
}

impl Seed {
    /// `(b, identity)`.
    pub fn initial(b: &ExchangeMatrix) -> Result<Self, PosetError> {
        let n = b.len();
        if n == 0 || b.iter().any(|row| row.len() != n) {
            return Err(PosetError::BadExchangeMatrix);
        }
        let c = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        Ok(Self { b: b.clone(), c })
    }

    pub fn size(&self) -> usize {
        self.b.len()
    }

    /// Column `k` of `c` is entrywise nonnegative.
    pub fn is_green(&self, k: usize) -> bool {
        self.c.iter().all(|row| row[k] >= 0)
    }

    /// Every c-vector is entrywise ≥ 0 or entrywise ≤ 0.
    pub fn is_sign_coherent(&self) -> bool {
        (0..self.size()).all(|k| {
            self.c.iter().all(|row| row[k] >= 0) || self.c.iter().all(|row| row[k] <= 0)
        })
    }

    /// Matrix mutation at `k` of `b` stacked over `c`.
    pub fn mutate(&self, k: usize) -> Result<Self, PosetError> {
        let n = self.size();
        if k >= n {
            return Err(PosetError::InvalidVertex { vertex: k, size: n });
        }
        let pivot_row = &self.b[k];
        let step = |row: &[i64], is_pivot_row: bool| -> Vec<i64> {
            (0..n)
                .map(|j| {
                    if is_pivot_row || j == k {
                        -row[j]
                    } else {
                        row[j] + row[k].signum() * (row[k] * pivot_row[j]).max(0)
                    }
                })
                .collect()
        };
        let b = self.b.iter().enumerate().map(|(i, row)| step(row, i == k)).collect();
        let c = self.c.iter().map(|row| step(row, false)).collect();
        Ok(Self { b, c })
    }

    /// Representative up to simultaneous relabelling of the vertices: the
    /// columns of `c` sorted lexicographically, `b` permuted to match.
    pub fn canonical(&self) -> Self {
        let n = self.size();
        let column = |j: usize| -> Vec<i64> { self.c.iter().map(|row| row[j]).collect() };
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&j| column(j));
        let b = order.iter().map(|&i| order.iter().map(|&j| self.b[i][j]).collect()).collect();
        let c = self.c.iter().map(|row| order.iter().map(|&j| row[j]).collect()).collect();
        Self { b, c }
    }
}

pub fn mutate(s: &Seed, k: usize) -> Result<Seed, PosetError> {
    s.mutate(k)
}

/// The cyclic quiver `0 → 1 → … → n-1 → 0` as an exchange matrix.
pub fn cyclic_quiver_matrix(n: usize) -> Result<ExchangeMatrix, PosetError> {
    if n < 2 {
        return Err(PosetError::SizeTooSmall { family: "cyclic quiver", n, min: 2 });
    }
    let mut b = vec![vec![0i64; n]; n];
    for i in 0..n {
        let j = (i + 1) % n;
        b[i][j] += 1;
        b[j][i] -= 1;
    }
    Ok(b)
}

/// Poset of seeds reachable from `(b, identity)` by mutations at green
/// vertices, explored breadth first, with at most `cap` seeds.
///
/// Elements are numbered in discovery order and labelled by the first green
/// sequence reaching them, e.g. `()` for the initial seed and `(0,2)`.
pub fn green_mutation_poset(b: &ExchangeMatrix, cap: usize) -> Result<Poset, PosetError> {
    let start = Seed::initial(b)?.canonical();
    let mut index: HashMap<Seed, usize> = HashMap::new();
    let mut seeds = vec![start.clone()];
    let mut paths: Vec<Vec<usize>> = vec![Vec::new()];
    let mut covers = Vec::new();
    index.insert(start, 0);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        let seed = seeds[i].clone();
        for k in (0..seed.size()).filter(|&k| seed.is_green(k)) {
            let next = seed.mutate(k)?.canonical();
            let j = match index.get(&next) {
                Some(&j) => j,
                None => {
                    let j = seeds.len();
                    if j >= cap {
                        return Err(PosetError::ExplosionGuard { cap });
                    }
                    debug_assert!(next.is_sign_coherent());
                    index.insert(next.clone(), j);
                    seeds.push(next);
                    let mut path = paths[i].clone();
                    path.push(k);
                    paths.push(path);
                    queue.push_back(j);
                    j
                }
            };
            covers.push((i, j));
        }
    }
    let labels = paths
        .iter()
        .map(|p| {
            let steps: Vec<String> = p.iter().map(usize::to_string).collect();
            format!("({})", steps.join(","))
        })
        .collect();
    Poset::from_covers(seeds.len(), &covers)?.with_labels(labels)
}
