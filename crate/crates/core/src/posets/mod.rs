//! Finite posets, Coxeter matrices and the poset families of interest.

mod coxeter;
mod families;
mod io;
mod mutation;

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use fixedbitset::FixedBitSet;
use thiserror::Error;

pub use coxeter::{coxeter_matrix, coxeter_polynomial};
pub use families::{antichain, chain, dyck_lattice, tamari, PosetFamily, MAX_LATTICE_SIZE};
pub use io::PosetFile;
pub use mutation::{
    cyclic_quiver_matrix, green_mutation_poset, mutate, ExchangeMatrix, Seed, DEFAULT_SEED_CAP,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("the cover relation contains a cycle")]
    CycleDetected,
    #[error("element {index} is out of range for a poset of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("relation is not reflexive at {0}")]
    NotReflexive(usize),
    #[error("relation is not antisymmetric: {0} ≤ {1} ≤ {0}")]
    NotAntisymmetric(usize, usize),
    #[error("relation is not transitive: {0} ≤ {1} ≤ {2} but not {0} ≤ {2}")]
    NotTransitive(usize, usize, usize),
    #[error("{labels} labels given for {size} elements")]
    LabelCount { labels: usize, size: usize },
    #[error("{family}({n}) is beyond the supported size {max}")]
    SizeTooLarge { family: &'static str, n: usize, max: usize },
    #[error("{family} needs n ≥ {min}, got {n}")]
    SizeTooSmall { family: &'static str, n: usize, min: usize },
    #[error("mutation exploration exceeded the cap of {cap} seeds")]
    ExplosionGuard { cap: usize },
    #[error("vertex {vertex} is out of range for {size} vertices")]
    InvalidVertex { vertex: usize, size: usize },
    #[error("exchange matrix must be square and nonempty")]
    BadExchangeMatrix,
    #[error("malformed poset data: {0}")]
    Malformed(String),
}

/// A finite partial order on `0..n`.
///
/// Row `i` of the relation holds every `j` with `i ≤ j`; the transposed rows
/// are kept as well since most algorithms need both directions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    labels: Option<Vec<String>>,
}

impl Poset {
    /// Reflexive-transitive closure of a cover (or any generating) relation.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Self, PosetError> {
        let mut succ = vec![Vec::new(); n];
        let mut indegree = vec![0usize; n];
        for &(i, j) in covers {
            for index in [i, j] {
                if index >= n {
                    return Err(PosetError::OutOfRange { index, size: n });
                }
            }
            if i == j {
                return Err(PosetError::CycleDetected);
            }
            succ[i].push(j);
            indegree[j] += 1;
        }
        // Kahn's algorithm; anything left over sits on a cycle
        let mut order = Vec::with_capacity(n);
        let mut ready: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        while let Some(v) = ready.pop() {
            order.push(v);
            for &w in &succ[v] {
                indegree[w] -= 1;
                if indegree[w] == 0 {
                    ready.push(w);
                }
            }
        }
        if order.len() < n {
            return Err(PosetError::CycleDetected);
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for &v in order.iter().rev() {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(v);
            for &w in &succ[v] {
                row.union_with(&up[w]);
            }
            up[v] = row;
        }
        Ok(Self::from_up_rows(up))
    }

    /// Build from a full `leq` matrix, checking the partial order axioms.
    pub fn from_relation(leq: &[Vec<bool>]) -> Result<Self, PosetError> {
        let n = leq.len();
        let mut up = Vec::with_capacity(n);
        for (i, row) in leq.iter().enumerate() {
            if row.len() != n {
                return Err(PosetError::Malformed(format!("row {i} has length {}", row.len())));
            }
            let mut bits = FixedBitSet::with_capacity(n);
            for (j, &b) in row.iter().enumerate() {
                bits.set(j, b);
            }
            up.push(bits);
        }
        for i in 0..n {
            if !up[i].contains(i) {
                return Err(PosetError::NotReflexive(i));
            }
            for j in up[i].ones() {
                if j != i && up[j].contains(i) {
                    return Err(PosetError::NotAntisymmetric(i.min(j), i.max(j)));
                }
                if let Some(k) = up[j].difference(&up[i]).next() {
                    return Err(PosetError::NotTransitive(i, j, k));
                }
            }
        }
        Ok(Self::from_up_rows(up))
    }

    fn from_up_rows(up: Vec<FixedBitSet>) -> Self {
        let n = up.len();
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (i, row) in up.iter().enumerate() {
            for j in row.ones() {
                down[j].insert(i);
            }
        }
        Self { up, down, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, PosetError> {
        if labels.len() != self.len() {
            return Err(PosetError::LabelCount { labels: labels.len(), size: self.len() });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.up.len()
    }

    pub fn is_empty(&self) -> bool {
        self.up.is_empty()
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// `i ≤ j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.up[i].contains(j)
    }

    /// Elements `j ≥ i`, including `i`.
    pub fn upset(&self, i: usize) -> &FixedBitSet {
        &self.up[i]
    }

    /// Elements `j ≤ i`, including `i`.
    pub fn downset(&self, i: usize) -> &FixedBitSet {
        &self.down[i]
    }

    /// Number of pairs `i ≤ j`, including the diagonal.
    pub fn relation_count(&self) -> usize {
        self.up.iter().map(|r| r.count_ones(..)).sum()
    }

    /// Cover relations `(i, j)`: `i < j` with nothing strictly between, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 0..self.len() {
            // j covers i exactly when the interval [i, j] is {i, j}
            out.extend(
                self.up[i]
                    .ones()
                    .filter(|&j| j != i && self.down[j].intersection_count(&self.up[i]) == 2)
                    .map(|j| (i, j)),
            );
        }
        out
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.down[i].count_ones(..) == 1).collect()
    }

    pub fn maximal_elements(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.up[i].count_ones(..) == 1).collect()
    }

    /// Unique minimum and maximum.
    pub fn is_bounded(&self) -> bool {
        self.minimal_elements().len() == 1 && self.maximal_elements().len() == 1
    }

    /// Topological order that always takes the smallest-index minimal element.
    pub fn linear_extension(&self) -> Vec<usize> {
        let n = self.len();
        let mut remaining: Vec<usize> = (0..n).map(|j| self.down[j].count_ones(..) - 1).collect();
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&j| remaining[j] == 0).map(Reverse).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(i)) = heap.pop() {
            order.push(i);
            for j in self.up[i].ones().filter(|&j| j != i) {
                remaining[j] -= 1;
                if remaining[j] == 0 {
                    heap.push(Reverse(j));
                }
            }
        }
        order
    }

    /// The same order with element `i` renamed `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, PosetError> {
        let n = self.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(PosetError::Malformed("relabelling is not a permutation".into()));
            }
        }
        if perm.len() != n {
            return Err(PosetError::Malformed("relabelling has the wrong length".into()));
        }
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        for i in 0..n {
            for j in self.up[i].ones() {
                up[perm[i]].insert(perm[j]);
            }
        }
        let mut out = Self::from_up_rows(up);
        if let Some(labels) = &self.labels {
            let mut moved = vec![String::new(); n];
            for (i, l) in labels.iter().enumerate() {
                moved[perm[i]] = l.clone();
            }
            out.labels = Some(moved);
        }
        Ok(out)
    }

    /// The opposite order.
    pub fn dual(&self) -> Self {
        Self { up: self.down.clone(), down: self.up.clone(), labels: self.labels.clone() }
    }

    /// Cartesian product with the componentwise order; `(i, j)` becomes `i·|other| + j`.
    pub fn product(&self, other: &Self) -> Self {
        let (n, m) = (self.len(), other.len());
        let mut up = Vec::with_capacity(n * m);
        for i in 0..n {
            for j in 0..m {
                let mut row = FixedBitSet::with_capacity(n * m);
                for a in self.up[i].ones() {
                    for b in other.up[j].ones() {
                        row.insert(a * m + b);
                    }
                }
                up.push(row);
            }
        }
        let mut out = Self::from_up_rows(up);
        if let (Some(la), Some(lb)) = (&self.labels, &other.labels) {
            out.labels =
                Some(la.iter().flat_map(|a| lb.iter().map(move |b| format!("({a},{b})"))).collect());
        }
        out
    }
}

pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<Poset, PosetError> {
    Poset::from_covers(n, covers)
}

pub fn linear_extension(p: &Poset) -> Vec<usize> {
    p.linear_extension()
}

pub fn product(p: &Poset, q: &Poset) -> Poset {
    p.product(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star() -> Poset {
        Poset::from_covers(4, &[(0, 3), (1, 3), (2, 3)]).unwrap()
    }

    #[test]
    fn closure_and_cycles() {
        let p = star();
        assert!(p.leq(0, 3) && !p.leq(3, 0) && !p.leq(0, 1));
        assert_eq!(p.relation_count(), 7);
        let chain2 = Poset::from_covers(2, &[(0, 1)]).unwrap();
        assert!(chain2.leq(0, 1));
        assert_eq!(Poset::from_covers(2, &[(0, 1), (1, 0)]), Err(PosetError::CycleDetected));
        assert_eq!(Poset::from_covers(1, &[(0, 0)]), Err(PosetError::CycleDetected));
        assert_eq!(
            Poset::from_covers(2, &[(0, 2)]),
            Err(PosetError::OutOfRange { index: 2, size: 2 })
        );
        let long = Poset::from_covers(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(long.leq(0, 3));
    }

    #[test]
    fn relation_validation() {
        let t = true;
        let f = false;
        assert!(Poset::from_relation(&[vec![t, t], vec![f, t]]).is_ok());
        assert_eq!(
            Poset::from_relation(&[vec![f, t], vec![f, t]]),
            Err(PosetError::NotReflexive(0))
        );
        assert_eq!(
            Poset::from_relation(&[vec![t, t], vec![t, t]]),
            Err(PosetError::NotAntisymmetric(0, 1))
        );
        assert_eq!(
            Poset::from_relation(&[vec![t, t, f], vec![f, t, t], vec![f, f, t]]),
            Err(PosetError::NotTransitive(0, 1, 2))
        );
    }

    #[test]
    fn covers_are_recovered() {
        let p = Poset::from_covers(4, &[(0, 1), (0, 2), (1, 3), (2, 3), (0, 3)]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
    }

    #[test]
    fn linear_extensions() {
        assert_eq!(antichain(3).linear_extension(), vec![0, 1, 2]);
        let reversed = Poset::from_covers(2, &[(1, 0)]).unwrap();
        assert_eq!(reversed.linear_extension(), vec![1, 0]);
        assert_eq!(star().linear_extension(), vec![0, 1, 2, 3]);
        let p = Poset::from_covers(4, &[(3, 0), (2, 1)]).unwrap();
        assert_eq!(p.linear_extension(), vec![2, 1, 3, 0]);
    }

    #[test]
    fn products() {
        let diamond = chain(2).product(&chain(2));
        assert_eq!(diamond.len(), 4);
        assert_eq!(diamond.covers().len(), 4);
        assert!(diamond.is_bounded());
        let same = star().product(&chain(1));
        assert_eq!(same, star());
    }

    #[test]
    fn relabel_and_dual() {
        let p = Poset::from_covers(3, &[(0, 1), (1, 2)]).unwrap();
        let q = p.relabel(&[2, 0, 1]).unwrap();
        assert!(q.leq(2, 0) && q.leq(0, 1));
        assert!(p.dual().leq(2, 0));
        assert!(p.relabel(&[0, 0, 1]).is_err());
    }
}
