//! Splitting a Weight into prime Weights.
//!
//! A factorization of `(d_1, …, d_m ; D)` is a partition of the degree
//! multiset into blocks, each of which is itself a Weight at the same `D`.
//! Blocks are reported in lowest terms.

use std::collections::{BTreeSet, HashMap};

use super::{Weight, WeightError};
use crate::algebra::{q_integer, CyclotomicProduct};

/// Largest number of degrees accepted by [`factorizations`].
pub const MAX_FACTOR_DEGREES: usize = 24;

/// An unordered collection of prime Weights, kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Factorization {
    factors: Vec<Weight>,
}

impl Factorization {
    pub fn new(mut factors: Vec<Weight>) -> Self {
        factors.sort_by(factor_order);
        Self { factors }
    }

    pub fn factors(&self) -> &[Weight] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Product of the factors, canonicalized.
    pub fn product(&self) -> Weight {
        Weight::product_all(&self.factors)
    }
}

impl std::fmt::Display for Factorization {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("(;1)");
        }
        let parts: Vec<String> = self.factors.iter().map(Weight::paren).collect();
        f.write_str(&parts.join("×"))
    }
}

fn factor_order(a: &Weight, b: &Weight) -> std::cmp::Ordering {
    (a.len(), a.degrees(), a.total()).cmp(&(b.len(), b.degrees(), b.total()))
}

/// All ways to write the Weight as a product of prime Weights by splitting
/// its degree multiset. Empty when the input is not a Weight.
pub fn factorizations(w: &Weight) -> Result<Vec<Factorization>, WeightError> {
    if w.len() > MAX_FACTOR_DEGREES {
        return Err(WeightError::TooManyDegrees { degrees: w.len(), limit: MAX_FACTOR_DEGREES });
    }
    let mut search = Search::new(w.total());
    let blocks = search.factor(w.degrees());
    let out: BTreeSet<Factorization> = blocks
        .iter()
        .map(|split| {
            Factorization::new(
                split
                    .iter()
                    .map(|b| Weight::new(b.clone(), w.total()).expect("block of a valid weight").lowest_terms())
                    .collect(),
            )
        })
        .collect();
    Ok(out.into_iter().collect())
}

/// A Weight with at least one degree that admits no nontrivial split.
pub fn is_prime(w: &Weight) -> Result<bool, WeightError> {
    if w.len() > MAX_FACTOR_DEGREES {
        return Err(WeightError::TooManyDegrees { degrees: w.len(), limit: MAX_FACTOR_DEGREES });
    }
    let mut search = Search::new(w.total());
    Ok(!w.is_empty() && search.is_weight(w.degrees()) && search.is_prime(w.degrees()))
}

type Block = Vec<u64>;

struct Search {
    total: u64,
    contributions: HashMap<u64, CyclotomicProduct>,
    weight_cache: HashMap<Block, bool>,
    prime_cache: HashMap<Block, bool>,
    factor_cache: HashMap<Block, Vec<Vec<Block>>>,
}

impl Search {
    fn new(total: u64) -> Self {
        Self {
            total,
            contributions: HashMap::new(),
            weight_cache: HashMap::new(),
            prime_cache: HashMap::new(),
            factor_cache: HashMap::new(),
        }
    }

    fn is_weight(&mut self, block: &[u64]) -> bool {
        if let Some(&known) = self.weight_cache.get(block) {
            return known;
        }
        let mut q = CyclotomicProduct::one();
        for &d in block {
            let total = self.total;
            let c = self
                .contributions
                .entry(d)
                .or_insert_with(|| q_integer(total - d).div(&q_integer(d)));
            q = q.mul(c);
        }
        let ok = q.is_nonnegative() && q.expand().is_ok_and(|p| p.has_nonnegative_coeffs());
        self.weight_cache.insert(block.to_vec(), ok);
        ok
    }

    /// Assumes `block` is a Weight.
    fn is_prime(&mut self, block: &[u64]) -> bool {
        if let Some(&known) = self.prime_cache.get(block) {
            return known;
        }
        let mut prime = true;
        for (first, rest) in splits(block) {
            if !rest.is_empty() && self.is_weight(&first) && self.is_weight(&rest) {
                prime = false;
                break;
            }
        }
        self.prime_cache.insert(block.to_vec(), prime);
        prime
    }

    fn factor(&mut self, block: &[u64]) -> Vec<Vec<Block>> {
        if block.is_empty() {
            return vec![Vec::new()];
        }
        if let Some(known) = self.factor_cache.get(block) {
            return known.clone();
        }
        let mut out = Vec::new();
        for (first, rest) in splits(block) {
            if !self.is_weight(&first) || (!rest.is_empty() && !self.is_weight(&rest)) {
                continue;
            }
            if !self.is_prime(&first) {
                continue;
            }
            for tail in self.factor(&rest) {
                let mut split = Vec::with_capacity(tail.len() + 1);
                split.push(first.clone());
                split.extend(tail);
                out.push(split);
            }
        }
        self.factor_cache.insert(block.to_vec(), out.clone());
        out
    }
}

/// Every split of a sorted multiset into `(first, rest)` where `first`
/// contains the smallest element.
fn splits(block: &[u64]) -> Vec<(Block, Block)> {
    let mut values: Vec<(u64, usize)> = Vec::new();
    for &d in block {
        match values.last_mut() {
            Some((v, c)) if *v == d => *c += 1,
            _ => values.push((d, 1)),
        }
    }
    // the first block always takes one copy of the smallest value
    let mut available = values.clone();
    available[0].1 -= 1;
    let mut take = vec![0usize; available.len()];
    let mut out = Vec::new();
    loop {
        let mut first = vec![values[0].0];
        let mut rest = Vec::new();
        for (&(v, avail), &k) in available.iter().zip(&take) {
            first.extend(std::iter::repeat_n(v, k));
            rest.extend(std::iter::repeat_n(v, avail - k));
        }
        first.sort_unstable();
        out.push((first, rest));
        let mut i = 0;
        loop {
            if i == take.len() {
                return out;
            }
            if take[i] < available[i].1 {
                take[i] += 1;
                break;
            }
            take[i] = 0;
            i += 1;
        }
    }
}
