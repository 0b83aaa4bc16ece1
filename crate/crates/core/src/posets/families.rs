//! Chains, antichains, Tamari lattices and Dyck path lattices.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::mutation::{cyclic_quiver_matrix, green_mutation_poset};
use super::{Poset, PosetError};

/// Largest `n` accepted by [`tamari`] and [`dyck_lattice`].
pub const MAX_LATTICE_SIZE: usize = 10;

/// `0 < 1 < … < k-1`.
pub fn chain(k: usize) -> Poset {
    let covers: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    Poset::from_covers(k, &covers).expect("a chain has no cycles")
}

/// `k` pairwise incomparable elements.
pub fn antichain(k: usize) -> Poset {
    Poset::from_covers(k, &[]).expect("no relations")
}

fn check_size(family: &'static str, n: usize) -> Result<(), PosetError> {
    if n < 1 {
        return Err(PosetError::SizeTooSmall { family, n, min: 1 });
    }
    if n > MAX_LATTICE_SIZE {
        return Err(PosetError::SizeTooLarge { family, n, max: MAX_LATTICE_SIZE });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    fn node(l: Tree, r: Tree) -> Tree {
        Tree::Node(Box::new(l), Box::new(r))
    }

    /// All trees with `n` inner vertices, left subtree size increasing.
    fn all(n: usize, memo: &mut HashMap<usize, Vec<Tree>>) -> Vec<Tree> {
        if let Some(known) = memo.get(&n) {
            return known.clone();
        }
        let out = if n == 0 {
            vec![Tree::Leaf]
        } else {
            let mut out = Vec::new();
            for k in 0..n {
                let lefts = Tree::all(k, memo);
                let rights = Tree::all(n - 1 - k, memo);
                for l in &lefts {
                    for r in &rights {
                        out.push(Tree::node(l.clone(), r.clone()));
                    }
                }
            }
            out
        };
        memo.insert(n, out.clone());
        out
    }

    /// Every tree reachable by one right rotation `((A B) C) → (A (B C))`.
    fn rotations(&self) -> Vec<Tree> {
        let Tree::Node(l, r) = self else {
            return Vec::new();
        };
        let mut out = Vec::new();
        if let Tree::Node(a, b) = l.as_ref() {
            out.push(Tree::node((**a).clone(), Tree::node((**b).clone(), (**r).clone())));
        }
        for l2 in l.rotations() {
            out.push(Tree::node(l2, (**r).clone()));
        }
        for r2 in r.rotations() {
            out.push(Tree::node((**l).clone(), r2));
        }
        out
    }

    fn bracketing(&self) -> String {
        match self {
            Tree::Leaf => "x".to_string(),
            Tree::Node(l, r) => format!("({}{})", l.bracketing(), r.bracketing()),
        }
    }
}

/// Tamari lattice on binary trees with `n` inner vertices.
///
/// Elements are labelled by their bracketing over leaves `x`, e.g. `((xx)x)`;
/// the left comb is the minimum and right rotations go up.
pub fn tamari(n: usize) -> Result<Poset, PosetError> {
    check_size("tamari", n)?;
    let trees = Tree::all(n, &mut HashMap::new());
    let index: HashMap<&Tree, usize> = trees.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let mut covers = Vec::new();
    for (i, t) in trees.iter().enumerate() {
        for rotated in t.rotations() {
            covers.push((i, index[&rotated]));
        }
    }
    let labels = trees.iter().map(Tree::bracketing).collect();
    Poset::from_covers(trees.len(), &covers)?.with_labels(labels)
}

/// Dyck paths of semilength `n`, ordered by one path lying weakly below another.
///
/// Elements are labelled by their `U`/`D` words in lexicographic order.
pub fn dyck_lattice(n: usize) -> Result<Poset, PosetError> {
    check_size("dyck", n)?;
    let mut paths = Vec::new();
    let mut word = Vec::with_capacity(2 * n);
    dyck_words(n, 0, 0, &mut word, &mut paths);
    let index: HashMap<&Vec<u8>, usize> = paths.iter().enumerate().map(|(i, p)| (p, i)).collect();
    // raising a valley DU to a peak UD lifts one height by 2, which is a cover
    let mut covers = Vec::new();
    for (i, p) in paths.iter().enumerate() {
        for k in 0..p.len() - 1 {
            if p[k] == b'D' && p[k + 1] == b'U' {
                let mut q = p.clone();
                q.swap(k, k + 1);
                covers.push((i, index[&q]));
            }
        }
    }
    let labels = paths.iter().map(|p| String::from_utf8(p.clone()).expect("ascii")).collect();
    Poset::from_covers(paths.len(), &covers)?.with_labels(labels)
}

fn dyck_words(n: usize, ups: usize, downs: usize, word: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
    if downs == n {
        out.push(word.clone());
        return;
    }
    if downs < ups {
        word.push(b'D');
        dyck_words(n, ups, downs + 1, word, out);
        word.pop();
    }
    if ups < n {
        word.push(b'U');
        dyck_words(n, ups + 1, downs, word, out);
        word.pop();
    }
}

/// Heights `h_0, …, h_{2n}` of a `U`/`D` word.
#[cfg(test)]
fn dyck_heights(word: &str) -> Vec<i64> {
    let mut h = vec![0];
    for c in word.bytes() {
        let last = *h.last().expect("starts at height 0");
        h.push(if c == b'U' { last + 1 } else { last - 1 });
    }
    h
}

/// Poset families indexed by `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosetFamily {
    Chain,
    Tamari,
    Dyck,
    /// Green mutations of the cyclic quiver on `n` vertices.
    GreenCyclic,
}

impl PosetFamily {
    pub const ALL: [PosetFamily; 4] =
        [PosetFamily::Chain, PosetFamily::Tamari, PosetFamily::Dyck, PosetFamily::GreenCyclic];

    pub fn name(self) -> &'static str {
        match self {
            PosetFamily::Chain => "chain",
            PosetFamily::Tamari => "tamari",
            PosetFamily::Dyck => "dyck",
            PosetFamily::GreenCyclic => "green-cyclic",
        }
    }

    /// Member of index `n`; `seed_cap` only matters for green mutations.
    pub fn generate(self, n: usize, seed_cap: usize) -> Result<Poset, PosetError> {
        match self {
            PosetFamily::Chain => Ok(chain(n)),
            PosetFamily::Tamari => tamari(n),
            PosetFamily::Dyck => dyck_lattice(n),
            PosetFamily::GreenCyclic => green_mutation_poset(&cyclic_quiver_matrix(n)?, seed_cap),
        }
    }
}

impl fmt::Display for PosetFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PosetFamily {
    type Err = PosetError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace('_', "-");
        Self::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| PosetError::Malformed(format!("unknown poset family {s:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const CATALAN: [usize; 9] = [1, 1, 2, 5, 14, 42, 132, 429, 1430];

    #[test]
    fn tamari_sizes() {
        for n in 1..=6 {
            let t = tamari(n).unwrap();
            assert_eq!(t.len(), CATALAN[n]);
            assert!(t.is_bounded());
        }
        let t3 = tamari(3).unwrap();
        assert_eq!(t3.covers().len(), 5);
        let t1 = tamari(1).unwrap();
        assert_eq!(t1.labels().unwrap(), ["(xx)"]);
        let t2 = tamari(2).unwrap();
        assert_eq!(t2.labels().unwrap(), ["(x(xx))", "((xx)x)"]);
        assert!(t2.leq(1, 0));
    }

    #[test]
    fn tamari_is_a_lattice_brute_force() {
        let t = tamari(4).unwrap();
        let n = t.len();
        for a in 0..n {
            for b in 0..n {
                let uppers: Vec<usize> = (0..n).filter(|&c| t.leq(a, c) && t.leq(b, c)).collect();
                let least = uppers.iter().filter(|&&c| uppers.iter().all(|&d| t.leq(c, d))).count();
                assert_eq!(least, 1, "join of {a} and {b}");
            }
        }
    }

    #[test]
    fn dyck_matches_pointwise_heights() {
        for n in 1..=5 {
            let d = dyck_lattice(n).unwrap();
            assert_eq!(d.len(), CATALAN[n]);
            let labels = d.labels().unwrap();
            let heights: Vec<Vec<i64>> = labels.iter().map(|l| dyck_heights(l)).collect();
            for i in 0..d.len() {
                for j in 0..d.len() {
                    let below = heights[i].iter().zip(&heights[j]).all(|(a, b)| a <= b);
                    assert_eq!(d.leq(i, j), below, "{} vs {}", labels[i], labels[j]);
                }
            }
        }
        let d2 = dyck_lattice(2).unwrap();
        assert_eq!(d2.labels().unwrap(), ["UDUD", "UUDD"]);
        assert!(d2.leq(0, 1));
    }

    #[test]
    fn size_limits() {
        assert!(matches!(tamari(0), Err(PosetError::SizeTooSmall { .. })));
        assert!(matches!(tamari(11), Err(PosetError::SizeTooLarge { .. })));
        assert!(matches!(dyck_lattice(11), Err(PosetError::SizeTooLarge { .. })));
        assert_eq!(tamari(1).unwrap().len(), 1);
        assert_eq!(dyck_lattice(1).unwrap().len(), 1);
    }
}
