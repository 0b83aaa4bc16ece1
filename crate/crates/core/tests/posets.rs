mod common;

use common::*;
use coxweight::algebra::IntMatrix;
use coxweight::posets::{antichain, chain, dyck_lattice, tamari, Poset, PosetFile};
use num_bigint::BigInt;
use proptest::prelude::*;

fn arb_poset(max: usize) -> impl Strategy<Value = Poset> {
    (1..=max)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (
                Just(n),
                proptest::collection::vec(proptest::bool::weighted(0.35), pairs),
                Just((0..n).collect::<Vec<usize>>()).prop_shuffle(),
            )
        })
        .prop_map(|(n, bits, perm)| {
            let mut covers = Vec::new();
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    if bits[k] {
                        covers.push((perm[i], perm[j]));
                    }
                    k += 1;
                }
            }
            Poset::from_covers(n, &covers).unwrap()
        })
}

fn catalan(n: usize) -> usize {
    (0..n).fold(1, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

#[test]
fn lattice_sizes_are_catalan() {
    for n in 1..=7 {
        assert_eq!(tamari(n).unwrap().len(), catalan(n));
        assert_eq!(dyck_lattice(n).unwrap().len(), catalan(n));
        assert!(tamari(n).unwrap().is_bounded());
    }
}

#[test]
fn kronecker_identity() {
    let pairs = [
        (chain(2), chain(2)),
        (chain(2), chain(3)),
        (tamari(3).unwrap(), chain(2)),
        (Poset::from_covers(4, &[(0, 3), (1, 3), (2, 3)]).unwrap(), antichain(2)),
    ];
    for (p, q) in &pairs {
        let lhs = p.product(q).coxeter_matrix();
        let rhs = p.coxeter_matrix().kron(&q.coxeter_matrix()).neg();
        assert_eq!(lhs, rhs);
    }
    // applied twice
    let triple = chain(2).product(&chain(2)).product(&chain(3));
    let expected = chain(2)
        .coxeter_matrix()
        .kron(&chain(2).coxeter_matrix())
        .kron(&chain(3).coxeter_matrix());
    assert_eq!(triple.coxeter_matrix(), expected);
}

#[test]
fn tamari_and_dyck_against_oracle() {
    for n in 1..=4 {
        for p in [tamari(n).unwrap(), dyck_lattice(n).unwrap()] {
            let oracle = coxeter_oracle(p.len(), |i, j| p.leq(i, j));
            assert_eq!(p.coxeter_matrix().to_rows(), oracle);
            assert_eq!(p.coxeter_polynomial().coeffs(), leverrier(&oracle).as_slice());
        }
    }
}

#[test]
fn dual_has_the_same_polynomial() {
    for p in [tamari(4).unwrap(), Poset::from_covers(4, &[(0, 3), (1, 3), (2, 3)]).unwrap()] {
        assert_eq!(p.dual().coxeter_polynomial(), p.coxeter_polynomial());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn coxeter_polynomial_is_palindromic_and_unimodular(p in arb_poset(9)) {
        let cp = p.coxeter_polynomial();
        prop_assert!(cp.is_monic());
        prop_assert!(cp.is_palindromic());
        let det = bareiss_det(&p.coxeter_matrix().to_rows());
        prop_assert_eq!(det, BigInt::from(if p.len() % 2 == 0 { 1 } else { -1 }));
    }

    #[test]
    fn matches_rational_oracle(p in arb_poset(7)) {
        let oracle = coxeter_oracle(p.len(), |i, j| p.leq(i, j));
        prop_assert_eq!(p.coxeter_matrix().to_rows(), oracle);
    }

    #[test]
    fn relabel_invariance(
        (p, perm) in arb_poset(8).prop_flat_map(|p| {
            let n = p.len();
            (Just(p), Just((0..n).collect::<Vec<usize>>()).prop_shuffle())
        })
    ) {
        let q = p.relabel(&perm).unwrap();
        prop_assert_eq!(q.relation_count(), p.relation_count());
        prop_assert_eq!(q.coxeter_polynomial(), p.coxeter_polynomial());
    }

    #[test]
    fn linear_extension_respects_order(p in arb_poset(9)) {
        let ext = p.linear_extension();
        let mut pos = vec![0; p.len()];
        for (k, &v) in ext.iter().enumerate() {
            pos[v] = k;
        }
        for i in 0..p.len() {
            for j in 0..p.len() {
                if p.leq(i, j) {
                    prop_assert!(pos[i] <= pos[j]);
                }
            }
        }
    }

    #[test]
    fn file_round_trip(p in arb_poset(9)) {
        let text = p.to_json();
        let back = Poset::from_json(&text).unwrap();
        prop_assert_eq!(back.covers(), p.covers());
        prop_assert_eq!(PosetFile::from_poset(&back), PosetFile::from_poset(&p));
    }

    #[test]
    fn product_kronecker(p in arb_poset(4), q in arb_poset(4)) {
        let lhs = p.product(&q).coxeter_matrix();
        let rhs: IntMatrix = p.coxeter_matrix().kron(&q.coxeter_matrix()).neg();
        prop_assert_eq!(lhs, rhs);
    }
}
