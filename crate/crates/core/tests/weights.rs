mod common;

use common::*;
use coxweight::weights::{factorizations, is_prime, w, EigenMethod, Weight, WeightFamily, WeightTable};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn names(family: WeightFamily, range: std::ops::RangeInclusive<u64>) -> Vec<String> {
    let table = WeightTable::bundled();
    range.map(|n| table.describe(&family.weight(n).unwrap()).unwrap()).collect()
}

#[test]
fn family_lists() {
    assert_eq!(names(WeightFamily::Catalan, 1..=5), ["A1", "A2", "D5", "S_{1,0}", "D7×E6"]);
    assert_eq!(names(WeightFamily::Asm, 1..=4), ["A1", "A2", "E7", "D7×E6"]);
    assert_eq!(names(WeightFamily::West, 1..=5), ["A1", "A2", "E6", "A2×Z11", "E7×Z13"]);
    assert_eq!(names(WeightFamily::TamariInterval, 1..=4), ["A1", "A3", "W13", "A4×W17"]);
    assert_eq!(
        names(WeightFamily::CyclicQuiver, 2..=5),
        ["A2×A2", "A2×E7", "A2×A5×D5", "E13×S_{1,0}"]
    );
}

#[test]
fn cyclic_quiver_sizes() {
    // (3n - 2)·c_{n-1}
    let catalan = [1u64, 1, 2, 5, 14, 42, 132];
    for n in 2..=7u64 {
        let mu = WeightFamily::CyclicQuiver.weight(n).unwrap().milnor_integer().unwrap();
        assert_eq!(mu, BigInt::from((3 * n - 2) * catalan[n as usize - 1]));
    }
}

#[test]
fn catalan_milnor_numbers() {
    let catalan = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430, 4862];
    for n in 1..=9 {
        let x = WeightFamily::Catalan.weight(n).unwrap();
        assert_eq!(x.milnor_integer().unwrap(), BigInt::from(catalan[n as usize]));
    }
}

#[test]
fn product_invariants_over_table_pairs() {
    let rows: Vec<Weight> = WeightTable::bundled().rows().iter().map(|r| r.weight.canonicalize()).collect();
    for a in rows.iter().step_by(3) {
        for b in rows.iter().step_by(4) {
            let p = a.product(b);
            assert_eq!(p.milnor_number(), a.milnor_number() * b.milnor_number());
            assert_eq!(p.central_charge(), a.central_charge() + b.central_charge());
            let oracle = product_oracle((a.degrees(), a.total()), (b.degrees(), b.total()));
            assert_eq!((p.degrees().to_vec(), p.total()), oracle);
            assert!(p.is_weight());
        }
    }
}

#[test]
fn non_unique_factorization() {
    let x = w(&[3, 4, 7, 10], 24);
    assert!(x.is_weight());
    assert!(factorizations(&x).unwrap().len() >= 2);
    for f in factorizations(&x).unwrap() {
        assert!(f.factors().iter().all(|p| is_prime(p).unwrap()));
        assert_eq!(f.product(), x.canonicalize());
    }
}

#[test]
fn eigenvalues_of_brieskorn_pham_sums() {
    for (d, total) in [(vec![2u64, 3], 6), (vec![1, 2, 3], 6), (vec![3, 4], 12), (vec![2, 5, 5], 10)] {
        let x = Weight::new(d.clone(), total).unwrap();
        let expected = brieskorn_pham_eigen(&d, total).unwrap();
        assert_eq!(x.eigen_multiplicities(EigenMethod::MilnorOrlik).unwrap(), expected);
        assert_eq!(x.eigen_multiplicities(EigenMethod::QMilnor).unwrap(), expected);
    }
}

fn arb_degrees() -> impl Strategy<Value = (Vec<u64>, u64)> {
    (2u64..=24).prop_flat_map(|total| {
        (proptest::collection::vec(1..=total / 2, 0..=4), Just(total))
    })
}

proptest! {
    #[test]
    fn validity_matches_long_division((d, total) in arb_degrees()) {
        let x = Weight::new(d.clone(), total).unwrap();
        prop_assert_eq!(x.is_weight(), is_weight_oracle(&d, total));
        prop_assert_eq!(x.milnor_number(), milnor_oracle(&d, total));
        if let Some(q) = q_milnor_oracle(&d, total) {
            let expanded = x.q_milnor().expand().unwrap();
            prop_assert_eq!(expanded.coeffs(), q.as_slice());
        }
    }

    #[test]
    fn canonical_form_is_idempotent_and_equivalent((d, total) in arb_degrees()) {
        let x = Weight::new(d, total).unwrap();
        let c = x.canonicalize();
        prop_assert_eq!(c.canonicalize(), c.clone());
        prop_assert!(c.is_canonical());
        prop_assert!(c.equivalent(&x));
        prop_assert_eq!(c.milnor_number(), x.milnor_number());
        prop_assert_eq!(c.is_weight(), x.is_weight());
    }

    #[test]
    fn text_round_trip((d, total) in arb_degrees()) {
        let x = Weight::new(d, total).unwrap();
        prop_assert_eq!(x.to_string().parse::<Weight>().unwrap(), x.clone());
        prop_assert_eq!(x.paren().parse::<Weight>().unwrap(), x);
    }

    #[test]
    fn products_are_commutative_with_unit((a, ta) in arb_degrees(), (b, tb) in arb_degrees()) {
        let x = Weight::new(a, ta).unwrap();
        let y = Weight::new(b, tb).unwrap();
        prop_assert_eq!(x.product(&y), y.product(&x));
        prop_assert_eq!(x.product(&Weight::unit()), x.canonicalize());
        prop_assert_eq!(x.product(&y).milnor_number(), x.milnor_number() * y.milnor_number());
        if x.is_weight() && y.is_weight() {
            prop_assert!(x.product(&y).is_weight());
        }
    }

    #[test]
    fn eigen_methods_agree((d, total) in arb_degrees()) {
        let x = Weight::new(d, total).unwrap();
        prop_assume!(x.is_weight());
        let mo = x.eigen_multiplicities(EigenMethod::MilnorOrlik).unwrap();
        let qm = x.eigen_multiplicities(EigenMethod::QMilnor).unwrap();
        prop_assert_eq!(&mo, &qm);
        let total: u64 = mo.values().sum();
        prop_assert_eq!(BigRational::from_integer(total.into()), x.milnor_number());
    }

    #[test]
    fn factorizations_multiply_back((d, total) in arb_degrees()) {
        let x = Weight::new(d, total).unwrap();
        prop_assume!(x.is_weight());
        for f in factorizations(&x).unwrap() {
            prop_assert!(x.equivalent(&f.product()));
        }
    }
}
