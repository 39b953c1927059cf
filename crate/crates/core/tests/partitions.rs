use std::collections::BTreeMap;

use num_bigint::BigInt;
use partmeth_core::classes::*;
use partmeth_core::partitions::*;
use proptest::prelude::*;

fn multiset(k: u32, order: Order) -> BTreeMap<Vec<u32>, u32> {
    let mut m = BTreeMap::new();
    enumerate(k, order, |p| *m.entry(p.parts().to_vec()).or_insert(0) += 1);
    m
}

fn count(k: u32, class: &PartitionClass) -> u64 {
    count_class(k, class)
}

fn central(k: u32) -> Vec<u32> {
    if k % 2 == 0 {
        vec![k / 2, k / 2]
    } else {
        vec![k / 2, k / 2 + 1]
    }
}

#[test]
fn brcp_listing_for_five() {
    let mut seen = Vec::new();
    let n = enumerate(5, Order::Brcp, |p| seen.push(p.parts().to_vec()));
    assert_eq!(n, 7);
    let want: Vec<Vec<u32>> =
        vec![vec![5], vec![1, 4], vec![1, 1, 3], vec![1, 1, 1, 2], vec![1, 1, 1, 1, 1], vec![1, 2, 2], vec![2, 3]];
    assert_eq!(seen, want);
}

#[test]
fn first_and_last_partitions() {
    for k in 1..=25u32 {
        let mut first = None;
        let mut last = Vec::new();
        enumerate(k, Order::Brcp, |p| {
            if first.is_none() {
                first = Some(p.parts().to_vec());
            }
            last = p.parts().to_vec();
        });
        assert_eq!(first.unwrap(), vec![k]);
        match k {
            1 => assert_eq!(last, vec![1]),
            3 => assert_eq!(last, vec![1, 1, 1]),
            _ => assert_eq!(last, central(k), "k={k}"),
        }
    }
}

#[test]
fn empty_and_unit() {
    for order in Order::ALL {
        let mut seen = Vec::new();
        assert_eq!(enumerate(0, order, |p| seen.push(p.clone())), 1);
        assert_eq!(seen[0].num_parts(), 0);
        let mut one = Vec::new();
        assert_eq!(enumerate(1, order, |p| one.push(p.parts().to_vec())), 1);
        assert_eq!(one, vec![vec![1]]);
    }
}

#[test]
fn visited_partitions_are_valid() {
    for k in 0..=30u32 {
        for order in Order::ALL {
            enumerate(k, order, |p| {
                let sum: u32 = p.iter().map(|(e, f)| e * f).sum();
                assert_eq!(sum, k);
                assert_eq!(p.total(), k);
                assert!(p.iter().all(|(e, f)| f >= 1 && e >= 1 && e <= k));
                assert!(k == 0 || (p.num_parts() >= 1 && p.num_parts() <= k));
            });
        }
    }
}

#[test]
fn counts_match_recurrence() {
    assert_eq!(count_partitions(0), BigInt::from(1));
    assert_eq!(count_partitions(6), BigInt::from(11));
    assert_eq!(count_partitions(50), BigInt::from(204_226));
    assert_eq!(count_partitions(100), BigInt::from(190_569_292u64));
    let p = partition_numbers(40);
    for k in 0..=40u32 {
        assert_eq!(BigInt::from(enumerate(k, Order::Brcp, |_| {})), p[k as usize], "k={k}");
    }
}

#[test]
fn orders_agree() {
    for k in 0..=25 {
        let b = multiset(k, Order::Brcp);
        assert!(b.values().all(|&c| c == 1));
        assert_eq!(b, multiset(k, Order::ReverseLex), "k={k}");
        assert_eq!(b, multiset(k, Order::Ascending), "k={k}");
    }
    assert_eq!(multiset(20, Order::ReverseLex).len(), 627);
}

#[test]
fn parts_recurrences() {
    assert_eq!(count_with_parts(6, 3), BigInt::from(3));
    assert_eq!(count_with_parts(10, 5), BigInt::from(7));
    assert_eq!(count_at_most_parts(4, 2), BigInt::from(3));
    assert_eq!(count_at_most_parts(10, 5), BigInt::from(30));
    let p = partition_numbers(40);
    for k in 1..=40u32 {
        assert_eq!(count_with_parts(k, 1), BigInt::from(1));
        assert_eq!(count_at_most_parts(k, k), p[k as usize]);
        let s: BigInt = (1..=k).map(|m| count_with_parts(k, m)).sum();
        assert_eq!(s, p[k as usize]);
    }
}

#[test]
fn scan_of_tree_rows() {
    let p = partition_numbers(25);
    for k in 1..=25u32 {
        let mut s = BigInt::from(1);
        for m in 1..=k / 2 {
            s += count(k - m, &PartitionClass::builder().min_element(m).build().unwrap());
        }
        assert_eq!(s, p[k as usize], "k={k}");
    }
}

#[test]
fn subtrees_partition_the_tree() {
    for k in 0..=20u32 {
        let mut all = BTreeMap::new();
        for q in 0..brcp_subtree_count(k) {
            brcp_subtree(k, q, |p| *all.entry(p.parts().to_vec()).or_insert(0) += 1);
        }
        assert_eq!(all, multiset(k, Order::Brcp));
    }
}

#[test]
fn hardy_ramanujan() {
    let k = 100.0f64;
    let p = 190_569_292.0f64;
    let ratio = p * 4.0 * 3f64.sqrt() * k / (std::f64::consts::PI * (2.0 * k / 3.0).sqrt()).exp();
    assert!(ratio > 0.9 && ratio < 1.2, "{ratio}");
}

#[test]
fn class_examples() {
    let b = PartitionClass::builder;
    assert_eq!(count(11, &b().require(&[6], Combinator::All).build().unwrap()), 7);
    assert_eq!(count(13, &b().min_element(3).max_element(9).build().unwrap()), 8);
    assert_eq!(count(14, &b().min_element(4).build().unwrap()), 7);
    assert_eq!(count(10, &PartitionClass::exact_parts(5)), 7);
    assert_eq!(count(10, &b().max_parts(5).build().unwrap()), 30);
    assert_eq!(count(100, &PartitionClass::distinct()), 444_793);
    assert_eq!(count(10, &b().max_parts(3).max_element(5).build().unwrap()), 5);
    assert_eq!(count(100, &b().distinct(true).exact_parts(5).build().unwrap()), 25_337);
    assert_eq!(count(100, &b().distinct(true).exact_parts(13).build().unwrap()), 30);
    assert_eq!(count(100, &PartitionClass::only(ElementFilter::Pentagonal)), 42_205);
    assert_eq!(count(20, &b().max_multiplicity(3).build().unwrap()), 320);
    assert_eq!(count(20, &PartitionClass::all()), 627);
    assert_eq!(count(3, &PartitionClass::exact_parts(5)), 0);
    assert!(b().distinct(true).max_multiplicity(2).build().is_err());
    assert!(b().min_element(5).max_element(3).build().is_err());
}

#[test]
fn required_any() {
    let any = PartitionClass::builder().require(&[2, 3], Combinator::Any).build().unwrap();
    let mut n = 0;
    enumerate(7, Order::Brcp, |p| n += u64::from(p.contains(2) || p.contains(3)));
    assert_eq!(count(7, &any), n);
}

#[test]
fn distinct_part_bound() {
    assert_eq!(max_distinct_parts(100), 13);
    assert_eq!(max_distinct_parts(1), 1);
    for n in 1..=40u32 {
        assert_eq!(max_distinct_parts(n * (n + 1) / 2), n);
        assert_eq!(max_distinct_parts(n * (n + 1) / 2 - 1), n - 1);
    }
}

#[test]
fn transpose_examples() {
    let p = Partition::from_parts(&[1, 1, 2, 3, 3, 4]).unwrap();
    assert_eq!(transpose(&p).parts(), &[1, 3, 4, 6]);
    assert_eq!(transpose(&Partition::from_parts(&[1, 3]).unwrap()).parts(), &[1, 1, 2]);
    assert_eq!(transpose(&Partition::from_parts(&[1; 7]).unwrap()).parts(), &[7]);
    assert!(is_self_conjugate(&Partition::from_parts(&[1, 2, 3]).unwrap()));
    for k in 2..10 {
        assert!(!is_self_conjugate(&Partition::from_parts(&[k]).unwrap()));
    }
    let mut selfconj = 0;
    enumerate(15, Order::Brcp, |p| selfconj += u64::from(is_self_conjugate(p)));
    let odd_distinct = PartitionClass::builder().distinct(true).allowed(ElementFilter::Odd).build().unwrap();
    assert_eq!(selfconj, count(15, &odd_distinct));
}

#[test]
fn transpose_properties() {
    for k in 0..=25u32 {
        enumerate(k, Order::Brcp, |p| {
            let t = transpose(p);
            assert_eq!(t.total(), k);
            assert_eq!(t.num_parts(), p.largest().unwrap_or(0));
            assert_eq!(&transpose(&t), p);
        });
    }
}

#[test]
fn largest_element_duality() {
    for k in 1..=25u32 {
        for m in 1..=k {
            let mut largest = 0;
            enumerate(k, Order::Brcp, |p| largest += u64::from(p.largest() == Some(m)));
            assert_eq!(count(k, &PartitionClass::exact_parts(m)), largest, "k={k} m={m}");
        }
    }
}

#[test]
fn odd_and_even_element_classes() {
    let odd = PartitionClass::only(ElementFilter::Odd);
    let even = PartitionClass::only(ElementFilter::Even);
    for k in 0..=40 {
        assert_eq!(count(k, &odd), count(k, &PartitionClass::distinct()), "k={k}");
    }
    let p = partition_numbers(30);
    for k in 0..=30u32 {
        assert_eq!(BigInt::from(count(2 * k, &even)), p[k as usize]);
        assert_eq!(count(2 * k + 1, &even), 0);
    }
}

#[test]
fn gaussian_counts() {
    for n in 1..=5u32 {
        for m in 1..=5u32 {
            let class = PartitionClass::builder().max_parts(m).max_element(n).build().unwrap();
            assert_eq!(count(n * m, &class), 1);
            assert_eq!(count(n * m + 1, &class), 0);
            let g = partmeth_core::genfuncs::gaussian_binomial(n + m, m);
            for k in 0..=n * m + 2 {
                let c = g.coeff(k as usize);
                assert_eq!(c, partmeth_core::algebra::int(count(k, &class) as i64), "N={n} M={m} k={k}");
            }
        }
    }
}

fn arb_class() -> impl Strategy<Value = PartitionClass> {
    (
        1u32..4,
        prop::option::of(3u32..15),
        prop::option::of(1u32..4),
        prop::option::of(1u32..8),
        prop::option::of(1u32..8),
        prop::collection::vec(1u32..8, 0..3),
        any::<bool>(),
        prop::option::of(prop_oneof![
            Just(ElementFilter::Odd),
            Just(ElementFilter::Even),
            Just(ElementFilter::Pentagonal),
            prop::collection::vec(1u32..12, 1..5).prop_map(ElementFilter::Set),
        ]),
        any::<bool>(),
    )
        .prop_map(|(lo, hi, mult, exact, maxp, req, any_req, allowed, distinct)| {
            let mut b = PartitionClass::builder().min_element(lo).distinct(distinct);
            if let Some(h) = hi {
                b = b.max_element(h.max(lo));
            }
            if let Some(m) = mult.filter(|_| !distinct) {
                b = b.max_multiplicity(m);
            }
            if let Some(e) = exact {
                b = b.exact_parts(e);
            }
            if let Some(m) = maxp {
                b = b.max_parts(m);
            }
            if !req.is_empty() {
                b = b.require(&req, if any_req { Combinator::Any } else { Combinator::All });
            }
            if let Some(f) = allowed {
                b = b.allowed(f);
            }
            b.build().unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pruning_matches_filtering(class in arb_class(), k in 0u32..=22) {
        let mut pruned = BTreeMap::new();
        enumerate_class(k, &class, Order::Brcp, |p| { pruned.insert(p.parts().to_vec(), ()); });
        let mut filtered = BTreeMap::new();
        enumerate(k, Order::Brcp, |p| if class.admits(p) { filtered.insert(p.parts().to_vec(), ()); });
        prop_assert_eq!(pruned, filtered);
    }

    #[test]
    fn class_orders_agree(class in arb_class(), k in 0u32..=14) {
        let mut a = Vec::new();
        let mut b = Vec::new();
        enumerate_class(k, &class, Order::Brcp, |p| a.push(p.parts().to_vec()));
        enumerate_class(k, &class, Order::Ascending, |p| b.push(p.parts().to_vec()));
        a.sort();
        prop_assert_eq!(a, b);
    }
}
