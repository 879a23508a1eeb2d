use super::*;
use crate::qpoly::QPoly;
use crate::stirling::{ordered_poly, stirling_poly, OrderedKind, StirlingKind};

fn p(coeffs: &[i64]) -> QPoly {
    QPoly::from_i64_coeffs(coeffs)
}

/// The worked seven-element signed partition
/// `0 -1 1 -3 3 -6 6 | -2 5 -7 / 2 -5 7 | -4 / 4`.
fn sample_partition_n7() -> SignedPartition {
    SignedPartition::from_blocks(
        7,
        vec![
            vec![0, 1, -1, 3, -3, 6, -6],
            vec![-2, 5, -7],
            vec![2, -5, 7],
            vec![-4],
            vec![4],
        ],
    )
    .unwrap()
}

#[test]
fn sample_partition_statistics() {
    let rho = sample_partition_n7();
    assert_eq!(rho.pair_count(), 2);
    assert_eq!(rho.inv(), 11);
    assert_eq!(rho.maj(), 7);
    assert_eq!(
        rho.to_string(),
        "0 -1 1 -3 3 -6 6 | -2 5 -7 / 2 -5 7 | -4 / 4"
    );
}

#[test]
fn standardize_is_idempotent_and_statistic_preserving() {
    // same partition handed over with blocks scrambled
    let scrambled = SignedPartition::from_blocks(
        7,
        vec![
            vec![4],
            vec![7, -5, 2],
            vec![-6, 3, 1, 0, -1, -3, 6],
            vec![-4],
            vec![-7, 5, -2],
        ],
    )
    .unwrap();
    let rho = sample_partition_n7();
    assert_eq!(scrambled, rho);
    assert_eq!(scrambled.inv(), 11);
    assert_eq!(scrambled.maj(), 7);
    // feeding the standard blocks back through the constructor is a fixpoint
    let again =
        SignedPartition::from_blocks(7, rho.blocks().iter().map(|b| b.to_vec()).collect())
            .unwrap();
    assert_eq!(again, rho);
}

#[test]
fn invalid_partitions_rejected() {
    // zero block not closed under negation
    assert!(SignedPartition::from_blocks(1, vec![vec![0, 1], vec![-1]]).is_err());
    // missing partner
    assert!(SignedPartition::from_blocks(2, vec![vec![0], vec![1, 2], vec![-1], vec![-2]]).is_err());
    // self-negative non-zero block
    assert!(SignedPartition::from_blocks(1, vec![vec![0], vec![1, -1]]).is_err());
    // incomplete cover
    assert!(SignedPartition::from_blocks(2, vec![vec![0, 1, -1]]).is_err());
}

/// Independent oracle: enumerate all set partitions of `<n>` and filter the
/// type B conditions, rather than inserting elements inductively.
fn signed_partitions_by_filter(n: usize) -> Vec<SignedPartition> {
    fn set_partitions(elems: &[i64]) -> Vec<Vec<Vec<i64>>> {
        if elems.is_empty() {
            return vec![Vec::new()];
        }
        let first = elems[0];
        let mut out = Vec::new();
        for part in set_partitions(&elems[1..]) {
            for i in 0..part.len() {
                let mut clone = part.clone();
                clone[i].push(first);
                out.push(clone);
            }
            let mut clone = part.clone();
            clone.push(vec![first]);
            out.push(clone);
        }
        out
    }
    let elems: Vec<i64> = (-(n as i64)..=n as i64).collect();
    set_partitions(&elems)
        .into_iter()
        .filter_map(|blocks| SignedPartition::from_blocks(n, blocks).ok())
        .collect()
}

#[test]
fn insertion_enumeration_matches_filter_oracle() {
    for n in 0..=3usize {
        let mut by_filter = signed_partitions_by_filter(n);
        let mut by_insertion: Vec<SignedPartition> = (0..=n as i64)
            .flat_map(|k| signed_partitions(n, k))
            .collect();
        // filter-based enumeration visits each object several times
        by_filter.sort_by_key(|r| format!("{r}"));
        by_filter.dedup();
        by_insertion.sort_by_key(|r| format!("{r}"));
        let before = by_insertion.len();
        by_insertion.dedup();
        assert_eq!(before, by_insertion.len(), "duplicate objects at n={n}");
        assert_eq!(by_filter, by_insertion, "n={n}");
    }
}

#[test]
fn enumeration_counts() {
    assert_eq!(family_count(Family::SignedPartition, 2, 1), 4);
    assert_eq!(family_count(Family::SignedPermutation, 2, 0), 3);
    assert_eq!(family_count(Family::OrderedA, 3, 3), 6);
    // counts at q = 1 match the tables
    for n in 0..=4usize {
        for k in 0..=n as i64 {
            assert_eq!(
                BigInt::from(family_count(Family::SignedPartition, n, k)),
                stirling_number(StirlingKind::SecondB, n, k)
            );
            assert_eq!(
                BigInt::from(family_count(Family::SignedPermutation, n, k)),
                stirling_number(StirlingKind::FirstB, n, k)
            );
            assert_eq!(
                BigInt::from(family_count(Family::OrderedA, n, k)),
                ordered_poly(OrderedKind::OrderedA, n, k).eval_one()
            );
            assert_eq!(
                BigInt::from(family_count(Family::OrderedB, n, k)),
                ordered_poly(OrderedKind::OrderedB, n, k).eval_one()
            );
        }
    }
}

#[test]
fn statistic_generating_functions_match_tables() {
    for n in 0..=4usize {
        for k in 0..=n as i64 {
            let s_b = stirling_poly(StirlingKind::SecondB, n, k);
            assert_eq!(
                statistic_gf(Family::SignedPartition, n, k, Statistic::Inv).unwrap(),
                s_b,
                "inv over signed partitions ({n},{k})"
            );
            assert_eq!(
                statistic_gf(Family::SignedPartition, n, k, Statistic::Maj).unwrap(),
                s_b,
                "maj over signed partitions ({n},{k})"
            );
            assert_eq!(
                statistic_gf(Family::SignedPermutation, n, k, Statistic::Inv).unwrap(),
                stirling_poly(StirlingKind::FirstB, n, k),
                "inv over signed permutations ({n},{k})"
            );
            assert_eq!(
                statistic_gf(Family::OrderedA, n, k, Statistic::Inv).unwrap(),
                ordered_poly(OrderedKind::OrderedA, n, k),
                "inv over ordered A ({n},{k})"
            );
            assert_eq!(
                statistic_gf(Family::OrderedB, n, k, Statistic::Inv).unwrap(),
                ordered_poly(OrderedKind::OrderedB, n, k),
                "inv over ordered B ({n},{k})"
            );
        }
    }
}

#[test]
fn small_statistic_examples() {
    assert_eq!(
        statistic_gf(Family::SignedPartition, 2, 1, Statistic::Inv).unwrap(),
        p(&[2, 1, 1])
    );
    assert_eq!(
        statistic_gf(Family::OrderedA, 2, 2, Statistic::Inv).unwrap(),
        p(&[1, 1])
    );
    assert_eq!(
        statistic_gf(Family::SignedPermutation, 1, 1, Statistic::Inv).unwrap(),
        QPoly::one()
    );
}

#[test]
fn maj_rejected_outside_signed_partitions() {
    assert!(statistic_gf(Family::OrderedA, 2, 1, Statistic::Maj).is_err());
    assert!(statistic_gf(Family::SignedPermutation, 2, 1, Statistic::Maj).is_err());
}

#[test]
fn maj_edge_cases() {
    // only the zero block: no positive-index blocks, maj = 0
    let rho = SignedPartition::from_blocks(2, vec![vec![0, 1, -1, 2, -2]]).unwrap();
    assert_eq!(rho.maj(), 0);
    // singleton pairs only: no element exceeds a later minimum
    let rho = SignedPartition::from_blocks(
        3,
        vec![vec![0], vec![1], vec![-1], vec![2], vec![-2], vec![3], vec![-3]],
    )
    .unwrap();
    assert_eq!(rho.maj(), 0);
    assert_eq!(rho.inv(), 0);
}

/// The worked signed permutation `(1 -3 -1 3)(-4)(4)(2 -5 7)(-2 5 -7)(-6 6)`.
#[test]
fn sample_permutation_statistics() {
    let pi = SignedPermutation::from_cycles(
        7,
        vec![
            vec![1, -3, -1, 3],
            vec![-4],
            vec![4],
            vec![2, -5, 7],
            vec![-2, 5, -7],
            vec![-6, 6],
        ],
    )
    .unwrap();
    assert_eq!(pi.paired_pair_count(), 2);
    // standard form rotates and orders the cycles
    assert_eq!(
        pi.word(),
        vec![3, 1, -3, -1, 5, -7, -2, -5, 7, 2, -4, 4, 6, -6]
    );
    assert_eq!(pi.inv(), 13);
    assert_eq!(pi.to_string(), "(3 1 -3 -1)(5 -7 -2)(-5 7 2)(-4)(4)(6 -6)");

    let rho = pi.underlying_partition();
    assert_eq!(rho, sample_partition_n7());
}

#[test]
fn invalid_permutations_rejected() {
    // not closed under negation as a permutation
    assert!(SignedPermutation::from_cycles(2, vec![vec![1, 2], vec![-1], vec![-2]]).is_err());
    // repeated element
    assert!(SignedPermutation::from_cycles(1, vec![vec![1, 1], vec![-1]]).is_err());
    // incomplete cover
    assert!(SignedPermutation::from_cycles(2, vec![vec![1], vec![-1]]).is_err());
}

#[test]
fn permutation_enumeration_has_no_duplicates() {
    for n in 0..=4usize {
        let mut all: Vec<String> = (0..=n as i64)
            .flat_map(|k| signed_permutations(n, k))
            .map(|pi| pi.to_string())
            .collect();
        let total = all.len();
        // 2^n n! signed permutations in all
        let expect = (1..=n).map(|i| 2 * i).product::<usize>();
        assert_eq!(total, expect.max(1));
        all.sort();
        all.dedup();
        assert_eq!(all.len(), total, "duplicates at n={n}");
    }
}

#[test]
fn ordered_partition_validation() {
    assert!(OrderedPartition::from_blocks(CoxeterType::A, 2, vec![vec![2], vec![1]]).is_ok());
    assert!(OrderedPartition::from_blocks(CoxeterType::A, 2, vec![vec![2]]).is_err());
    // type B: zero block must come first
    assert!(OrderedPartition::from_blocks(
        CoxeterType::B,
        1,
        vec![vec![1], vec![-1], vec![0]]
    )
    .is_err());
    let w = OrderedPartition::from_blocks(CoxeterType::B, 1, vec![vec![0], vec![1], vec![-1]])
        .unwrap();
    assert_eq!(w.k(), 1);
    assert_eq!(w.to_string(), "0 | 1 / -1");
}

#[test]
fn ordered_inv_counts_boundary_equality() {
    // (0 | 1 / -1): the pair (1, {-1}) has s = min|S_2| = 1 and -1 in S_2
    let w = OrderedPartition::from_blocks(CoxeterType::B, 1, vec![vec![0], vec![1], vec![-1]])
        .unwrap();
    assert_eq!(w.inv(), 1);
    let w = OrderedPartition::from_blocks(CoxeterType::B, 1, vec![vec![0], vec![-1], vec![1]])
        .unwrap();
    assert_eq!(w.inv(), 0);
    // increasing singletons carry no inversions
    let w = OrderedPartition::from_blocks(
        CoxeterType::A,
        3,
        vec![vec![1], vec![2], vec![3]],
    )
    .unwrap();
    assert_eq!(w.inv(), 0);
}

#[test]
fn type_b_function_census_small() {
    let (total, hist) = type_b_function_census(1, 1);
    assert_eq!(total, 3);
    assert_eq!(hist, vec![1, 2]);
    let (total, _) = type_b_function_census(2, 1);
    assert_eq!(total, 9);

    let (total, hist) = type_b_function_census(3, 2);
    assert_eq!(total, 125);
    assert_eq!(hist, vec![1, 52, 72, 0]);
    let reference = type_b_function_reference(3, 2);
    for (k, h) in hist.iter().enumerate() {
        assert_eq!(BigInt::from(*h), reference[k], "k={k}");
    }
}
