use proptest::prelude::*;

use supercat::bijections::{
    classify_start, dyck_to_motzkin, expand_no_return, expand_return, join_balanced,
    motzkin_to_dyck, shrink_no_return, shrink_return, split_balanced, weight, StartClass,
};
use supercat::enumerate::{enum_dyck, enum_motzkin2, feasible_prefixes, PathFamily, PathWalker};
use supercat::numbers::{alternating_ballot_terms, catalan, super_catalan};
use supercat::paths::{reverse, DyckStep, LatticePath, MotzkinStep};
use supercat::table::{Table, TableKind};
use supercat::{DyckPath, ExactInt, TwoMotzkinPath};

use num_traits::ToPrimitive;

/// Uniform Dyck path of semilength `1..=max`.
fn dyck_path(max: usize) -> impl Strategy<Value = DyckPath> {
    (1..=max).prop_flat_map(|n| {
        let total = catalan(n as u64).to_usize().unwrap();
        (0..total).prop_map(move |i| enum_dyck(n).nth(i).unwrap())
    })
}

/// Uniform 2-Motzkin path of length `0..=max`.
fn motzkin_path(max: usize) -> impl Strategy<Value = TwoMotzkinPath> {
    (0..=max).prop_flat_map(|k| {
        let total = catalan(k as u64 + 1).to_usize().unwrap();
        (0..total).prop_map(move |i| enum_motzkin2(k).nth(i).unwrap())
    })
}

fn any_word(max: usize) -> impl Strategy<Value = String> {
    proptest::collection::vec(prop::sample::select(vec!['U', 'D', 'S', 'W']), 0..=max)
        .prop_map(|v| v.into_iter().collect())
}

proptest! {
    #[test]
    fn render_parse_identity(word in any_word(30)) {
        let path = LatticePath::<MotzkinStep>::parse(&word).unwrap();
        prop_assert_eq!(path.render(), word.clone());
        prop_assert_eq!(path.len(), word.len());
        prop_assert_eq!(path.levels().len(), word.len() + 1);
    }

    #[test]
    fn reverse_is_weight_preserving_involution(path in motzkin_path(10)) {
        let back = reverse(&reverse(&path));
        prop_assert_eq!(&back, &path);
        let len = path.len() + 2;
        let rev = reverse(&path);
        for m in 1..len {
            prop_assert_eq!(weight(&path, m).unwrap(), weight(&rev, len - m).unwrap());
        }
    }

    #[test]
    fn motzkin_dyck_round_trip(path in motzkin_path(10)) {
        let lifted = motzkin_to_dyck(&path).unwrap();
        prop_assert_eq!(lifted.len(), 2 * path.len() + 2);
        for (x, level) in path.levels().iter().enumerate() {
            prop_assert_eq!(lifted.levels()[2 * x + 1], 2 * level + 1);
        }
        prop_assert_eq!(dyck_to_motzkin(&lifted).unwrap(), path);
    }

    #[test]
    fn marker_invariants(path in dyck_path(10)) {
        let mk = path.markers().unwrap();
        let levels = path.levels();
        prop_assert_eq!(levels[mk.rightmost_max], mk.height);
        prop_assert_eq!(levels[mk.leftmost_max], mk.height);
        prop_assert!(mk.leftmost_max <= mk.rightmost_max);
        prop_assert!(levels[mk.rightmost_max + 1..].iter().all(|&l| l < mk.height));
        prop_assert_eq!(levels[mk.last_level_one], 1);
        prop_assert!(mk.last_level_one <= mk.rightmost_max);
        prop_assert!(levels[mk.last_level_one + 1..=mk.rightmost_max].iter().all(|&l| l >= 2));
        prop_assert_eq!(mk.height_after, mk.height);
        prop_assert!(mk.height_before <= mk.height);
    }

    #[test]
    fn shrink_maps_invert(path in dyck_path(11)) {
        if path.len() < 6 {
            prop_assert!(classify_start(&path).is_err());
            return Ok(());
        }
        match classify_start(&path).unwrap() {
            StartClass::TripleUpNoReturn => {
                let out = shrink_no_return(&path).unwrap();
                prop_assert_eq!(out.len() + 2, path.len());
                prop_assert_eq!(expand_no_return(&out).unwrap(), path);
            }
            StartClass::TripleUpReturn => {
                let out = shrink_return(&path).unwrap();
                prop_assert_eq!(out.len() + 2, path.len());
                prop_assert_eq!(expand_return(&out).unwrap(), path);
            }
            _ => {
                prop_assert!(shrink_no_return(&path).is_err());
                prop_assert!(shrink_return(&path).is_err());
            }
        }
    }

    #[test]
    fn split_join_round_trip(path in dyck_path(11)) {
        let mk = path.markers().unwrap();
        match split_balanced(&path) {
            Ok(image) => {
                prop_assert!(mk.is_height_balanced());
                for pair in image.pairs() {
                    prop_assert!(pair.is_balanced());
                    prop_assert_eq!(pair.total_len(), path.len());
                    prop_assert_eq!(join_balanced(&pair).unwrap(), path.clone());
                }
            }
            Err(_) => prop_assert!(!mk.is_height_balanced()),
        }
    }

    #[test]
    fn rubenstein_at_large_arguments(m in 1u64..400, n in 1u64..400) {
        let t = |a, b| super_catalan(a, b).unwrap();
        prop_assert_eq!(ExactInt::from(4) * t(m, n), t(m + 1, n) + t(m, n + 1));
        prop_assert_eq!(t(m, n), t(n, m));
    }

    #[test]
    fn ballot_sum_at_large_arguments(m in 1u64..80, n in 1u64..80) {
        let terms = alternating_ballot_terms(m, n).unwrap();
        prop_assert!(terms.iter().all(|t| t.product_form == t.binomial_form));
        let sum: ExactInt = terms.into_iter().map(|t| t.product_form).sum();
        prop_assert_eq!(sum, super_catalan(m, n).unwrap());
    }

    #[test]
    fn prefix_partition_preserves_counts(len in 0usize..14, depth in 0usize..6) {
        let total: u64 = feasible_prefixes::<MotzkinStep>(len, 0, depth)
            .iter()
            .map(|p| PathWalker::<MotzkinStep>::with_prefix(len, 0, p).count())
            .sum();
        prop_assert_eq!(total, PathFamily::Motzkin2(len).count().unwrap());
        let dyck: u64 = feasible_prefixes::<DyckStep>(2 * len, 0, depth)
            .iter()
            .map(|p| PathWalker::<DyckStep>::with_prefix(2 * len, 0, p).count())
            .sum();
        prop_assert_eq!(ExactInt::from(dyck), catalan(len as u64));
    }

    #[test]
    fn table_json_is_canonical(kind in prop::sample::select(vec![TableKind::T, TableKind::S, TableKind::C, TableKind::B]),
                               max_m in 0u64..12, max_n in 0u64..12) {
        let (table, _) = Table::build(kind, max_m, max_n);
        let json = table.to_json();
        let back: Table = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
        prop_assert_eq!(table.rows.len() as u64, max_m + 1);
    }
}
