use num_bigint::BigInt;
use num_rational::BigRational;
use orchard_core::adapters::{orientation_sign, points_to_signfn};
use orchard_core::combinatorics::enumerate_subsets;
use orchard_core::operators::{augment, reduce};
use orchard_core::orchard::{check_triple_identity, mu, partition, related, OrchardRelation};
use orchard_core::{PointConfiguration, SignFunction, SubsetCode, SymmetryKind};
use proptest::prelude::*;

fn kind() -> impl Strategy<Value = SymmetryKind> {
    prop_oneof![
        Just(SymmetryKind::Symmetric),
        Just(SymmetryKind::Antisymmetric)
    ]
}

/// `(n, arity)` with room for a supported orchard relation.
fn shape() -> impl Strategy<Value = (u32, u32)> {
    (4u32..=9).prop_flat_map(|n| (Just(n), 1u32..=(n - 2).min(4)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triple_identity_and_transitivity((n, arity) in shape(), kind in kind(), seed in any::<u64>()) {
        let f = SignFunction::random(n, arity, kind, seed).unwrap();
        let rel = OrchardRelation::new(&f).unwrap();
        for a in 1..=n {
            for b in a + 1..=n {
                for c in b + 1..=n {
                    prop_assert!(rel.triple_identity_holds(a, b, c));
                    let (ab, bc, ac) = (rel.related(a, b), rel.related(b, c), rel.related(a, c));
                    prop_assert!(!(ab && bc) || ac);
                    // two classes: among three elements some pair is related
                    prop_assert!(ab || bc || ac);
                }
            }
        }
        prop_assert!(rel.partition().is_ok());
    }

    #[test]
    fn direct_triple_check_agrees((n, arity) in shape(), kind in kind(), seed in any::<u64>()) {
        let f = SignFunction::random(n, arity, kind, seed).unwrap();
        prop_assert!(check_triple_identity(&f, 1, 2, n).unwrap());
        prop_assert!(check_triple_identity(&f, 2, n - 1, n).unwrap());
    }

    #[test]
    fn flip_exchanges_classes_across_flipset(
        (n, arity) in shape(), kind in kind(), seed in any::<u64>(), slot in any::<u64>()
    ) {
        let f = SignFunction::random(n, arity, kind, seed).unwrap();
        let total = f.signs().len() as u64;
        let flipset = SubsetCode::colex_unrank(slot % total, n, arity).unwrap();
        let before = partition(&f).unwrap();
        let after = partition(&f.flip(&flipset).unwrap()).unwrap();
        for a in 1..=n {
            for b in 1..=n {
                let across = flipset.contains(a) != flipset.contains(b);
                prop_assert_eq!(before.same_class(a, b) != after.same_class(a, b), across);
            }
        }
    }

    #[test]
    fn mu_parity_characterises_symmetric_relation((n, arity) in shape(), seed in any::<u64>()) {
        let f = SignFunction::random(n, arity, SymmetryKind::Symmetric, seed).unwrap();
        let mus: Vec<u64> = (1..=n).map(|x| mu(&f, x).unwrap()).collect();
        for a in 1..=n {
            for b in 1..=n {
                let same = mus[a as usize - 1] % 2 == mus[b as usize - 1] % 2;
                prop_assert_eq!(related(&f, a, b).unwrap(), same);
            }
        }
    }

    #[test]
    fn equal_sign_data_gives_equal_partitions((n, arity) in shape(), seed in any::<u64>()) {
        let f = SignFunction::random(n, arity, SymmetryKind::Antisymmetric, seed).unwrap();
        let g = SignFunction::new(n, arity, f.kind(), f.signs().to_vec()).unwrap();
        prop_assert_eq!(partition(&f).unwrap(), partition(&g).unwrap());
    }

    #[test]
    fn reduce_law(n in 5u32..=9, arity in 3u32..=5, kind in kind(), seed in any::<u64>()) {
        prop_assume!(arity < n);
        let d = arity - 1;
        let f = SignFunction::random(n, arity, kind, seed).unwrap();
        let reduced = partition(&reduce(&f).unwrap()).unwrap();
        if d % 2 == 0 {
            prop_assert!(reduced.is_single_class());
        } else {
            prop_assert_eq!(reduced, partition(&f).unwrap());
        }
    }

    #[test]
    fn augment_law(n in 5u32..=9, arity in 1u32..=4, kind in kind(), seed in any::<u64>()) {
        prop_assume!(arity + 3 <= n);
        let d = arity - 1;
        let f = SignFunction::random(n, arity, kind, seed).unwrap();
        let augmented = partition(&augment(&f).unwrap()).unwrap();
        if n % 2 == d % 2 {
            prop_assert!(augmented.is_single_class());
        } else {
            prop_assert_eq!(augmented, partition(&f).unwrap());
        }
    }

    #[test]
    fn orientation_invariant_under_translation_and_scaling(
        coords in proptest::collection::vec(-20i64..21, 12),
        num in 1i64..9, den in 1i64..9,
        shift in proptest::collection::vec(-5i64..6, 2),
    ) {
        let pts: Vec<Vec<i64>> = coords.chunks(2).map(|c| c.to_vec()).collect();
        let refs: Vec<&[i64]> = pts.iter().map(|p| &p[..]).collect();
        let config = PointConfiguration::from_integers(2, &refs).unwrap();
        let Ok(f) = points_to_signfn(&config) else { return Ok(()) };
        let scale = BigRational::new(num.into(), den.into());
        let shift: Vec<BigRational> = shift.iter().map(|&s| BigRational::from_integer(BigInt::from(s))).collect();
        let g = points_to_signfn(&config.transformed(&scale, &shift)).unwrap();
        prop_assert_eq!(&f, &g);
        prop_assert_eq!(partition(&f).unwrap(), partition(&g).unwrap());
    }

    #[test]
    fn relabeling_matches_parity_correction(
        coords in proptest::collection::vec(-30i64..31, 12),
        perm in Just((0usize..6).collect::<Vec<_>>()).prop_shuffle(),
    ) {
        let pts: Vec<Vec<i64>> = coords.chunks(2).map(|c| c.to_vec()).collect();
        let refs: Vec<&[i64]> = pts.iter().map(|p| &p[..]).collect();
        let config = PointConfiguration::from_integers(2, &refs).unwrap();
        let Ok(f) = points_to_signfn(&config) else { return Ok(()) };
        let permuted: Vec<&[i64]> = perm.iter().map(|&i| refs[i]).collect();
        let g = points_to_signfn(&PointConfiguration::from_integers(2, &permuted).unwrap()).unwrap();
        for s in enumerate_subsets(6, 3).unwrap() {
            let images: Vec<u32> = s.elements().iter().map(|&i| perm[i as usize - 1] as u32 + 1).collect();
            prop_assert_eq!(g.sign_of(&s).unwrap(), f.evaluate(&images).unwrap());
        }
    }
}

#[test]
fn orientation_is_alternating_over_all_permutations() {
    let base: Vec<Vec<BigRational>> = [[0i64, 0, 0], [3, 1, 0], [1, 4, 1], [2, 2, 5]]
        .iter()
        .map(|p| {
            p.iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect()
        })
        .collect();
    let s0 = orientation_sign(&base).unwrap().unwrap();
    let mut idx = [0usize, 1, 2, 3];
    // Heap's algorithm: every step is one transposition.
    let mut c = [0usize; 4];
    let mut parity = false;
    let mut i = 0;
    while i < 4 {
        if c[i] < i {
            if i % 2 == 0 {
                idx.swap(0, i)
            } else {
                idx.swap(c[i], i)
            }
            parity = !parity;
            let pts: Vec<Vec<BigRational>> = idx.iter().map(|&k| base[k].clone()).collect();
            let s = orientation_sign(&pts).unwrap().unwrap();
            assert_eq!(s, if parity { -s0 } else { s0 });
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
