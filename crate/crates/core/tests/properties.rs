mod common;

use std::collections::BTreeSet;

use common::{random_instance, random_params};
use convex_domset::geometry::{union_extend, CyclicSublist};
use convex_domset::io::{gen_random, Family, GenParams, InstanceDocument, Law};
use convex_domset::oracle::{
    brute_force_min, check_line_separable, verify, Assignment, DominationMasks, Separability,
};
use convex_domset::{solve_unweighted, solve_weighted, Instance, Mode, WeightedDisk};
use proptest::prelude::*;

fn set(s: &CyclicSublist) -> BTreeSet<usize> {
    s.indices().collect()
}

fn sublist(n: usize) -> impl Strategy<Value = CyclicSublist> {
    (0..n, 0..=n).prop_map(move |(s, len)| CyclicSublist::from_start_len(s, len, n))
}

fn family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Circle),
        Just(Family::Ellipse),
        Just(Family::PerturbedPolygon)
    ]
}

/// Whether chords `a-b` and `c-d` between distinct hull vertices cross,
/// decided by cyclic interleaving of the indices.
fn chords_interleave(a: usize, b: usize, c: usize, d: usize) -> bool {
    let inside = |x: usize| a.min(b) < x && x < a.max(b);
    [a, b].iter().all(|&e| e != c && e != d) && inside(c) != inside(d)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn containment_matches_sets((n, a, b) in (1usize..12).prop_flat_map(|n| (Just(n), sublist(n), sublist(n)))) {
        prop_assert_eq!(a.contains_sub(&b), set(&b).is_subset(&set(&a)));
        for p in 0..n {
            prop_assert_eq!(a.contains_index(p), set(&a).contains(&p));
        }
    }

    #[test]
    fn union_matches_sets((n, a, b) in (1usize..12).prop_flat_map(|n| (Just(n), sublist(n), sublist(n)))) {
        let expect: BTreeSet<usize> = set(&a).union(&set(&b)).copied().collect();
        match union_extend(n, &[a, b]) {
            Ok(u) => prop_assert_eq!(set(&u), expect),
            Err(_) => {
                prop_assert!(!a.is_empty() && !b.is_empty());
                prop_assert!(set(&a).is_disjoint(&set(&b)));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_input_order(seed in any::<u64>(), n in 3usize..25, rot in 0usize..25) {
        let doc = gen_random(&random_params(seed, n)).unwrap();
        let disks = doc.disks();
        let mut shuffled = disks.clone();
        shuffled.rotate_left(rot % n);
        shuffled.reverse();
        let a = Instance::canonicalize(&disks, Mode::Weighted).unwrap();
        let b = Instance::canonicalize(&shuffled, Mode::Weighted).unwrap();
        prop_assert_eq!(a.disks(), b.disks());
        for i in 0..n {
            prop_assert_eq!(disks[a.original_index(i)], *a.disk(i));
            prop_assert_eq!(a.canonical_index(a.original_index(i)), Some(i));
        }
        let again = Instance::canonicalize(a.disks(), Mode::Weighted).unwrap();
        prop_assert_eq!(again.disks(), a.disks());
    }

    #[test]
    fn documents_round_trip(seed in any::<u64>(), n in 1usize..30) {
        let doc = gen_random(&random_params(seed, n)).unwrap();
        let text = doc.to_json();
        let back = InstanceDocument::from_json(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }

    #[test]
    fn mask_and_predicate_verification_agree(seed in any::<u64>(), n in 1usize..90, pick in any::<u128>()) {
        let inst = random_instance(seed, n, Mode::Unweighted);
        let masks = DominationMasks::build(&inst);
        let centers: Vec<usize> = (0..n).filter(|&i| pick >> (i % 128) & 1 == 1).collect();
        prop_assert_eq!(masks.covers(&centers), verify(&inst, &centers));
        for i in 0..n {
            prop_assert!(masks.contains(i, i));
            for j in 0..n {
                prop_assert_eq!(masks.contains(i, j), masks.contains(j, i));
            }
        }
    }

    #[test]
    fn larger_radii_never_need_more_centers(seed in any::<u64>(), n in 3usize..12, scale in 1.0f64..3.0) {
        let inst = random_instance(seed, n, Mode::Unweighted);
        let grown: Vec<WeightedDisk> = inst.disks().iter().map(|d| WeightedDisk { radius: d.radius * scale, ..*d }).collect();
        let grown = Instance::canonicalize(&grown, Mode::Unweighted).unwrap();
        let a = brute_force_min(&inst, Mode::Unweighted, None).unwrap().size;
        let b = brute_force_min(&grown, Mode::Unweighted, None).unwrap().size;
        prop_assert!(b <= a);
    }

    #[test]
    fn solvers_agree_with_brute_force(seed in any::<u64>(), n in 3usize..11) {
        let inst = random_instance(seed, n, Mode::Weighted);
        let brute = brute_force_min(&inst, Mode::Weighted, None).unwrap();
        let dp = solve_weighted(&inst, n).unwrap();
        prop_assert!((dp.weight - brute.weight).abs() <= 1e-9);
        prop_assert_eq!(&solve_weighted(&inst, n).unwrap(), &dp);
        let size = brute_force_min(&inst, Mode::Unweighted, None).unwrap().size;
        prop_assert_eq!(solve_unweighted(&inst, None).unwrap().size, size);
    }

    #[test]
    fn segment_crossing_matches_chord_interleaving(seed in any::<u64>(), n in 4usize..16, raw in proptest::collection::vec(0usize..4, 16)) {
        let inst = random_instance(seed, n, Mode::Unweighted);
        let centers: Vec<usize> = (0..4.min(n)).map(|k| k * n / 4).collect();
        let mut assigned: Vec<usize> = (0..n).map(|p| centers[raw[p] % centers.len()]).collect();
        for &c in &centers {
            assigned[c] = c;
        }
        let a = Assignment { centers: centers.clone(), assigned: assigned.clone(), groups: Vec::new(), containment_pairs: Vec::new() };
        let mut crossing = false;
        for p in 0..n {
            for q in 0..n {
                let (c, d) = (assigned[p], assigned[q]);
                if c != d && c != p && d != q && chords_interleave(c, p, d, q) {
                    crossing = true;
                }
            }
        }
        let got = check_line_separable(&inst, &a);
        prop_assert_ne!(got, Separability::Inconclusive);
        prop_assert_eq!(got == Separability::Crossing, crossing);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn generated_instances_are_convex(seed in any::<u64>(), n in 1usize..400, fam in family()) {
        let params = GenParams { n, seed, family: fam, radius_law: Law::LogNormal(-1.0, 0.7), weight_law: Law::Uniform(0.5, 3.0) };
        let doc = gen_random(&params).unwrap();
        prop_assert!(doc.to_instance(Mode::Weighted).is_ok());
    }
}
