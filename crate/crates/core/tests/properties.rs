use proptest::prelude::*;

use hemibundle::bounds::Params;
use hemibundle::constructions::{construct, ConstructionId, ConstructionTag, Constructed};
use hemibundle::iso::are_isomorphic;
use hemibundle::search::{solve, Engine, Kind, Problem, SearchOptions};
use hemibundle::shifting::{max_partner, shift_once};
use hemibundle::{Family, Restriction};

fn family() -> impl Strategy<Value = Family> {
    (2usize..=7)
        .prop_flat_map(|n| (Just(n), proptest::collection::btree_set(0u64..1 << n, 0..=24)))
        .prop_map(|(n, masks)| Family::from_masks(n, masks).unwrap())
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((1..=n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn complement_duality(f in family()) {
        let n = f.universe();
        prop_assert_eq!(f.complement().complement(), f.clone());
        for t in 0..=n {
            prop_assert_eq!(f.is_t_intersecting(t), f.complement().is_s_union(n - t));
        }
    }

    #[test]
    fn diversity_definitions_agree(f in family()) {
        prop_assert_eq!(f.diversity(), f.diversity_by_restriction());
    }

    #[test]
    fn restrictions_partition(f in family(), a in 1usize..=7, b in 1usize..=7) {
        let n = f.universe();
        let (i, j) = ((a - 1) % n + 1, (b - 1) % n + 1);
        let len = |r| f.restrict(r).unwrap().len();
        prop_assert_eq!(f.len(), len(Restriction::With(i)) + len(Restriction::Without(i)));
        prop_assume!(i != j);
        let four = len(Restriction::Both(i, j))
            + len(Restriction::WithWithout(i, j))
            + len(Restriction::WithWithout(j, i))
            + len(Restriction::Neither(i, j));
        prop_assert_eq!(f.len(), four);
    }

    #[test]
    fn permuted_copies_are_isomorphic(
        (f, perm) in family().prop_flat_map(|f| { let n = f.universe(); (Just(f), permutation(n)) })
    ) {
        let g = f.permute(&perm).unwrap();
        let cert = are_isomorphic(&f, &g).unwrap();
        let witness = cert.permutation.expect("isomorphic");
        prop_assert_eq!(f.permute(&witness).unwrap(), g);
    }

    #[test]
    fn shifting_keeps_cross_intersection(
        (n, fs, gs) in (2usize..=7).prop_flat_map(|n| {
            let sets = proptest::collection::vec(0u64..1 << n, 0..=24);
            (Just(n), sets.clone(), sets)
        }),
        t in 1usize..=2,
        seed in any::<u64>(),
    ) {
        // greedily keep members compatible with the hypotheses
        let mut f: Vec<u64> = Vec::new();
        for x in fs {
            if (x.count_ones() as usize) >= t && f.iter().all(|&y| (x & y).count_ones() as usize >= t) {
                f.push(x);
            }
        }
        let g: Vec<u64> = gs.into_iter().filter(|&y| f.iter().all(|&x| x & y != 0)).collect();
        let (f, g) = (Family::from_masks(n, f).unwrap(), Family::from_masks(n, g).unwrap());
        let j = 2 + (seed as usize % (n - 1));
        let i = 1 + (seed as usize / 11 % (j - 1));
        let (sf, sg) = (shift_once(&f, i, j).unwrap(), shift_once(&g, i, j).unwrap());
        prop_assert!(sf.cross_intersects(&sg).unwrap());
        prop_assert!(sf.is_t_intersecting(t));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn reports_do_not_depend_on_thread_count(n in 5i64..=6, t in 0i64..=1, r in 1i64..=3, threads in 2usize..=4) {
        let problem = Problem { kind: Kind::Hemibundled, params: Params::nk(n, 2).with_t(t).with_r(r), engine: Engine::Clique };
        let one = solve(&problem, &SearchOptions::default()).unwrap();
        let many = solve(&problem, &SearchOptions { threads, ..Default::default() }).unwrap();
        prop_assert_eq!(one.optimum, many.optimum);
        prop_assert_eq!(&one.maximizers, &many.maximizers);
        prop_assert_eq!(one.class_families(), many.class_families());
        for c in &one.classes {
            prop_assert_eq!(c.partner.clone().unwrap(), max_partner(&c.representative, 2).unwrap());
        }
    }
}

#[test]
fn engines_agree_where_both_run() {
    for (kind, p) in [
        (Kind::Hemibundled, Params::nk(7, 3).with_t(0).with_r(2)),
        (Kind::Hemibundled, Params::nk(8, 3).with_t(1).with_r(3)),
        (Kind::CrossPair, Params::nk(7, 3).with_r(2)),
        (Kind::Diversity, Params::nk(8, 3).with_r(2)),
    ] {
        let run = |engine| solve(&Problem { kind, params: p, engine }, &SearchOptions::default()).unwrap();
        let exact = run(Engine::Clique);
        let shifted = run(Engine::Shifted);
        assert_eq!(exact.optimum, shifted.optimum, "{kind} {p}");
        assert!(shifted.maximizers.iter().all(|f| exact.maximizers.contains(f)), "{kind} {p}");
    }
}

#[test]
fn unconstrained_searches_reproduce_classics() {
    for (n, k, t) in [(5i64, 2i64, 0i64), (6, 2, 1), (7, 3, 0)] {
        let p = Params::nk(n, k).with_t(t).with_r(1);
        let rep = solve(&Problem { kind: Kind::Hemibundled, params: p, engine: Engine::Auto }, &SearchOptions::default())
            .unwrap();
        let f16 = hemibundle::bounds::evaluate(hemibundle::bounds::BoundId::F16, &p, hemibundle::bounds::Validation::Strict).unwrap();
        assert_eq!(rep.optimum, f16.as_u64(), "{p}");
    }
}

#[test]
fn pair_constructions_satisfy_their_hypotheses() {
    for tag in [ConstructionTag::PairRSets, ConstructionTag::PairStar, ConstructionTag::PairK3] {
        for id in hemibundle::constructions::in_range_points(tag, 10) {
            let Constructed::Pair(f, g) = construct(&id).unwrap() else { panic!("{tag} is a pair") };
            let (k, t) = (id.params.k.unwrap_or(3) as usize, id.params.t.unwrap_or(0) as usize);
            assert!(f.is_t_intersecting(t + 1), "{tag} {}", id.params);
            assert!(f.cross_intersects(&g).unwrap());
            assert_eq!(g, max_partner(&f, k).unwrap());
        }
    }
    let j = construct(&ConstructionId::new(ConstructionTag::JKr, Params::nk(9, 4).with_r(2))).unwrap();
    assert!(j.first().is_intersecting());
    assert_eq!(j.first().diversity(), 2);
}
