mod common;

use hyperspectral_core::canon::canonical_form;
use hyperspectral_core::constructions::{
    b_l1, b_l2, b_p, g5, hyperstar, loose_path, power, s_power, shared_pair, unicyclic_max,
    SimpleGraph,
};
use hyperspectral_core::{Girth, Hypergraph};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;

#[test]
fn girth_matches_cycle_search_on_constructions() {
    let cases = [
        shared_pair(3).unwrap(),
        power(&SimpleGraph::cycle(4).unwrap(), 3).unwrap(),
        power(&SimpleGraph::cycle(3).unwrap(), 3).unwrap(),
        hyperstar(3, 3).unwrap(),
        loose_path(3, 3).unwrap(),
        g5(3).unwrap(),
        unicyclic_max(3, 3).unwrap(),
        Hypergraph::new(3, 4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]).unwrap(),
    ];
    for g in &cases {
        let expected = girth_by_cycle_search(g).map_or(Girth::Infinite, Girth::Finite);
        assert_eq!(g.girth(), expected, "{g:?}");
    }
    assert_eq!(cases[1].girth(), Girth::Finite(4));
    assert_eq!(hyperstar(3, 5).unwrap().girth(), Girth::Infinite);
}

#[test]
fn girth_matches_cycle_search_on_random_small_instances() {
    let mut rng = StdRng::seed_from_u64(7);
    let mut checked = 0;
    for _ in 0..400 {
        let k = *pick(&mut rng, &[2, 3, 4]);
        let m = *pick(&mut rng, &[2, 3, 4, 5]);
        let g = random_connected(&mut rng, k, m);
        if g.n() > 8 {
            continue;
        }
        checked += 1;
        let expected = girth_by_cycle_search(&g).map_or(Girth::Infinite, Girth::Finite);
        assert_eq!(g.girth(), expected, "{g:?}");
        // a 2-cycle exists exactly when some pair of edges shares two vertices
        assert_eq!(g.girth() == Girth::Finite(2), !g.is_linear() && k > 2);
    }
    assert!(checked > 100);
}

#[test]
fn cyclomatic_examples() {
    assert_eq!(hyperstar(3, 3).unwrap().cyclomatic_number(), 0);
    assert_eq!(shared_pair(3).unwrap().cyclomatic_number(), 1);
    assert_eq!(b_p(5, 3).unwrap().cyclomatic_number(), 2);
    let u4 = unicyclic_max(4, 3).unwrap();
    assert_eq!(u4.components().len(), 1);
    assert_eq!(u4.components()[0].len(), 8);
}

#[test]
fn classification_examples() {
    let star = hyperstar(3, 4).unwrap().classify();
    assert!(star.connected && star.hypertree && star.linear && star.power);
    assert_eq!(star.girth, Girth::Infinite);

    let u5 = unicyclic_max(5, 3).unwrap().classify();
    assert!(u5.connected && u5.unicyclic && !u5.linear);
    assert_eq!(u5.girth, Girth::Finite(2));

    let bl1 = b_l1(6, 3).unwrap().classify();
    assert!(bl1.connected && bl1.bicyclic && bl1.linear && !bl1.power);
}

#[test]
fn power_base_examples() {
    let claw = SimpleGraph::star(3);
    let base = power(&claw, 3).unwrap().power_base().unwrap();
    assert_eq!(
        canonical_form(&base.to_hypergraph()).unwrap(),
        canonical_form(&claw.to_hypergraph()).unwrap()
    );
    assert!(shared_pair(3).unwrap().power_base().is_none());
    assert!(g5(3).unwrap().power_base().is_none());
    assert!(g5(3).unwrap().is_s_hypergraph(1));
}

/// Every simple graph on `n` labeled vertices, connected ones only.
fn connected_graphs(n: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect();
    (0u32..1 << pairs.len())
        .map(|mask| {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p);
            SimpleGraph::new(n, edges).unwrap()
        })
        .filter(|g| g.m() > 0 && g.to_hypergraph().is_connected())
        .collect()
}

#[test]
fn power_base_round_trips_over_small_graphs() {
    for n in 2..=6 {
        let mut seen = std::collections::BTreeSet::new();
        for b in connected_graphs(n) {
            let form = canonical_form(&b.to_hypergraph()).unwrap();
            if !seen.insert(form.clone()) {
                continue;
            }
            for k in [3, 4] {
                let g = power(&b, k).unwrap();
                assert!(g.is_linear());
                let back = g.power_base().expect("powers are recognized");
                assert_eq!(canonical_form(&back.to_hypergraph()).unwrap(), form);
            }
        }
    }
}

#[test]
fn constructor_classes_and_counts() {
    for k in 3..=5 {
        for m in 1..=8 {
            let star = hyperstar(k, m).unwrap();
            assert!(star.classify().hypertree);
            assert_eq!(star.n(), m * (k - 1) + 1);

            let path = loose_path(k, m).unwrap();
            assert!(path.classify().hypertree);

            if m >= 2 {
                let u = unicyclic_max(m, k).unwrap();
                assert!(u.classify().unicyclic);
                assert_eq!(u.n(), m * (k - 1));
                assert_eq!(u.girth(), Girth::Finite(2));
                if m > 2 {
                    assert_eq!(u.degree(0), m);
                }
            }
            for g in 3..=m {
                let s = s_power(m, g, k).unwrap();
                let c = s.classify();
                assert!(c.unicyclic && c.power && c.linear);
                assert_eq!(c.girth, Girth::Finite(g));
                assert_eq!(s.degree(0), m - g + 2);
            }
            if m >= 4 {
                for h in [b_l1(m, k).unwrap(), b_l2(m, k).unwrap()] {
                    let c = h.classify();
                    assert!(c.bicyclic && c.linear && !c.power);
                    assert_eq!(h.m(), m);
                    assert_eq!(h.n(), m * (k - 1) - 1);
                }
            }
            if m >= 5 {
                let p = b_p(m, k).unwrap();
                let c = p.classify();
                assert!(c.bicyclic && c.power);
                assert_eq!(p.degree(0), 3 + m - 5);
            }
        }
    }
}

#[test]
fn powers_of_random_graphs_are_linear() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..100 {
        let n = *pick(&mut rng, &[3, 4, 5, 6, 7]);
        let g2 = random_connected(&mut rng, 2, n);
        let b = SimpleGraph::from_hypergraph(&g2).unwrap();
        for k in 3..=5 {
            let p = power(&b, k).unwrap();
            assert!(p.is_linear());
            assert_eq!(p.n(), b.n() + b.m() * (k - 2));
        }
    }
}

proptest! {
    #[test]
    fn cyclomatic_and_components_are_relabeling_invariant(
        seed in any::<u64>(), k in 2usize..=4, m in 1usize..=6,
    ) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_connected(&mut rng, k, m);
        let p = random_permutation(&mut rng, g.n());
        let h = g.relabel(&p);
        prop_assert_eq!(g.cyclomatic_number(), h.cyclomatic_number());
        prop_assert_eq!(g.girth(), h.girth());
        prop_assert_eq!(g.is_linear(), h.is_linear());
        prop_assert_eq!(g.is_power(), h.is_power());
    }

    #[test]
    fn components_partition_the_vertex_set(
        seed in any::<u64>(), k in 2usize..=4, m in 1usize..=4, parts in 1usize..=3,
    ) {
        // glue several random pieces side by side
        let mut rng = StdRng::seed_from_u64(seed);
        let mut edges = Vec::new();
        let mut n = 0;
        for _ in 0..parts {
            let g = random_connected(&mut rng, k, m);
            edges.extend(g.edges().map(|e| e.iter().map(|&v| v + n).collect::<Vec<_>>()));
            n += g.n();
        }
        let extra = 2;
        let g = Hypergraph::new(k, n + extra, edges).unwrap();
        let comps = g.components();
        prop_assert_eq!(comps.len(), parts + extra);
        let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, (0..n + extra).collect::<Vec<_>>());
        prop_assert!(comps.windows(2).all(|w| w[0][0] < w[1][0]));
    }

    #[test]
    fn text_order_does_not_matter(seed in any::<u64>(), k in 3usize..=4, m in 1usize..=5) {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_connected(&mut rng, k, m);
        let mut edges: Vec<Vec<usize>> = g.edges().map(|e| {
            let mut e = e.to_vec();
            e.reverse();
            e
        }).collect();
        edges.reverse();
        prop_assert_eq!(Hypergraph::new(k, g.n(), edges).unwrap(), g);
    }
}
