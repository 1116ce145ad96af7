use super::*;
use crate::graphs::{affine_polar, bilinear_forms, hamming2, paley, Sign};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn aut_order(g: &DenseGraph) -> BigUint {
    let r = automorphisms(g, &SearchOptions::default()).unwrap();
    assert!(r.certificate.iter().all(|&ok| ok));
    let product: BigUint = r.orbit_lengths.iter().map(|&l| BigUint::from(l)).product();
    assert_eq!(product, r.order);
    r.order
}

/// Counts automorphisms by trying every permutation.
fn brute_aut_count(g: &DenseGraph) -> u64 {
    fn rec(g: &DenseGraph, images: &mut Vec<usize>, used: &mut Vec<bool>) -> u64 {
        let k = images.len();
        if k == g.order() {
            return 1;
        }
        let mut total = 0;
        for v in 0..g.order() {
            if used[v] || (0..k).any(|u| g.has_edge(u, k) != g.has_edge(images[u], v)) {
                continue;
            }
            used[v] = true;
            images.push(v);
            total += rec(g, images, used);
            images.pop();
            used[v] = false;
        }
        total
    }
    rec(g, &mut Vec::new(), &mut vec![false; g.order()])
}

fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> DenseGraph {
    let mut g = DenseGraph::empty(n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(i, j);
            }
        }
    }
    g
}

fn random_perm(n: usize, rng: &mut impl Rng) -> Permutation {
    let mut images: Vec<u32> = (0..n as u32).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

#[test]
fn automorphism_orders_of_small_families() {
    assert_eq!(aut_order(&hamming2(3).unwrap()), 72u32.into());
    assert_eq!(aut_order(&hamming2(4).unwrap()), 1152u32.into());
    assert_eq!(aut_order(&bilinear_forms(2, 2).unwrap()), 1152u32.into());
    assert_eq!(aut_order(&affine_polar(Sign::Minus, 2, 2).unwrap()), 1920u32.into());
    assert_eq!(aut_order(&paley(13).unwrap()), 78u32.into());
    assert_eq!(aut_order(&paley(9).unwrap()), 72u32.into());
}

#[test]
fn automorphism_orders_of_elementary_graphs() {
    assert_eq!(aut_order(&DenseGraph::cycle(6)), 12u32.into());
    assert_eq!(aut_order(&DenseGraph::path(4)), 2u32.into());
    assert_eq!(aut_order(&DenseGraph::complete(5)), 120u32.into());
    assert_eq!(aut_order(&DenseGraph::empty(4)), 24u32.into());
    assert_eq!(aut_order(&DenseGraph::empty(1)), 1u32.into());
    assert_eq!(aut_order(&DenseGraph::empty(0)), 1u32.into());
    let petersen = DenseGraph::from_edges(
        10,
        [
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    );
    assert_eq!(aut_order(&petersen), 120u32.into());
}

#[test]
fn order_survives_relabeling() {
    for (g, expected) in [
        (hamming2(4).unwrap(), 1152u32),
        (affine_polar(Sign::Minus, 2, 2).unwrap(), 1920),
        (paley(13).unwrap(), 78),
    ] {
        for seed in 0..3 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let h = g.relabel(&random_perm(g.order(), &mut rng));
            assert_eq!(aut_order(&h), expected.into(), "seed {seed}");
        }
    }
}

#[test]
fn search_chain_agrees_with_schreier_sims() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut graphs = vec![
        hamming2(5).unwrap(),
        paley(13).unwrap(),
        bilinear_forms(2, 2).unwrap(),
        affine_polar(Sign::Minus, 2, 2).unwrap(),
        DenseGraph::path(5),
    ];
    graphs.extend((0..6).map(|_| random_graph(9, 0.4, &mut rng)));
    for g in graphs {
        let r = automorphisms(&g, &SearchOptions::default()).unwrap();
        let rebuilt = crate::permgrp::StabChain::build(g.order(), r.group.generators());
        assert_eq!(r.order, rebuilt.order());
        for h in r.group.generators() {
            assert!(r.group.contains(h));
        }
        let outsider = random_perm(g.order(), &mut rng);
        assert_eq!(r.group.contains(&outsider), rebuilt.contains(&outsider));
    }
}

#[test]
fn isomorphism_examples() {
    let opts = SearchOptions::default();
    let (a, b) = (paley(9).unwrap(), hamming2(3).unwrap());
    let phi = is_isomorphic(&a, &b, &opts).unwrap().expect("isomorphic");
    assert!(is_isomorphism(&a, &b, &phi));
    for q in [2, 3] {
        let a = bilinear_forms(q, 2).unwrap();
        let b = affine_polar(Sign::Plus, 2, q).unwrap();
        let phi = is_isomorphic(&a, &b, &opts).unwrap().expect("isomorphic");
        assert!(is_isomorphism(&a, &b, &phi));
        let back = is_isomorphic(&b, &a, &opts).unwrap().expect("symmetric");
        assert!(is_isomorphism(&b, &a, &back));
    }
    let minus = affine_polar(Sign::Minus, 2, 2).unwrap();
    let plus = affine_polar(Sign::Plus, 2, 2).unwrap();
    assert!(is_isomorphic(&minus, &plus, &opts).unwrap().is_none());
    // Same degree sequence, different structure.
    let two_triangles = DenseGraph::from_edges(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]);
    assert!(is_isomorphic(&DenseGraph::cycle(6), &two_triangles, &opts).unwrap().is_none());
}

#[test]
fn relabeled_family_graphs_are_isomorphic() {
    let opts = SearchOptions::default();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for g in [hamming2(5).unwrap(), bilinear_forms(2, 2).unwrap(), paley(25).unwrap()] {
        let h = g.relabel(&random_perm(g.order(), &mut rng));
        let phi = is_isomorphic(&g, &h, &opts).unwrap().expect("isomorphic");
        assert!(is_isomorphism(&g, &h, &phi));
    }
}

#[test]
fn search_reports_cap_and_timeout() {
    let g = hamming2(5).unwrap();
    let tight = SearchOptions::default().with_cap(10);
    assert!(matches!(automorphisms(&g, &tight), Err(Error::CapExceeded { .. })));
    let instant = SearchOptions::default().with_budget(Duration::ZERO);
    let big = affine_polar(Sign::Minus, 2, 4).unwrap();
    assert!(matches!(automorphisms(&big, &instant), Err(Error::Timeout(_))));
}

#[test]
fn wl_examples() {
    assert_eq!(wl2_closure(&paley(13).unwrap()).unwrap().class_count(), 3);
    assert_eq!(wl2_closure(&DenseGraph::complete(6)).unwrap().class_count(), 2);
    // The 4-cycle is K_{2,2}: its automorphism group has rank 3.
    let c4 = DenseGraph::cycle(4);
    let aut = automorphisms(&c4, &SearchOptions::default()).unwrap();
    assert_eq!(aut.group.orbitals().unwrap().rank(), 3);
    assert_eq!(wl2_closure(&c4).unwrap().class_count(), 3);
    assert_eq!(wl2_closure(&DenseGraph::cycle(6)).unwrap().class_count(), 4);
    assert_eq!(wl2_closure(&DenseGraph::path(4)).unwrap().class_count(), 8);
}

#[test]
fn wl_is_stable_and_refines_orbitals() {
    let g = DenseGraph::from_edges(7, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5), (5, 6)]);
    let w = wl2_closure(&g).unwrap();
    assert_eq!(wl2_closure(&w).unwrap(), w);
    // Every WL class is a union of orbits of Aut on pairs.
    let aut = automorphisms(&g, &SearchOptions::default()).unwrap();
    for gen in aut.group.generators() {
        assert!(w.is_preserved_by(gen));
    }
}

#[test]
fn certification() {
    let opts = SearchOptions::default();
    assert!(certify_rank3(&affine_polar(Sign::Minus, 2, 2).unwrap(), &opts).unwrap());
    assert!(certify_rank3(&hamming2(3).unwrap(), &opts).unwrap());
    assert!(!certify_rank3(&DenseGraph::cycle(6), &opts).unwrap());
    assert!(!certify_rank3(&DenseGraph::path(4), &opts).unwrap());
}

#[test]
fn coloring_automorphisms() {
    // The orbitals of C7 are directed, so reflections do not preserve them.
    let g = crate::permgrp::cyclic_group(7);
    let c = PairColoring::from_orbitals(&g.orbitals().unwrap());
    assert_eq!(c.class_count(), 7);
    let aut = automorphisms(&c, &SearchOptions::default()).unwrap();
    assert_eq!(aut.order, 7u32.into());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn order_matches_brute_force(n in 1usize..8, p in 0.2f64..0.8, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        prop_assert_eq!(aut_order(&g), BigUint::from(brute_aut_count(&g)));
    }

    #[test]
    fn isomorphism_of_relabelings(n in 1usize..30, p in 0.1f64..0.9, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, p, &mut rng);
        let h = g.relabel(&random_perm(n, &mut rng));
        let phi = is_isomorphic(&g, &h, &SearchOptions::default()).unwrap();
        prop_assert!(phi.is_some_and(|phi| is_isomorphism(&g, &h, &phi)));
    }

    #[test]
    fn isomorphism_agrees_with_brute_force(n in 1usize..7, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(n, 0.5, &mut rng);
        let h = random_graph(n, 0.5, &mut rng);
        let brute = {
            let mut found = false;
            let mut images: Vec<u32> = (0..n as u32).collect();
            permute(&mut images, 0, &mut |imgs| {
                let phi = Permutation::from_images(imgs.to_vec()).unwrap();
                found |= is_isomorphism(&g, &h, &phi);
            });
            found
        };
        let fast = is_isomorphic(&g, &h, &SearchOptions::default()).unwrap();
        prop_assert_eq!(fast.is_some(), brute);
        let back = is_isomorphic(&h, &g, &SearchOptions::default()).unwrap();
        prop_assert_eq!(back.is_some(), brute);
    }
}

fn permute(v: &mut [u32], k: usize, f: &mut dyn FnMut(&[u32])) {
    if k == v.len() {
        f(v);
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, f);
        v.swap(k, i);
    }
}
