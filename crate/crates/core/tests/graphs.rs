mod common;

use clutterlab::generate::{random_graph, random_tree};
use clutterlab::{find_simplicial_order, Clutter};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use common::{all_graphs, graph_is_chordal};

#[test]
fn peo_oracle_sanity() {
    let four_cycle = Clutter::new(4, 2, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4]]).unwrap();
    assert!(!graph_is_chordal(&four_cycle));
    let with_chord = Clutter::new(4, 2, &[vec![1, 2], vec![2, 3], vec![3, 4], vec![1, 4], vec![1, 3]]).unwrap();
    assert!(graph_is_chordal(&with_chord));
    assert!(graph_is_chordal(&Clutter::empty(5, 2).unwrap()));
}

#[test]
fn search_agrees_with_peo_on_all_small_graphs() {
    for n in 2..=5 {
        for g in all_graphs(n) {
            let found = find_simplicial_order(&g);
            assert_eq!(found.is_chordal(), graph_is_chordal(&g), "{g:?}");
            if let Some(order) = found.order() {
                order.verify(&g).unwrap();
            }
        }
    }
}

#[test]
fn search_agrees_with_peo_on_random_graphs() {
    let mut rng = StdRng::seed_from_u64(11);
    for _ in 0..60 {
        let n = rng.gen_range(2..=9);
        let p = rng.gen_range(0.2..0.9);
        let g = random_graph(n, p, &mut rng).unwrap();
        assert_eq!(find_simplicial_order(&g).is_chordal(), graph_is_chordal(&g), "{g:?}");
    }
}

#[test]
fn trees_are_chordal_with_unit_neighborhoods() {
    let mut rng = StdRng::seed_from_u64(5);
    for n in 2..10 {
        let t = random_tree(n, &mut rng).unwrap();
        let ms = find_simplicial_order(&t).order().unwrap().multiset();
        assert_eq!(ms.total(), n - 1);
        assert_eq!(ms.max(), Some(1));
    }
}
