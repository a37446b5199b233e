use imc_core::catalog::named_graph;
use imc_core::enumerate::all_graphs_up_to;
use imc_core::{clique_minor_test, induced_minor_exhaustive, io, rooted_clique_minor, verify_model, Graph, Model, OracleConfig, VertexSet};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn cfg() -> OracleConfig {
    OracleConfig::default()
}

fn small_patterns() -> Vec<Graph> {
    let mut v: Vec<Graph> = ["house", "bull", "gem", "full_house", "crown", "k23", "w4", "k4"]
        .iter()
        .map(|n| named_graph(n).unwrap())
        .collect();
    v.extend([Graph::path(4), Graph::cycle(5), Graph::cycle(4)]);
    v
}

#[test]
fn answers_do_not_depend_on_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let patterns = small_patterns();
    for g in all_graphs_up_to(7) {
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        let pg = g.relabel(&perm);
        for h in &patterns {
            let a = induced_minor_exhaustive(&g, h, &cfg()).unwrap();
            let b = induced_minor_exhaustive(&pg, h, &cfg()).unwrap();
            assert_eq!(a.is_some(), b.is_some(), "{}", io::to_graph6(&g));
            if let Some(m) = a {
                assert!(verify_model(&m));
            }
        }
    }
}

#[test]
fn rooted_search_with_empty_roots_matches_clique_test() {
    for g in all_graphs_up_to(7) {
        for k in 1..=4 {
            let roots = vec![g.empty_set(); k];
            let rooted = rooted_clique_minor(&g, &roots).unwrap();
            let direct = clique_minor_test(&g, k, &cfg()).unwrap();
            assert_eq!(rooted.is_some(), direct.is_some(), "K{k} in {}", io::to_graph6(&g));
            let kk = Graph::complete(k);
            for bags in [rooted, direct].into_iter().flatten() {
                assert!(Model::new(&kk, &g, bags).unwrap().is_valid());
            }
        }
    }
}

#[test]
fn rooted_bags_contain_their_roots() {
    let g = Graph::cycle(6);
    let roots = vec![g.set_of([0]), g.set_of([2]), g.set_of([4])];
    let bags = rooted_clique_minor(&g, &roots).unwrap().unwrap();
    for (b, r) in bags.iter().zip(&roots) {
        assert!(r.is_subset(b));
    }
    let overlapping = vec![g.set_of([0, 1]), g.set_of([1])];
    assert!(rooted_clique_minor(&g, &overlapping).is_err());
}

#[test]
fn deleting_a_vertex_never_creates_a_model() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let patterns = small_patterns();
    for _ in 0..150 {
        let n = rng.gen_range(5..=9);
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rng.gen_bool(0.45) {
                    e.push((i, j));
                }
            }
        }
        let g = Graph::from_edges(n, &e).unwrap();
        let h = patterns.choose(&mut rng).unwrap();
        let whole = induced_minor_exhaustive(&g, h, &cfg()).unwrap().is_some();
        for v in 0..n {
            let (sub, _) = g.without(&VertexSet::singleton(n, v));
            if induced_minor_exhaustive(&sub, h, &cfg()).unwrap().is_some() {
                assert!(whole, "{} minus {v}", io::to_graph6(&g));
            }
        }
    }
}

#[test]
fn cap_is_enforced() {
    let g = Graph::path(13);
    assert!(induced_minor_exhaustive(&g, &Graph::path(3), &cfg()).is_err());
    assert!(clique_minor_test(&g, 5, &cfg()).is_err());
}
