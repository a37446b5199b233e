use imc_core::catalog::{classify, complete_split, flower, generalized_house, is_flower, named_graph, PatternClass, NAMES};
use imc_core::Graph;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn catalog() -> Vec<Graph> {
    let mut v: Vec<Graph> = NAMES
        .iter()
        .filter(|n| !n.ends_with("_n"))
        .map(|n| named_graph(n).unwrap())
        .collect();
    for n in 2..=7 {
        v.extend([Graph::path(n), Graph::complete(n)]);
    }
    for n in 3..=8 {
        v.push(Graph::cycle(n));
    }
    v.extend([
        generalized_house(3, None),
        generalized_house(5, None),
        generalized_house(4, Some(2)),
        generalized_house(5, Some(1)),
        complete_split(3, 4),
        complete_split(4, 2),
        flower(2, &[(3, 2), (2, 1)]),
        flower(0, &[(4, 2), (1, 0)]),
        Graph::complete(4).disjoint_union(&Graph::empty(1)),
    ]);
    v
}

#[test]
fn roles_rebuild_the_pattern() {
    for h in catalog() {
        for class in classify(&h) {
            if let Some(r) = class.reconstruct(h.vertex_count()) {
                assert_eq!(r, h, "{class}");
            }
        }
    }
}

#[test]
fn classification_ignores_labels() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for h in catalog() {
        let names: Vec<&str> = classify(&h).iter().map(PatternClass::name).collect();
        let mut perm: Vec<usize> = (0..h.vertex_count()).collect();
        for _ in 0..100 {
            perm.shuffle(&mut rng);
            let q = h.relabel(&perm);
            let got: Vec<&str> = classify(&q).iter().map(PatternClass::name).collect();
            assert_eq!(got, names);
        }
    }
}

#[test]
fn flowers_stay_flowers_under_petal_and_stamen_subdivision() {
    let flowers = [
        (1, vec![(3, 2), (2, 1)]),
        (0, vec![(2, 2), (3, 1), (1, 1)]),
        (2, vec![(4, 2)]),
        (0, vec![(5, 2), (1, 0)]),
    ];
    for (sepals, paths) in flowers {
        let h = flower(sepals, &paths);
        assert!(is_flower(&h).is_some());
        // Sepal vertices are 1..=3*sepals; every other edge is subdivided.
        let sepal = |v: usize| (1..=3 * sepals).contains(&v);
        for (a, b) in h.edges() {
            if sepal(a) || sepal(b) {
                continue;
            }
            let s = h.subdivide_edge(a, b).unwrap();
            assert!(is_flower(&s).is_some(), "subdividing {a}-{b}");
        }
    }
}

#[test]
fn families_route_where_expected() {
    let first = |h: &Graph| classify(h)[0].name();
    assert_eq!(first(&named_graph("house").unwrap()), "generalized_house");
    assert_eq!(first(&named_graph("bull").unwrap()), "generalized_bull");
    assert_eq!(first(&named_graph("crown").unwrap()), "complete_split");
    assert_eq!(first(&named_graph("gem").unwrap()), "gem");
    assert_eq!(first(&named_graph("full_house").unwrap()), "full_house");
    assert_eq!(first(&named_graph("k23").unwrap()), "unsupported");
    assert_eq!(first(&Graph::cycle(6)), "flower");
}
