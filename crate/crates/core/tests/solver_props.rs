use imc_core::catalog::{complete_bipartite, flower, generalized_house, named_graph};
use imc_core::solvers::{gem_separator, snt_search, solve_full_house, solve_gem, solve_snt_single, SolverConfig};
use imc_core::{dispatch, induced_minor_exhaustive, io, Config, Graph, Method, OracleConfig};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arb_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut e = Vec::new();
            let mut it = bits.into_iter();
            for i in 0..n {
                for j in i + 1..n {
                    if it.next().unwrap() {
                        e.push((i, j));
                    }
                }
            }
            Graph::from_edges(n, &e).unwrap()
        })
    })
}

fn patterns() -> Vec<Graph> {
    let mut v: Vec<Graph> = ["house", "bull", "gem", "full_house", "crown", "k5_minus"]
        .iter()
        .map(|n| named_graph(n).unwrap())
        .collect();
    v.extend([Graph::cycle(5), Graph::path(4), flower(0, &[(2, 2), (2, 1)]), generalized_house(4, Some(2))]);
    v
}

/// Blocks with no small separator, so the structure theorem decides.
const GEM_STRUCTURE_HOST: &str = "M]EcYnoH^{[aRdBH?";
const FULL_HOUSE_STRUCTURE_HOST: &str = r"MAo?]?J?\`OCKaAd_";

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn single_bag_witnesses(g in arb_graph(4, 9)) {
        let h = flower(0, &[(2, 2), (2, 1)]);
        let a = solve_snt_single(&g, &h, 0).unwrap();
        if let Some(m) = &a.witness {
            prop_assert!(m.is_valid());
            prop_assert!(m.nontrivial_bags().iter().all(|&u| u == 0));
        }
        let o = induced_minor_exhaustive(&g, &h, &OracleConfig::default()).unwrap();
        prop_assert_eq!(a.contains, o.is_some());
    }

    #[test]
    fn dispatch_ignores_host_labels(g in arb_graph(5, 8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.vertex_count()).collect();
        perm.shuffle(&mut rng);
        let pg = g.relabel(&perm);
        for h in patterns() {
            let a = dispatch(&g, &h, &Config::default()).unwrap();
            let b = dispatch(&pg, &h, &Config::default()).unwrap();
            prop_assert_eq!(a.contains, b.contains);
        }
    }

    #[test]
    fn dispatch_ignores_pattern_labels(g in arb_graph(5, 8), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for h in patterns() {
            let mut perm: Vec<usize> = (0..h.vertex_count()).collect();
            perm.shuffle(&mut rng);
            let ph = h.relabel(&perm);
            let a = dispatch(&g, &h, &Config::default()).unwrap();
            let b = dispatch(&g, &ph, &Config::default()).unwrap();
            prop_assert_eq!(a.contains, b.contains);
            if let Some(m) = &b.witness {
                prop_assert!(m.is_valid());
            }
        }
    }
}

#[test]
fn houses_have_single_bag_models() {
    // Every generalized house needs only the bag of `u` to grow.
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for h in [named_graph("house").unwrap(), generalized_house(3, None)] {
        for _ in 0..200 {
            let n = 9;
            let mut e = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    if rand::Rng::gen_bool(&mut rng, 0.35) {
                        e.push((i, j));
                    }
                }
            }
            let g = Graph::from_edges(n, &e).unwrap();
            let a = snt_search(&g, &h, 1).unwrap();
            let o = induced_minor_exhaustive(&g, &h, &OracleConfig::default()).unwrap();
            assert_eq!(a.contains, o.is_some(), "{}", io::to_graph6(&g));
        }
    }
}

#[test]
fn gem_structure_branch() {
    let g = io::from_graph6(GEM_STRUCTURE_HOST).unwrap();
    assert!(g.vertex_count() > 12 && gem_separator(&g).is_none());
    let plain = solve_gem(&g, &SolverConfig::default()).unwrap();
    assert!(plain.contains && plain.certified_without_witness && plain.witness.is_none());
    let cfg = SolverConfig {
        require_witness: true,
        ..SolverConfig::default()
    };
    let forced = solve_gem(&g, &cfg).unwrap();
    assert!(forced.contains && !forced.certified_without_witness);
    assert!(forced.witness.unwrap().is_valid());
}

#[test]
fn full_house_structure_branch() {
    let g = io::from_graph6(FULL_HOUSE_STRUCTURE_HOST).unwrap();
    let plain = solve_full_house(&g, &SolverConfig::default()).unwrap();
    assert!(plain.contains && plain.certified_without_witness);
    let cfg = SolverConfig {
        require_witness: true,
        ..SolverConfig::default()
    };
    let forced = solve_full_house(&g, &cfg).unwrap();
    assert!(forced.witness.unwrap().is_valid());
}

#[test]
fn small_cap_forces_self_reduction() {
    let cfg = SolverConfig {
        oracle: OracleConfig {
            max_host_size: 7,
            parallel: false,
        },
        require_witness: true,
    };
    let g = io::from_graph6(GEM_STRUCTURE_HOST).unwrap();
    let a = solve_gem(&g, &cfg).unwrap();
    assert!(a.witness.unwrap().is_valid());
}

#[test]
fn unsupported_patterns_fall_back_to_bounded_bags() {
    let k23 = named_graph("k23").unwrap();
    // Complete multipartite hosts have no induced P4.
    let mut e = Vec::new();
    for i in 0..30 {
        for j in i + 1..30 {
            if i % 3 != j % 3 {
                e.push((i, j));
            }
        }
    }
    let g = Graph::from_edges(30, &e).unwrap();
    let a = dispatch(&g, &k23, &Config::default()).unwrap();
    assert!(a.contains && a.method == Method::PtFree);
    assert!(a.witness.unwrap().is_valid());
    let small = complete_bipartite(2, 2);
    let a = dispatch(&small, &k23, &Config::default()).unwrap();
    assert!(!a.contains);
}
